use clap::Parser;
use fdalg::cli::{run, Cli, Status};

fn main() {
    let cli = Cli::parse();
    let result = run(&cli);
    if cli.json {
        println!("{}", result.payload);
    } else if result.status == Status::Ok {
        println!("{}", result.text);
    } else {
        eprintln!("{}", result.text);
    }
    std::process::exit(result.exit_code);
}

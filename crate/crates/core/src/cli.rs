//! Command logic behind the `fdalg` binary.
//!
//! Commands return a [`CommandResult`] instead of printing, so the binary
//! stays a thin wrapper and tests can compare against direct library calls.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, FDAlgebra, Subspace};
use crate::corpus::{self, Generator, Group};
use crate::ed::{self, CSADescriptor, EdBoundReport, Partition};
use crate::error::{Error, Result};
use crate::lifting::lift_from_initial;
use crate::rat::{format_rat, parse_rat, vec_from_json, vec_to_json, Rat};
use crate::structure::{jacobson_radical, wedderburn_decomposition, MatrixSize};

/// Environment variable bounding the rank accepted by `ed partitions`.
pub const MAX_PARTITION_RANK_VAR: &str = "FDALG_MAX_PARTITION_RANK";
pub const DEFAULT_MAX_PARTITION_RANK: u64 = 30;

#[derive(Parser, Debug)]
#[command(name = "fdalg", version, about = "Structure of finite-dimensional algebras over ℚ and essential-dimension bounds")]
pub struct Cli {
    /// Print the machine-readable JSON payload instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check associativity and the unit law.
    Validate { file: PathBuf },
    /// Jacobson radical, its nilpotency index and the semisimple quotient.
    Radical { file: PathBuf },
    /// Simple factors of the semisimple quotient.
    Wedderburn { file: PathBuf },
    /// Lift an idempotent modulo a nilpotent ideal.
    LiftIdem {
        file: PathBuf,
        /// Initial lift, a coordinate vector in the algebra, idempotent modulo the ideal.
        #[arg(long)]
        idempotent: String,
        /// Spanning vectors of the ideal as a JSON array; defaults to the radical.
        #[arg(long)]
        ideal: Option<String>,
    },
    /// Essential-dimension formulas and bounds.
    Ed {
        #[command(subcommand)]
        command: EdCommand,
    },
    /// Write a corpus algebra in the JSON format.
    Generate {
        #[command(subcommand)]
        command: GenerateCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum EdCommand {
    /// r(1 − r)·deg² for a central simple algebra.
    Csa {
        #[arg(long)]
        deg: u64,
        #[arg(long)]
        rank: String,
    },
    /// Dimension of the generalized Severi–Brauer variety SB(r, A).
    SeveriBrauer {
        #[arg(long)]
        deg: u64,
        #[arg(long)]
        rank: String,
    },
    /// Strict bound n·r·dim B for Mat_n(B).
    Matrix {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        dim_b: u64,
        #[arg(long)]
        rank: String,
    },
    /// Bound for rank 1/d over a division algebra of degree deg.
    Division {
        #[arg(long)]
        deg: u64,
        #[arg(long)]
        d: u64,
    },
    /// Karpenko's value for degree pⁿ and rank 1/pᵐ.
    Karpenko {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// The CKM conjectural value for rank 1/deg.
    Ckm {
        #[arg(long)]
        deg: u64,
    },
    /// Bound from the Wedderburn data of an algebra file.
    Algebra(AlgebraArgs),
    /// Essential dimension of moduli of vector bundles on a curve.
    Bundle {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        rank: u64,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
        #[arg(long)]
        assume_ckm: bool,
    },
    /// Dimension (g − 1)·Σ rᵢ² of the nilpotent-endomorphism stack.
    NilDim {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        partition: String,
    },
    /// trdeg bound 1 + (g − 1)·Σ rᵢ² for an indecomposable bundle.
    Trdeg {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        partition: String,
    },
    /// trdeg bound (g − 1)(r² − r) + 2 for a non-simple bundle.
    TrdegNonsimple {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        rank: u64,
    },
    /// Bound r − 1 on the gap between field of moduli and fields of definition.
    ModuliDefect {
        #[arg(long)]
        rank: u64,
    },
    /// Exhaustive check of Σ rᵢ² ≤ r² − 2r + 2 over partitions with ≥ 2 parts.
    Partitions {
        /// Check a single rank.
        #[arg(long, conflicts_with = "max_rank")]
        rank: Option<u64>,
        /// Print the table for every rank from 2 up to this one.
        #[arg(long)]
        max_rank: Option<u64>,
    },
    /// p-adic valuation.
    Vp {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    pub file: PathBuf,
    /// Rank 1/d of the modules.
    #[arg(long, required_unless_present = "rank", conflicts_with = "rank")]
    pub d: Option<u64>,
    /// An arbitrary rank r > 0 (extrapolated pipeline).
    #[arg(long)]
    pub rank: Option<String>,
    /// Indices of the simple factors, comma-separated, `-` for "computed".
    /// A single value applies to every factor whose index is unknown.
    #[arg(long)]
    pub assert_index: Option<String>,
    /// Report the companion strict bound Σ c·n·r·ind² instead.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Subcommand, Debug)]
pub enum GenerateCommand {
    /// List corpus fixture names.
    List,
    /// A named corpus fixture.
    Fixture { name: String },
    /// Write every fixture as `<name>.json` into a directory.
    Export { dir: PathBuf },
    Matrix { n: usize },
    UpperTriangular { n: usize },
    Dual,
    Quaternions {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
    },
    Cyclic { n: usize },
    Symmetric { n: usize },
    Dihedral { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub text: String,
    pub exit_code: i32,
}

impl CommandResult {
    fn ok(payload: Value, text: String) -> Self {
        CommandResult {
            status: Status::Ok,
            payload,
            text,
            exit_code: 0,
        }
    }

    fn error(e: &Error) -> Self {
        CommandResult {
            status: Status::Error,
            payload: json!({"error": {"code": e.code(), "message": e.to_string()}}),
            text: format!("error: {e}"),
            exit_code: if e.is_input_error() { 2 } else { 3 },
        }
    }

    fn report(r: &EdBoundReport) -> Self {
        CommandResult::ok(r.to_json(), r.to_string())
    }
}

pub fn run(cli: &Cli) -> CommandResult {
    match dispatch(&cli.command) {
        Ok(r) => r,
        Err(e) => CommandResult::error(&e),
    }
}

pub fn load_algebra(path: &Path) -> Result<FDAlgebra> {
    let s = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    FDAlgebra::from_json_str(&s)
}

fn load_valid(path: &Path) -> Result<FDAlgebra> {
    let a = load_algebra(path)?;
    a.validate()?;
    Ok(a)
}

fn parse_json(s: &str) -> Result<Value> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_partition(s: &str) -> Result<Partition> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|_| Error::Parse(format!("invalid partition part {p:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn parse_rank(s: &str) -> Result<Rat> {
    parse_rat(s)
}

fn max_partition_rank() -> Result<u64> {
    match std::env::var(MAX_PARTITION_RANK_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_PARTITION_RANK_VAR} must be a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_MAX_PARTITION_RANK),
    }
}

fn dispatch(command: &Command) -> Result<CommandResult> {
    match command {
        Command::Validate { file } => {
            let a = load_valid(file)?;
            Ok(CommandResult::ok(
                json!({"valid": true, "dim": a.dim()}),
                format!("valid algebra of dimension {}", a.dim()),
            ))
        }
        Command::Radical { file } => {
            let r = jacobson_radical(&load_algebra(file)?)?;
            let text = format!(
                "radical dimension {}\nnilpotency index {}\nsemisimple quotient dimension {}",
                r.radical.dim(),
                r.nilpotency_index,
                r.quotient.quotient.dim()
            );
            Ok(CommandResult::ok(r.to_json(), text))
        }
        Command::Wedderburn { file } => {
            let w = wedderburn_decomposition(&load_algebra(file)?)?;
            let mut text = format!(
                "radical dimension {}, semisimple quotient dimension {}, {} simple factor(s)",
                w.radical.radical.dim(),
                w.semisimple_quotient.dim(),
                w.factors.len()
            );
            for (i, f) in w.factors.iter().enumerate() {
                let n = match f.matrix_size {
                    MatrixSize::Known(n) => n.to_string(),
                    MatrixSize::Unknown => "unknown".into(),
                };
                text.push_str(&format!(
                    "\n  factor {i}: dim {}, center dim {}, degree {}, matrix size {n}",
                    f.factor_dim, f.center_dim, f.degree_over_center
                ));
            }
            Ok(CommandResult::ok(w.to_json(), text))
        }
        Command::LiftIdem { file, idempotent, ideal } => {
            let a = load_valid(file)?;
            let p0 = AlgebraElement::new(vec_from_json(&parse_json(idempotent)?)?);
            let ideal = match ideal {
                Some(s) => {
                    let v = parse_json(s)?;
                    let rows = v
                        .as_array()
                        .ok_or_else(|| Error::Parse("ideal must be an array of vectors".into()))?
                        .iter()
                        .map(vec_from_json)
                        .collect::<Result<Vec<_>>>()?;
                    if let Some(r) = rows.iter().find(|r| r.len() != a.dim()) {
                        return Err(Error::DimensionMismatch {
                            expected: a.dim(),
                            found: r.len(),
                        });
                    }
                    Subspace::span(a.dim(), rows.iter().map(Vec::as_slice))
                }
                None => jacobson_radical(&a)?.radical,
            };
            let qp = a.quotient_by_ideal(&ideal)?;
            let lift = lift_from_initial(&p0, &qp)?;
            let t = qp.ideal.nilpotency_index(&a).expect("checked by the lift");
            let coords: Vec<String> = lift.idempotent.coords().iter().map(format_rat).collect();
            Ok(CommandResult::ok(
                json!({
                    "idempotent": vec_to_json(lift.idempotent.coords()),
                    "iterations": lift.iterations,
                    "nilpotency_index": t,
                }),
                format!(
                    "idempotent [{}]\niterations {} (ideal nilpotency index {t})",
                    coords.join(", "),
                    lift.iterations
                ),
            ))
        }
        Command::Ed { command } => dispatch_ed(command),
        Command::Generate { command } => dispatch_generate(command),
    }
}

fn parse_asserted(s: &str, factors: usize, unknown: &[bool]) -> Result<Vec<Option<u64>>> {
    let items: Vec<&str> = s.split(',').map(str::trim).collect();
    let parse = |x: &str| -> Result<Option<u64>> {
        if x == "-" {
            Ok(None)
        } else {
            x.parse().map(Some).map_err(|_| Error::Parse(format!("invalid index {x:?}")))
        }
    };
    if items.len() == 1 && factors != 1 {
        let v = parse(items[0])?;
        return Ok(unknown.iter().map(|&u| if u { v } else { None }).collect());
    }
    items.into_iter().map(parse).collect()
}

fn dispatch_ed(command: &EdCommand) -> Result<CommandResult> {
    match command {
        EdCommand::Csa { deg, rank } => {
            let a = CSADescriptor::new(*deg, None)?;
            Ok(CommandResult::report(&ed::bound_csa(&a, &parse_rank(rank)?)?))
        }
        EdCommand::SeveriBrauer { deg, rank } => {
            let a = CSADescriptor::new(*deg, None)?;
            let dim = ed::severi_brauer_dim(&a, &parse_rank(rank)?)?;
            Ok(CommandResult::ok(
                json!({"dim": dim.to_string()}),
                format!("dim SB(r, A) = {dim}"),
            ))
        }
        EdCommand::Matrix { n, dim_b, rank } => Ok(CommandResult::report(&ed::bound_matrix_over_simple(
            *n,
            *dim_b,
            &parse_rank(rank)?,
        )?)),
        EdCommand::Division { deg, d } => Ok(CommandResult::report(&ed::bound_division(*deg, *d)?)),
        EdCommand::Karpenko { p, n, m } => Ok(CommandResult::report(&ed::karpenko_value(*p, *n, *m)?)),
        EdCommand::Ckm { deg } => Ok(CommandResult::report(&ed::ckm_value(*deg)?)),
        EdCommand::Algebra(args) => {
            let w = wedderburn_decomposition(&load_algebra(&args.file)?)?;
            let unknown: Vec<bool> = w.factors.iter().map(|f| f.matrix_size == MatrixSize::Unknown).collect();
            let asserted = match &args.assert_index {
                Some(s) => parse_asserted(s, w.factors.len(), &unknown)?,
                None => Vec::new(),
            };
            let report = match (&args.rank, args.d) {
                (Some(r), _) => ed::bound_from_wedderburn_rank(&w, &parse_rank(r)?, &asserted)?,
                (None, Some(d)) if args.strict => ed::strict_bound_from_wedderburn(&w, d, &asserted)?,
                (None, Some(d)) => ed::bound_from_wedderburn(&w, d, &asserted)?,
                (None, None) => return Err(Error::Parse("one of --d or --rank is required".into())),
            };
            Ok(CommandResult::report(&report))
        }
        EdCommand::Bundle {
            genus,
            rank,
            degree,
            assume_ckm,
        } => Ok(CommandResult::report(&ed::bundle_moduli_ed(*genus, *rank, *degree, *assume_ckm)?)),
        EdCommand::NilDim { genus, partition } => {
            let p = parse_partition(partition)?;
            let dim = ed::nil_stack_dim(*genus, &p);
            Ok(CommandResult::ok(
                json!({"dim": dim.to_string(), "genus": genus, "partition": p.parts()}),
                format!("dim Nil at partition {p}, genus {genus}: {dim}"),
            ))
        }
        EdCommand::Trdeg { genus, partition } => Ok(CommandResult::report(&ed::trdeg_bound_indecomposable(
            *genus,
            &parse_partition(partition)?,
        ))),
        EdCommand::TrdegNonsimple { genus, rank } => {
            Ok(CommandResult::report(&ed::trdeg_bound_nonsimple(*genus, *rank)?))
        }
        EdCommand::ModuliDefect { rank } => Ok(CommandResult::report(&ed::vb_field_of_moduli_defect_bound(*rank)?)),
        EdCommand::Partitions { rank, max_rank } => {
            let limit = max_partition_rank()?;
            let ranks: Vec<u64> = match (rank, max_rank) {
                (Some(r), _) => vec![*r],
                (None, Some(m)) => (2..=*m).collect(),
                (None, None) => return Err(Error::Parse("one of --rank or --max-rank is required".into())),
            };
            if let Some(r) = ranks.iter().find(|&&r| r > limit) {
                return Err(Error::OutOfRange(format!(
                    "rank {r} exceeds the enumeration limit {limit} (set {MAX_PARTITION_RANK_VAR})"
                )));
            }
            let checks = ranks
                .iter()
                .map(|&r| ed::partition_square_sum_check(r))
                .collect::<Result<Vec<_>>>()?;
            let mut text = String::from("rank  partitions  max Σrᵢ²  bound  witness  holds");
            for c in &checks {
                text.push_str(&format!(
                    "\n{:>4}  {:>10}  {:>8}  {:>5}  {}  {}",
                    c.rank,
                    c.partitions_checked,
                    c.max_square_sum,
                    c.bound,
                    c.witness,
                    if c.holds() { "yes" } else { "NO" }
                ));
            }
            let payload = if rank.is_some() {
                checks[0].to_json()
            } else {
                Value::Array(checks.iter().map(ed::PartitionCheck::to_json).collect())
            };
            Ok(CommandResult::ok(payload, text))
        }
        EdCommand::Vp { p, n } => {
            let v = ed::vp(*p, *n)?;
            Ok(CommandResult::ok(json!({"value": v}), format!("v_{p}({n}) = {v}")))
        }
    }
}

fn generated(a: FDAlgebra) -> Result<CommandResult> {
    let payload = a.to_json();
    let text = serde_json::to_string_pretty(&payload).expect("serializable");
    Ok(CommandResult::ok(payload, text))
}

fn dispatch_generate(command: &GenerateCommand) -> Result<CommandResult> {
    match command {
        GenerateCommand::List => {
            let names: Vec<&str> = corpus::fixtures().iter().map(|f| f.name).collect();
            Ok(CommandResult::ok(json!(names), names.join("\n")))
        }
        GenerateCommand::Fixture { name } => {
            let f = corpus::fixture_by_name(name).ok_or_else(|| Error::Parse(format!("unknown fixture {name:?}")))?;
            generated(f.algebra())
        }
        GenerateCommand::Export { dir } => {
            let paths = corpus::export_fixtures(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
            let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
            Ok(CommandResult::ok(json!(names), names.join("\n")))
        }
        GenerateCommand::Matrix { n } => generated(Generator::Matrix(positive(*n)?).build()),
        GenerateCommand::UpperTriangular { n } => generated(Generator::UpperTriangular(positive(*n)?).build()),
        GenerateCommand::Dual => generated(Generator::DualNumbers.build()),
        GenerateCommand::Quaternions { a, b } => {
            generated(crate::algebra::quaternions(crate::rat::rat(*a), crate::rat::rat(*b))?)
        }
        GenerateCommand::Cyclic { n } => generated(Generator::GroupAlgebra(Group::Cyclic(positive(*n)?)).build()),
        GenerateCommand::Symmetric { n } => {
            generated(Generator::GroupAlgebra(Group::Symmetric(positive(*n)?)).build())
        }
        GenerateCommand::Dihedral { n } => {
            if *n < 3 {
                return Err(Error::OutOfRange("dihedral groups need n ≥ 3".into()));
            }
            generated(Generator::GroupAlgebra(Group::Dihedral(*n)).build())
        }
    }
}

fn positive(n: usize) -> Result<usize> {
    if n == 0 {
        Err(Error::OutOfRange("size must be positive".into()))
    } else {
        Ok(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandResult {
        let cli = Cli::try_parse_from(std::iter::once("fdalg").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn ed_commands_match_library() {
        let r = run_args(&["ed", "bundle", "--genus", "2", "--rank", "2", "--degree", "0"]);
        assert_eq!(r.payload, ed::bundle_moduli_ed(2, 2, 0, false).unwrap().to_json());
        assert_eq!(r.exit_code, 0);
        let r = run_args(&["ed", "bundle", "--genus", "3", "--rank", "4", "--degree", "-6"]);
        assert_eq!(r.payload["value"], "34");
        let r = run_args(&["ed", "partitions", "--rank", "5"]);
        assert_eq!(r.payload["max_square_sum"], 17);
        assert_eq!(r.payload["witness"], json!([4, 1]));
    }

    #[test]
    fn errors_map_to_exit_codes() {
        let r = run_args(&["ed", "division", "--deg", "6", "--d", "4"]);
        assert_eq!((r.status, r.exit_code), (Status::Error, 3));
        assert_eq!(r.payload["error"]["code"], "not_divisor");
        let r = run_args(&["validate", "/nonexistent/algebra.json"]);
        assert_eq!(r.exit_code, 2);
        let r = run_args(&["ed", "nil-dim", "--genus", "2", "--partition", "2,x"]);
        assert_eq!(r.exit_code, 2);
    }

    #[test]
    fn minus_infinity_is_not_an_error() {
        let r = run_args(&["ed", "csa", "--deg", "2", "--rank", "1/3"]);
        assert_eq!((r.status, r.exit_code), (Status::Ok, 0));
        assert_eq!(r.payload["kind"], "minus_infinity");
    }

    #[test]
    fn asserted_index_lists() {
        assert_eq!(parse_asserted("2", 3, &[false, true, true]).unwrap(), vec![None, Some(2), Some(2)]);
        assert_eq!(parse_asserted("-,2", 2, &[false, true]).unwrap(), vec![None, Some(2)]);
        assert_eq!(parse_asserted("2", 1, &[true]).unwrap(), vec![Some(2)]);
    }
}

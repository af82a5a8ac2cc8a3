//! The algebra file format: write a structure-constant table, read it back
//! and validate it, including a table that fails associativity.

use fdalg::algebra::quaternions;
use fdalg::rat::rat;
use fdalg::FDAlgebra;

fn main() -> fdalg::Result<()> {
    let h = quaternions(rat(-1), rat(-1))?;
    let text = h.to_json().to_string();
    println!("{text}");
    let back = FDAlgebra::from_json_str(&text)?;
    assert_eq!(back, h);
    back.validate()?;

    // e1·e1 = e2 and e2·e1 = e1 break associativity at (e1, e1, e1)
    let mut v = h.to_json();
    let s = &mut v["structure"];
    for i in 1..4 {
        for j in 1..4 {
            for k in 0..4 {
                s[i][j][k] = "0".into();
            }
        }
    }
    s[1][1][2] = "1".into();
    s[2][1][1] = "1".into();
    match FDAlgebra::from_json(&v)?.validate() {
        Ok(()) => println!("unexpectedly associative"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

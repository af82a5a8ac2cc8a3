//! Wedderburn–Artin factors of small rational group algebras.

use fdalg::algebra::{group_algebra, groups};
use fdalg::structure::{wedderburn_decomposition, MatrixSize};

fn main() -> fdalg::Result<()> {
    let cases = [
        ("C4", groups::cyclic(4)),
        ("C5", groups::cyclic(5)),
        ("C2 x C2", groups::klein_four()),
        ("S3", groups::symmetric(3)),
        ("D4", groups::dihedral(4)),
        ("Q8", groups::quaternion_group()),
    ];
    for (name, table) in cases {
        let w = wedderburn_decomposition(&group_algebra(&table)?)?;
        println!("Q[{name}] (radical dim {}):", w.radical.radical.dim());
        for f in &w.factors {
            let size = match f.matrix_size {
                MatrixSize::Known(n) => format!("Mat_{n}(field)"),
                MatrixSize::Unknown => "matrix size unknown".into(),
            };
            println!(
                "  dim {:>2}  center {}  degree {}  {size}",
                f.factor_dim, f.center_dim, f.degree_over_center
            );
        }
    }
    Ok(())
}

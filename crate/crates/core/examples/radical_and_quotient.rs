//! Jacobson radical, nilpotency index and semisimple quotient of the upper
//! triangular matrices, then of a non-commutative local-by-matrix algebra.

use fdalg::algebra::{dual_numbers, matrix_over, upper_triangular};
use fdalg::structure::{is_semisimple, jacobson_radical, trace_form};

fn main() -> fdalg::Result<()> {
    for n in 2..=4 {
        let t = upper_triangular(n);
        let r = jacobson_radical(&t)?;
        println!(
            "T_{n}: dim {}, radical dim {}, index {}, quotient dim {}",
            t.dim(),
            r.radical.dim(),
            r.nilpotency_index,
            r.quotient.quotient.dim()
        );
    }

    // the trace form is degenerate exactly along the radical
    let a = matrix_over(2, &dual_numbers());
    let form = trace_form(&a);
    println!("Mat_2(Q[e]/e^2): trace form rank {} of {}", form.rank(), a.dim());
    let r = jacobson_radical(&a)?;
    println!("{}", r.to_json());
    println!("quotient semisimple: {}", is_semisimple(&r.quotient.quotient));
    Ok(())
}

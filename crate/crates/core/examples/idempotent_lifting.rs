//! Lifting idempotents modulo the radical with p ← 3p² − 2p³.

use fdalg::algebra::{dual_numbers, matrix_over, upper_triangular, AlgebraElement};
use fdalg::lifting::{iteration_bound, lift_from_initial, lift_idempotent, lift_idempotent_matrix, IdempotentMatrix};
use fdalg::rat::format_rat;
use fdalg::structure::wedderburn_decomposition;

fn show(p: &AlgebraElement) -> String {
    let c: Vec<String> = p.coords().iter().map(format_rat).collect();
    format!("[{}]", c.join(", "))
}

fn main() -> fdalg::Result<()> {
    let t = upper_triangular(3);
    let w = wedderburn_decomposition(&t)?;
    let qp = &w.radical.quotient;
    println!("T_3, index {} allows {} iterations", w.radical.nilpotency_index, iteration_bound(w.radical.nilpotency_index));
    for e in w.central_idempotents() {
        let lift = lift_idempotent(&e, qp)?;
        println!("  {} lifts to {} in {} iterations", show(&e), show(&lift.idempotent), lift.iterations);
    }

    // a perturbed starting point: (1 + e)·E11 in Mat_2 over the dual numbers
    let a = matrix_over(2, &dual_numbers());
    let w = wedderburn_decomposition(&a)?;
    let mut c = vec![0; a.dim()];
    c[0] = 1;
    c[1] = 1;
    let lift = lift_from_initial(&AlgebraElement::from_i64(&c), &w.radical.quotient)?;
    println!("Mat_2(Q[e]/e^2): (1+e)E11 -> {} after {} iteration(s)", show(&lift.idempotent), lift.iterations);

    // matrices over the quotient lift the same way
    let s = &w.radical.quotient.quotient;
    let q = IdempotentMatrix::identity(s, 2);
    let lifted = lift_idempotent_matrix(&q, &w.radical.quotient)?;
    println!("2x2 identity over A/rad lifts in {} iterations", lifted.iterations);
    Ok(())
}

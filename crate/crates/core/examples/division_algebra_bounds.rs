//! Essential-dimension bounds for central simple and division algebras,
//! and the bound read off the Wedderburn data of an algebra.

use fdalg::corpus::fixture_by_name;
use fdalg::ed::{self, CSADescriptor};
use fdalg::rat::ratio;
use fdalg::structure::wedderburn_decomposition;

fn main() -> fdalg::Result<()> {
    println!("{}", ed::bound_csa(&CSADescriptor::new(6, None)?, &ratio(1, 6))?);
    println!("{}", ed::bound_csa(&CSADescriptor::new(2, None)?, &ratio(1, 3))?);
    println!("{}", ed::bound_matrix_over_simple(2, 4, &ratio(1, 2))?);

    for (deg, d) in [(6, 6), (4, 2), (12, 6), (8, 8)] {
        println!("deg {deg}, d = {d}: {}", ed::bound_division(deg, d)?);
    }
    // on prime powers Karpenko's value meets the bound; CKM predicts the rest
    println!("{}", ed::karpenko_value(2, 3, 1)?);
    println!("{}", ed::ckm_value(12)?);

    let h = wedderburn_decomposition(&fixture_by_name("quaternions_m1_m1").unwrap().algebra())?;
    println!("H, no index known: {}", ed::bound_from_wedderburn(&h, 2, &[]).unwrap_err());
    println!("H, index 2 asserted: {}", ed::bound_from_wedderburn(&h, 2, &[Some(2)])?);

    let m = wedderburn_decomposition(&fixture_by_name("mat2_over_dual").unwrap().algebra())?;
    println!("Mat_2(Q[e]/e^2), d = 2: {}", ed::bound_from_wedderburn(&m, 2, &[])?);
    println!("  strict: {}", ed::strict_bound_from_wedderburn(&m, 2, &[])?);
    Ok(())
}

//! Essential dimension of the moduli of vector bundles on a curve of genus g.

use fdalg::ed::{self, Partition};

fn main() -> fdalg::Result<()> {
    println!("genus 0: {}", ed::bundle_moduli_ed(0, 5, 3, false)?);
    println!("genus 1: {}", ed::bundle_moduli_ed(1, 4, 0, false)?);
    println!(" g  r  d  value");
    for (g, r, d) in [(2, 2, 0), (2, 3, 0), (2, 3, 1), (3, 4, -6), (4, 6, 9)] {
        let b = ed::bundle_moduli_ed(g, r, d, false)?;
        println!("{g:>2} {r:>2} {d:>2}  {}", b.value.unwrap());
    }
    println!("{}", ed::bundle_moduli_ed(2, 2, 0, true)?);

    // the ingredients of the upper bound
    let p = Partition::new(vec![2, 1])?;
    println!("dim Nil at {p}, genus 3: {}", ed::nil_stack_dim(3, &p));
    println!("{}", ed::trdeg_bound_indecomposable(3, &p));
    println!("{}", ed::trdeg_bound_nonsimple(3, 3)?);
    println!("{}", ed::vb_field_of_moduli_defect_bound(3)?);
    Ok(())
}

//! Σ rᵢ² ≤ r² − 2r + 2 over partitions of r with at least two parts, by
//! exhaustive enumeration.

use fdalg::ed;

fn main() -> fdalg::Result<()> {
    println!("   r  partitions  max  bound  witness");
    for r in 2..=16 {
        let c = ed::partition_square_sum_check(r)?;
        assert!(c.holds());
        println!("{:>4}  {:>10}  {:>3}  {:>5}  {}", r, c.partitions_checked, c.max_square_sum, c.bound, c.witness);
    }
    Ok(())
}

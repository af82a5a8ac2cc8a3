//! Factoring over the rationals: square-free parts, modular factors and
//! Hensel-lifted recombination.

use fdalg::factor::{factor_mod_p, factor_rational, squarefree_decomposition};
use fdalg::Poly;

fn main() -> fdalg::Result<()> {
    for n in [4, 6, 12] {
        let mut c = vec![0i64; n + 1];
        c[0] = -1;
        c[n] = 1;
        let f = factor_rational(&Poly::from_i64(&c));
        let parts: Vec<String> = f.factors.iter().map(|(g, _)| format!("({g})")).collect();
        println!("x^{n} - 1 = {}", parts.join(""));
    }

    // 3(x² − 2)²(x + 1)
    let p = Poly::from_i64(&[-2, 0, 1]).pow(2).mul(&Poly::from_i64(&[1, 1])).scale(&fdalg::rat::rat(3));
    println!("p = {p}");
    for (g, m) in squarefree_decomposition(&p) {
        println!("  square-free part of multiplicity {m}: {g}");
    }
    let f = factor_rational(&p);
    println!("  content {}, {} irreducible factor(s)", f.content, f.factors.len());

    // x⁴ + 1 is irreducible over Q but splits modulo every prime
    let x4 = Poly::from_i64(&[1, 0, 0, 0, 1]);
    for prime in [3, 5, 7] {
        let parts: Vec<String> = factor_mod_p(&x4, prime)?.iter().map(|g| format!("({g})")).collect();
        println!("x^4 + 1 mod {prime}: {}", parts.join(""));
    }
    println!("over Q: irreducible = {}", factor_rational(&x4).is_irreducible());
    Ok(())
}

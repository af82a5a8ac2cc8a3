use num_traits::{One, Zero};

use super::FDAlgebra;
use crate::error::{Error, Result};
use crate::rat::Rat;

fn unit_vector(dim: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); dim];
    v[i] = Rat::one();
    v
}

/// ℚ as a one-dimensional algebra.
pub fn rationals() -> FDAlgebra {
    matrix_algebra(1)
}

/// `Mat_n(ℚ)` on the matrix units `E_ij`, basis index `i*n + j`.
pub fn matrix_algebra(n: usize) -> FDAlgebra {
    assert!(n > 0, "matrix size must be positive");
    let dim = n * n;
    let mut unit = vec![Rat::zero(); dim];
    for i in 0..n {
        unit[i * n + i] = Rat::one();
    }
    FDAlgebra::from_basis_products(dim, unit, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            vec![(i * n + l, Rat::one())]
        } else {
            vec![]
        }
    })
    .expect("well-formed matrix algebra")
}

/// Upper triangular `n×n` matrices on `E_ij` (`i ≤ j`), enumerated row by row.
pub fn upper_triangular(n: usize) -> FDAlgebra {
    assert!(n > 0, "matrix size must be positive");
    let units: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| units.iter().position(|&u| u == (i, j)).expect("upper unit");
    let dim = units.len();
    let mut unit = vec![Rat::zero(); dim];
    for i in 0..n {
        unit[index(i, i)] = Rat::one();
    }
    FDAlgebra::from_basis_products(dim, unit, |a, b| {
        let (i, j) = units[a];
        let (k, l) = units[b];
        if j == k {
            vec![(index(i, l), Rat::one())]
        } else {
            vec![]
        }
    })
    .expect("well-formed triangular algebra")
}

/// `ℚ[ε]/(ε²)` on the basis `1, ε`.
pub fn dual_numbers() -> FDAlgebra {
    FDAlgebra::from_basis_products(2, unit_vector(2, 0), |i, j| match (i, j) {
        (0, k) | (k, 0) => vec![(k, Rat::one())],
        _ => vec![],
    })
    .expect("well-formed dual numbers")
}

/// The quaternion algebra `(a, b)_ℚ` on `1, i, j, ij` with `i² = a`, `j² = b`, `ji = −ij`.
pub fn quaternions(a: Rat, b: Rat) -> Result<FDAlgebra> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::OutOfRange("quaternion parameters must be nonzero".into()));
    }
    let one = Rat::one();
    let ab = &a * &b;
    // basis 0 = 1, 1 = i, 2 = j, 3 = k = ij
    FDAlgebra::from_basis_products(4, unit_vector(4, 0), |x, y| match (x, y) {
        (0, k) | (k, 0) => vec![(k, one.clone())],
        (1, 1) => vec![(0, a.clone())],
        (2, 2) => vec![(0, b.clone())],
        (3, 3) => vec![(0, -ab.clone())],
        (1, 2) => vec![(3, one.clone())],
        (2, 1) => vec![(3, -one.clone())],
        (1, 3) => vec![(2, a.clone())],
        (3, 1) => vec![(2, -a.clone())],
        (2, 3) => vec![(1, -b.clone())],
        (3, 2) => vec![(1, b.clone())],
        _ => unreachable!(),
    })
}

/// Group algebra `ℚ[G]` from a multiplication table `table[g][h] = g·h`.
///
/// The table must be a Latin square with a two-sided identity and an
/// associative operation.
pub fn group_algebra(table: &[Vec<usize>]) -> Result<FDAlgebra> {
    let n = table.len();
    if n == 0 {
        return Err(Error::MalformedTable("empty table".into()));
    }
    for row in table {
        if row.len() != n {
            return Err(Error::MalformedTable("table is not square".into()));
        }
        if row.iter().any(|&x| x >= n) {
            return Err(Error::MalformedTable("entry out of range".into()));
        }
    }
    for g in 0..n {
        let mut seen_row = vec![false; n];
        let mut seen_col = vec![false; n];
        for h in 0..n {
            seen_row[table[g][h]] = true;
            seen_col[table[h][g]] = true;
        }
        if seen_row.contains(&false) || seen_col.contains(&false) {
            return Err(Error::MalformedTable("not a Latin square".into()));
        }
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::MalformedTable("no identity element".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::MalformedTable(format!(
                        "operation is not associative on ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    FDAlgebra::from_basis_products(n, unit_vector(n, identity), |g, h| {
        vec![(table[g][h], Rat::one())]
    })
}

/// `A₁ × ⋯ × A_m` with block-diagonal structure; basis of `A₁` first.
pub fn direct_product(factors: &[FDAlgebra]) -> FDAlgebra {
    assert!(!factors.is_empty(), "direct product of no algebras");
    let offsets: Vec<usize> = factors
        .iter()
        .scan(0, |acc, a| {
            let o = *acc;
            *acc += a.dim();
            Some(o)
        })
        .collect();
    let dim: usize = factors.iter().map(FDAlgebra::dim).sum();
    let mut unit = Vec::with_capacity(dim);
    for a in factors {
        unit.extend(a.unit().into_coords());
    }
    let block = |i: usize| {
        let b = offsets.iter().rposition(|&o| o <= i).expect("offset");
        (b, i - offsets[b])
    };
    FDAlgebra::from_basis_products(dim, unit, |i, j| {
        let (bi, li) = block(i);
        let (bj, lj) = block(j);
        if bi != bj {
            return vec![];
        }
        let a = &factors[bi];
        (0..a.dim())
            .filter(|&k| !a.structure_constant(li, lj, k).is_zero())
            .map(|k| (offsets[bi] + k, a.structure_constant(li, lj, k).clone()))
            .collect()
    })
    .expect("well-formed direct product")
}

/// `A ⊗_ℚ B` on the basis `a_i ⊗ b_j`, index `i*dim(B) + j`.
pub fn tensor_product(a: &FDAlgebra, b: &FDAlgebra) -> FDAlgebra {
    let (da, db) = (a.dim(), b.dim());
    let (ua, ub) = (a.unit(), b.unit());
    let mut unit = vec![Rat::zero(); da * db];
    for i in 0..da {
        for j in 0..db {
            unit[i * db + j] = &ua.coords()[i] * &ub.coords()[j];
        }
    }
    FDAlgebra::from_basis_products(da * db, unit, |x, y| {
        let (i, j) = (x / db, x % db);
        let (k, l) = (y / db, y % db);
        let mut out = Vec::new();
        for m in 0..da {
            let c = a.structure_constant(i, k, m);
            if c.is_zero() {
                continue;
            }
            for nn in 0..db {
                let d = b.structure_constant(j, l, nn);
                if !d.is_zero() {
                    out.push((m * db + nn, c * d));
                }
            }
        }
        out
    })
    .expect("well-formed tensor product")
}

/// `Mat_n(B) = Mat_n(ℚ) ⊗ B`; basis index `(i*n + j)*dim(B) + t` for `E_ij ⊗ b_t`.
pub fn matrix_over(n: usize, b: &FDAlgebra) -> FDAlgebra {
    tensor_product(&matrix_algebra(n), b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::groups;
    use crate::rat::rat;

    #[test]
    fn every_constructor_validates() {
        let algebras = vec![
            rationals(),
            matrix_algebra(2),
            matrix_algebra(3),
            upper_triangular(3),
            dual_numbers(),
            quaternions(rat(-1), rat(-1)).unwrap(),
            quaternions(rat(2), rat(-3)).unwrap(),
            group_algebra(&groups::symmetric(3)).unwrap(),
            direct_product(&[rationals(), dual_numbers()]),
            matrix_over(2, &dual_numbers()),
        ];
        for a in algebras {
            assert!(a.validate().is_ok(), "{a:?}");
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(matrix_algebra(1), rationals());
        assert_eq!(matrix_algebra(3).dim(), 9);
        assert_eq!(upper_triangular(4).dim(), 10);
        assert_eq!(matrix_over(2, &dual_numbers()).dim(), 8);
        let p = direct_product(&[rationals(), rationals()]);
        assert_eq!(p.dim(), 2);
        let (e0, e1) = (p.basis_element(0), p.basis_element(1));
        assert!(p.mul(&e0, &e1).is_zero());
        assert_eq!(p.mul(&e1, &e1), e1);
    }

    #[test]
    fn hamilton_relations() {
        let h = quaternions(rat(-1), rat(-1)).unwrap();
        let (i, j, k) = (h.basis_element(1), h.basis_element(2), h.basis_element(3));
        let minus_one = h.unit().neg();
        assert_eq!(h.mul(&i, &i), minus_one);
        assert_eq!(h.mul(&j, &j), minus_one);
        assert_eq!(h.mul(&k, &k), minus_one);
        assert_eq!(h.mul(&i, &j), k);
        assert_eq!(h.mul(&j, &k), i);
        assert_eq!(h.mul(&k, &i), j);
        assert!(quaternions(rat(0), rat(1)).is_err());
    }

    #[test]
    fn malformed_tables() {
        assert!(matches!(group_algebra(&[]), Err(Error::MalformedTable(_))));
        assert!(matches!(
            group_algebra(&[vec![0, 1], vec![0, 1]]),
            Err(Error::MalformedTable(_))
        ));
        assert!(matches!(
            group_algebra(&[vec![0, 2], vec![1, 0]]),
            Err(Error::MalformedTable(_))
        ));
        // Latin square with identity but not associative (a loop of order 5)
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(group_algebra(&loop5), Err(Error::MalformedTable(_))));
    }

    #[test]
    fn product_regular_matrix_is_block_diagonal() {
        let a = direct_product(&[dual_numbers(), matrix_algebra(2)]);
        let x = crate::algebra::AlgebraElement::from_i64(&[1, 2, 3, 4, 5, 6]);
        let l = a.left_regular_matrix(&x).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                if (i < 2) != (j < 2) {
                    assert!(l[(i, j)].is_zero());
                }
            }
        }
    }
}

use num_traits::{One, Zero};

use super::{AlgebraElement, FDAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{solve_linear, Echelon, Mat};
use crate::rat::Rat;

/// A subspace of `ℚ^ambient_dim`, stored as a reduced echelon basis.
///
/// Keeping the basis reduced makes equality of subspaces structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Mat::identity(ambient_dim),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span<'a>(ambient_dim: usize, vectors: impl IntoIterator<Item = &'a [Rat]>) -> Self {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length must match ambient dimension");
            if !e.is_full() {
                e.insert(v);
            }
        }
        Subspace {
            ambient_dim,
            basis: e.to_mat(),
        }
    }

    pub fn from_basis_rows(ambient_dim: usize, rows: &Mat) -> Self {
        Subspace::span(ambient_dim, (0..rows.rows()).map(|i| rows.row(i)))
    }

    pub fn from_elements(ambient_dim: usize, elements: &[AlgebraElement]) -> Self {
        Subspace::span(ambient_dim, elements.iter().map(|e| e.coords()))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis vectors as rows, in reduced echelon form.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_elements(&self) -> Vec<AlgebraElement> {
        self.basis.row_vecs().into_iter().map(AlgebraElement::new).collect()
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        for i in 0..self.dim() {
            let row = self.basis.row(i);
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        w.iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let rows = (0..self.dim())
            .map(|i| self.basis.row(i))
            .chain((0..other.dim()).map(|i| other.basis.row(i)));
        Subspace::span(self.ambient_dim, rows)
    }

    /// Span of all products `u·v` with `u ∈ self`, `v ∈ other`.
    pub fn product(&self, algebra: &FDAlgebra, other: &Subspace) -> Subspace {
        let left = self.basis_elements();
        let right = other.basis_elements();
        let mut e = Echelon::new(self.ambient_dim);
        'outer: for u in &left {
            for v in &right {
                if e.is_full() {
                    break 'outer;
                }
                e.insert(algebra.mul(u, v).coords());
            }
        }
        Subspace {
            ambient_dim: self.ambient_dim,
            basis: e.to_mat(),
        }
    }

    /// Checks `A·self ⊆ self` and `self·A ⊆ self` on basis products.
    pub fn is_two_sided_ideal(&self, algebra: &FDAlgebra) -> bool {
        let elems = self.basis_elements();
        (0..algebra.dim()).all(|i| {
            let e = algebra.basis_element(i);
            elems.iter().all(|b| {
                self.contains(algebra.mul(&e, b).coords()) && self.contains(algebra.mul(b, &e).coords())
            })
        })
    }

    /// Least `t ≥ 1` with `selfᵗ = 0` (`1` for the zero subspace), found by
    /// right-multiplying powers; `None` if the powers stabilize at a nonzero space.
    pub fn nilpotency_index(&self, algebra: &FDAlgebra) -> Option<usize> {
        let mut power = self.clone();
        let mut t = 1;
        while !power.is_zero() {
            let next = power.product(algebra, self);
            if next.dim() == power.dim() {
                return None;
            }
            power = next;
            t += 1;
        }
        Some(t)
    }
}

/// `algebra → quotient = algebra / ideal` with a linear section.
///
/// The quotient basis is the set of standard basis vectors `e_j` chosen
/// greedily (in index order) to complete the ideal basis; `section` embeds
/// quotient coordinates by those `e_j`, and `projection` reads off the
/// complement coordinates.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    pub algebra: FDAlgebra,
    pub ideal: Subspace,
    pub quotient: FDAlgebra,
    /// `quotient.dim × algebra.dim`, acting on coordinate columns.
    pub projection: Mat,
    /// `algebra.dim × quotient.dim`.
    pub section: Mat,
    complement: Vec<usize>,
}

impl QuotientPresentation {
    pub fn project(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.projection.apply(x.coords()))
    }

    pub fn lift(&self, q: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.section.apply(q.coords()))
    }

    /// Indices of the standard basis vectors spanning the complement.
    pub fn complement_indices(&self) -> &[usize] {
        &self.complement
    }
}

impl FDAlgebra {
    /// The quotient by a two-sided ideal, with projection and section.
    pub fn quotient_by_ideal(&self, ideal: &Subspace) -> Result<QuotientPresentation> {
        let n = self.dim();
        if ideal.ambient_dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: ideal.ambient_dim(),
            });
        }
        if !ideal.is_two_sided_ideal(self) {
            return Err(Error::NotAnIdeal);
        }
        let mut e = Echelon::new(n);
        for i in 0..ideal.dim() {
            e.insert(ideal.basis().row(i));
        }
        let mut complement = Vec::new();
        for j in 0..n {
            let mut v = vec![Rat::zero(); n];
            v[j] = Rat::one();
            if e.insert(&v) {
                complement.push(j);
            }
        }
        let m = complement.len();
        let k = ideal.dim();

        // columns: ideal basis, then complement standard vectors
        let mut full = Mat::zeros(n, n);
        for c in 0..k {
            for i in 0..n {
                full[(i, c)] = ideal.basis()[(c, i)].clone();
            }
        }
        for (t, &j) in complement.iter().enumerate() {
            full[(j, k + t)] = Rat::one();
        }
        let inverse = solve_linear(&full, &Mat::identity(n))?;
        let mut projection = Mat::zeros(m, n);
        for r in 0..m {
            for c in 0..n {
                projection[(r, c)] = inverse[(k + r, c)].clone();
            }
        }
        let mut section = Mat::zeros(n, m);
        for (t, &j) in complement.iter().enumerate() {
            section[(j, t)] = Rat::one();
        }

        let quotient = if m == 0 {
            None
        } else {
            let basis: Vec<AlgebraElement> = complement.iter().map(|&j| self.basis_element(j)).collect();
            let quotient = FDAlgebra::from_basis_products(
                m,
                projection.apply(self.unit().coords()),
                |s, t| {
                    let p = self.mul(&basis[s], &basis[t]);
                    projection
                        .apply(p.coords())
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect()
                },
            )?;
            Some(quotient)
        };
        Ok(QuotientPresentation {
            algebra: self.clone(),
            ideal: ideal.clone(),
            quotient: quotient.unwrap_or_else(FDAlgebra::zero_ring),
            projection,
            section,
            complement,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{direct_product, dual_numbers, matrix_algebra, rationals, upper_triangular};
    use crate::rat::rat;

    #[test]
    fn quotient_by_zero_is_identity() {
        let a = matrix_algebra(2);
        let qp = a.quotient_by_ideal(&Subspace::zero(4)).unwrap();
        assert_eq!(qp.quotient, a);
        assert_eq!(qp.projection, Mat::identity(4));
    }

    #[test]
    fn dual_numbers_mod_epsilon() {
        let d = dual_numbers();
        let n = Subspace::span(2, [&[rat(0), rat(1)][..]]);
        let qp = d.quotient_by_ideal(&n).unwrap();
        assert_eq!(qp.quotient, rationals());
    }

    #[test]
    fn triangular_mod_strict_part() {
        // basis E11, E12, E22
        let t = upper_triangular(2);
        let n = Subspace::span(3, [&[rat(0), rat(1), rat(0)][..]]);
        let qp = t.quotient_by_ideal(&n).unwrap();
        assert_eq!(qp.quotient, direct_product(&[rationals(), rationals()]));
        assert_eq!(qp.complement_indices(), &[0, 2]);
        let x = AlgebraElement::from_i64(&[3, 5, 7]);
        assert_eq!(qp.project(&x), AlgebraElement::from_i64(&[3, 7]));
        assert_eq!(qp.project(&qp.lift(&AlgebraElement::from_i64(&[1, 2]))), AlgebraElement::from_i64(&[1, 2]));
    }

    #[test]
    fn rejects_one_sided_ideal() {
        // span(E11, E12) is a right ideal of Mat2 but not a left ideal
        let m = matrix_algebra(2);
        let n = Subspace::from_elements(4, &[m.basis_element(0), m.basis_element(1)]);
        assert_eq!(m.quotient_by_ideal(&n).unwrap_err(), Error::NotAnIdeal);
    }

    #[test]
    fn powers_and_nilpotency() {
        let t = upper_triangular(3);
        // strict upper part: E12, E13, E23 at indices 1, 2, 4
        let n = Subspace::from_elements(6, &[t.basis_element(1), t.basis_element(2), t.basis_element(4)]);
        assert!(n.is_two_sided_ideal(&t));
        assert_eq!(n.product(&t, &n).dim(), 1);
        assert_eq!(n.nilpotency_index(&t), Some(3));
        assert_eq!(Subspace::zero(6).nilpotency_index(&t), Some(1));
        assert_eq!(Subspace::full(6).nilpotency_index(&t), None);
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(2, [&[rat(2), rat(2)][..], &[rat(1), rat(1)][..]]);
        let b = Subspace::span(2, [&[rat(-1), rat(-1)][..]]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 1);
        assert!(a.sum(&Subspace::span(2, [&[rat(1), rat(0)][..]])) == Subspace::full(2));
    }
}

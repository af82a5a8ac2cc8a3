//! Finite-dimensional associative unital algebras over ℚ given by structure constants.

mod constructors;
pub mod groups;
mod json;
mod subspace;

pub use constructors::{
    direct_product, dual_numbers, group_algebra, matrix_algebra, matrix_over, quaternions,
    rationals, tensor_product, upper_triangular,
};
pub use subspace::{QuotientPresentation, Subspace};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, solve_linear, vector_annihilator, Mat};
use crate::poly::Poly;
use crate::rat::{rat, Rat};

/// Coordinates of an element with respect to the basis of some [`FDAlgebra`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AlgebraElement {
    coords: Vec<Rat>,
}

impl AlgebraElement {
    pub fn new(coords: Vec<Rat>) -> Self {
        AlgebraElement { coords }
    }

    pub fn zero(dim: usize) -> Self {
        AlgebraElement::new(vec![Rat::zero(); dim])
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut e = AlgebraElement::zero(dim);
        e.coords[i] = Rat::one();
        e
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        AlgebraElement::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rat) -> AlgebraElement {
        AlgebraElement::new(self.coords.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement::new(self.coords.iter().map(|a| -a).collect())
    }
}

/// An algebra of dimension `dim` with `e_i · e_j = Σ_k structure[i][j][k] e_k`.
///
/// Construction only checks shapes; [`FDAlgebra::validate`] checks the
/// associativity and unit laws.
#[derive(Clone, Debug)]
pub struct FDAlgebra {
    dim: usize,
    structure: Vec<Rat>,
    unit: Vec<Rat>,
    // sparse e_i·e_j, indexed by i*dim + j
    products: Vec<Vec<(usize, Rat)>>,
}

impl PartialEq for FDAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.unit == other.unit && self.structure == other.structure
    }
}

impl Eq for FDAlgebra {}

impl FDAlgebra {
    /// `structure` is the flattened `dim × dim × dim` array, index `(i*dim + j)*dim + k`.
    pub fn new(dim: usize, structure: Vec<Rat>, unit: Vec<Rat>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Parse("algebra dimension must be positive".into()));
        }
        if structure.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: structure.len(),
            });
        }
        if unit.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: unit.len(),
            });
        }
        let products = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter(|&k| !structure[ij * dim + k].is_zero())
                    .map(|k| (k, structure[ij * dim + k].clone()))
                    .collect()
            })
            .collect();
        Ok(FDAlgebra {
            dim,
            structure,
            unit,
            products,
        })
    }

    /// Builds from a closure giving the product of basis elements.
    pub fn from_basis_products(
        dim: usize,
        unit: Vec<Rat>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, Rat)>,
    ) -> Result<Self> {
        let mut structure = vec![Rat::zero(); dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in product(i, j) {
                    structure[(i * dim + j) * dim + k] += c;
                }
            }
        }
        FDAlgebra::new(dim, structure, unit)
    }

    /// The zero ring (dimension 0), which arises only as the quotient by the
    /// whole algebra.
    pub(crate) fn zero_ring() -> Self {
        FDAlgebra {
            dim: 0,
            structure: Vec::new(),
            unit: Vec::new(),
            products: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn unit(&self) -> AlgebraElement {
        AlgebraElement::new(self.unit.clone())
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        AlgebraElement::basis(self.dim, i)
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.dim)
    }

    fn check(&self, x: &AlgebraElement) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// Checks associativity on all basis triples, then the two-sided unit law.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = &self.products[i * n + j];
                for k in 0..n {
                    let mut lhs = vec![Rat::zero(); n];
                    for (m, c) in ij {
                        for (l, d) in &self.products[m * n + k] {
                            lhs[*l] += c * d;
                        }
                    }
                    let mut rhs = vec![Rat::zero(); n];
                    for (m, c) in &self.products[j * n + k] {
                        for (l, d) in &self.products[i * n + m] {
                            rhs[*l] += c * d;
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::NonAssociative(i, j, k));
                    }
                }
            }
        }
        let u = self.unit();
        for i in 0..n {
            let e = self.basis_element(i);
            if self.mul(&u, &e) != e || self.mul(&e, &u) != e {
                return Err(Error::UnitLaw(i));
            }
        }
        Ok(())
    }

    /// Bilinear product, with the dimension check.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.mul(x, y))
    }

    /// Bilinear product; panics on dimension mismatch.
    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        assert_eq!(x.len(), self.dim, "left factor has wrong dimension");
        assert_eq!(y.len(), self.dim, "right factor has wrong dimension");
        let n = self.dim;
        let mut out = vec![Rat::zero(); n];
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.products[i * n + j] {
                    out[*k] += &ab * c;
                }
            }
        }
        AlgebraElement::new(out)
    }

    pub fn square(&self, x: &AlgebraElement) -> AlgebraElement {
        self.mul(x, x)
    }

    pub fn is_idempotent(&self, x: &AlgebraElement) -> bool {
        self.square(x) == *x
    }

    /// Matrix of `y ↦ x·y`; column `j` holds the coordinates of `x·e_j`.
    pub fn left_regular_matrix(&self, x: &AlgebraElement) -> Result<Mat> {
        self.check(x)?;
        Ok(self.regular_matrix(x, true))
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_regular_matrix(&self, x: &AlgebraElement) -> Result<Mat> {
        self.check(x)?;
        Ok(self.regular_matrix(x, false))
    }

    fn regular_matrix(&self, x: &AlgebraElement, left: bool) -> Mat {
        let n = self.dim;
        let mut m = Mat::zeros(n, n);
        for j in 0..n {
            let e = self.basis_element(j);
            let col = if left { self.mul(x, &e) } else { self.mul(&e, x) };
            for (i, v) in col.coords.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// The center `{x : x·e_j = e_j·x for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            // column i of the commutator map x ↦ x e_j − e_j x
            let cols: Vec<Vec<Rat>> = (0..n)
                .map(|i| {
                    let a = &self.products[i * n + j];
                    let b = &self.products[j * n + i];
                    let mut v = vec![Rat::zero(); n];
                    for (k, c) in a {
                        v[*k] += c;
                    }
                    for (k, c) in b {
                        v[*k] -= c;
                    }
                    v
                })
                .collect();
            for k in 0..n {
                rows.push((0..n).map(|i| cols[i][k].clone()).collect::<Vec<_>>());
            }
        }
        let system = Mat::from_rows(n, &rows).expect("square system");
        Subspace::from_basis_rows(n, &kernel_basis(&system))
    }

    pub fn is_central(&self, x: &AlgebraElement) -> bool {
        (0..self.dim).all(|j| {
            let e = self.basis_element(j);
            self.mul(x, &e) == self.mul(&e, x)
        })
    }

    /// Minimal polynomial of `x` relative to the unit of this algebra.
    pub fn minimal_polynomial(&self, x: &AlgebraElement) -> Result<Poly> {
        self.check(x)?;
        Ok(self.minimal_polynomial_relative(x, &self.unit()))
    }

    /// Least monic `p` with `p(x)·u = 0`, evaluating constants as multiples of `u`.
    ///
    /// When `u` is an idempotent that acts as unit on `x`, this is the
    /// minimal polynomial of `x` inside the corner with unit `u`.
    pub(crate) fn minimal_polynomial_relative(&self, x: &AlgebraElement, u: &AlgebraElement) -> Poly {
        let l = self.regular_matrix(x, true);
        vector_annihilator(&l, u.coords())
    }

    /// `p(x)` with the constant term read as a multiple of `u`.
    pub(crate) fn eval_poly(&self, p: &Poly, x: &AlgebraElement, u: &AlgebraElement) -> AlgebraElement {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            if !c.is_zero() {
                acc = acc.add(&u.scale(c));
            }
        }
        acc
    }

    /// The algebra structure on the span of `basis` (rows), which must be
    /// closed under multiplication and contain `unit`.
    ///
    /// Returns the new algebra; its basis element `s` corresponds to row `s`.
    pub fn subalgebra(&self, basis: &Mat, unit: &AlgebraElement) -> Result<FDAlgebra> {
        let k = basis.rows();
        let bt = basis.transpose();
        let elems: Vec<AlgebraElement> = basis.row_vecs().into_iter().map(AlgebraElement::new).collect();
        let mut products = Mat::zeros(self.dim, k * k + 1);
        for s in 0..k {
            for t in 0..k {
                let p = self.mul(&elems[s], &elems[t]);
                for (i, v) in p.coords.into_iter().enumerate() {
                    products[(i, s * k + t)] = v;
                }
            }
        }
        for (i, v) in unit.coords().iter().enumerate() {
            products[(i, k * k)] = v.clone();
        }
        let coords = solve_linear(&bt, &products)?;
        let mut structure = Vec::with_capacity(k * k * k);
        for st in 0..k * k {
            for r in 0..k {
                structure.push(coords[(r, st)].clone());
            }
        }
        let unit = coords.column(k * k);
        FDAlgebra::new(k, structure, unit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    #[test]
    fn rationals_validate() {
        let q = FDAlgebra::new(1, vec![rat(1)], vec![rat(1)]).unwrap();
        assert!(q.validate().is_ok());
        assert_eq!(q, rationals());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // e1·e1 = e2, e2·e1 = e1, everything else zero: (e1e1)e1 = e1 but e1(e1e1) = 0
        let a = FDAlgebra::from_basis_products(3, vec![rat(1), rat(0), rat(0)], |i, j| match (i, j) {
            (0, k) | (k, 0) => vec![(k, rat(1))],
            (1, 1) => vec![(2, rat(1))],
            (2, 1) => vec![(1, rat(1))],
            _ => vec![],
        })
        .unwrap();
        assert_eq!(a.validate(), Err(Error::NonAssociative(1, 1, 1)));
    }

    #[test]
    fn unit_law_violation() {
        let a = FDAlgebra::new(1, vec![rat(1)], vec![rat(2)]).unwrap();
        assert_eq!(a.validate(), Err(Error::UnitLaw(0)));
    }

    #[test]
    fn shape_errors() {
        assert!(matches!(
            FDAlgebra::new(2, vec![rat(1)], vec![rat(1), rat(0)]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(FDAlgebra::new(0, vec![], vec![]).is_err());
        let q = rationals();
        assert!(q.multiply(&AlgebraElement::from_i64(&[1, 0]), &q.unit()).is_err());
    }

    #[test]
    fn products() {
        let q = rationals();
        let x = AlgebraElement::new(vec![ratio(2, 3)]);
        assert_eq!(q.multiply(&q.unit(), &x).unwrap(), x);

        let d = dual_numbers();
        let eps = d.basis_element(1);
        assert!(d.multiply(&eps, &eps).unwrap().is_zero());

        // E12 · E21 = E11 in Mat2, basis E11 E12 E21 E22
        let m = matrix_algebra(2);
        assert_eq!(
            m.mul(&m.basis_element(1), &m.basis_element(2)),
            m.basis_element(0)
        );
    }

    #[test]
    fn left_regular_examples() {
        let d = dual_numbers();
        assert_eq!(d.left_regular_matrix(&d.unit()).unwrap(), Mat::identity(2));
        assert_eq!(
            d.left_regular_matrix(&d.basis_element(1)).unwrap(),
            Mat::from_i64(&[&[0, 0], &[1, 0]])
        );
        let c2 = group_algebra(&groups::cyclic(2)).unwrap();
        assert_eq!(
            c2.left_regular_matrix(&c2.basis_element(1)).unwrap(),
            Mat::from_i64(&[&[0, 1], &[1, 0]])
        );
    }

    #[test]
    fn center_examples() {
        assert_eq!(dual_numbers().center().dim(), 2);
        let z = matrix_algebra(2).center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(matrix_algebra(2).unit().coords()));
        let t = upper_triangular(2);
        let z = t.center();
        assert_eq!(z.dim(), 1);
        assert!(z.contains(t.unit().coords()));
    }

    #[test]
    fn element_minimal_polynomial() {
        let m = matrix_algebra(2);
        // E11 satisfies x^2 - x
        assert_eq!(
            m.minimal_polynomial(&m.basis_element(0)).unwrap(),
            Poly::from_i64(&[0, -1, 1])
        );
        assert_eq!(m.minimal_polynomial(&m.unit()).unwrap(), Poly::from_i64(&[-1, 1]));
        let eps = dual_numbers().basis_element(1);
        assert_eq!(
            dual_numbers().minimal_polynomial(&eps).unwrap(),
            Poly::from_i64(&[0, 0, 1])
        );
    }

    #[test]
    fn subalgebra_of_diagonal() {
        let m = matrix_algebra(2);
        let basis = Mat::from_i64(&[&[1, 0, 0, 0], &[0, 0, 0, 1]]);
        let diag = m.subalgebra(&basis, &m.unit()).unwrap();
        assert!(diag.validate().is_ok());
        assert_eq!(diag, direct_product(&[rationals(), rationals()]));
    }
}

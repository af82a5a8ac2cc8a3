//! Dense exact linear algebra over the rationals.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{format_rat, Rat};

/// Row-major dense matrix of rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Rat>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Mat {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Rat>]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r.iter().cloned());
        }
        Ok(Mat {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Convenience constructor for small integer matrices in tests and examples.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| crate::rat::rat(x)).collect())
            .collect();
        Mat::from_rows(cols, &rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rat] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self · v`.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rat::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .fold(Rat::zero(), |a, b| a + b)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend(self.row(i).iter().cloned());
            entries.extend(other.row(i).iter().cloned());
        }
        Mat {
            rows: self.rows,
            cols,
            entries,
        }
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(format_rat).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form with its pivot columns.
///
/// Zero rows are kept at the bottom so the shape is unchanged.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a[(r, c)].recip();
        for j in c..a.cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        let pivot_row: Vec<(usize, Rat)> = (c..a.cols)
            .filter(|&j| !a[(r, j)].is_zero())
            .map(|j| (j, a[(r, j)].clone()))
            .collect();
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for (j, v) in &pivot_row {
                let d = &f * v;
                a[(i, *j)] -= d;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of the right null space `{x : m·x = 0}`, one basis vector per row.
///
/// Basis vectors are the standard ones attached to the free columns of the
/// echelon form, in increasing column order.
pub fn kernel_basis(m: &Mat) -> Mat {
    let (e, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Mat::zeros(free.len(), m.cols);
    for (b, &f) in free.iter().enumerate() {
        basis[(b, f)] = Rat::one();
        for (r, &p) in pivots.iter().enumerate() {
            let v = &e[(r, f)];
            if !v.is_zero() {
                basis[(b, p)] = -v.clone();
            }
        }
    }
    basis
}

/// One solution `x` of `a·x = b`, with free variables set to zero.
pub fn solve_linear(a: &Mat, b: &Mat) -> Result<Mat> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: b.rows,
        });
    }
    let (e, pivots) = rref(&a.hstack(b));
    if pivots.iter().any(|&p| p >= a.cols) {
        return Err(Error::NoSolution);
    }
    let mut x = Mat::zeros(a.cols, b.cols);
    for (r, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols {
            x[(p, j)] = e[(r, a.cols + j)].clone();
        }
    }
    Ok(x)
}

/// Incrementally maintained echelon basis of a row space.
///
/// Used wherever vectors arrive one at a time and we need membership tests
/// or independent subsets without re-running a full elimination.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    dim: usize,
    // (pivot column, row normalized to 1 at the pivot)
    rows: Vec<(usize, Vec<Rat>)>,
}

impl Echelon {
    pub(crate) fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [Rat]) {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
    }

    pub(crate) fn contains(&self, v: &[Rat]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns false when it was already in the span.
    pub(crate) fn insert(&mut self, v: &[Rat]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        self.rows.push((p, w));
        true
    }

    pub(crate) fn is_full(&self) -> bool {
        self.rank() == self.dim
    }

    /// Basis rows in reduced echelon form, sorted by pivot.
    pub(crate) fn to_mat(&self) -> Mat {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        let rows: Vec<Vec<Rat>> = rows.into_iter().map(|(_, r)| r).collect();
        Mat::from_rows(self.dim, &rows).expect("echelon rows have ambient length")
    }
}

/// Monic annihilator of `v` under `m`: least-degree `p` with `p(m)·v = 0`.
pub fn vector_annihilator(m: &Mat, v: &[Rat]) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    let mut krylov: Vec<Vec<Rat>> = Vec::new();
    let mut current = v.to_vec();
    let mut echelon = Echelon::new(n);
    loop {
        if echelon.contains(&current) {
            if krylov.is_empty() {
                return Poly::one();
            }
            // current = Σ c_i krylov[i]
            let mut a = Mat::zeros(n, krylov.len());
            for (j, col) in krylov.iter().enumerate() {
                for i in 0..n {
                    a[(i, j)] = col[i].clone();
                }
            }
            let b = Mat::from_entries(n, 1, current.clone()).expect("column vector");
            let c = solve_linear(&a, &b).expect("vector lies in the Krylov span");
            let mut coeffs: Vec<Rat> = (0..krylov.len()).map(|i| -c[(i, 0)].clone()).collect();
            coeffs.push(Rat::one());
            return Poly::new(coeffs);
        }
        echelon.insert(&current);
        let next = m.apply(&current);
        krylov.push(current);
        current = next;
    }
}

/// Minimal polynomial of a square matrix: lcm of the annihilators of the
/// standard basis vectors.
pub fn minimal_polynomial(m: &Mat) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let n = m.rows();
    let mut acc = Poly::one();
    for i in 0..n {
        let mut e = vec![Rat::zero(); n];
        e[i] = Rat::one();
        if acc.eval_mat(m).apply(&e).iter().all(Zero::is_zero) {
            continue;
        }
        acc = acc.lcm(&vector_annihilator(m, &e));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, ratio};
    use proptest::prelude::*;

    #[test]
    fn rref_examples() {
        let (e, p) = rref(&Mat::identity(2));
        assert_eq!(e, Mat::identity(2));
        assert_eq!(p, vec![0, 1]);

        let (e, p) = rref(&Mat::from_i64(&[&[1, 2], &[2, 4]]));
        assert_eq!(e, Mat::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);

        let (e, p) = rref(&Mat::from_i64(&[&[0, 1], &[1, 0]]));
        assert_eq!(e, Mat::identity(2));
        assert_eq!(p, vec![0, 1]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&Mat::identity(3)).rows(), 0);
        assert_eq!(kernel_basis(&Mat::zeros(2, 2)), Mat::identity(2));
        let k = kernel_basis(&Mat::from_i64(&[&[1, 1]]));
        assert_eq!(k, Mat::from_i64(&[&[-1, 1]]));
    }

    #[test]
    fn solve_examples() {
        let b = Mat::from_i64(&[&[3, 1], &[-2, 5]]);
        assert_eq!(solve_linear(&Mat::identity(2), &b).unwrap(), b);

        let x = solve_linear(&Mat::from_i64(&[&[2]]), &Mat::from_i64(&[&[1]])).unwrap();
        assert_eq!(x[(0, 0)], ratio(1, 2));

        let err = solve_linear(&Mat::from_i64(&[&[1], &[1]]), &Mat::from_i64(&[&[1], &[2]]));
        assert_eq!(err, Err(Error::NoSolution));

        assert!(matches!(
            solve_linear(&Mat::identity(2), &Mat::zeros(3, 1)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn minimal_polynomial_examples() {
        let x = Poly::x();
        assert_eq!(minimal_polynomial(&Mat::zeros(3, 3)).unwrap(), x);
        assert_eq!(
            minimal_polynomial(&Mat::identity(4)).unwrap(),
            Poly::from_i64(&[-1, 1])
        );
        assert_eq!(
            minimal_polynomial(&Mat::from_i64(&[&[0, 1], &[0, 0]])).unwrap(),
            Poly::from_i64(&[0, 0, 1])
        );
        // diag(1, 2, 2) has minimal polynomial (x-1)(x-2), not the cubic charpoly.
        let d = Mat::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert_eq!(
            minimal_polynomial(&d).unwrap(),
            Poly::from_i64(&[2, -3, 1])
        );
        assert!(minimal_polynomial(&Mat::zeros(2, 3)).is_err());
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(3);
        assert!(e.insert(&[rat(1), rat(1), rat(0)]));
        assert!(e.insert(&[rat(0), rat(1), rat(1)]));
        assert!(e.contains(&[rat(1), rat(0), rat(-1)]));
        assert!(!e.insert(&[rat(2), rat(3), rat(1)]));
        assert!(!e.contains(&[rat(0), rat(0), rat(1)]));
        assert_eq!(e.rank(), 2);
    }

    fn small_matrix() -> impl Strategy<Value = Mat> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-10i64..=10, r * c).prop_map(move |v| {
                Mat::from_entries(r, c, v.into_iter().map(rat).collect()).unwrap()
            })
        })
    }

    fn small_square() -> impl Strategy<Value = Mat> {
        (1usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(-3i64..=3, n * n).prop_map(move |v| {
                Mat::from_entries(n, n, v.into_iter().map(rat).collect()).unwrap()
            })
        })
    }

    /// Faddeev–LeVerrier: `M₀ = 0`, `Mₖ = A·Mₖ₋₁ + c_{n−k+1}·I`, `c_{n−k} = −tr(A·Mₖ)/k`.
    fn charpoly(a: &Mat) -> Poly {
        let n = a.rows();
        let mut c = vec![Rat::zero(); n + 1];
        c[n] = rat(1);
        let mut m = Mat::zeros(n, n);
        for k in 1..=n {
            m = a.mul(&m).unwrap().add(&Mat::identity(n).scale(&c[n - k + 1]));
            c[n - k] = -a.mul(&m).unwrap().trace() / rat(k as i64);
        }
        Poly::new(c)
    }

    #[test]
    fn charpoly_of_jordan_block() {
        let j = Mat::from_i64(&[&[2, 1], &[0, 2]]);
        assert_eq!(charpoly(&j), Poly::from_i64(&[4, -4, 1]));
    }

    proptest! {
        #[test]
        fn minimal_polynomial_divides_charpoly(m in small_square()) {
            let p = minimal_polynomial(&m).unwrap();
            let (_, r) = charpoly(&m).divrem(&p);
            prop_assert!(r.is_zero());
        }

        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (once, p1) = rref(&m);
            let (twice, p2) = rref(&once);
            prop_assert_eq!(once, twice);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = kernel_basis(&m);
            prop_assert_eq!(k.rows() + m.rank(), m.cols());
            for i in 0..k.rows() {
                prop_assert!(m.apply(k.row(i)).iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn minimal_polynomial_annihilates(m in small_square()) {
            let p = minimal_polynomial(&m).unwrap();
            prop_assert!(p.eval_mat(&m).is_zero());
            prop_assert!(p.degree().unwrap() <= m.rows());
            prop_assert!(p.is_monic());
        }
    }
}

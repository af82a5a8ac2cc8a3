//! Lifting idempotents modulo nilpotent ideals, and projective modules
//! classified by their rank over each simple factor.

use num_traits::Zero;
use serde_json::Value;

use crate::algebra::{AlgebraElement, FDAlgebra, QuotientPresentation};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rat::{rat, vec_from_json, vec_to_json, Rat};
use crate::structure::{corner, WedderburnReport};

/// Result of a lift: the idempotent and the number of `p ↦ 3p² − 2p³` steps taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift<T> {
    pub idempotent: T,
    pub iterations: usize,
}

/// `⌈log₂ t⌉`, the number of steps after which the error `p² − p ∈ 𝔫`
/// has been pushed into `𝔫ᵗ = 0`.
pub fn iteration_bound(nilpotency_index: usize) -> usize {
    let mut k = 0;
    while (1usize << k) < nilpotency_index {
        k += 1;
    }
    k
}

fn nilpotency(qp: &QuotientPresentation) -> Result<usize> {
    qp.ideal.nilpotency_index(&qp.algebra).ok_or(Error::NotNilpotent)
}

/// Lifts an idempotent `q` of `qp.quotient` to an idempotent of `qp.algebra`
/// projecting to `q`, starting from the section.
pub fn lift_idempotent(q: &AlgebraElement, qp: &QuotientPresentation) -> Result<Lift<AlgebraElement>> {
    if q.len() != qp.quotient.dim() {
        return Err(Error::DimensionMismatch {
            expected: qp.quotient.dim(),
            found: q.len(),
        });
    }
    if !qp.quotient.is_idempotent(q) {
        return Err(Error::NotIdempotent);
    }
    lift_from_initial(&qp.lift(q), qp)
}

/// Lifts from any `p₀` in the ambient algebra that is idempotent modulo the ideal.
pub fn lift_from_initial(p0: &AlgebraElement, qp: &QuotientPresentation) -> Result<Lift<AlgebraElement>> {
    let a = &qp.algebra;
    if p0.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: p0.len(),
        });
    }
    let t = nilpotency(qp)?;
    if !qp.ideal.contains(a.square(p0).sub(p0).coords()) {
        return Err(Error::NotIdempotent);
    }
    let (three, two) = (rat(3), rat(2));
    let mut p = p0.clone();
    let mut iterations = 0;
    loop {
        let p2 = a.square(&p);
        if p2 == p {
            break;
        }
        let p3 = a.mul(&p2, &p);
        p = p2.scale(&three).sub(&p3.scale(&two));
        iterations += 1;
    }
    assert!(iterations <= iteration_bound(t), "lifting exceeded ⌈log₂ t⌉ steps");
    Ok(Lift {
        idempotent: p,
        iterations,
    })
}

/// An `r × r` matrix with entries in an algebra, row-major.
///
/// The algebra is not stored; operations take it as an argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentMatrix {
    size: usize,
    entries: Vec<AlgebraElement>,
}

impl IdempotentMatrix {
    /// Checks shapes and `P·P = P`.
    pub fn new(a: &FDAlgebra, size: usize, entries: Vec<AlgebraElement>) -> Result<Self> {
        let m = IdempotentMatrix::unchecked(a, size, entries)?;
        if !m.is_idempotent(a) {
            return Err(Error::NotIdempotent);
        }
        Ok(m)
    }

    fn unchecked(a: &FDAlgebra, size: usize, entries: Vec<AlgebraElement>) -> Result<Self> {
        if size == 0 {
            return Err(Error::OutOfRange("matrix size must be positive".into()));
        }
        if entries.len() != size * size {
            return Err(Error::DimensionMismatch {
                expected: size * size,
                found: entries.len(),
            });
        }
        if let Some(e) = entries.iter().find(|e| e.len() != a.dim()) {
            return Err(Error::DimensionMismatch {
                expected: a.dim(),
                found: e.len(),
            });
        }
        Ok(IdempotentMatrix { size, entries })
    }

    pub fn identity(a: &FDAlgebra, size: usize) -> Self {
        IdempotentMatrix::diagonal(a, &vec![a.unit(); size]).expect("unit is idempotent")
    }

    pub fn diagonal(a: &FDAlgebra, diag: &[AlgebraElement]) -> Result<Self> {
        let r = diag.len();
        let mut entries = vec![a.zero(); r * r];
        for (i, d) in diag.iter().enumerate() {
            entries[i * r + i] = d.clone();
        }
        IdempotentMatrix::new(a, r, entries)
    }

    /// The 1×1 matrix `(p)`.
    pub fn from_element(a: &FDAlgebra, p: &AlgebraElement) -> Result<Self> {
        IdempotentMatrix::diagonal(a, std::slice::from_ref(p))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[AlgebraElement] {
        &self.entries
    }

    fn product(&self, a: &FDAlgebra, other: &IdempotentMatrix) -> IdempotentMatrix {
        let r = self.size;
        let mut entries = vec![a.zero(); r * r];
        for i in 0..r {
            for k in 0..r {
                let x = self.entry(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..r {
                    let y = other.entry(k, j);
                    if !y.is_zero() {
                        entries[i * r + j] = entries[i * r + j].add(&a.mul(x, y));
                    }
                }
            }
        }
        IdempotentMatrix { size: r, entries }
    }

    fn map(&self, f: impl Fn(&AlgebraElement) -> AlgebraElement) -> IdempotentMatrix {
        IdempotentMatrix {
            size: self.size,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_idempotent(&self, a: &FDAlgebra) -> bool {
        self.product(a, self) == *self
    }

    /// Block-diagonal `self ⊕ other`.
    pub fn direct_sum(&self, a: &FDAlgebra, other: &IdempotentMatrix) -> IdempotentMatrix {
        let (r, s) = (self.size, other.size);
        let n = r + s;
        let mut entries = vec![a.zero(); n * n];
        for i in 0..r {
            for j in 0..r {
                entries[i * n + j] = self.entry(i, j).clone();
            }
        }
        for i in 0..s {
            for j in 0..s {
                entries[(r + i) * n + r + j] = other.entry(i, j).clone();
            }
        }
        IdempotentMatrix { size: n, entries }
    }

    /// Nested arrays: row `i` is the list of coordinate vectors of `P_i0, P_i1, …`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.size)
                .map(|i| Value::Array((0..self.size).map(|j| vec_to_json(self.entry(i, j).coords())).collect()))
                .collect(),
        )
    }

    pub fn from_json(a: &FDAlgebra, v: &Value) -> Result<Self> {
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Parse("idempotent matrix must be an array of rows".into()))?;
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse("matrix rows must be arrays".into()))?;
            if row.len() != size {
                return Err(Error::DimensionMismatch {
                    expected: size,
                    found: row.len(),
                });
            }
            for cell in row {
                entries.push(AlgebraElement::new(vec_from_json(cell)?));
            }
        }
        IdempotentMatrix::new(a, size, entries)
    }
}

/// Matrix form of [`lift_idempotent`]: the same iteration in `Mat_r(A)`,
/// whose ideal `Mat_r(𝔫)` has the same nilpotency index.
pub fn lift_idempotent_matrix(q: &IdempotentMatrix, qp: &QuotientPresentation) -> Result<Lift<IdempotentMatrix>> {
    let (a, s) = (&qp.algebra, &qp.quotient);
    let q = IdempotentMatrix::new(s, q.size, q.entries.clone())?;
    if q.size == 1 {
        let lift = lift_idempotent(&q.entries[0], qp)?;
        return Ok(Lift {
            idempotent: IdempotentMatrix::unchecked(a, 1, vec![lift.idempotent])?,
            iterations: lift.iterations,
        });
    }
    let t = nilpotency(qp)?;
    let (three, two) = (rat(3), rat(2));
    let mut p = q.map(|x| qp.lift(x));
    let mut iterations = 0;
    loop {
        let p2 = p.product(a, &p);
        if p2 == p {
            break;
        }
        let p3 = p2.product(a, &p);
        p = IdempotentMatrix {
            size: p.size,
            entries: p2
                .entries
                .iter()
                .zip(&p3.entries)
                .map(|(x, y)| x.scale(&three).sub(&y.scale(&two)))
                .collect(),
        };
        iterations += 1;
    }
    assert!(iterations <= iteration_bound(t), "lifting exceeded ⌈log₂ t⌉ steps");
    Ok(Lift {
        idempotent: p,
        iterations,
    })
}

/// The image of `P` on column vectors `A^r`, a finitely generated projective
/// right `A`-module, together with its rank over each simple factor of `A/rad`.
#[derive(Clone, Debug)]
pub struct ProjectiveModuleDescriptor {
    pub algebra: FDAlgebra,
    pub presentation: IdempotentMatrix,
    pub rank_vector: Vec<Rat>,
    /// The common rank when every factor sees the same rank.
    pub uniform_rank: Option<Rat>,
}

impl ProjectiveModuleDescriptor {
    /// `w` must be the Wedderburn report of `algebra`.
    pub fn new(algebra: &FDAlgebra, presentation: IdempotentMatrix, w: &WedderburnReport) -> Result<Self> {
        let presentation = IdempotentMatrix::new(algebra, presentation.size, presentation.entries)?;
        let ranks = rank_vector(algebra, &presentation, w)?;
        let uniform_rank = match ranks.split_first() {
            Some((first, rest)) if rest.iter().all(|r| r == first) => Some(first.clone()),
            _ => None,
        };
        Ok(ProjectiveModuleDescriptor {
            algebra: algebra.clone(),
            presentation,
            rank_vector: ranks,
            uniform_rank,
        })
    }
}

/// For each central primitive idempotent `e` of `A/rad`: the ℚ-dimension of
/// the image of `v ↦ e·P̄·v` on `(A/rad)^r`, divided by the factor dimension.
pub fn rank_vector(a: &FDAlgebra, p: &IdempotentMatrix, w: &WedderburnReport) -> Result<Vec<Rat>> {
    let qp = &w.radical.quotient;
    if qp.algebra != *a {
        return Err(Error::AlgebraMismatch);
    }
    let s = &qp.quotient;
    let m = s.dim();
    let r = p.size;
    let pbar = p.map(|x| qp.project(x));
    let mut ranks = Vec::with_capacity(w.factors.len());
    for f in &w.factors {
        let ep = pbar.map(|x| s.mul(&f.central_idempotent, x));
        let mut op = Mat::zeros(r * m, r * m);
        for j in 0..r {
            for b in 0..m {
                let basis = s.basis_element(b);
                for i in 0..r {
                    let y = s.mul(ep.entry(i, j), &basis);
                    for (k, c) in y.coords().iter().enumerate() {
                        if !c.is_zero() {
                            op[(i * m + k, j * m + b)] = c.clone();
                        }
                    }
                }
            }
        }
        ranks.push(Rat::new(op.rank().into(), f.factor_dim.into()));
    }
    Ok(ranks)
}

/// Projective modules over an artinian algebra are isomorphic exactly when
/// their rank vectors agree.
pub fn modules_isomorphic(m1: &ProjectiveModuleDescriptor, m2: &ProjectiveModuleDescriptor) -> Result<bool> {
    if m1.algebra != m2.algebra {
        return Err(Error::AlgebraMismatch);
    }
    Ok(m1.rank_vector == m2.rank_vector)
}

/// Whether a projective module of uniform rank `r` exists: `nᵢ·r ∈ ℤ` for
/// every factor `Mat_{nᵢ}(Dᵢ)`.
pub fn rank_realizable(w: &WedderburnReport, r: &Rat) -> Result<bool> {
    let mut ok = true;
    for (i, f) in w.factors.iter().enumerate() {
        let n = f.matrix_size.known().ok_or(Error::UnknownIndex(i))?;
        ok &= (r * rat(n as i64)).is_integer();
    }
    Ok(ok)
}

/// `p·A·p` as an algebra with unit `p`.
pub fn peirce_corner(a: &FDAlgebra, p: &AlgebraElement) -> Result<FDAlgebra> {
    if p.len() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: p.len(),
        });
    }
    if !a.is_idempotent(p) {
        return Err(Error::NotIdempotent);
    }
    if p.is_zero() {
        return Err(Error::OutOfRange("the corner at 0 is the zero ring".into()));
    }
    Ok(corner(a, p))
}

/// Entry `(i, j)` of a matrix over `a` whose other entries are zero.
pub fn matrix_unit(a: &FDAlgebra, size: usize, i: usize, j: usize, x: &AlgebraElement) -> Vec<AlgebraElement> {
    let mut entries = vec![a.zero(); size * size];
    entries[i * size + j] = x.clone();
    entries
}

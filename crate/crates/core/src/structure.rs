//! Jacobson radical and Wedderburn–Artin decomposition.
//!
//! The radical is the kernel of the trace form `(x, y) ↦ tr(L_{xy})`, which
//! is exact in characteristic 0. Simple factors of the semisimple quotient
//! are cut out by central primitive idempotents, found by factoring minimal
//! polynomials of central elements.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{AlgebraElement, FDAlgebra, QuotientPresentation, Subspace};
use crate::error::{Error, Result};
use crate::factor::factor_rational;
use crate::linalg::{kernel_basis, Mat};
use crate::poly::Poly;
use crate::rat::{rat, vec_to_json, Rat};

#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub radical: Subspace,
    /// Least `t` with `radicalᵗ = 0`; 1 when the radical is zero.
    pub nilpotency_index: usize,
    pub quotient: QuotientPresentation,
}

impl RadicalReport {
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.quotient.algebra.dim(),
            "radical_dim": self.radical.dim(),
            "nilpotency_index": self.nilpotency_index,
            "radical_basis": self.radical.basis().row_vecs().iter().map(|r| vec_to_json(r)).collect::<Vec<_>>(),
            "quotient_dim": self.quotient.quotient.dim(),
        })
    }
}

/// Number of matrix blocks `n` in a simple factor `Mat_n(D)`, if it was determined.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixSize {
    Known(usize),
    Unknown,
}

impl MatrixSize {
    pub fn known(self) -> Option<usize> {
        match self {
            MatrixSize::Known(n) => Some(n),
            MatrixSize::Unknown => None,
        }
    }

    pub fn to_json(self) -> Value {
        match self {
            MatrixSize::Known(n) => json!(n),
            MatrixSize::Unknown => json!("unknown"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimpleFactorData {
    /// Coordinates in the semisimple quotient.
    pub central_idempotent: AlgebraElement,
    pub factor_dim: usize,
    pub center_dim: usize,
    pub degree_over_center: usize,
    pub matrix_size: MatrixSize,
    /// The factor `e·S` as an algebra in its own right, with unit `e`.
    pub factor: FDAlgebra,
}

impl SimpleFactorData {
    pub fn to_json(&self) -> Value {
        json!({
            "factor_dim": self.factor_dim,
            "center_dim": self.center_dim,
            "degree": self.degree_over_center,
            "matrix_size": self.matrix_size.to_json(),
            "idempotent": vec_to_json(self.central_idempotent.coords()),
        })
    }
}

#[derive(Clone, Debug)]
pub struct WedderburnReport {
    pub radical: RadicalReport,
    pub semisimple_quotient: FDAlgebra,
    pub factors: Vec<SimpleFactorData>,
}

impl WedderburnReport {
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.radical.quotient.algebra.dim(),
            "radical_dim": self.radical.radical.dim(),
            "semisimple_dim": self.semisimple_quotient.dim(),
            "factors": self.factors.iter().map(SimpleFactorData::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.factor_dim).collect()
    }

    pub fn central_idempotents(&self) -> Vec<AlgebraElement> {
        self.factors.iter().map(|f| f.central_idempotent.clone()).collect()
    }
}

/// Gram matrix `T_ij = tr(L_{e_i e_j})` of the trace form.
pub fn trace_form(a: &FDAlgebra) -> Mat {
    let n = a.dim();
    let traces: Vec<Rat> = (0..n)
        .map(|k| (0..n).fold(Rat::zero(), |acc, m| acc + a.structure_constant(k, m, m)))
        .collect();
    let mut t = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let mut s = Rat::zero();
            for (k, tr) in traces.iter().enumerate() {
                let c = a.structure_constant(i, j, k);
                if !c.is_zero() && !tr.is_zero() {
                    s += c * tr;
                }
            }
            t[(i, j)] = s;
        }
    }
    t
}

/// Radical, its nilpotency index, and the quotient by it.
///
/// Fails only when `a` is not a valid algebra.
pub fn jacobson_radical(a: &FDAlgebra) -> Result<RadicalReport> {
    a.validate()?;
    let radical = Subspace::from_basis_rows(a.dim(), &kernel_basis(&trace_form(a)));
    let nilpotency_index = radical
        .nilpotency_index(a)
        .expect("the trace-form radical is nilpotent in characteristic 0");
    let quotient = a.quotient_by_ideal(&radical)?;
    Ok(RadicalReport {
        radical,
        nilpotency_index,
        quotient,
    })
}

/// True iff the trace form is nondegenerate, i.e. the radical is zero.
pub fn is_semisimple(a: &FDAlgebra) -> bool {
    trace_form(a).rank() == a.dim()
}

/// Central idempotent blocks: each block is `(e, basis of e·Z)`.
struct Block {
    idempotent: AlgebraElement,
    center: Vec<AlgebraElement>,
}

/// Small integer combinations of `basis`: the elements themselves, then
/// `b_i + c·b_j` for `c ∈ {1, 2, 3}`, then `Σ tⁱ b_i` for `t = 2..=moment_limit`.
fn candidates(basis: &[AlgebraElement], moment_limit: i64) -> Vec<AlgebraElement> {
    let k = basis.len();
    let mut out: Vec<AlgebraElement> = basis.to_vec();
    for i in 0..k {
        for j in i + 1..k {
            for c in 1..=3 {
                out.push(basis[i].add(&basis[j].scale(&rat(c))));
            }
        }
    }
    for t in 2..=moment_limit {
        let mut x = basis[0].clone();
        let mut power = rat(1);
        for b in &basis[1..] {
            power *= rat(t);
            x = x.add(&b.scale(&power));
        }
        out.push(x);
    }
    out
}

/// Splits `f` into its prime-power parts and returns, for each part `g`,
/// the polynomial `u ≡ 1 (mod g)`, `u ≡ 0 (mod f/g)`.
fn crt_idempotent_polys(f: &Poly) -> Vec<Poly> {
    let factorization = factor_rational(f);
    let parts: Vec<Poly> = factorization.factors.iter().map(|(p, m)| p.pow(*m)).collect();
    if parts.len() < 2 {
        return vec![Poly::one()];
    }
    let f = f.monic();
    parts
        .iter()
        .map(|g| {
            let h = f.exact_div(g);
            let (one, s, _) = h.extended_gcd(g);
            debug_assert!(one == Poly::one(), "prime-power parts are coprime");
            s.mul(&h).rem(&f)
        })
        .collect()
}

fn span_basis(dim: usize, elements: &[AlgebraElement]) -> Vec<AlgebraElement> {
    Subspace::from_elements(dim, elements).basis_elements()
}

/// `p·A·p` with unit `p`, on the echelon basis of the span of `p e_i p`.
pub(crate) fn corner(a: &FDAlgebra, p: &AlgebraElement) -> FDAlgebra {
    let elems: Vec<AlgebraElement> = (0..a.dim())
        .map(|i| a.mul(&a.mul(p, &a.basis_element(i)), p))
        .collect();
    let space = Subspace::from_elements(a.dim(), &elems);
    a.subalgebra(space.basis(), p)
        .expect("a corner is closed under multiplication and contains p")
}

/// Central primitive idempotents of a semisimple algebra, sorted by the
/// dimension of the simple factor they cut out, then by coordinates.
pub fn central_primitive_idempotents(s: &FDAlgebra) -> Result<Vec<AlgebraElement>> {
    Ok(split_center(s)?.into_iter().map(|b| b.idempotent).collect())
}

fn split_center(s: &FDAlgebra) -> Result<Vec<Block>> {
    if !is_semisimple(s) {
        return Err(Error::NotSemisimple);
    }
    let n = s.dim();
    let mut pending = vec![Block {
        idempotent: s.unit(),
        center: s.center().basis_elements(),
    }];
    let mut done = Vec::new();
    while let Some(block) = pending.pop() {
        let k = block.center.len();
        if k == 1 {
            done.push(block);
            continue;
        }
        // A moment-curve point with t beyond k(k−1)²/2 separates every pair
        // of ℚ̄-points of the block, so the search below always terminates
        // with a split or a primitive element.
        let limit = (k * (k - 1) * (k - 1) / 2 + 2) as i64;
        let mut split = None;
        for x in candidates(&block.center, limit) {
            let f = s.minimal_polynomial_relative(&x, &block.idempotent);
            let polys = crt_idempotent_polys(&f);
            if polys.len() > 1 {
                split = Some((x, polys));
                break;
            }
            if f.degree() == Some(k) {
                break; // the block is a field
            }
        }
        match split {
            None => done.push(block),
            Some((x, polys)) => {
                for p in polys {
                    let u = s.eval_poly(&p, &x, &block.idempotent);
                    let products: Vec<AlgebraElement> = block.center.iter().map(|z| s.mul(&u, z)).collect();
                    pending.push(Block {
                        center: span_basis(n, &products),
                        idempotent: u,
                    });
                }
            }
        }
    }
    let mut keyed: Vec<(usize, Block)> = done
        .into_iter()
        .map(|b| {
            let products: Vec<AlgebraElement> = (0..n).map(|i| s.mul(&b.idempotent, &s.basis_element(i))).collect();
            (Subspace::from_elements(n, &products).dim(), b)
        })
        .collect();
    keyed.sort_by(|(da, a), (db, b)| da.cmp(db).then_with(|| a.idempotent.coords().cmp(b.idempotent.coords())));
    Ok(keyed.into_iter().map(|(_, b)| b).collect())
}

fn exact_sqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r.saturating_sub(1)..=r + 1).find(|&s| s * s == n)
}

/// Looks for an idempotent other than 0 and 1 by splitting minimal
/// polynomials of small combinations of basis elements.
fn find_nontrivial_idempotent(b: &FDAlgebra) -> Option<AlgebraElement> {
    let basis: Vec<AlgebraElement> = (0..b.dim()).map(|i| b.basis_element(i)).collect();
    let unit = b.unit();
    for x in candidates(&basis, b.dim() as i64 + 8) {
        let f = b.minimal_polynomial_relative(&x, &unit);
        let polys = crt_idempotent_polys(&f);
        if polys.len() > 1 {
            let e = b.eval_poly(&polys[0], &x, &unit);
            debug_assert!(b.is_idempotent(&e) && !e.is_zero() && e != unit);
            return Some(e);
        }
    }
    None
}

/// The `n` in `factor ≅ Mat_n(D)`, when the search can determine it.
///
/// Nontrivial idempotents are found by splitting minimal polynomials and the
/// search descends into the smaller Peirce corner each time. A size is
/// reported only when a corner turns out to be a field (degree 1 over the
/// center), in which case `D` is that field; otherwise the answer is
/// [`MatrixSize::Unknown`], which says nothing about whether `D` is the
/// whole factor.
pub fn try_matrix_size(factor: &FDAlgebra) -> Result<MatrixSize> {
    let blocks = split_center(factor)?;
    if blocks.len() != 1 {
        return Err(Error::NotSimple);
    }
    let c = blocks[0].center.len();
    let degree = exact_sqrt(factor.dim() / c).expect("simple algebras have square dimension over the center");
    let mut current = factor.clone();
    loop {
        if current.dim() == c {
            return Ok(MatrixSize::Known(degree));
        }
        let Some(p) = find_nontrivial_idempotent(&current) else {
            return Ok(MatrixSize::Unknown);
        };
        let q = current.unit().sub(&p);
        let (cp, cq) = (corner(&current, &p), corner(&current, &q));
        current = if cp.dim() <= cq.dim() { cp } else { cq };
    }
}

/// Radical, semisimple quotient and the numeric data of every simple factor.
pub fn wedderburn_decomposition(a: &FDAlgebra) -> Result<WedderburnReport> {
    let radical = jacobson_radical(a)?;
    let s = radical.quotient.quotient.clone();
    let mut factors = Vec::new();
    for block in split_center(&s)? {
        let factor = corner(&s, &block.idempotent);
        let center_dim = block.center.len();
        let degree = exact_sqrt(factor.dim() / center_dim)
            .filter(|d| d * d * center_dim == factor.dim())
            .expect("simple factor dimension is a square times the center dimension");
        let matrix_size = if degree == 1 {
            MatrixSize::Known(1)
        } else {
            try_matrix_size(&factor)?
        };
        factors.push(SimpleFactorData {
            central_idempotent: block.idempotent,
            factor_dim: factor.dim(),
            center_dim,
            degree_over_center: degree,
            matrix_size,
            factor,
        });
    }
    Ok(WedderburnReport {
        radical,
        semisimple_quotient: s,
        factors,
    })
}

//! Named fixture algebras with golden structure data, and brute-force
//! oracles that check the structure and lifting modules independently.

use std::path::Path;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    direct_product, dual_numbers, group_algebra, groups, matrix_algebra, matrix_over, quaternions, rationals,
    tensor_product, upper_triangular, FDAlgebra, Subspace,
};
use crate::error::{Error, Result};
use crate::algebra::AlgebraElement;
use crate::lifting::{lift_idempotent, matrix_unit, IdempotentMatrix, ProjectiveModuleDescriptor};
use crate::linalg::{kernel_basis, solve_linear, Mat};
use crate::rat::{rat, Rat};
use crate::structure::{MatrixSize, WedderburnReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    Cyclic(usize),
    Klein,
    Symmetric(usize),
    Dihedral(usize),
    Quaternion,
}

impl Group {
    pub fn table(&self) -> groups::Table {
        match self {
            Group::Cyclic(n) => groups::cyclic(*n),
            Group::Klein => groups::klein_four(),
            Group::Symmetric(n) => groups::symmetric(*n),
            Group::Dihedral(n) => groups::dihedral(*n),
            Group::Quaternion => groups::quaternion_group(),
        }
    }
}

/// How to build a fixture from the constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Rationals,
    Matrix(usize),
    UpperTriangular(usize),
    DualNumbers,
    Quaternions(i64, i64),
    GroupAlgebra(Group),
    DirectProduct(Vec<Generator>),
    Tensor(Box<Generator>, Box<Generator>),
    MatrixOver(usize, Box<Generator>),
}

impl Generator {
    pub fn build(&self) -> FDAlgebra {
        match self {
            Generator::Rationals => rationals(),
            Generator::Matrix(n) => matrix_algebra(*n),
            Generator::UpperTriangular(n) => upper_triangular(*n),
            Generator::DualNumbers => dual_numbers(),
            Generator::Quaternions(a, b) => quaternions(rat(*a), rat(*b)).expect("nonzero parameters"),
            Generator::GroupAlgebra(g) => group_algebra(&g.table()).expect("valid group table"),
            Generator::DirectProduct(parts) => direct_product(&parts.iter().map(Generator::build).collect::<Vec<_>>()),
            Generator::Tensor(a, b) => tensor_product(&a.build(), &b.build()),
            Generator::MatrixOver(n, b) => matrix_over(*n, &b.build()),
        }
    }
}

/// Expected structure data, recorded together with the argument that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub radical_dim: usize,
    pub nilpotency_index: usize,
    /// Per simple factor, in the order the structure module reports them.
    pub factor_dims: Vec<usize>,
    pub center_dims: Vec<usize>,
    pub degrees: Vec<usize>,
    pub matrix_sizes: Vec<MatrixSize>,
    pub oracle: &'static str,
}

#[derive(Clone, Debug)]
pub struct FixtureEntry {
    pub name: &'static str,
    pub generator: Generator,
    pub expected: Option<Golden>,
}

impl FixtureEntry {
    pub fn algebra(&self) -> FDAlgebra {
        self.generator.build()
    }
}

use MatrixSize::{Known, Unknown};

/// Golden data for an algebra whose factors are all fields: `(dim, center)` pairs
/// are equal and every degree and matrix size is 1.
fn fields(radical_dim: usize, nilpotency_index: usize, dims: &[usize], oracle: &'static str) -> Golden {
    Golden {
        radical_dim,
        nilpotency_index,
        factor_dims: dims.to_vec(),
        center_dims: dims.to_vec(),
        degrees: vec![1; dims.len()],
        matrix_sizes: vec![Known(1); dims.len()],
        oracle,
    }
}

fn fixture(name: &'static str, generator: Generator, expected: Golden) -> FixtureEntry {
    FixtureEntry {
        name,
        generator,
        expected: Some(expected),
    }
}

pub fn fixtures() -> Vec<FixtureEntry> {
    use Generator::*;
    let matrix = |n: usize, radical_dim: usize, index: usize, oracle| Golden {
        radical_dim,
        nilpotency_index: index,
        factor_dims: vec![n * n],
        center_dims: vec![1],
        degrees: vec![n],
        matrix_sizes: vec![Known(n)],
        oracle,
    };
    vec![
        fixture("rationals", Rationals, fields(0, 1, &[1], "field")),
        fixture(
            "q_x_q",
            DirectProduct(vec![Rationals, Rationals]),
            fields(0, 1, &[1, 1], "product of two fields"),
        ),
        fixture("dual_numbers", DualNumbers, fields(1, 2, &[1], "ε spans the unique maximal ideal, ε² = 0")),
        fixture(
            "upper_triangular_2",
            UpperTriangular(2),
            fields(1, 2, &[1, 1], "strict upper part is nilpotent with diagonal quotient ℚ²"),
        ),
        fixture(
            "upper_triangular_3",
            UpperTriangular(3),
            fields(3, 3, &[1, 1, 1], "strict upper part, powers by brute force, quotient ℚ³"),
        ),
        fixture(
            "upper_triangular_4",
            UpperTriangular(4),
            fields(6, 4, &[1, 1, 1, 1], "strict upper part, powers by brute force, quotient ℚ⁴"),
        ),
        fixture("matrix_1", Matrix(1), fields(0, 1, &[1], "Mat₁(ℚ) = ℚ")),
        fixture("matrix_2", Matrix(2), matrix(2, 0, 1, "split simple, E₁₁ primitive")),
        fixture("matrix_3", Matrix(3), matrix(3, 0, 1, "split simple, E₁₁ primitive")),
        fixture(
            "group_c2",
            GroupAlgebra(Group::Cyclic(2)),
            fields(0, 1, &[1, 1], "x² − 1 = (x − 1)(x + 1)"),
        ),
        fixture(
            "group_c3",
            GroupAlgebra(Group::Cyclic(3)),
            fields(0, 1, &[1, 2], "x³ − 1 = (x − 1)(x² + x + 1): ℚ × ℚ(ζ₃)"),
        ),
        fixture(
            "group_c4",
            GroupAlgebra(Group::Cyclic(4)),
            fields(0, 1, &[1, 1, 2], "x⁴ − 1 = (x − 1)(x + 1)(x² + 1): ℚ² × ℚ(i)"),
        ),
        fixture(
            "group_c5",
            GroupAlgebra(Group::Cyclic(5)),
            fields(0, 1, &[1, 4], "x⁵ − 1 = (x − 1)Φ₅: ℚ × ℚ(ζ₅)"),
        ),
        fixture(
            "group_c6",
            GroupAlgebra(Group::Cyclic(6)),
            fields(0, 1, &[1, 1, 2, 2], "x⁶ − 1 = Φ₁Φ₂Φ₃Φ₆"),
        ),
        fixture(
            "group_c2xc2",
            GroupAlgebra(Group::Klein),
            fields(0, 1, &[1, 1, 1, 1], "four rational characters of the Klein group"),
        ),
        fixture(
            "group_s3",
            GroupAlgebra(Group::Symmetric(3)),
            Golden {
                radical_dim: 0,
                nilpotency_index: 1,
                factor_dims: vec![1, 1, 4],
                center_dims: vec![1, 1, 1],
                degrees: vec![1, 1, 2],
                matrix_sizes: vec![Known(1), Known(1), Known(2)],
                oracle: "character table of S₃: degrees 1, 1, 2, all rational, Schur index 1",
            },
        ),
        fixture(
            "group_d4",
            GroupAlgebra(Group::Dihedral(4)),
            Golden {
                radical_dim: 0,
                nilpotency_index: 1,
                factor_dims: vec![1, 1, 1, 1, 4],
                center_dims: vec![1; 5],
                degrees: vec![1, 1, 1, 1, 2],
                matrix_sizes: vec![Known(1), Known(1), Known(1), Known(1), Known(2)],
                oracle: "character table of D₄: four linear characters and the rational 2-dimensional one",
            },
        ),
        fixture(
            "group_q8",
            GroupAlgebra(Group::Quaternion),
            Golden {
                radical_dim: 0,
                nilpotency_index: 1,
                factor_dims: vec![1, 1, 1, 1, 4],
                center_dims: vec![1; 5],
                degrees: vec![1, 1, 1, 1, 2],
                matrix_sizes: vec![Known(1), Known(1), Known(1), Known(1), Unknown],
                oracle: "ℚ[Q₈] ≅ ℚ⁴ × ℍ; the Hamilton quaternions have no idempotents to find",
            },
        ),
        fixture(
            "quaternions_m1_m1",
            Quaternions(-1, -1),
            Golden {
                radical_dim: 0,
                nilpotency_index: 1,
                factor_dims: vec![4],
                center_dims: vec![1],
                degrees: vec![2],
                matrix_sizes: vec![Unknown],
                oracle: "norm form x₀² + x₁² + x₂² + x₃² is anisotropic over ℚ: division algebra",
            },
        ),
        fixture(
            "quaternions_1_m1",
            Quaternions(1, -1),
            matrix(2, 0, 1, "i² = 1 gives the idempotent (1 + i)/2: split"),
        ),
        fixture(
            "mat2_over_dual",
            MatrixOver(2, Box::new(DualNumbers)),
            matrix(2, 4, 2, "Mat₂(ℚ[ε]) has radical Mat₂(εℚ) and quotient Mat₂(ℚ)"),
        ),
        fixture(
            "dual_tensor_dual",
            Tensor(Box::new(DualNumbers), Box::new(DualNumbers)),
            fields(3, 3, &[1], "ℚ[x, y]/(x², y²): radical (x, y), whose square is spanned by xy"),
        ),
        fixture(
            "dual_x_matrix_2",
            DirectProduct(vec![DualNumbers, Matrix(2)]),
            Golden {
                radical_dim: 1,
                nilpotency_index: 2,
                factor_dims: vec![1, 4],
                center_dims: vec![1, 1],
                degrees: vec![1, 2],
                matrix_sizes: vec![Known(1), Known(2)],
                oracle: "radical and factors of a product are those of the parts",
            },
        ),
        fixture(
            "upper_triangular_2_x_group_c3",
            DirectProduct(vec![UpperTriangular(2), GroupAlgebra(Group::Cyclic(3))]),
            fields(1, 2, &[1, 1, 1, 2], "radical and factors of a product are those of the parts"),
        ),
        fixture(
            "rationals_x_quaternions",
            DirectProduct(vec![Rationals, Quaternions(-1, -1)]),
            Golden {
                radical_dim: 0,
                nilpotency_index: 1,
                factor_dims: vec![1, 4],
                center_dims: vec![1, 1],
                degrees: vec![1, 2],
                matrix_sizes: vec![Known(1), Unknown],
                oracle: "factors of a product are those of the parts",
            },
        ),
    ]
}

pub fn fixture_by_name(name: &str) -> Option<FixtureEntry> {
    fixtures().into_iter().find(|f| f.name == name)
}

/// Writes `<name>.json` in the algebra format for every fixture.
pub fn export_fixtures(dir: &Path) -> std::io::Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut out = Vec::new();
    for f in fixtures() {
        let path = dir.join(format!("{}.json", f.name));
        std::fs::write(&path, serde_json::to_string_pretty(&f.algebra().to_json()).expect("serializable"))?;
        out.push(path);
    }
    Ok(out)
}

/// A module `P·A^r` as an explicit subspace of `ℚ^{r·dim A}` with the
/// right action of each basis element of `A`.
struct ModuleRep {
    dim: usize,
    /// `actions[b]` is the matrix of `v ↦ v·e_b` in the echelon basis.
    actions: Vec<Mat>,
}

fn module_rep(m: &ProjectiveModuleDescriptor) -> ModuleRep {
    let a = &m.algebra;
    let n = a.dim();
    let p = &m.presentation;
    let r = p.size();
    // the image is spanned by P applied to (the basis element b in slot j)
    let mut generators = Vec::with_capacity(r * n);
    for j in 0..r {
        for b in 0..n {
            let e = a.basis_element(b);
            let mut v = Vec::with_capacity(r * n);
            for i in 0..r {
                v.extend(a.mul(p.entry(i, j), &e).into_coords());
            }
            generators.push(v);
        }
    }
    let space = Subspace::span(r * n, generators.iter().map(Vec::as_slice));
    let basis = space.basis();
    let d = space.dim();
    let pivots: Vec<usize> = (0..d)
        .map(|k| basis.row(k).iter().position(|x| !x.is_zero()).expect("nonzero row"))
        .collect();
    let actions = (0..n)
        .map(|b| {
            let e = a.basis_element(b);
            let mut act = Mat::zeros(d, d);
            for k in 0..d {
                let row = basis.row(k);
                let mut image = Vec::with_capacity(r * n);
                for i in 0..r {
                    let block = crate::algebra::AlgebraElement::new(row[i * n..(i + 1) * n].to_vec());
                    image.extend(a.mul(&block, &e).into_coords());
                }
                // echelon coordinates are the entries at the pivot columns
                for (l, &pc) in pivots.iter().enumerate() {
                    act[(l, k)] = image[pc].clone();
                }
            }
            act
        })
        .collect();
    ModuleRep { dim: d, actions }
}

/// Basis of `Hom_A(M₁, M₂)` as rows of `d₂·d₁` entries: the solutions `F` of
/// `F·ρ₁(a) = ρ₂(a)·F` over all basis elements `a`.
fn hom_basis(v1: &ModuleRep, v2: &ModuleRep) -> Mat {
    let (d1, d2) = (v1.dim, v2.dim);
    if d1 == 0 || d2 == 0 {
        return Mat::zeros(0, d1 * d2);
    }
    // F is d2×d1, unknown (i, j) at index i*d1 + j; kernel refined one generator at a time
    let unknowns = d1 * d2;
    let mut solutions = Mat::identity(unknowns);
    for (r1, r2) in v1.actions.iter().zip(&v2.actions) {
        let s = solutions.rows();
        if s == 0 {
            break;
        }
        // column c: residual F_c ρ₁ − ρ₂ F_c for the c-th current solution
        let mut system = Mat::zeros(unknowns, s);
        for c in 0..s {
            let f = solutions.row(c);
            for i in 0..d2 {
                for j in 0..d1 {
                    let mut acc = Rat::zero();
                    for k in 0..d1 {
                        let x = &f[i * d1 + k];
                        if !x.is_zero() && !r1[(k, j)].is_zero() {
                            acc += x * &r1[(k, j)];
                        }
                    }
                    for k in 0..d2 {
                        let x = &f[k * d1 + j];
                        if !x.is_zero() && !r2[(i, k)].is_zero() {
                            acc -= &r2[(i, k)] * x;
                        }
                    }
                    system[(i * d1 + j, c)] = acc;
                }
            }
        }
        let kernel = kernel_basis(&system);
        solutions = kernel.mul(&solutions).expect("kernel columns index current solutions");
    }
    solutions
}

/// A projective module `P·A^r` made explicit: module matrices and `dim End`.
pub struct ExplicitModule {
    algebra: FDAlgebra,
    rep: ModuleRep,
    end_dim: usize,
}

impl ExplicitModule {
    pub fn new(m: &ProjectiveModuleDescriptor) -> Self {
        let rep = module_rep(m);
        let end_dim = hom_basis(&rep, &rep).rows();
        ExplicitModule {
            algebra: m.algebra.clone(),
            rep,
            end_dim,
        }
    }

    /// `dim_ℚ` of the module.
    pub fn dim(&self) -> usize {
        self.rep.dim
    }

    pub fn end_dim(&self) -> usize {
        self.end_dim
    }
}

/// The two oracle answers for a pair of modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    /// `h₁ = h₂ = s = t` for `h₁ = dim Hom(M₁, M₂)`, `h₂ = dim Hom(M₂, M₁)`,
    /// `s = dim End M₁`, `t = dim End M₂`. Over a semisimple algebra
    /// `s + t − h₁ − h₂ = Σ (mᵢ − nᵢ)²·dᵢ` for multiplicity vectors `m`, `n`,
    /// so there it decides isomorphism outright.
    pub hom_criterion: bool,
    /// An invertible homomorphism was exhibited.
    pub isomorphic: bool,
}

/// Attempts at a seeded random point of `Hom_A(M₁, M₂)` before giving up.
const ISO_SEARCH_ATTEMPTS: usize = 64;

/// Decides `M₁ ≅ M₂` with certificates either way. Non-isomorphism: the
/// dimensions or the Hom criterion fail, and both hold for isomorphic modules.
/// Isomorphism: an invertible homomorphism at a seeded random point of the
/// Hom space (singular ones form a proper hypersurface once one isomorphism
/// exists). If neither turns up the answer is `SearchExhausted`, never a guess.
pub fn compare_modules(x: &ExplicitModule, y: &ExplicitModule) -> Result<Comparison> {
    if x.algebra != y.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let homs = hom_basis(&x.rep, &y.rep);
    let k = homs.rows();
    let hom_criterion = k == x.end_dim && k == y.end_dim && hom_basis(&y.rep, &x.rep).rows() == k;
    let d = x.dim();
    if !hom_criterion || d != y.dim() {
        return Ok(Comparison {
            hom_criterion,
            isomorphic: false,
        });
    }
    let found = |isomorphic| Comparison {
        hom_criterion,
        isomorphic,
    };
    if d == 0 {
        return Ok(found(true));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1505);
    for _ in 0..ISO_SEARCH_ATTEMPTS {
        let mut combo = vec![Rat::zero(); d * d];
        for i in 0..k {
            let c = rat(rng.gen_range(-1000..=1000));
            for (z, h) in combo.iter_mut().zip(homs.row(i)) {
                if !h.is_zero() {
                    *z += &c * h;
                }
            }
        }
        if Mat::from_entries(d, d, combo).expect("square").rank() == d {
            return Ok(found(true));
        }
    }
    Err(Error::SearchExhausted(format!(
        "no invertible homomorphism among {ISO_SEARCH_ATTEMPTS} random points of a {k}-dimensional Hom space"
    )))
}

/// `dim_ℚ Hom_A(M₁, M₂)` by exact linear algebra on explicit module matrices.
pub fn hom_dim_oracle(m1: &ProjectiveModuleDescriptor, m2: &ProjectiveModuleDescriptor) -> Result<usize> {
    if m1.algebra != m2.algebra {
        return Err(Error::AlgebraMismatch);
    }
    Ok(hom_basis(&module_rep(m1), &module_rep(m2)).rows())
}

/// [`Comparison::hom_criterion`] for two descriptors.
pub fn hom_criterion(m1: &ProjectiveModuleDescriptor, m2: &ProjectiveModuleDescriptor) -> Result<bool> {
    Ok(compare_modules(&ExplicitModule::new(m1), &ExplicitModule::new(m2))
        .or_else(|e| match e {
            Error::SearchExhausted(_) => Ok(Comparison {
                hom_criterion: true,
                isomorphic: false,
            }),
            e => Err(e),
        })?
        .hom_criterion)
}

/// Whether `M₁ ≅ M₂`, by [`compare_modules`].
pub fn isomorphism_oracle(m1: &ProjectiveModuleDescriptor, m2: &ProjectiveModuleDescriptor) -> Result<bool> {
    Ok(compare_modules(&ExplicitModule::new(m1), &ExplicitModule::new(m2))?.isomorphic)
}

/// Least `t` with `Nᵗ = 0`, computing powers as `N·N^{t−1}`.
pub fn nilpotency_oracle(a: &FDAlgebra, n: &Subspace) -> Result<usize> {
    if n.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: n.ambient_dim(),
        });
    }
    if !n.is_two_sided_ideal(a) {
        return Err(Error::NotAnIdeal);
    }
    let mut power = n.clone();
    let mut t = 1;
    while !power.is_zero() {
        let next = n.product(a, &power);
        if next.dim() >= power.dim() {
            return Err(Error::NotNilpotent);
        }
        power = next;
        t += 1;
    }
    Ok(t)
}

fn inverse(a: &FDAlgebra, u: &AlgebraElement) -> Option<AlgebraElement> {
    let l = a.left_regular_matrix(u).ok()?;
    let one = Mat::from_rows(1, &a.unit().coords().iter().map(|c| vec![c.clone()]).collect::<Vec<_>>()).ok()?;
    // a right inverse in a finite-dimensional algebra is two-sided
    let x = solve_linear(&l, &one).ok()?;
    Some(AlgebraElement::new(x.column(0)))
}

fn mat_mul(a: &FDAlgebra, n: usize, x: &[AlgebraElement], y: &[AlgebraElement]) -> Vec<AlgebraElement> {
    let mut out = vec![a.zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let t = a.mul(&x[i * n + k], &y[k * n + j]);
                out[i * n + j] = out[i * n + j].add(&t);
            }
        }
    }
    out
}

/// Idempotents of `a` that are cheap to name: 0, 1, lifts of the central
/// primitive idempotents of `A/rad` and their complements, idempotent basis
/// elements, and conjugates of those by units `1 + r` (r a radical basis
/// element) and by invertible basis elements.
pub fn sample_idempotents(a: &FDAlgebra, w: &WedderburnReport) -> Result<Vec<AlgebraElement>> {
    let qp = &w.radical.quotient;
    let one = a.unit();
    let mut out: Vec<AlgebraElement> = vec![a.zero(), one.clone()];
    let push = |x: AlgebraElement, out: &mut Vec<AlgebraElement>| {
        if !out.contains(&x) {
            out.push(x);
        }
    };
    for e in w.central_idempotents() {
        let p = lift_idempotent(&e, qp)?.idempotent;
        push(one.sub(&p), &mut out);
        push(p, &mut out);
    }
    let basic: Vec<AlgebraElement> = (0..a.dim())
        .map(|i| a.basis_element(i))
        .filter(|b| a.is_idempotent(b))
        .collect();
    for b in &basic {
        push(b.clone(), &mut out);
    }
    let mut units = Vec::new();
    for r in w.radical.radical.basis_elements() {
        units.push(one.add(&r));
    }
    for i in 0..a.dim() {
        let b = a.basis_element(i);
        if b != one && inverse(a, &b).is_some() {
            units.push(b);
        }
    }
    let seeds = out.clone();
    for u in &units {
        let ui = inverse(a, u).expect("units are invertible");
        for p in &seeds {
            push(a.mul(&a.mul(u, p), &ui), &mut out);
        }
    }
    debug_assert!(out.iter().all(|p| a.is_idempotent(p)));
    Ok(out)
}

/// A deterministic list of at most `count` distinct idempotent matrices:
/// every sampled idempotent, then `diag(p₁, …, p_r)` and its conjugates by
/// shears `I + c·bₖ·E_ij`, for sizes up to 3 over algebras of dimension ≤ 2
/// and up to 2 otherwise.
pub fn sample_presentations(a: &FDAlgebra, w: &WedderburnReport, count: usize) -> Result<Vec<IdempotentMatrix>> {
    let idems = sample_idempotents(a, w)?;
    let mut out: Vec<IdempotentMatrix> = Vec::new();
    for p in &idems {
        let m = IdempotentMatrix::from_element(a, p)?;
        if out.len() < count && !out.contains(&m) {
            out.push(m);
        }
    }
    let max_size = if a.dim() <= 2 { 3 } else { 2 };
    let k = idems.len().min(4);
    let shears: Vec<AlgebraElement> = (1..=2)
        .flat_map(|c| (0..a.dim()).map(move |b| (c, b)))
        .map(|(c, b)| a.basis_element(b).scale(&rat(c)))
        .collect();
    for size in 2..=max_size {
        // diagonals as index tuples into `idems`, non-decreasing
        let mut diagonals: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..size {
            diagonals = diagonals
                .into_iter()
                .flat_map(|d| {
                    let lo = d.last().copied().unwrap_or(0);
                    (lo..k).map(move |i| {
                        let mut e = d.clone();
                        e.push(i);
                        e
                    })
                })
                .collect();
        }
        for diag in diagonals {
            let mut d = vec![a.zero(); size * size];
            for (i, &j) in diag.iter().enumerate() {
                d[i * size + i] = idems[j].clone();
            }
            let mut candidates = vec![d.clone()];
            for i in 0..size {
                for j in 0..size {
                    if i == j {
                        continue;
                    }
                    for x in &shears {
                        let mut u = matrix_unit(a, size, i, j, x);
                        let mut ui = matrix_unit(a, size, i, j, &x.neg());
                        for t in 0..size {
                            u[t * size + t] = a.unit();
                            ui[t * size + t] = a.unit();
                        }
                        candidates.push(mat_mul(a, size, &mat_mul(a, size, &u, &d), &ui));
                    }
                }
            }
            for c in candidates {
                if out.len() >= count {
                    return Ok(out);
                }
                let m = IdempotentMatrix::new(a, size, c)?;
                if !out.contains(&m) {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::IdempotentMatrix;
    use crate::structure::wedderburn_decomposition;

    fn descriptor(a: &FDAlgebra, p: &crate::algebra::AlgebraElement) -> ProjectiveModuleDescriptor {
        let w = wedderburn_decomposition(a).unwrap();
        ProjectiveModuleDescriptor::new(a, IdempotentMatrix::from_element(a, p).unwrap(), &w).unwrap()
    }

    #[test]
    fn required_fixtures_are_present() {
        let names: Vec<&str> = fixtures().iter().map(|f| f.name).collect();
        for required in [
            "rationals",
            "q_x_q",
            "dual_numbers",
            "upper_triangular_2",
            "upper_triangular_3",
            "upper_triangular_4",
            "matrix_1",
            "matrix_2",
            "matrix_3",
            "group_c2",
            "group_c3",
            "group_c4",
            "group_c2xc2",
            "group_s3",
            "quaternions_m1_m1",
            "mat2_over_dual",
        ] {
            assert!(names.contains(&required), "{required}");
        }
        let s3 = fixture_by_name("group_s3").unwrap();
        assert_eq!(s3.expected.unwrap().factor_dims, vec![1, 1, 4]);
        assert_eq!(fixture_by_name("dual_numbers").unwrap().expected.unwrap().radical_dim, 1);
        assert_eq!(fixture_by_name("matrix_3").unwrap().expected.unwrap().degrees, vec![3]);
    }

    #[test]
    fn hom_examples() {
        let q = rationals();
        let free = descriptor(&q, &q.unit());
        assert_eq!(hom_dim_oracle(&free, &free).unwrap(), 1);

        let qq = direct_product(&[rationals(), rationals()]);
        let (p, r) = (descriptor(&qq, &qq.basis_element(0)), descriptor(&qq, &qq.basis_element(1)));
        assert_eq!(hom_dim_oracle(&p, &r).unwrap(), 0);
        assert_eq!(hom_dim_oracle(&p, &p).unwrap(), 1);
        assert!(!isomorphism_oracle(&p, &r).unwrap());

        let m = matrix_algebra(2);
        let e11 = descriptor(&m, &m.basis_element(0));
        assert_eq!(hom_dim_oracle(&e11, &e11).unwrap(), 1);
        let free = descriptor(&m, &m.unit());
        assert_eq!(hom_dim_oracle(&e11, &free).unwrap(), 2);
        assert_eq!(hom_dim_oracle(&free, &free).unwrap(), 4);
        assert!(isomorphism_oracle(&free, &free).unwrap());
        assert!(!isomorphism_oracle(&e11, &free).unwrap());
        let e22 = descriptor(&m, &m.basis_element(3));
        assert!(isomorphism_oracle(&e11, &e22).unwrap());
    }

    #[test]
    fn nilpotency_examples() {
        let t = upper_triangular(3);
        assert_eq!(nilpotency_oracle(&t, &Subspace::zero(6)).unwrap(), 1);
        let strict = Subspace::from_elements(6, &[t.basis_element(1), t.basis_element(2), t.basis_element(4)]);
        assert_eq!(nilpotency_oracle(&t, &strict).unwrap(), 3);
        assert_eq!(nilpotency_oracle(&rationals(), &Subspace::full(1)), Err(Error::NotNilpotent));
        let m = matrix_algebra(2);
        let row = Subspace::from_elements(4, &[m.basis_element(0), m.basis_element(1)]);
        assert_eq!(nilpotency_oracle(&m, &row), Err(Error::NotAnIdeal));
    }
}

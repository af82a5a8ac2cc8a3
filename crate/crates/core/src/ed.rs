//! Essential-dimension bounds for moduli of projective modules over
//! finite-dimensional algebras and for moduli of vector bundles on curves.
//!
//! Every evaluator is plain integer or rational arithmetic and returns an
//! [`EdBoundReport`] naming the statement it evaluated.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::factor::is_prime_u64;
use crate::rat::{format_rat, rat, rat_to_json, Rat};
use crate::structure::WedderburnReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Exact,
    Upper,
    StrictUpper,
    ConjecturalExact,
    /// The moduli functor is empty.
    MinusInfinity,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::Exact => "exact",
            BoundKind::Upper => "upper",
            BoundKind::StrictUpper => "strict_upper",
            BoundKind::ConjecturalExact => "conjectural_exact",
            BoundKind::MinusInfinity => "minus_infinity",
        }
    }
}

/// Stable identifiers of the evaluated statements, printed by the CLI.
pub mod formula {
    pub const SEVERI_BRAUER: &str = "csa.severi_brauer_bound";
    pub const MATRIX_OVER_SIMPLE: &str = "simple.matrix_over_simple_strict_bound";
    pub const DIVISION: &str = "division.prime_decomposition_bound";
    pub const KARPENKO: &str = "division.karpenko_prime_power";
    pub const CKM: &str = "division.ckm_conjecture";
    pub const WEDDERBURN_PIPELINE: &str = "algebra.wedderburn_pipeline_bound";
    pub const WEDDERBURN_STRICT: &str = "algebra.wedderburn_pipeline_strict_bound";
    pub const MODULI_DEFECT: &str = "bundle.field_of_moduli_defect";
    pub const TRDEG_INDECOMPOSABLE: &str = "bundle.trdeg_indecomposable";
    pub const TRDEG_NONSIMPLE: &str = "bundle.trdeg_nonsimple";
    pub const BUNDLES_GENUS_ZERO: &str = "bundle.moduli_genus_zero";
    pub const BUNDLES_GENUS_ONE: &str = "bundle.moduli_genus_one";
    pub const BUNDLES_HIGHER_GENUS: &str = "bundle.moduli_higher_genus";
}

/// A bound on an essential dimension. `value` is `None` exactly for
/// [`BoundKind::MinusInfinity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdBoundReport {
    pub value: Option<Rat>,
    pub kind: BoundKind,
    pub formula: &'static str,
    pub assumptions: Vec<String>,
}

impl EdBoundReport {
    fn new(value: Rat, kind: BoundKind, formula: &'static str) -> Self {
        EdBoundReport {
            value: Some(value),
            kind,
            formula,
            assumptions: Vec::new(),
        }
    }

    fn minus_infinity(formula: &'static str) -> Self {
        EdBoundReport {
            value: None,
            kind: BoundKind::MinusInfinity,
            formula,
            assumptions: Vec::new(),
        }
    }

    fn assuming(mut self, a: impl Into<String>) -> Self {
        self.assumptions.push(a.into());
        self
    }

    /// `{"value": "q" | null, "kind": ..., "formula": ..., "assumptions": [...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value.as_ref().map(rat_to_json),
            "kind": self.kind.as_str(),
            "formula": self.formula,
            "assumptions": self.assumptions,
        })
    }
}

impl fmt::Display for EdBoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Some(v) => write!(f, "{} ({})", format_rat(v), self.kind.as_str())?,
            None => write!(f, "-infinity")?,
        }
        write!(f, "  [{}]", self.formula)?;
        for a in &self.assumptions {
            write!(f, "\n  assumes: {a}")?;
        }
        Ok(())
    }
}

/// A central simple algebra by its degree and, if known, its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CSADescriptor {
    degree: u64,
    index: Option<u64>,
}

impl CSADescriptor {
    pub fn new(degree: u64, index: Option<u64>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::OutOfRange("degree must be positive".into()));
        }
        if let Some(i) = index {
            if i == 0 || !degree.is_multiple_of(i) {
                return Err(Error::NotDivisor(i, degree));
            }
        }
        Ok(CSADescriptor { degree, index })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn index(&self) -> Option<u64> {
        self.index
    }
}

/// Parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Sorts the parts; rejects an empty list and zero parts.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::OutOfRange("partition parts must be positive and nonempty".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn square_sum(&self) -> u64 {
        self.parts.iter().map(|r| r * r).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

fn int(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn valuation(p: u64, mut n: u64) -> u32 {
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// The `p`-adic valuation of `n ≥ 1`.
pub fn vp(p: u64, n: u64) -> Result<u32> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::OutOfRange("valuation of 0 is undefined".into()));
    }
    Ok(valuation(p, n))
}

fn check_open_unit_interval(r: &Rat) -> Result<()> {
    if !r.is_positive() || *r >= Rat::one() {
        return Err(Error::OutOfRange(format!("rank {} must satisfy 0 < r < 1", format_rat(r))));
    }
    Ok(())
}

/// `dim SB(r, A) = r·deg·(deg − r·deg)`.
pub fn severi_brauer_dim(a: &CSADescriptor, r: &Rat) -> Result<BigInt> {
    check_open_unit_interval(r)?;
    let rd = r * int(a.degree);
    if !rd.is_integer() {
        return Err(Error::RankNotRealizable(format!(
            "r·deg = {} is not an integer",
            format_rat(&rd)
        )));
    }
    let rd = rd.to_integer();
    Ok(&rd * (big(a.degree) - &rd))
}

/// `r(1 − r)·deg²`, or −∞ when `r·deg ∉ ℤ`.
pub fn bound_csa(a: &CSADescriptor, r: &Rat) -> Result<EdBoundReport> {
    check_open_unit_interval(r)?;
    let deg = int(a.degree);
    if !(r * &deg).is_integer() {
        return Ok(EdBoundReport::minus_infinity(formula::SEVERI_BRAUER));
    }
    let value = r * (Rat::one() - r) * &deg * &deg;
    Ok(EdBoundReport::new(value, BoundKind::Upper, formula::SEVERI_BRAUER))
}

/// Strict bound `n·r·dim B` for `Mat_n(B)` with `B` simple.
pub fn bound_matrix_over_simple(n: u64, dim_b: u64, r: &Rat) -> Result<EdBoundReport> {
    if n == 0 || dim_b == 0 || !r.is_positive() {
        return Err(Error::OutOfRange("need n ≥ 1, dim B ≥ 1 and r > 0".into()));
    }
    let value = int(n) * r * int(dim_b);
    Ok(EdBoundReport::new(value, BoundKind::StrictUpper, formula::MATRIX_OVER_SIMPLE))
}

fn division_sum(deg_d: u64, d: u64) -> BigInt {
    let q = deg_d / d;
    prime_divisors(deg_d)
        .into_iter()
        .map(|p| big(p).pow(2 * valuation(p, q)) * (big(p).pow(valuation(p, d)) - 1))
        .sum()
}

/// `Σ_{p | deg D} p^{2 v_p(deg D / d)} (p^{v_p(d)} − 1)` for rank `1/d` over a
/// central division algebra `D`.
pub fn bound_division(deg_d: u64, d: u64) -> Result<EdBoundReport> {
    if deg_d == 0 || d == 0 || !deg_d.is_multiple_of(d) {
        return Err(Error::NotDivisor(d, deg_d));
    }
    Ok(EdBoundReport::new(int(division_sum(deg_d, d)), BoundKind::Upper, formula::DIVISION))
}

/// Karpenko's exact value `p^{2(n−m)}(p^m − 1)` for `deg D = pⁿ`, rank `1/pᵐ`.
pub fn karpenko_value(p: u64, n: u32, m: u32) -> Result<EdBoundReport> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    if m < 1 || m > n {
        return Err(Error::OutOfRange(format!("need 1 ≤ m ≤ n, got m = {m}, n = {n}")));
    }
    let value = big(p).pow(2 * (n - m)) * (big(p).pow(m) - 1);
    Ok(EdBoundReport::new(int(value), BoundKind::Exact, formula::KARPENKO)
        .assuming(format!("a central division algebra of degree {p}^{n} exists over the base field")))
}

/// Conjectural exact value `Σ_{p | deg D} (p^{v_p(deg D)} − 1)` for rank `1/deg D`.
pub fn ckm_value(deg_d: u64) -> Result<EdBoundReport> {
    if deg_d == 0 {
        return Err(Error::OutOfRange("degree must be positive".into()));
    }
    let value: BigInt = prime_divisors(deg_d)
        .into_iter()
        .map(|p| big(p).pow(valuation(p, deg_d)) - 1)
        .sum();
    Ok(EdBoundReport::new(int(value), BoundKind::ConjecturalExact, formula::CKM)
        .assuming("the Colliot-Thélène–Karpenko–Merkurjev conjecture")
        .assuming(format!("a central division algebra of degree {deg_d} exists over the base field")))
}

/// Per-factor data fed into the pipeline.
struct FactorIndex {
    center_dim: u64,
    degree: u64,
    index: u64,
    matrix_size: u64,
}

fn factor_indices(w: &WedderburnReport, asserted: &[Option<u64>], assumptions: &mut Vec<String>) -> Result<Vec<FactorIndex>> {
    if !asserted.is_empty() && asserted.len() != w.factors.len() {
        return Err(Error::DimensionMismatch {
            expected: w.factors.len(),
            found: asserted.len(),
        });
    }
    let mut out = Vec::with_capacity(w.factors.len());
    for (i, f) in w.factors.iter().enumerate() {
        let degree = f.degree_over_center as u64;
        let computed = f.matrix_size.known().map(|n| degree / n as u64);
        let index = match (computed, asserted.get(i).copied().flatten()) {
            (Some(c), Some(a)) if c != a => {
                return Err(Error::OutOfRange(format!(
                    "asserted index {a} of factor {i} contradicts the computed index {c}"
                )))
            }
            (Some(c), _) => c,
            (None, Some(a)) => {
                if a == 0 || !degree.is_multiple_of(a) {
                    return Err(Error::NotDivisor(a, degree));
                }
                assumptions.push(format!("index {a} of factor {i} asserted by user"));
                a
            }
            (None, None) => return Err(Error::UnknownIndex(i)),
        };
        out.push(FactorIndex {
            center_dim: f.center_dim as u64,
            degree,
            index,
            matrix_size: degree / index,
        });
    }
    Ok(out)
}

fn pipeline(w: &WedderburnReport, r: &Rat, asserted: &[Option<u64>], mut assumptions: Vec<String>) -> Result<EdBoundReport> {
    if !r.is_positive() {
        return Err(Error::OutOfRange("rank must be positive".into()));
    }
    let factors = factor_indices(w, asserted, &mut assumptions)?;
    let mut total = BigInt::zero();
    for f in &factors {
        if !(r * int(f.degree)).is_integer() {
            let mut report = EdBoundReport::minus_infinity(formula::WEDDERBURN_PIPELINE);
            report.assumptions = assumptions;
            return Ok(report);
        }
        // Mat_n(D) with rank r is Morita equivalent to D with rank 1/d',
        // d' the denominator of n·r; d' divides ind D here.
        let nr = r * int(f.matrix_size);
        let d_prime = nr.denom().clone();
        let d_prime: u64 = d_prime.try_into().expect("denominator divides the index");
        total += big(f.center_dim) * division_sum(f.index, d_prime);
    }
    let mut report = EdBoundReport::new(int(total), BoundKind::Upper, formula::WEDDERBURN_PIPELINE);
    report.assumptions = assumptions;
    Ok(report)
}

/// Upper bound for `ed(Mod_{A, 1/d})` from the Wedderburn data of `A`.
///
/// The radical is ignored, simple factors contribute additively, and each
/// factor `Mat_n(D)` with center of degree `c` contributes
/// `c · bound_division(ind D, d')` where `d'` is the denominator of `n/d`.
/// `asserted` is either empty or has one entry per factor, used where the
/// matrix size could not be computed. The value is −∞ when some factor has
/// `deg/d ∉ ℤ`.
pub fn bound_from_wedderburn(w: &WedderburnReport, d: u64, asserted: &[Option<u64>]) -> Result<EdBoundReport> {
    if d == 0 {
        return Err(Error::OutOfRange("d must be positive".into()));
    }
    pipeline(w, &Rat::new(1.into(), big(d)), asserted, Vec::new())
}

/// [`bound_from_wedderburn`] for an arbitrary rank `r > 0`.
pub fn bound_from_wedderburn_rank(w: &WedderburnReport, r: &Rat, asserted: &[Option<u64>]) -> Result<EdBoundReport> {
    pipeline(
        w,
        r,
        asserted,
        vec!["general rank r: extrapolation of the rank-1/d pipeline".to_string()],
    )
}

/// The companion strict bound `Σ c·n·r·ind²` obtained by applying
/// [`bound_matrix_over_simple`] to every factor instead of the division bound.
pub fn strict_bound_from_wedderburn(w: &WedderburnReport, d: u64, asserted: &[Option<u64>]) -> Result<EdBoundReport> {
    if d == 0 {
        return Err(Error::OutOfRange("d must be positive".into()));
    }
    let mut assumptions = Vec::new();
    let factors = factor_indices(w, asserted, &mut assumptions)?;
    let r = Rat::new(1.into(), big(d));
    let total = factors.iter().fold(Rat::zero(), |acc, f| {
        acc + int(f.center_dim) * int(f.matrix_size) * &r * int(f.index * f.index)
    });
    let mut report = EdBoundReport::new(total, BoundKind::StrictUpper, formula::WEDDERBURN_STRICT);
    report.assumptions = assumptions;
    Ok(report)
}

/// `ed_{k(E)}(E) ≤ r − 1` for a vector bundle of rank `r`.
pub fn vb_field_of_moduli_defect_bound(r: u64) -> Result<EdBoundReport> {
    if r == 0 {
        return Err(Error::OutOfRange("rank must be positive".into()));
    }
    Ok(EdBoundReport::new(int(r - 1), BoundKind::Upper, formula::MODULI_DEFECT))
}

/// `(g − 1)·Σ rᵢ²`.
pub fn nil_stack_dim(g: u64, partition: &Partition) -> BigInt {
    (big(g) - 1) * big(partition.square_sum())
}

/// `1 + (g − 1)·Σ rᵢ²`.
pub fn trdeg_bound_indecomposable(g: u64, partition: &Partition) -> EdBoundReport {
    let value = nil_stack_dim(g, partition) + 1;
    EdBoundReport::new(int(value), BoundKind::Upper, formula::TRDEG_INDECOMPOSABLE)
}

/// `(g − 1)(r² − r) + 2` for a non-simple bundle, `g ≥ 2`, `r ≥ 2`.
pub fn trdeg_bound_nonsimple(g: u64, r: u64) -> Result<EdBoundReport> {
    if g < 2 || r < 2 {
        return Err(Error::OutOfRange(format!("need g ≥ 2 and r ≥ 2, got g = {g}, r = {r}")));
    }
    let value = (big(g) - 1) * (big(r) * big(r) - big(r)) + 2;
    Ok(EdBoundReport::new(int(value), BoundKind::Upper, formula::TRDEG_NONSIMPLE))
}

/// Outcome of the exhaustive check of `Σ rᵢ² ≤ r² − 2r + 2` over partitions
/// of `r` with at least two parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionCheck {
    pub rank: u64,
    pub max_square_sum: u64,
    pub bound: u64,
    /// Lexicographically least partition attaining the maximum.
    pub witness: Partition,
    pub partitions_checked: u64,
}

impl PartitionCheck {
    pub fn holds(&self) -> bool {
        self.max_square_sum <= self.bound
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rank": self.rank,
            "max_square_sum": self.max_square_sum,
            "bound": self.bound,
            "witness": self.witness.parts(),
            "partitions_checked": self.partitions_checked,
            "holds": self.holds(),
        })
    }
}

/// Calls `visit` on every partition of `n` (parts at most `max_part`), in
/// lexicographically decreasing order.
fn for_each_partition(n: u64, max_part: u64, prefix: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if n == 0 {
        visit(prefix);
        return;
    }
    for part in (1..=max_part.min(n)).rev() {
        prefix.push(part);
        for_each_partition(n - part, part, prefix, visit);
        prefix.pop();
    }
}

pub fn partitions(n: u64) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, n, &mut Vec::new(), &mut |p| out.push(Partition { parts: p.to_vec() }));
    out
}

pub fn partition_square_sum_check(r: u64) -> Result<PartitionCheck> {
    if r < 2 {
        return Err(Error::OutOfRange("need r ≥ 2".into()));
    }
    let mut best: Option<(u64, Vec<u64>)> = None;
    let mut count = 0;
    for_each_partition(r, r - 1, &mut Vec::new(), &mut |p| {
        count += 1;
        let s: u64 = p.iter().map(|x| x * x).sum();
        let better = match &best {
            None => true,
            Some((m, w)) => s > *m || (s == *m && p < w.as_slice()),
        };
        if better {
            best = Some((s, p.to_vec()));
        }
    });
    let (max, witness) = best.expect("r ≥ 2 has a partition with two parts");
    Ok(PartitionCheck {
        rank: r,
        max_square_sum: max,
        bound: r * r - 2 * r + 2,
        witness: Partition { parts: witness },
        partitions_checked: count,
    })
}

/// Essential dimension of the moduli stack of rank `r`, degree `d` vector
/// bundles on a curve of genus `g` with a rational point.
///
/// Exact for `g ≤ 1`. For `g ≥ 2` the bound `(g−1)r² + 1 + Σ_{p|h}(p^{v_p(h)} − 1)`
/// with `h = gcd(r, |d|)`, which is exact under the CKM conjecture.
pub fn bundle_moduli_ed(g: u64, r: u64, d: i64, assume_ckm: bool) -> Result<EdBoundReport> {
    if r == 0 {
        return Err(Error::OutOfRange("rank must be positive".into()));
    }
    match g {
        0 => Ok(EdBoundReport::new(rat(0), BoundKind::Exact, formula::BUNDLES_GENUS_ZERO)),
        1 => Ok(EdBoundReport::new(int(r), BoundKind::Exact, formula::BUNDLES_GENUS_ONE)),
        _ => {
            let h = r.gcd(&d.unsigned_abs());
            let gerbe: BigInt = prime_divisors(h).into_iter().map(|p| big(p).pow(valuation(p, h)) - 1).sum();
            let value = (big(g) - 1) * big(r) * big(r) + 1 + gerbe;
            let report = EdBoundReport::new(int(value), BoundKind::Upper, formula::BUNDLES_HIGHER_GENUS);
            Ok(if assume_ckm {
                EdBoundReport {
                    kind: BoundKind::Exact,
                    ..report
                }
                .assuming("the Colliot-Thélène–Karpenko–Merkurjev conjecture")
            } else {
                report
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::ratio;

    fn value(r: &EdBoundReport) -> Rat {
        r.value.clone().expect("finite bound")
    }

    #[test]
    fn valuations() {
        assert_eq!(vp(2, 8).unwrap(), 3);
        assert_eq!(vp(3, 8).unwrap(), 0);
        assert_eq!(vp(2, 12).unwrap(), 2);
        assert_eq!(vp(4, 8), Err(Error::NotPrime(4)));
    }

    #[test]
    fn severi_brauer() {
        let a = |d| CSADescriptor::new(d, None).unwrap();
        assert_eq!(severi_brauer_dim(&a(2), &ratio(1, 2)).unwrap(), big(1));
        assert_eq!(severi_brauer_dim(&a(4), &ratio(1, 2)).unwrap(), big(4));
        assert!(matches!(severi_brauer_dim(&a(3), &ratio(1, 2)), Err(Error::RankNotRealizable(_))));

        let b = bound_csa(&a(2), &ratio(1, 2)).unwrap();
        assert_eq!((value(&b), b.kind), (rat(1), BoundKind::Upper));
        assert_eq!(value(&bound_csa(&a(6), &ratio(1, 6)).unwrap()), rat(5));
        assert_eq!(bound_csa(&a(2), &ratio(1, 3)).unwrap().kind, BoundKind::MinusInfinity);
        assert!(bound_csa(&a(2), &rat(1)).is_err());
        assert!(CSADescriptor::new(4, Some(3)).is_err());
    }

    #[test]
    fn matrix_over_simple() {
        let b = bound_matrix_over_simple(1, 1, &rat(1)).unwrap();
        assert_eq!((value(&b), b.kind), (rat(1), BoundKind::StrictUpper));
        assert_eq!(value(&bound_matrix_over_simple(2, 4, &ratio(1, 2)).unwrap()), rat(4));
        assert_eq!(value(&bound_matrix_over_simple(1, 4, &rat(1)).unwrap()), rat(4));
    }

    #[test]
    fn division_examples() {
        assert_eq!(value(&bound_division(6, 6).unwrap()), rat(3));
        assert_eq!(value(&bound_division(4, 2).unwrap()), rat(4));
        assert_eq!(value(&bound_division(5, 1).unwrap()), rat(0));
        assert_eq!(bound_division(6, 4), Err(Error::NotDivisor(4, 6)));
    }

    #[test]
    fn karpenko_and_ckm() {
        assert_eq!(value(&karpenko_value(2, 2, 2).unwrap()), rat(3));
        assert_eq!(value(&karpenko_value(2, 2, 1).unwrap()), rat(4));
        assert_eq!(value(&karpenko_value(3, 1, 1).unwrap()), rat(2));
        assert!(karpenko_value(2, 1, 2).is_err());
        assert!(karpenko_value(6, 1, 1).is_err());
        assert_eq!(karpenko_value(2, 2, 1).unwrap().kind, BoundKind::Exact);

        assert_eq!(value(&ckm_value(6).unwrap()), rat(3));
        assert_eq!(value(&ckm_value(1).unwrap()), rat(0));
        assert_eq!(value(&ckm_value(12).unwrap()), rat(5));
        assert_eq!(ckm_value(12).unwrap().kind, BoundKind::ConjecturalExact);
    }

    #[test]
    fn bundle_examples() {
        let b = bundle_moduli_ed(0, 5, 3, false).unwrap();
        assert_eq!((value(&b), b.kind), (rat(0), BoundKind::Exact));
        let b = bundle_moduli_ed(1, 4, 0, false).unwrap();
        assert_eq!((value(&b), b.kind), (rat(4), BoundKind::Exact));
        let b = bundle_moduli_ed(2, 2, 0, false).unwrap();
        assert_eq!((value(&b), b.kind), (rat(6), BoundKind::Upper));
        let b = bundle_moduli_ed(2, 2, 0, true).unwrap();
        assert_eq!((value(&b), b.kind), (rat(6), BoundKind::Exact));
        assert_eq!(b.assumptions.len(), 1);
        // negative degree: h = gcd(4, 6) = 2
        assert_eq!(value(&bundle_moduli_ed(3, 4, -6, false).unwrap()), rat(2 * 16 + 1 + 1));
    }

    #[test]
    fn moduli_defect_and_trdeg() {
        for (r, v) in [(1, 0), (2, 1), (7, 6)] {
            assert_eq!(value(&vb_field_of_moduli_defect_bound(r).unwrap()), rat(v));
        }
        let p = |v: &[u64]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(nil_stack_dim(1, &p(&[3, 2])), big(0));
        assert_eq!(nil_stack_dim(2, &p(&[2, 1])), big(5));
        assert_eq!(nil_stack_dim(0, &p(&[1])), BigInt::from(-1));
        assert_eq!(value(&trdeg_bound_indecomposable(1, &p(&[4]))), rat(1));
        assert_eq!(value(&trdeg_bound_indecomposable(2, &p(&[1, 1]))), rat(3));
        assert_eq!(value(&trdeg_bound_indecomposable(3, &p(&[2]))), rat(9));
        assert_eq!(value(&trdeg_bound_nonsimple(2, 2).unwrap()), rat(4));
        assert_eq!(value(&trdeg_bound_nonsimple(2, 3).unwrap()), rat(8));
        assert_eq!(value(&trdeg_bound_nonsimple(3, 2).unwrap()), rat(6));
        assert!(trdeg_bound_nonsimple(1, 3).is_err());
    }

    #[test]
    fn partition_check_examples() {
        let c = partition_square_sum_check(2).unwrap();
        assert_eq!((c.max_square_sum, c.bound, c.witness.parts()), (2, 2, &[1, 1][..]));
        let c = partition_square_sum_check(5).unwrap();
        assert_eq!((c.max_square_sum, c.bound, c.witness.parts()), (17, 17, &[4, 1][..]));
        assert_eq!(c.partitions_checked, 6);
        let c = partition_square_sum_check(3).unwrap();
        assert_eq!((c.max_square_sum, c.bound, c.witness.parts()), (5, 5, &[2, 1][..]));
    }

    /// Partition counts p(n) from the recurrence through Euler's pentagonal numbers.
    fn partition_count(n: usize) -> u64 {
        let mut p = vec![0i64; n + 1];
        p[0] = 1;
        for m in 1..=n {
            let mut k = 1i64;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                p[m] += sign * p[m - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= m {
                    p[m] += sign * p[m - g2];
                }
                k += 1;
            }
        }
        p[n] as u64
    }

    #[test]
    fn enumeration_matches_pentagonal_recurrence() {
        for n in 1..=20 {
            assert_eq!(partitions(n as u64).len() as u64, partition_count(n));
            if n >= 2 {
                assert_eq!(partition_square_sum_check(n as u64).unwrap().partitions_checked, partition_count(n) - 1);
            }
        }
    }

    #[test]
    fn report_json() {
        let b = bundle_moduli_ed(2, 3, 1, false).unwrap();
        assert_eq!(
            b.to_json(),
            json!({"value": "10", "kind": "upper", "formula": formula::BUNDLES_HIGHER_GENUS, "assumptions": []})
        );
        let m = bound_csa(&CSADescriptor::new(2, None).unwrap(), &ratio(1, 3)).unwrap();
        assert_eq!(m.to_json()["value"], Value::Null);
        assert_eq!(m.to_json()["kind"], "minus_infinity");
    }
}

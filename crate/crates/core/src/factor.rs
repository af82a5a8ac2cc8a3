//! Complete factorization of univariate polynomials over the rationals.
//!
//! The pipeline is the classical one: Yun squarefree decomposition, then for
//! each squarefree part a Berlekamp factorization modulo a small prime,
//! quadratic Hensel lifting past the Landau–Mignotte coefficient bound, and
//! Zassenhaus subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{denominator_lcm, Rat};

/// `content · Π factorᵢ^multiplicityᵢ`, factors monic, irreducible and pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: Rat,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    /// Multiplies everything back together.
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.content.clone()), |acc, (f, m)| {
                acc.mul(&f.pow(*m))
            })
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn len_with_multiplicity(&self) -> usize {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

/// Yun's squarefree decomposition of a nonzero polynomial.
///
/// Returns the nonconstant parts as monic polynomials, ordered by increasing
/// multiplicity. Parts are pairwise coprime and their product with
/// multiplicities equals `p` up to its leading coefficient.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    assert!(!p.is_zero(), "squarefree decomposition of the zero polynomial");
    let f = p.monic();
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0);
    let mut c = df.exact_div(&a0);
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// Factors `p` over the field with `prime` elements.
///
/// `p` must have coefficients whose denominators are prime to `prime`, a
/// leading coefficient not divisible by `prime`, and be squarefree modulo
/// `prime`; otherwise [`Error::BadPrime`]. Factors are returned monic with
/// coefficients in `0..prime`, sorted by degree then coefficients.
pub fn factor_mod_p(p: &Poly, prime: u64) -> Result<Vec<Poly>> {
    if !is_prime_u64(prime) || prime > u64::from(u32::MAX) {
        return Err(Error::BadPrime(prime));
    }
    let f = fp::from_rat_poly(p, prime).ok_or(Error::BadPrime(prime))?;
    if f.len() != p.coeffs().len() || f.is_empty() {
        return Err(Error::BadPrime(prime));
    }
    let f = fp::monic(&f, prime);
    if !fp::is_squarefree(&f, prime) {
        return Err(Error::BadPrime(prime));
    }
    let mut factors = fp::berlekamp(&f, prime);
    factors.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(factors
        .into_iter()
        .map(|f| Poly::new(f.into_iter().map(|c| Rat::from_integer(c.into())).collect()))
        .collect())
}

/// Complete irreducible factorization of a nonzero polynomial over ℚ.
pub fn factor_rational(p: &Poly) -> Factorization {
    assert!(!p.is_zero(), "factorization of the zero polynomial");
    let content = p.leading();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(p) {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|(a, ma), (b, mb)| {
        (a.degree(), a.coeffs(), ma).cmp(&(b.degree(), b.coeffs(), mb))
    });
    Factorization { content, factors }
}

/// Irreducible monic factors of a monic squarefree rational polynomial.
fn factor_squarefree(f: &Poly) -> Vec<Poly> {
    if f.degree().unwrap_or(0) <= 1 {
        return vec![f.monic()];
    }
    let g = primitive_integer(f);
    let lc = g.last().cloned().expect("nonzero");
    let mut prime = 3u64;
    let modular = loop {
        if is_prime_u64(prime) && !(&lc % BigInt::from(prime)).is_zero() {
            let gp = fp::from_int_poly(&g, prime);
            if fp::is_squarefree(&gp, prime) {
                break fp::berlekamp(&fp::monic(&gp, prime), prime);
            }
        }
        prime += 2;
    };
    if modular.len() == 1 {
        return vec![f.monic()];
    }

    let n = g.len() - 1;
    let norm2 = isqrt_ceil(&g.iter().map(|c| c * c).sum::<BigInt>());
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm2;
    let p = BigInt::from(prime);
    let mut modulus = p.clone();
    while modulus <= bound {
        modulus = &modulus * &modulus;
    }

    let modular: Vec<Vec<BigInt>> = modular
        .into_iter()
        .map(|f| f.into_iter().map(BigInt::from).collect())
        .collect();
    let lifted = hensel::multifactor_lift(&g, &modular, &p, &modulus);
    zassenhaus(g, lifted, &modulus)
        .into_iter()
        .map(|h| int_to_rat_poly(&h).monic())
        .collect()
}

/// Subset recombination of lifted modular factors into true factors over ℤ.
fn zassenhaus(mut f: Vec<BigInt>, mut lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc = f.last().cloned().expect("nonzero");
        let mut hit = None;
        for subset in Subsets::new(lifted.len(), size) {
            let mut cand = vec![lc.clone()];
            for &i in &subset {
                cand = hensel::mul_mod(&cand, &lifted[i], modulus);
            }
            let cand: Vec<BigInt> = cand.iter().map(|c| symmetric(c, modulus)).collect();
            let cand = primitive_part(&cand);
            let (q, r) = int_to_rat_poly(&f).divrem(&int_to_rat_poly(&cand));
            if r.is_zero() {
                hit = Some((subset, cand, primitive_integer(&q)));
                break;
            }
        }
        match hit {
            Some((subset, cand, quotient)) => {
                found.push(cand);
                f = quotient;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, u)| u)
                    .collect();
            }
            None => size += 1,
        }
    }
    if f.len() > 1 {
        found.push(f);
    }
    found
}

/// k-subsets of `0..n` in lexicographic order.
struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Subsets {
    fn new(n: usize, k: usize) -> Self {
        Subsets {
            n,
            current: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn primitive_part(f: &[BigInt]) -> Vec<BigInt> {
    let g = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if f.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let g = g * sign;
    f.iter().map(|c| c / &g).collect()
}

/// Primitive integer multiple of `f` with positive leading coefficient.
fn primitive_integer(f: &Poly) -> Vec<BigInt> {
    let l = denominator_lcm(f.coeffs());
    let scaled: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
        .collect();
    primitive_part(&scaled)
}

fn int_to_rat_poly(f: &[BigInt]) -> Poly {
    Poly::new(f.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

fn isqrt_ceil(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &r * &r == *n {
        r
    } else {
        r + 1
    }
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over 𝔽ₚ as coefficient vectors (lowest first, trimmed).
mod fp {
    use super::*;

    pub(super) type FpPoly = Vec<u64>;

    fn trim(mut f: FpPoly) -> FpPoly {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    fn mulmod(a: u64, b: u64, p: u64) -> u64 {
        ((a as u128 * b as u128) % p as u128) as u64
    }

    pub(super) fn inv(a: u64, p: u64) -> u64 {
        let mut result = 1u64;
        let (mut base, mut e) = (a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                result = mulmod(result, base, p);
            }
            base = mulmod(base, base, p);
            e >>= 1;
        }
        result
    }

    fn reduce(c: &BigInt, p: u64) -> u64 {
        c.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
    }

    /// `None` when some denominator is divisible by `p`.
    pub(super) fn from_rat_poly(f: &Poly, p: u64) -> Option<FpPoly> {
        let mut out = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            let d = reduce(c.denom(), p);
            if d == 0 {
                return None;
            }
            out.push(mulmod(reduce(c.numer(), p), inv(d, p), p));
        }
        Some(trim(out))
    }

    pub(super) fn from_int_poly(f: &[BigInt], p: u64) -> FpPoly {
        trim(f.iter().map(|c| reduce(c, p)).collect())
    }

    pub(super) fn monic(f: &FpPoly, p: u64) -> FpPoly {
        let l = inv(*f.last().expect("nonzero"), p);
        f.iter().map(|&c| mulmod(c, l, p)).collect()
    }

    pub(super) fn sub(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).copied().unwrap_or(0);
                    let y = b.get(i).copied().unwrap_or(0);
                    (x + p - y) % p
                })
                .collect(),
        )
    }

    pub(super) fn mul(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
            }
        }
        trim(out)
    }

    pub(super) fn divrem(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
        let db = b.len() - 1;
        let mut rem = a.clone();
        if rem.len() <= db {
            return (Vec::new(), rem);
        }
        let li = inv(b[db], p);
        let mut quot = vec![0u64; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = mulmod(rem[k + db], li, p);
            if c == 0 {
                continue;
            }
            for (j, &d) in b.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mulmod(c, d, p)) % p;
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (trim(quot), trim(rem))
    }

    pub(super) fn gcd(a: &FpPoly, b: &FpPoly, p: u64) -> FpPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = divrem(&a, &b, p).1;
            a = b;
            b = r;
        }
        if a.is_empty() {
            a
        } else {
            monic(&a, p)
        }
    }

    /// `(s, t)` with `s·a + t·b = 1`; `a` and `b` must be coprime.
    pub(super) fn bezout(a: &FpPoly, b: &FpPoly, p: u64) -> (FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1, p);
            r0 = std::mem::replace(&mut r1, r);
            let s = sub(&s0, &mul(&q, &s1, p), p);
            s0 = std::mem::replace(&mut s1, s);
            let t = sub(&t0, &mul(&q, &t1, p), p);
            t0 = std::mem::replace(&mut t1, t);
        }
        assert_eq!(r0.len(), 1, "bezout inputs must be coprime");
        let l = inv(r0[0], p);
        let scale = |f: &FpPoly| trim(f.iter().map(|&c| mulmod(c, l, p)).collect());
        (scale(&s0), scale(&t0))
    }

    fn derivative(f: &FpPoly, p: u64) -> FpPoly {
        trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, i as u64 % p, p))
                .collect(),
        )
    }

    pub(super) fn is_squarefree(f: &FpPoly, p: u64) -> bool {
        let d = derivative(f, p);
        !d.is_empty() && gcd(f, &d, p).len() == 1
    }

    /// Kernel basis of a square matrix over 𝔽ₚ given as rows.
    fn kernel(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
        let n = m.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(pr, r);
            let li = inv(m[r][c], p);
            for x in m[r].iter_mut() {
                *x = mulmod(*x, li, p);
            }
            for i in 0..m.len() {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..n {
                        let v = mulmod(f, m[r][j], p);
                        m[i][j] = (m[i][j] + p - v) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (0..n)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = vec![0u64; n];
                v[free] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - m[row][free]) % p;
                }
                v
            })
            .collect()
    }

    /// Berlekamp factorization of a monic squarefree polynomial.
    pub(super) fn berlekamp(f: &FpPoly, p: u64) -> Vec<FpPoly> {
        let n = f.len() - 1;
        if n <= 1 {
            return vec![f.clone()];
        }
        // Row i of Q holds x^(i·p) mod f.
        let xp = powmod(&vec![0, 1], p, f, p);
        let mut rows = Vec::with_capacity(n);
        let mut cur: FpPoly = vec![1];
        for _ in 0..n {
            let mut row = cur.clone();
            row.resize(n, 0);
            rows.push(row);
            cur = divrem(&mul(&cur, &xp, p), f, p).1;
        }
        // g with g^p ≡ g: Σ gᵢ (Qᵢ − eᵢ) = 0, i.e. kernel of (Q − I)ᵀ.
        let mut system = vec![vec![0u64; n]; n];
        for (i, row) in rows.iter().enumerate() {
            for j in 0..n {
                let mut v = row[j];
                if i == j {
                    v = (v + p - 1) % p;
                }
                system[j][i] = v;
            }
        }
        let basis = kernel(system, p);
        let k = basis.len();
        let mut factors = vec![f.clone()];
        for g in basis.iter().map(|v| trim(v.clone())) {
            if factors.len() == k {
                break;
            }
            if g.len() <= 1 {
                continue;
            }
            let mut next = Vec::new();
            for u in factors {
                if u.len() <= 2 {
                    next.push(u);
                    continue;
                }
                let mut rest = u;
                for s in 0..p {
                    if rest.len() <= 2 {
                        break;
                    }
                    let shifted = sub(&g, &vec![s], p);
                    let d = gcd(&rest, &shifted, p);
                    if d.len() > 1 && d.len() < rest.len() {
                        rest = divrem(&rest, &d, p).0;
                        rest = monic(&rest, p);
                        next.push(d);
                    }
                }
                next.push(rest);
            }
            factors = next;
        }
        factors
    }

    fn powmod(base: &FpPoly, mut e: u64, m: &FpPoly, p: u64) -> FpPoly {
        let mut result: FpPoly = vec![1];
        let mut b = divrem(base, m, p).1;
        while e > 0 {
            if e & 1 == 1 {
                result = divrem(&mul(&result, &b, p), m, p).1;
            }
            b = divrem(&mul(&b, &b, p), m, p).1;
            e >>= 1;
        }
        result
    }
}

/// Quadratic Hensel lifting over ℤ/mℤ.
mod hensel {
    use super::*;

    type ZPoly = Vec<BigInt>;

    fn trim(mut f: ZPoly) -> ZPoly {
        while f.last().is_some_and(Zero::is_zero) {
            f.pop();
        }
        f
    }

    fn reduce(f: &[BigInt], m: &BigInt) -> ZPoly {
        trim(f.iter().map(|c| c.mod_floor(m)).collect())
    }

    fn add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m))
                .collect(),
        )
    }

    fn sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
        let n = a.len().max(b.len());
        let z = BigInt::zero();
        trim(
            (0..n)
                .map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m))
                .collect(),
        )
    }

    pub(super) fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        reduce(&out, m)
    }

    /// Division by a monic polynomial modulo `m`.
    fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
        let db = b.len() - 1;
        debug_assert!(b[db].is_one());
        let mut rem = reduce(a, m);
        if rem.len() <= db {
            return (Vec::new(), rem);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = rem[k + db].mod_floor(m);
            if c.is_zero() {
                continue;
            }
            for (j, d) in b.iter().enumerate() {
                rem[k + j] = (&rem[k + j] - &c * d).mod_floor(m);
            }
            quot[k] = c;
        }
        rem.truncate(db);
        (trim(quot), trim(rem))
    }

    fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
        let e = a.extended_gcd(m);
        assert!(e.gcd.is_one(), "leading coefficient must be a unit");
        e.x.mod_floor(m)
    }

    /// One quadratic step: from `f ≡ g·h`, `s·g + t·h ≡ 1 (mod m)` to the same mod `m²`.
    fn step(
        f: &[BigInt],
        g: &[BigInt],
        h: &[BigInt],
        s: &[BigInt],
        t: &[BigInt],
        m: &BigInt,
    ) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
        let m2 = m * m;
        let e = sub(f, &mul_mod(g, h, &m2), &m2);
        let (q, r) = divrem_monic(&mul_mod(s, &e, &m2), h, &m2);
        let g1 = add(&add(g, &mul_mod(t, &e, &m2), &m2), &mul_mod(&q, g, &m2), &m2);
        let h1 = add(h, &r, &m2);
        let b = sub(
            &add(&mul_mod(s, &g1, &m2), &mul_mod(t, &h1, &m2), &m2),
            &[BigInt::one()],
            &m2,
        );
        let (c, d) = divrem_monic(&mul_mod(s, &b, &m2), &h1, &m2);
        let s1 = sub(s, &d, &m2);
        let t1 = sub(&sub(t, &mul_mod(t, &b, &m2), &m2), &mul_mod(&c, &g1, &m2), &m2);
        (g1, h1, s1, t1)
    }

    /// Lifts `target ≡ lc · Π factors (mod p)` to monic factors modulo `modulus`,
    /// where `modulus` is `p` raised to a power of two.
    pub(super) fn multifactor_lift(
        target: &[BigInt],
        factors: &[ZPoly],
        p: &BigInt,
        modulus: &BigInt,
    ) -> Vec<ZPoly> {
        let target = reduce(target, modulus);
        if factors.len() == 1 {
            let lc_inv = inverse_mod(target.last().expect("nonzero"), modulus);
            let scaled: ZPoly = target.iter().map(|c| c * &lc_inv).collect();
            return vec![reduce(&scaled, modulus)];
        }
        let k = factors.len() / 2;
        let lc = target.last().expect("nonzero").mod_floor(p);
        let mut g = vec![lc];
        for f in &factors[..k] {
            g = mul_mod(&g, f, p);
        }
        let mut h = vec![BigInt::one()];
        for f in &factors[k..] {
            h = mul_mod(&h, f, p);
        }
        let pu = p.to_u64().expect("small prime");
        let to_fp = |f: &ZPoly| -> Vec<u64> { f.iter().map(|c| c.to_u64().unwrap()).collect() };
        let (s, t) = fp::bezout(&to_fp(&g), &to_fp(&h), pu);
        let lift = |f: Vec<u64>| -> ZPoly { f.into_iter().map(BigInt::from).collect() };
        let (mut s, mut t) = (lift(s), lift(t));
        let mut m = p.clone();
        while &m < modulus {
            let (g1, h1, s1, t1) = step(&target, &g, &h, &s, &t, &m);
            g = g1;
            h = h1;
            s = s1;
            t = t1;
            m = &m * &m;
        }
        let mut out = multifactor_lift(&g, &factors[..k], p, modulus);
        out.extend(multifactor_lift(&h, &factors[k..], p, modulus));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_decomposition(&p(&[0, 0, 1])), vec![(p(&[0, 1]), 2)]);
        assert_eq!(squarefree_decomposition(&p(&[-1, 0, 1])), vec![(p(&[-1, 0, 1]), 1)]);
        assert_eq!(
            squarefree_decomposition(&p(&[0, 0, -1, 1])),
            vec![(p(&[-1, 1]), 1), (p(&[0, 1]), 2)]
        );
    }

    #[test]
    fn mod_p_examples() {
        assert_eq!(factor_mod_p(&p(&[1, 0, 1]), 2), Err(Error::BadPrime(2)));
        assert_eq!(factor_mod_p(&p(&[1, 0, 1]), 3).unwrap(), vec![p(&[1, 0, 1])]);
        assert_eq!(
            factor_mod_p(&p(&[-1, 0, 1]), 3).unwrap(),
            vec![p(&[1, 1]), p(&[2, 1])]
        );
        // leading coefficient divisible by the prime
        assert_eq!(factor_mod_p(&p(&[1, 0, 3]), 3), Err(Error::BadPrime(3)));
        assert_eq!(factor_mod_p(&p(&[1, 1]), 4), Err(Error::BadPrime(4)));
    }

    #[test]
    fn rational_examples() {
        let f = factor_rational(&p(&[-1, 0, 1]));
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);

        assert!(factor_rational(&p(&[1, 0, 1])).is_irreducible());

        // Sophie Germain: x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2)
        let f = factor_rational(&p(&[4, 0, 0, 0, 1]));
        assert_eq!(f.factors, vec![(p(&[2, -2, 1]), 1), (p(&[2, 2, 1]), 1)]);
        assert_eq!(f.expand(), p(&[4, 0, 0, 0, 1]));
    }

    #[test]
    fn content_and_multiplicity() {
        // 3(x-1)^2 (x^2+1) with a rational twist
        let g = p(&[-1, 1]).pow(2).mul(&p(&[1, 0, 1])).scale(&crate::rat::ratio(3, 2));
        let f = factor_rational(&g);
        assert_eq!(f.content, crate::rat::ratio(3, 2));
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 2), (p(&[1, 0, 1]), 1)]);
        assert_eq!(f.expand(), g);
    }

    #[test]
    fn swinnerton_dyer_style_recombination() {
        // x^4 - 10x^2 + 1 is irreducible over ℚ but splits modulo every prime.
        let f = factor_rational(&p(&[1, 0, -10, 0, 1]));
        assert!(f.is_irreducible());
    }

    #[test]
    fn cyclotomic_counts() {
        for n in 1..=12usize {
            let mut c = vec![0i64; n + 1];
            c[0] = -1;
            c[n] = 1;
            let f = factor_rational(&p(&c));
            let divisors = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(f.factors.len(), divisors, "x^{n} - 1");
            assert_eq!(f.expand(), p(&c));
        }
    }

    #[test]
    fn subsets_enumerate_binomially() {
        assert_eq!(Subsets::new(5, 2).count(), 10);
        assert_eq!(Subsets::new(3, 3).collect::<Vec<_>>(), vec![vec![0, 1, 2]]);
        assert_eq!(Subsets::new(2, 3).count(), 0);
    }
}

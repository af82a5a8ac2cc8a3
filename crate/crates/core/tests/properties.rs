use fdalg::algebra::{
    direct_product, group_algebra, groups, matrix_algebra, quaternions, upper_triangular, AlgebraElement,
};
use fdalg::corpus::fixtures;
use fdalg::ed::{self, BoundKind};
use fdalg::factor::factor_rational;
use fdalg::lifting::{lift_idempotent, rank_vector, IdempotentMatrix};
use fdalg::rat::{rat, Rat};
use fdalg::structure::{trace_form, wedderburn_decomposition, WedderburnReport};
use fdalg::{FDAlgebra, Poly};
use num_traits::Zero;
use proptest::prelude::*;

fn fixture_algebras() -> Vec<(&'static str, FDAlgebra)> {
    fixtures().into_iter().map(|f| (f.name, f.algebra())).collect()
}

fn element(a: &FDAlgebra, coeffs: &[i64]) -> AlgebraElement {
    AlgebraElement::new((0..a.dim()).map(|i| rat(coeffs[i % coeffs.len()])).collect())
}

fn fixture_index() -> impl Strategy<Value = usize> {
    0..fixtures().len()
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-4i64..=4, 1..=12)
}

/// (factor_dim, center_dim, degree) triples, sorted.
fn shape(w: &WedderburnReport) -> Vec<(usize, usize, usize)> {
    let mut v: Vec<_> = w.factors.iter().map(|f| (f.factor_dim, f.center_dim, f.degree_over_center)).collect();
    v.sort();
    v
}

#[test]
fn constructors_validate() {
    for n in 1..=3 {
        matrix_algebra(n).validate().unwrap();
    }
    for n in 1..=4 {
        upper_triangular(n).validate().unwrap();
    }
    for a in [-3, -1, 1, 2] {
        for b in [-2, -1, 3] {
            quaternions(rat(a), rat(b)).unwrap().validate().unwrap();
        }
    }
    for n in 1..=8 {
        group_algebra(&groups::cyclic(n)).unwrap().validate().unwrap();
    }
    group_algebra(&groups::dihedral(4)).unwrap().validate().unwrap();
    for (name, a) in fixture_algebras() {
        a.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn structure_invariants() {
    for (name, a) in fixture_algebras() {
        let w = wedderburn_decomposition(&a).unwrap();
        let rad = &w.radical.radical;
        assert!(rad.is_two_sided_ideal(&a), "{name}");
        let s = &w.semisimple_quotient;
        assert_eq!(trace_form(s).rank(), s.dim(), "{name}: quotient trace form degenerate");
        let es = w.central_idempotents();
        let mut sum = s.zero();
        for (i, e) in es.iter().enumerate() {
            assert!(s.is_idempotent(e) && s.is_central(e), "{name}");
            for (j, f) in es.iter().enumerate() {
                if i != j {
                    assert!(s.mul(e, f).is_zero(), "{name}: e{i}·e{j} ≠ 0");
                }
            }
            sum = sum.add(e);
        }
        assert_eq!(sum, s.unit(), "{name}");
    }
}

#[test]
fn group_algebras_are_semisimple() {
    let tables = [
        groups::cyclic(1),
        groups::cyclic(5),
        groups::cyclic(8),
        groups::klein_four(),
        groups::product(&groups::cyclic(2), &groups::cyclic(4)),
        groups::symmetric(3),
        groups::dihedral(4),
        groups::quaternion_group(),
    ];
    for t in tables {
        let a = group_algebra(&t).unwrap();
        let w = wedderburn_decomposition(&a).unwrap();
        assert!(w.radical.radical.is_zero());
        assert_eq!(w.factor_dims().iter().sum::<usize>(), t.len());
    }
}

#[test]
fn direct_product_concatenates_factors() {
    let all = fixture_algebras();
    let small: Vec<_> = all.iter().filter(|(_, a)| a.dim() <= 4).collect();
    for (i, (n1, a)) in small.iter().enumerate() {
        for (n2, b) in small.iter().skip(i).take(3) {
            let p = direct_product(&[a.clone(), b.clone()]);
            assert_eq!(p.dim(), a.dim() + b.dim());
            let (wa, wb) = (wedderburn_decomposition(a).unwrap(), wedderburn_decomposition(b).unwrap());
            let mut want = shape(&wa);
            want.extend(shape(&wb));
            want.sort();
            let wp = wedderburn_decomposition(&p).unwrap();
            assert_eq!(shape(&wp), want, "{n1} × {n2}");
            assert_eq!(wp.radical.radical.dim(), wa.radical.radical.dim() + wb.radical.radical.dim());
        }
    }
}

#[test]
fn identical_inputs_give_identical_reports() {
    let w = wedderburn_decomposition(&fixtures()[5].algebra()).unwrap();
    let run = || {
        [
            ed::bound_from_wedderburn(&w, 1, &[]).map(|r| r.to_json()),
            ed::bundle_moduli_ed(3, 6, 4, false).map(|r| r.to_json()),
            ed::bound_division(12, 6).map(|r| r.to_json()),
            ed::bound_csa(&ed::CSADescriptor::new(6, None).unwrap(), &fdalg::rat::ratio(1, 3)).map(|r| r.to_json()),
        ]
    };
    assert_eq!(run(), run());
}

fn small_poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-5i64..=5, 2..=4)
        .prop_filter("nonconstant", |c| *c.last().unwrap() != 0)
        .prop_map(|c| Poly::from_i64(&c))
}

/// Rational roots of an integer polynomial with multiplicity, by the rational
/// root theorem and repeated synthetic division.
fn rational_roots(p: &Poly) -> Vec<Rat> {
    let mut p = p.clone();
    let mut roots = Vec::new();
    while p.degree().unwrap_or(0) > 0 && p.coeff(0).is_zero() {
        roots.push(Rat::zero());
        p = p.exact_div(&Poly::x());
    }
    let lcm = fdalg::rat::denominator_lcm(p.coeffs());
    let ints: Vec<i64> = p
        .coeffs()
        .iter()
        .map(|c| i64::try_from((c * Rat::from_integer(lcm.clone())).to_integer()).unwrap())
        .collect();
    let divisors = |n: i64| (1..=n.abs()).filter(move |d| n % d == 0);
    let lead = *ints.last().unwrap();
    let mut candidates = Vec::new();
    for num in divisors(ints[0]) {
        for den in divisors(lead) {
            candidates.push(Rat::new(num.into(), den.into()));
            candidates.push(Rat::new((-num).into(), den.into()));
        }
    }
    candidates.sort();
    candidates.dedup();
    for c in candidates {
        while p.degree().unwrap_or(0) > 0 && p.eval(&c).is_zero() {
            roots.push(c.clone());
            p = p.exact_div(&Poly::linear_root(c.clone()));
        }
    }
    roots.sort();
    roots
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn center_is_a_commutative_subalgebra(i in fixture_index(), c in coeffs()) {
        let a = fixtures()[i].algebra();
        let z = a.center();
        prop_assert!(z.contains(a.unit().coords()));
        let x = element(&a, &c);
        let zs = z.basis_elements();
        for u in &zs {
            prop_assert_eq!(a.mul(u, &x), a.mul(&x, u));
            for v in &zs {
                prop_assert!(z.contains(a.mul(u, v).coords()));
            }
        }
    }

    #[test]
    fn projection_is_multiplicative(i in fixture_index(), c1 in coeffs(), c2 in coeffs()) {
        let a = fixtures()[i].algebra();
        let w = wedderburn_decomposition(&a).unwrap();
        let qp = &w.radical.quotient;
        let (x, y) = (element(&a, &c1), element(&a, &c2));
        prop_assert_eq!(qp.project(&a.mul(&x, &y)), qp.quotient.mul(&qp.project(&x), &qp.project(&y)));
    }

    #[test]
    fn product_elements_act_block_diagonally(i in fixture_index(), j in fixture_index(), c in coeffs()) {
        let (a, b) = (fixtures()[i].algebra(), fixtures()[j].algebra());
        let p = direct_product(&[a.clone(), b.clone()]);
        let x = element(&p, &c);
        let l = p.left_regular_matrix(&x).unwrap();
        let n = a.dim();
        for r in 0..p.dim() {
            for col in 0..p.dim() {
                if (r < n) != (col < n) {
                    prop_assert!(l[(r, col)].is_zero());
                }
            }
        }
    }

    #[test]
    fn lift_then_project_is_identity(i in fixture_index(), mask in 0u32..64) {
        let a = fixtures()[i].algebra();
        let w = wedderburn_decomposition(&a).unwrap();
        let qp = &w.radical.quotient;
        let mut q = qp.quotient.zero();
        for (k, e) in w.central_idempotents().iter().enumerate() {
            if mask & (1 << (k % 6)) != 0 {
                q = q.add(e);
            }
        }
        let lift = lift_idempotent(&q, qp).unwrap();
        prop_assert!(a.is_idempotent(&lift.idempotent));
        prop_assert_eq!(qp.project(&lift.idempotent), q);
    }

    #[test]
    fn rank_vector_is_additive(i in fixture_index(), m1 in 0u32..16, m2 in 0u32..16) {
        let a = fixtures()[i].algebra();
        let w = wedderburn_decomposition(&a).unwrap();
        let qp = &w.radical.quotient;
        let es = w.central_idempotents();
        let pick = |mask: u32| {
            let mut q = qp.quotient.zero();
            for (k, e) in es.iter().enumerate() {
                if mask & (1 << (k % 4)) != 0 {
                    q = q.add(e);
                }
            }
            lift_idempotent(&q, qp).unwrap().idempotent
        };
        let p = IdempotentMatrix::from_element(&a, &pick(m1)).unwrap();
        let r = IdempotentMatrix::from_element(&a, &pick(m2)).unwrap();
        let sum = p.direct_sum(&a, &r);
        let (vp, vr, vs) = (rank_vector(&a, &p, &w).unwrap(), rank_vector(&a, &r, &w).unwrap(), rank_vector(&a, &sum, &w).unwrap());
        let added: Vec<Rat> = vp.iter().zip(&vr).map(|(x, y)| x + y).collect();
        prop_assert_eq!(vs, added);
    }

    #[test]
    fn factorization_multiplies_back(ps in proptest::collection::vec(small_poly(), 1..=3), c in 1i64..=6) {
        let p = ps.iter().fold(Poly::constant(rat(c)), |acc, f| acc.mul(f));
        let fact = factor_rational(&p);
        prop_assert_eq!(fact.expand(), p.clone());
        for (f, _) in &fact.factors {
            prop_assert!(f.is_monic());
            let again = factor_rational(f);
            prop_assert_eq!(again.factors.len(), 1);
            prop_assert_eq!(again.factors[0].1, 1);
        }
        let mut linear: Vec<Rat> = Vec::new();
        for (f, m) in &fact.factors {
            if f.degree() == Some(1) {
                linear.extend(std::iter::repeat_n(-f.coeff(0), *m));
            }
        }
        linear.sort();
        prop_assert_eq!(linear, rational_roots(&p));
    }

    #[test]
    fn coprime_bundles_have_no_gerbe_term(g in 2u64..=8, r in 1u64..=12, d in -30i64..=30) {
        prop_assume!(num_integer::gcd(r as i64, d) == 1);
        let b = ed::bundle_moduli_ed(g, r, d, false).unwrap();
        prop_assert_eq!(b.value, Some(rat(((g - 1) * r * r + 1) as i64)));
        prop_assert_eq!(b.kind, BoundKind::Upper);
    }

    #[test]
    fn split_data_contributes_nothing(sizes in proptest::collection::vec(1usize..=2, 1..=3), d in 1u64..=4) {
        let parts: Vec<FDAlgebra> = sizes.iter().map(|&n| matrix_algebra(n)).collect();
        let w = wedderburn_decomposition(&direct_product(&parts)).unwrap();
        let b = ed::bound_from_wedderburn(&w, d, &[]).unwrap();
        let realizable = sizes.iter().all(|&n| (n as u64).is_multiple_of(d));
        // a factor Mat_n(ℚ) with d ∤ n carries no module of rank 1/d
        if realizable {
            prop_assert_eq!(b.value.clone(), Some(Rat::zero()));
        } else {
            prop_assert_eq!(b.kind, BoundKind::MinusInfinity);
        }
        if d == 1 {
            prop_assert_eq!(b.value, Some(Rat::zero()));
        }
    }

    #[test]
    fn division_bound_is_a_nonnegative_integer(deg in 1u64..=120, pick in 0usize..16) {
        let divisors: Vec<u64> = (1..=deg).filter(|d| deg % d == 0).collect();
        let d = divisors[pick % divisors.len()];
        let v = ed::bound_division(deg, d).unwrap().value.unwrap();
        prop_assert!(v.is_integer() && v >= Rat::zero());
        // no prime divides d = 1, so every term carries the factor p⁰ − 1
        prop_assert_eq!(ed::bound_division(deg, 1).unwrap().value, Some(Rat::zero()));
    }
}

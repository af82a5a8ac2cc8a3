use fdalg::corpus::fixture_by_name;
use fdalg::ed::{self, BoundKind};
use fdalg::error::Error;
use fdalg::lifting::rank_realizable;
use fdalg::rat::{rat, ratio};
use fdalg::structure::{wedderburn_decomposition, WedderburnReport};

fn report(name: &str) -> WedderburnReport {
    wedderburn_decomposition(&fixture_by_name(name).unwrap().algebra()).unwrap()
}

#[test]
fn split_fixtures_give_zero() {
    for name in ["rationals", "upper_triangular_2", "q_x_q", "matrix_2", "group_c2"] {
        let b = ed::bound_from_wedderburn(&report(name), 1, &[]).unwrap();
        assert_eq!((b.value, b.kind), (Some(rat(0)), BoundKind::Upper), "{name}");
    }
}

#[test]
fn quaternions_need_an_asserted_index() {
    let w = report("quaternions_m1_m1");
    assert_eq!(ed::bound_from_wedderburn(&w, 2, &[]).unwrap_err(), Error::UnknownIndex(0));
    let b = ed::bound_from_wedderburn(&w, 2, &[Some(2)]).unwrap();
    assert_eq!(b.value, Some(rat(1)));
    assert!(!b.assumptions.is_empty());
    // an asserted index must agree with a computed one; (1, −1) splits
    let split = report("quaternions_1_m1");
    assert!(matches!(ed::bound_from_wedderburn(&split, 2, &[Some(2)]), Err(Error::OutOfRange(_))));
    assert_eq!(ed::bound_from_wedderburn(&split, 2, &[]).unwrap().value, Some(rat(0)));
}

#[test]
fn mat2_over_dual_numbers() {
    let w = report("mat2_over_dual");
    let b = ed::bound_from_wedderburn(&w, 2, &[]).unwrap();
    assert_eq!((b.value.clone(), b.kind), (Some(rat(0)), BoundKind::Upper));
    let s = ed::strict_bound_from_wedderburn(&w, 2, &[]).unwrap();
    assert_eq!((s.value.clone(), s.kind), (Some(rat(1)), BoundKind::StrictUpper));
    assert!(b.value < s.value);
    assert!(rank_realizable(&w, &ratio(1, 2)).unwrap());
    // rank 1/4 needs 2·(1/4) ∈ ℤ
    assert_eq!(ed::bound_from_wedderburn(&w, 4, &[]).unwrap().kind, BoundKind::MinusInfinity);
}

#[test]
fn field_factors_at_fractional_rank() {
    // ℚ×ℚ carries no module of rank 1/2
    let w = report("q_x_q");
    assert!(!rank_realizable(&w, &ratio(1, 2)).unwrap());
    assert!(rank_realizable(&w, &rat(1)).unwrap());
    assert_eq!(ed::bound_from_wedderburn(&w, 2, &[]).unwrap().kind, BoundKind::MinusInfinity);
}

#[test]
fn arbitrary_rank_extrapolation() {
    let w = report("matrix_3");
    let b = ed::bound_from_wedderburn_rank(&w, &ratio(2, 3), &[]).unwrap();
    assert_eq!(b.value, Some(rat(0)));
    assert!(!b.assumptions.is_empty());
    let m = ed::bound_from_wedderburn_rank(&w, &ratio(1, 2), &[]).unwrap();
    assert_eq!(m.kind, BoundKind::MinusInfinity);
}

#[test]
fn cyclotomic_factors_count_their_center() {
    // ℚ[C₅] ≅ ℚ × ℚ(ζ₅): every factor is a field, so the split value is 0
    let w = report("group_c5");
    assert_eq!(w.factors.iter().map(|f| f.center_dim).collect::<Vec<_>>(), vec![1, 4]);
    assert_eq!(ed::bound_from_wedderburn(&w, 1, &[]).unwrap().value, Some(rat(0)));
    let s = ed::strict_bound_from_wedderburn(&w, 1, &[]).unwrap();
    assert_eq!(s.value, Some(rat(5)));
}

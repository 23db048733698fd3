use bizeta::exactalg::{series_expand, LaurentPoly, Var};
use bizeta::lattices::LatticeFamily;
use bizeta::oracle::{
    cc_counts_via_a, check_first_row_minors, check_minor_norm_profiles, class_polynomial, direct_group_oracle, verify_minor_membership,
    verify_nir, zeta_irr_coefficient_oracle, BchGroup, MinorMode, PrimeLevel, DEFAULT_BUDGET,
};
use bizeta::zeta::{zeta_cc_closed, zeta_irr_closed};
use bizeta::Error;
use proptest::prelude::*;

mod common;

#[test]
fn census_f21_level_one() {
    let fam = LatticeFamily::f(2, 1).unwrap();
    let (v, cells) = verify_nir(&fam, &PrimeLevel::new(3, 1).unwrap(), DEFAULT_BUDGET).unwrap();
    assert!(v.ok, "{:?}", v.counterexamples);
    assert_eq!(cells.len(), 2);
}

#[test]
fn census_cells_sum_to_primitive_vectors() {
    let fam = LatticeFamily::g(2).unwrap();
    let (v, cells) = verify_nir(&fam, &PrimeLevel::new(3, 1).unwrap(), DEFAULT_BUDGET).unwrap();
    assert!(v.ok);
    assert_eq!(cells.iter().map(|c| c.observed).sum::<u128>(), 80);
}

#[test]
fn irr_oracle_f21_level_one() {
    let fam = LatticeFamily::f(2, 1).unwrap();
    let r = fam.r() as i32;
    let cleared = &zeta_irr_closed(&fam).value
        * &bizeta::exactalg::RationalFunction::from_poly(LaurentPoly::one_minus(
            &bizeta::exactalg::Monomial::from_pairs(&[(Var::Q, r), (Var::T2, 1)]),
        ));
    let want = common::at_q(series_expand(&cleared, Var::T2, 1).unwrap().coeff(1), 3);
    let got = zeta_irr_coefficient_oracle(&fam, &PrimeLevel::new(3, 1).unwrap(), DEFAULT_BUDGET).unwrap();
    assert_eq!(got, want);
}

#[test]
fn group_oracle_agrees_with_commutator_matrix() {
    let pl = PrimeLevel::new(3, 1).unwrap();
    for fam in [LatticeFamily::g(2).unwrap(), LatticeFamily::h(2).unwrap(), LatticeFamily::f(1, 1).unwrap()] {
        let direct = direct_group_oracle(&fam, &pl, DEFAULT_BUDGET).unwrap();
        let via_a = cc_counts_via_a(&fam, &pl, DEFAULT_BUDGET).unwrap();
        assert_eq!(direct.classes, via_a.classes, "{fam}");
        assert_eq!(direct.group_order(), 3u128.pow(fam.h_rank() as u32));
    }
}

#[test]
fn class_counts_f10_level_three() {
    let fam = LatticeFamily::f(1, 0).unwrap();
    let pl = PrimeLevel::new(3, 3).unwrap();
    let got = class_polynomial(&cc_counts_via_a(&fam, &pl, DEFAULT_BUDGET).unwrap());
    let want = common::at_q(series_expand(&zeta_cc_closed(&fam).value, Var::T2, 3).unwrap().coeff(3), 3);
    assert_eq!(got, want);
}

#[test]
fn budget_is_enforced() {
    let fam = LatticeFamily::f(2, 1).unwrap();
    let e = verify_nir(&fam, &PrimeLevel::new(3, 2).unwrap(), DEFAULT_BUDGET).unwrap_err();
    assert!(matches!(e, Error::BudgetExceeded { .. }));
}

#[test]
fn group_needs_odd_prime() {
    let fam = LatticeFamily::f(1, 0).unwrap();
    assert!(direct_group_oracle(&fam, &PrimeLevel::new(2, 1).unwrap(), DEFAULT_BUDGET).is_err());
}

#[test]
fn sampled_minor_profiles_g3() {
    let fam = LatticeFamily::g(3).unwrap();
    let mode = MinorMode::Sampled { count: 40, seed: 11 };
    let v = check_minor_norm_profiles(&fam, &PrimeLevel::new(3, 2).unwrap(), mode, DEFAULT_BUDGET).unwrap();
    assert!(v.ok, "{:?}", v.counterexamples);
    assert_eq!(v.checked, 40);
}

#[test]
fn first_row_minors_wider_matrices() {
    for cols in 2..=5 {
        assert!(check_first_row_minors(5, 2, cols, 200, cols as u64).unwrap().ok);
    }
}

#[test]
fn membership_examples() {
    for k in 1..=3 {
        assert!(verify_minor_membership(2, k, DEFAULT_BUDGET).unwrap().ok, "G_2 k={k}");
    }
    let v = verify_minor_membership(3, 3, DEFAULT_BUDGET).unwrap();
    assert!(v.ok, "{:?}", v.counterexamples);
}

fn element(h: usize, m: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(0..m, h)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_law_is_associative(
        (g, k, l) in (element(8, 25), element(8, 25), element(8, 25))
    ) {
        let grp = BchGroup::new(&LatticeFamily::g(2).unwrap(), &PrimeLevel::new(5, 2).unwrap()).unwrap();
        prop_assert_eq!(grp.mul(&grp.mul(&g, &k), &l), grp.mul(&g, &grp.mul(&k, &l)));
        prop_assert_eq!(grp.mul(&g, &grp.inv(&g)), grp.identity());
    }
}

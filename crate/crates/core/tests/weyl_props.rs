use bizeta::exactalg::RationalFunction;
use bizeta::lattices::LatticeFamily;
use bizeta::weyl::{
    enumerate_bn, stats, verify_stat_gh_with, zeta_irr_weyl, HDescentSign, SignedPermutation,
};
use bizeta::zeta::{verify_funceq_with, zeta_irr_closed, Inversion, ZetaKind};
use proptest::prelude::*;

fn signed_permutation(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), n)).prop_map(
        |(perm, signs)| {
            let window = perm.into_iter().zip(signs).map(|(v, s)| if s { -v } else { v }).collect();
            SignedPermutation::new(window).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn length_is_additive_against_longest(w in (1usize..=6).prop_flat_map(signed_permutation)) {
        let n = w.n();
        let w0 = SignedPermutation::longest(n);
        prop_assert_eq!(stats(&w.compose(&w0)).ell + stats(&w).ell, (n * n) as u32);
    }

    #[test]
    fn big_l_complements_against_longest(w in (1usize..=6).prop_flat_map(signed_permutation)) {
        let n = w.n();
        let w0 = SignedPermutation::longest(n);
        let l0 = stats(&w0).big_l;
        prop_assert_eq!(stats(&w.compose(&w0)).big_l + stats(&w).big_l, l0);
    }

    #[test]
    fn descent_statistics_are_consistent(w in (1usize..=6).prop_flat_map(signed_permutation)) {
        let s = stats(&w);
        let n = w.n() as u32;
        prop_assert_eq!(s.des as usize, s.descents.len());
        prop_assert_eq!(s.maj + s.rmaj, n * s.des);
        prop_assert!(s.ell >= s.inv + s.neg);
    }
}

#[test]
fn longest_big_l() {
    for (n, want) in [(1, 1), (2, 3), (3, 6), (4, 10)] {
        assert_eq!(stats(&SignedPermutation::longest(n)).big_l, want);
    }
}

#[test]
fn enumeration_is_lexicographic() {
    let first: Vec<String> = enumerate_bn(2).unwrap().take(3).map(|w| w.to_string()).collect();
    assert_eq!(first, ["[-2,-1]", "[-2,1]", "[-1,-2]"]);
}

#[test]
fn weyl_sum_matches_closed_form() {
    for n in 1..=3 {
        let fams = [
            LatticeFamily::f(n, 0).unwrap(),
            LatticeFamily::f(n, 1).unwrap(),
            LatticeFamily::g(n).unwrap(),
            LatticeFamily::h(n).unwrap(),
        ];
        for fam in fams {
            let weyl: RationalFunction = zeta_irr_weyl(&fam).unwrap();
            assert_eq!(weyl, zeta_irr_closed(&fam).value, "{fam}");
        }
    }
}

#[test]
fn printed_h_descent_sign_fails() {
    for n in 2..=4 {
        assert!(verify_stat_gh_with(n, HDescentSign::Minus).unwrap().ok);
        assert!(!verify_stat_gh_with(n, HDescentSign::Plus).unwrap().ok);
    }
}

#[test]
fn inverting_q_alone_fails() {
    for fam in [LatticeFamily::f(1, 0).unwrap(), LatticeFamily::g(2).unwrap(), LatticeFamily::h(2).unwrap()] {
        for kind in [ZetaKind::Cc, ZetaKind::Irr] {
            assert!(verify_funceq_with(&fam, kind, Inversion::Full).unwrap().ok);
            assert!(!verify_funceq_with(&fam, kind, Inversion::QOnly).unwrap().ok);
        }
    }
}

use bizeta::exactalg::{
    qbinomial, rat, rational_from_json, rational_to_json, series_expand, LaurentPoly, Monomial, RationalFunction, Var,
};
use proptest::prelude::*;

fn monomial() -> impl Strategy<Value = Monomial> {
    (-4i64..=4, -2i32..=2, -2i32..=2, 0i32..=2).prop_map(|(c, q, t1, t2)| {
        let mut m = Monomial::from_pairs(&[(Var::Q, q), (Var::T1, t1), (Var::T2, t2)]);
        m.coeff = rat(c);
        m
    })
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(monomial(), 0..4).prop_map(LaurentPoly::from_monomials)
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rational() -> impl Strategy<Value = RationalFunction> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_recovers_factor(a in nonzero_poly(), b in nonzero_poly()) {
        let prod = &a * &b;
        let quotient = prod.div_exact(&b).expect("divisible");
        prop_assert_eq!(&quotient * &b, prod);
    }

    #[test]
    fn rational_field_laws(f in rational(), g in rational(), h in rational()) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&(&f - &g) + &g, f.clone());
        if !g.is_zero() {
            let back = &f.checked_div(&g).unwrap() * &g;
            prop_assert_eq!(back, f);
        }
    }

    #[test]
    fn equality_ignores_common_factors(f in rational(), k in nonzero_poly()) {
        let scaled = RationalFunction::new(f.num() * &k, f.den() * &k).unwrap();
        prop_assert_eq!(scaled, f);
    }

    #[test]
    fn double_inversion_is_identity(f in rational()) {
        let vars = [Var::Q, Var::T1, Var::T2];
        prop_assert_eq!(f.invert_vars(&vars).invert_vars(&vars), f);
    }

    #[test]
    fn json_round_trip(f in rational()) {
        prop_assert_eq!(rational_from_json(&rational_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn series_times_denominator_is_numerator(n in poly(), c in -3i64..=3, d in monomial()) {
        prop_assume!(c != 0);
        let mut lead = LaurentPoly::from_int(c);
        let mut step = d.clone();
        step.exps[Var::T2.index()] = 1;
        lead += &LaurentPoly::from_monomial(step);
        let f = RationalFunction::new(n.clone(), lead.clone()).unwrap();
        let order = 4;
        let s = series_expand(&f, Var::T2, order).unwrap().to_poly();
        prop_assert_eq!((&s * &lead).truncate(Var::T2, order as i32), n.truncate(Var::T2, order as i32));
    }

    #[test]
    fn gaussian_binomial_symmetry(a in 0usize..9, b in 0usize..9) {
        prop_assume!(b <= a);
        prop_assert_eq!(qbinomial(a, b).unwrap(), qbinomial(a, a - b).unwrap());
    }

    #[test]
    fn gaussian_binomial_pascal(a in 1usize..9, b in 1usize..9) {
        prop_assume!(b < a);
        let lhs = qbinomial(a, b).unwrap();
        let shifted = LaurentPoly::var_pow(Var::X, b as i32) * qbinomial(a - 1, b).unwrap();
        prop_assert_eq!(lhs, qbinomial(a - 1, b - 1).unwrap() + shifted);
    }
}

#[test]
fn gaussian_binomial_at_one_is_binomial() {
    let g = qbinomial(6, 3).unwrap();
    let at_one = RationalFunction::from_poly(g).eval(&[(Var::X, rat(1))]).unwrap();
    assert_eq!(at_one, rat(20));
}

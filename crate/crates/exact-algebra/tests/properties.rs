use exact_algebra::{qbinom, qtint, rat, specialize_poly, Bindings, Monomial, MultiPoly, QtZero, RatFunc, Var};
use proptest::prelude::*;

fn poly_strategy(vars: &'static [Var]) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..4, vars.len()), -5i64..=5), 0..6).prop_map(move |terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(exps, c)| {
            let pairs: Vec<(Var, u32)> = vars.iter().copied().zip(exps).collect();
            (Monomial::from_pairs(&pairs), rat(c))
        }))
    })
}

const ALL: &[Var] = &[Var::Q, Var::T, Var::Z, Var::W, Var::U];
const QT: &[Var] = &[Var::Q, Var::T];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_laws(a in poly_strategy(ALL), b in poly_strategy(ALL), c in poly_strategy(ALL)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn text_form_round_trips(a in poly_strategy(ALL)) {
        let s = a.serialize();
        let back = MultiPoly::parse(&s).unwrap();
        prop_assert_eq!(back.serialize(), s);
        prop_assert_eq!(back, a);
    }

    #[test]
    fn specialization_composes(a in poly_strategy(ALL)) {
        let z0 = Bindings::new().set(Var::Z, 0).unwrap();
        let w0 = Bindings::new().set(Var::W, 0).unwrap();
        let both = Bindings::new().set(Var::Z, 0).unwrap().set(Var::W, 0).unwrap();
        let step = specialize_poly(&specialize_poly(&a, &z0).unwrap().as_poly().unwrap(), &w0).unwrap();
        prop_assert_eq!(step, specialize_poly(&a, &both).unwrap());
    }
}

/// 1000 random fractions: cross-multiplied equality agrees with equality of reduced forms.
#[test]
fn cross_multiplication_matches_canonical_equality() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;

    let mut runner = TestRunner::deterministic();
    let strat = (poly_strategy(QT), poly_strategy(QT), poly_strategy(QT), poly_strategy(QT), any::<bool>());
    let mut equal_cases = 0;
    for _ in 0..1000 {
        let (n1, d1, common, other, force_equal) = strat.new_tree(&mut runner).unwrap().current();
        if d1.is_zero() || common.is_zero() {
            continue;
        }
        let a = RatFunc::new(n1.clone(), d1.clone()).unwrap();
        let b = if force_equal {
            RatFunc::new(&n1 * &common, &d1 * &common).unwrap()
        } else {
            match RatFunc::new(other.clone(), d1.clone()) {
                Ok(r) => r,
                Err(_) => continue,
            }
        };
        let canonical = a.numerator() == b.numerator() && a.denominator() == b.denominator();
        assert_eq!(a == b, canonical, "{a} vs {b}");
        if force_equal {
            assert!(a == b);
            equal_cases += 1;
        }
    }
    assert!(equal_cases > 100);
}

#[test]
fn q_binomials_are_symmetric_with_nonnegative_integer_coefficients() {
    for n in 0..=8 {
        for k in 0..=n {
            let b = qbinom(n, k).unwrap();
            assert_eq!(b, qbinom(n, n - k).unwrap());
            assert!(b.has_nonnegative_integer_coefficients());
        }
    }
}

#[test]
fn power_difference_quotient_is_the_qt_integer() {
    let diff = MultiPoly::t() - MultiPoly::q();
    for p in 1..=10 {
        let num = MultiPoly::t().pow(p) - MultiPoly::q().pow(p);
        let r = RatFunc::new(num, diff.clone()).unwrap();
        assert_eq!(r, RatFunc::from_poly(qtint(p, QtZero::Zero)));
        assert_eq!(r.as_poly(), Some(qtint(p, QtZero::One)));
    }
}

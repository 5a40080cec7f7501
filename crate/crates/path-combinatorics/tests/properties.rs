//! Exhaustive checks of the bijections and generating functions at small sizes.

use std::collections::BTreeMap;

use exact_algebra::{MultiPoly, RatFunc, Var};
use path_combinatorics::*;
use symfunc_core::{Basis, Composition, Partition};

fn all_labels(n: usize) -> LabelSpec {
    LabelSpec::Alphabet(n)
}

#[test]
fn phi_transports_statistics_and_inverts() {
    for n in 1..=5 {
        for size in 0..n {
            for p in DecoratedPath::all(Decoration::Fall, n, size, &all_labels(n)) {
                let s = phi(&p).unwrap();
                assert_eq!(s.k(), n - size - 1);
                assert_eq!(s.area(), p.area_minus(), "{p}");
                assert_eq!(s.hdinv(), p.path().dinv(), "{p}");
                assert_eq!(phi_inverse(&s).unwrap(), p);
            }
        }
    }
}

#[test]
fn psi_transports_statistics_and_inverts() {
    for n in 1..=5 {
        for size in 0..n {
            for p in DecoratedPath::all(Decoration::Val, n, size, &all_labels(n)) {
                let s = psi(&p).unwrap();
                assert_eq!(s.k(), n - size - 1);
                assert_eq!(s.area(), p.path().area(), "{p}");
                assert_eq!(s.wdinv(), p.dinv_minus(), "{p}");
                assert_eq!(psi_inverse(&s).unwrap(), p);
            }
        }
    }
}

#[test]
fn theta_transports_statistics_and_inverts() {
    for n in 1..=5 {
        for k in 0..n {
            let stacks = StackPath::all(n, k, &all_labels(n));
            let dense = DensePath::all(n, k, &all_labels(n));
            assert_eq!(stacks.len(), dense.len(), "n={n} k={k}");
            for s in stacks {
                let d = theta(&s).unwrap();
                assert_eq!(d.area(), s.area(), "{s}");
                assert_eq!(d.wdinv(), s.wdinv(), "{s}");
                assert_eq!(d.x_monomial(), s.x_monomial());
                assert_eq!(theta_inverse(&d).unwrap(), s);
            }
        }
    }
}

#[test]
fn every_route_agrees() {
    for n in 1..=5 {
        for k in 0..n {
            rise_gf_content(n, k).unwrap();
            val_gf_content(n, k).unwrap();
        }
    }
}

#[test]
fn by_k_matches_single_k() {
    let rise = rise_by_k(4).unwrap();
    let val = val_by_k(4).unwrap();
    for k in 0..4 {
        assert!(rise[k].first_difference(&rise_gf_content(4, k).unwrap()).is_none());
        assert!(val[k].first_difference(&val_gf_content(4, k).unwrap()).is_none());
    }
}

#[test]
fn rise_two_one() {
    let f = rise_gf_content(2, 1).unwrap();
    let q = MultiPoly::q();
    let t = MultiPoly::t();
    assert_eq!(f.coefficient(&Composition::new(vec![2]).unwrap()), MultiPoly::one());
    assert_eq!(f.coefficient(&Composition::new(vec![1, 1]).unwrap()), &(&MultiPoly::one() + &q) + &t);
    let x = rise_gf(2, 1, 2).unwrap();
    assert_eq!(x.coefficient(&exact_algebra::Monomial::from_pairs(&[(Var::X(1), 2)])), exact_algebra::rat(1));
}

#[test]
fn generating_functions_are_symmetric() {
    for n in 1..=6 {
        for (k, (r, v)) in rise_by_k(n).unwrap().iter().zip(val_by_k(n).unwrap().iter()).enumerate() {
            assert_eq!(r.symmetry_violation(), None, "Rise n={n} k={k}");
            assert_eq!(v.symmetry_violation(), None, "Val n={n} k={k}");
        }
    }
}

#[test]
fn parking_functions_at_top_k() {
    for n in 1..=6 {
        let f = rise_by_k(n).unwrap().pop().unwrap();
        let standard = Composition::new(vec![1; n]).unwrap();
        let at_one =
            f.coefficient(&standard).substitute(Var::Q, &MultiPoly::one()).substitute(Var::T, &MultiPoly::one());
        assert_eq!(at_one, MultiPoly::int((n as i64 + 1).pow(n as u32 - 1)));
    }
}

fn schur_of(f: &ContentGf) -> BTreeMap<Partition, RatFunc> {
    let s = f.to_symfunc().unwrap().convert(Basis::S).unwrap();
    s.terms().map(|(p, c)| (p.clone(), c.clone())).collect()
}

#[test]
fn llt_schur_coefficients_are_yamanouchi_sums() {
    for n in 1..=6 {
        for k in 0..=1.min(n - 1) {
            for shape in StackShape::all(n, k) {
                let l = llt_content(&shape);
                assert!(l.is_symmetric());
                let expected: BTreeMap<Partition, RatFunc> =
                    yamanouchi_schur(&shape).unwrap().into_iter().map(|(p, c)| (p, RatFunc::from_poly(c))).collect();
                assert_eq!(schur_of(&l), expected, "{shape:?}");
            }
        }
    }
}

#[test]
fn llt_sums_to_rise() {
    for n in 1..=5 {
        for k in 0..n {
            let mut total = ContentGf::zero(n);
            for shape in StackShape::all(n, k) {
                let area = MultiPoly::monomial(exact_algebra::Monomial::qt(0, shape.area() as u32));
                total.merge(&llt_content(&shape).map_coeffs(|c| c * &area));
            }
            assert!(total.first_difference(&rise_gf_content(n, k).unwrap()).is_none());
        }
    }
}

#[test]
fn xy_diagrams_classify_and_round_trip() {
    for n in 1..=8 {
        for p in two_column_instances(n) {
            let d = xy_diagram(&p).unwrap();
            d.classify().unwrap();
            assert_eq!(d.to_path().unwrap(), p);
            assert_eq!(d.hdinv(), p.hdinv());
            assert_eq!(d.area(), p.area());
            assert_eq!(d.to_string().parse::<XYDiagram>().unwrap(), d);
        }
        for ((m, j), c) in two_column_table(n) {
            assert_eq!(c, two_column_formula(n, m, j), "n={n} m={m} j={j}");
        }
    }
}

#[test]
fn k1_formula_matches_two_lowest_rise() {
    for n in 1..=6 {
        let by_k = rise_by_k(n).unwrap();
        let mut sum = by_k[0].clone();
        if n > 1 {
            sum.merge(&by_k[1]);
        }
        let formula = k1_formula(n, exact_algebra::QtZero::Zero).unwrap().convert(Basis::M).unwrap();
        let expected = ContentGf::from_symfunc(&formula).unwrap();
        assert!(sum.first_difference(&expected).is_none(), "n={n}");
    }
}

#[test]
fn q1_formula_matches_adjacent_rise_at_one() {
    let at_one = |p: &MultiPoly| p.substitute(Var::Q, &MultiPoly::one()).substitute(Var::T, &MultiPoly::one());
    for n in 1..=6 {
        let by_k = rise_by_k(n).unwrap();
        for k in 1..=n {
            let mut sum = if k < n { by_k[k].clone() } else { ContentGf::zero(n) };
            sum.merge(&by_k[k - 1]);
            let expected = ContentGf::from_symfunc(&q1_formula(n, k).unwrap().convert(Basis::M).unwrap()).unwrap();
            assert!(sum.map_coeffs(at_one).first_difference(&expected).is_none(), "n={n} k={k}");
        }
    }
}

#[test]
fn catalan_specializations() {
    for n in 1..=7 {
        let c = cat4(n).unwrap();
        let m = catmod4(n).unwrap();
        assert_eq!(c, m, "n={n}");
        let eval = |z: i64, w: i64| {
            c.substitute(Var::Q, &MultiPoly::one())
                .substitute(Var::T, &MultiPoly::one())
                .substitute(Var::Z, &MultiPoly::int(z))
                .substitute(Var::W, &MultiPoly::int(w))
        };
        let catalan = DyckPath::all(n).len() as i64;
        assert_eq!(eval(0, 0), MultiPoly::int(catalan));
        assert_eq!(eval(1, 1), MultiPoly::int(catalan << (n - 1)));
        let mut touch = MultiPoly::zero();
        for r in 1..=n {
            touch += &cat4_touch(n, r).unwrap();
            assert_eq!(cat4_touch(n, r).unwrap(), catmod4_touch(n, r).unwrap());
        }
        assert_eq!(touch, c);
    }
}

#[test]
fn peaks_mark_increases_of_b() {
    for n in 1..=8 {
        for d in DyckPath::all(n) {
            let r = peak_report(&d);
            assert!(r.holds(), "{d}: {r:?}");
        }
    }
}

#[test]
fn compositions_refine_catmod() {
    for n in 1..=6 {
        let total = catmod4(n).unwrap();
        for l in 0..n {
            let mut sum = MultiPoly::zero();
            for alpha in Composition::all(n - l) {
                sum += &catmod4_comp(n, &alpha).unwrap();
            }
            assert_eq!(sum, total.coeff_extract(Var::W, l as u32), "n={n} l={l}");
        }
    }
}

#[test]
fn partial_paths_without_empty_rows_are_rise() {
    for n in 1..=4 {
        let rise = rise_by_k(n).unwrap();
        for variant in [DinvVariant::Zero, DinvVariant::Prime] {
            let part = partial_gf(n, 0, variant).unwrap();
            for k in 0..n {
                assert!(part[&k].first_difference(&rise[n - 1 - k]).is_none(), "n={n} k={k}");
            }
        }
    }
}

#[test]
fn touch_refinement_reassembles() {
    for n in 1..=3 {
        for ell in 0..=2 {
            for variant in [DinvVariant::Zero, DinvVariant::Prime] {
                let mut total = ContentGf::zero(n);
                for f in partial_touch_gf(n, ell, variant).unwrap().values() {
                    total.merge(f);
                }
                let unrefined = &partial_gf(n, ell, variant).unwrap()[&0];
                let plain = unrefined.map_coeffs(|c| c.clone());
                assert!(total.first_difference(&plain).is_none(), "n={n} ell={ell} {variant}");
            }
        }
    }
}

#[test]
fn run_types_match_census() {
    for n in 1..=7 {
        for (lambda, count) in run_type_census(n) {
            assert_eq!(run_type_count(&lambda), count);
        }
    }
}

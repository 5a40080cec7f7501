use std::collections::BTreeMap;

use exact_algebra::{MultiPoly, RatFunc};
use macdonald_ops::{Config, Macdonald, Op};
use symfunc_core::{Basis, Partition, SymFunc};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn poly(s: &str) -> RatFunc {
    RatFunc::from_poly(MultiPoly::parse(s).unwrap())
}

fn schur(terms: &[(&[usize], &str)], n: usize) -> SymFunc {
    SymFunc::from_terms(Basis::S, n, terms.iter().map(|(l, c)| (p(l), poly(c)))).unwrap()
}

#[test]
fn degree_two_examples() {
    let mac = Macdonald::default();
    let h2 = mac.htilde(&p(&[2])).unwrap().convert(Basis::S).unwrap();
    let h11 = mac.htilde(&p(&[1, 1])).unwrap().convert(Basis::S).unwrap();
    assert_eq!(h2, schur(&[(&[2], "1"), (&[1, 1], "1*q^1")], 2));
    assert_eq!(h11, schur(&[(&[2], "1"), (&[1, 1], "1*t^1")], 2));

    let e2 = mac.expand_in_htilde(&SymFunc::e(2)).unwrap();
    let inv = RatFunc::new(MultiPoly::one(), &MultiPoly::t() - &MultiPoly::q()).unwrap();
    assert_eq!(e2[&p(&[1, 1])], inv);
    assert_eq!(e2[&p(&[2])], -&inv);

    let nabla = mac.nabla(&SymFunc::e(2)).unwrap();
    assert_eq!(nabla, schur(&[(&[2], "1"), (&[1, 1], "1*q^1 + 1*t^1")], 2));
    let delta = mac.delta(&SymFunc::e(1), &SymFunc::e(2)).unwrap();
    assert_eq!(delta, schur(&[(&[2], "1"), (&[1, 1], "1*q^1 + 1*t^1 + 1")], 2));
    let same = mac.delta_prime(&SymFunc::e(0), &SymFunc::e(2)).unwrap();
    assert_eq!(same, SymFunc::e(2).convert(Basis::S).unwrap());
}

#[test]
fn battery_through_degree_five() {
    let mac = Macdonald::default();
    for n in 1..=5 {
        let report = mac.battery_report(n).unwrap();
        for (name, ok) in &report.checks {
            assert!(ok, "degree {n}: {name}");
        }
    }
}

#[test]
fn htilde_expands_to_unit_vectors() {
    let mac = Macdonald::default();
    for n in 1..=4 {
        for mu in Partition::all(n) {
            let got = mac.expand_in_htilde(&mac.htilde(&mu).unwrap()).unwrap();
            let mut unit = BTreeMap::new();
            unit.insert(mu.clone(), RatFunc::one());
            assert_eq!(got, unit, "{mu}");
        }
    }
}

#[test]
fn expansions_multiply_back() {
    let mac = Macdonald::default();
    for n in 1..=4 {
        for lambda in Partition::all(n) {
            let f = SymFunc::s(lambda.clone());
            let coeffs = mac.expand_in_htilde(&f).unwrap();
            let back = mac.apply_to_expansion(n, &coeffs, &[]).unwrap();
            assert_eq!(back, f, "s{lambda}");
        }
    }
}

#[test]
fn eq3_and_vanishing() {
    let mac = Macdonald::default();
    for n in 1..=4 {
        for k in 1..=n + 2 {
            assert!(mac.delta_identity_check(n, k).unwrap(), "n={n} k={k}");
        }
    }
    let en = SymFunc::e(3);
    assert!(mac.delta(&SymFunc::e(4), &en).unwrap().is_zero());
    assert_eq!(mac.nabla(&en).unwrap(), mac.delta_prime(&SymFunc::e(2), &en).unwrap());
}

#[test]
fn composite_operators_multiply_eigenvalues() {
    let mac = Macdonald::default();
    let en = SymFunc::e(3);
    let once = mac.delta(&SymFunc::h(1), &mac.nabla(&en).unwrap()).unwrap();
    let both = mac.apply(&[Op::Delta(SymFunc::h(1)), Op::Nabla], &en).unwrap();
    assert_eq!(once, both);
}

#[test]
fn cache_files_are_reproducible() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [a.path(), b.path()] {
        let mac = Macdonald::new(Config { cap: 4, cache_dir: Some(dir.to_path_buf()) });
        mac.nabla(&SymFunc::e(4)).unwrap();
    }
    let read = |d: &std::path::Path| std::fs::read(d.join("htilde_4.txt")).unwrap();
    assert_eq!(read(a.path()), read(b.path()));
    // A warm engine reads the file back and gives the same answers.
    let warm = Macdonald::new(Config { cap: 4, cache_dir: Some(a.path().to_path_buf()) });
    let cold = Macdonald::default();
    assert_eq!(warm.nabla(&SymFunc::e(4)).unwrap(), cold.nabla(&SymFunc::e(4)).unwrap());
    assert_eq!(read(a.path()), read(b.path()));
    assert!(Macdonald::new(Config { cap: 3, cache_dir: None }).htilde(&p(&[4])).is_err());
}

#[test]
fn the_mirrored_attack_convention_is_rejected() {
    use macdonald_ops::basis::DegreeBasis;
    use macdonald_ops::fillings::{Attack, FillingTable};
    let n = 3;
    let tables: Vec<_> = Partition::all(n).iter().map(|mu| FillingTable::build(mu, Attack::UpperLeft)).collect();
    let symmetric = tables.iter().all(|t| !t.negative_inv && t.asymmetric_content().is_none());
    let battery = DegreeBasis::new(n, tables.iter().map(|t| t.to_symfunc()).collect())
        .and_then(|b| Partition::all(n).iter().try_for_each(|mu| b.schur_battery(mu)));
    assert!(!symmetric || battery.is_err());
}

#[test]
fn t_reciprocal_closed_forms() {
    use macdonald_ops::{delta_e_t_recip_closed, delta_t_recip, specialize_t_recip};
    let mac = Macdonald::default();
    for n in 1..=4 {
        for k in 1..=n {
            let en = SymFunc::e(n);
            let operator = specialize_t_recip(&mac.delta(&SymFunc::e(k), &en).unwrap()).unwrap();
            let general = delta_t_recip(&SymFunc::e(k), n).unwrap();
            assert_eq!(operator, general, "e_{k}, n={n}");
            assert_eq!(general, delta_e_t_recip_closed(k, n).unwrap(), "e_{k}, n={n}");
        }
        let nabla = specialize_t_recip(&mac.nabla(&SymFunc::e(n)).unwrap()).unwrap();
        assert_eq!(nabla, delta_t_recip(&SymFunc::e(n), n).unwrap());
    }
    for n in 1..=3 {
        let h2 = specialize_t_recip(&mac.delta(&SymFunc::h(2), &SymFunc::e(n)).unwrap()).unwrap();
        assert_eq!(h2, delta_t_recip(&SymFunc::h(2), n).unwrap());
    }
}

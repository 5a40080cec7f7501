use std::collections::BTreeSet;

use exact_algebra::{MultiPoly, Var};
use osp_combinatorics::stats::major_index;
use osp_combinatorics::{distribution, enumerate_osp, gamma, gamma_inverse, OrderedMultisetPartition, Statistic};
use path_combinatorics::{rise_by_k, val_by_k, DensePath, DyckPath, LabelSpec};
use symfunc_core::Composition;

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn pi(s: &str) -> OrderedMultisetPartition {
    s.parse().unwrap()
}

fn compositions_up_to(n: usize) -> impl Iterator<Item = Composition> {
    (1..=n).flat_map(Composition::all)
}

#[test]
fn enumeration_counts() {
    assert_eq!(enumerate_osp(&comp(&[1, 1, 1]), 2).len(), 6);
    assert_eq!(enumerate_osp(&comp(&[1]), 1).len(), 1);
    assert_eq!(enumerate_osp(&comp(&[2]), 1).len(), 0);
    for alpha in compositions_up_to(5) {
        for k in 1..=alpha.size() {
            let all = enumerate_osp(&alpha, k);
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.iter().all(|p| p.content() == alpha && p.block_count() == k));
        }
    }
}

#[test]
fn worked_statistics() {
    assert_eq!(pi("15|23|4").inv(), 2);
    let p = pi("13|23|14|234");
    assert_eq!(p.minimaj_word().tau(), &[3, 1, 2, 3, 4, 1, 2, 3, 4]);
    assert_eq!(p.minimaj(), 6);
}

#[test]
fn gamma_worked_example() {
    let p = pi("13|23|14|234");
    let image = gamma(&comp(&[2, 2, 3, 2]), 3, &p).unwrap();
    let labels = [vec![2, 3], vec![4], vec![1], vec![2], vec![3], vec![1, 3], vec![4]];
    let expected = DensePath::new(DyckPath::from_word("NNENNEEE").unwrap(), labels.to_vec()).unwrap();
    assert_eq!(image, expected);
    assert_eq!(image.area(), 6);
    assert_eq!(image.wdinv(), 0);
    assert_eq!(gamma_inverse(&comp(&[2, 2, 3, 2]), 3, &image).unwrap(), p);
}

#[test]
fn gamma_single_block() {
    let image = gamma(&comp(&[1, 1, 1]), 0, &pi("123")).unwrap();
    assert_eq!(image.path().word(), "NE");
    assert_eq!(image.area(), 0);
}

#[test]
fn four_statistics_equidistributed() {
    for alpha in compositions_up_to(7) {
        for k in 1..=alpha.size() {
            let inv = distribution(&alpha, k, Statistic::Inv);
            for stat in [Statistic::Dinv, Statistic::Maj, Statistic::Minimaj] {
                assert_eq!(distribution(&alpha, k, stat), inv, "{stat} on {:?}, {k} blocks", alpha.parts());
            }
        }
    }
}

/// `f(q, 0)` and `f(0, q)`.
fn specializations(f: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let zero = MultiPoly::zero();
    (f.substitute(Var::T, &zero), f.substitute(Var::Q, &zero).substitute(Var::T, &MultiPoly::q()))
}

#[test]
fn path_generating_functions_at_zero() {
    for n in 1..=6 {
        let rise = rise_by_k(n).unwrap();
        let val = val_by_k(n).unwrap();
        for k in 0..n {
            for alpha in Composition::all(n) {
                let (rise_q0, rise_0q) = specializations(&rise[k].coefficient(&alpha));
                let (val_q0, val_0q) = specializations(&val[k].coefficient(&alpha));
                let at = |stat| distribution(&alpha, k + 1, stat);
                let ctx = format!("n={n} k={k} alpha={:?}", alpha.parts());
                assert_eq!(rise_q0, at(Statistic::Dinv), "Rise(q,0) {ctx}");
                assert_eq!(rise_0q, at(Statistic::Maj), "Rise(0,q) {ctx}");
                assert_eq!(val_q0, at(Statistic::Inv), "Val(q,0) {ctx}");
                assert_eq!(val_0q, at(Statistic::Minimaj), "Val(0,q) {ctx}");
            }
        }
    }
}

#[test]
fn gamma_is_a_bijection_onto_wdinv_zero() {
    for alpha in compositions_up_to(6) {
        let n = alpha.size();
        for k in 0..n {
            let target: BTreeSet<String> = DensePath::all(n, k, &LabelSpec::Content(alpha.clone()))
                .into_iter()
                .filter(|p| p.wdinv() == 0)
                .map(|p| p.to_string())
                .collect();
            let mut image = BTreeSet::new();
            for p in enumerate_osp(&alpha, k + 1) {
                let g = gamma(&alpha, k, &p).unwrap_or_else(|e| panic!("{p}: {e}"));
                assert_eq!(g.wdinv(), 0, "{p} -> {g}");
                assert_eq!(g.area(), p.minimaj(), "{p} -> {g}");
                assert_eq!(g.content(), alpha);
                assert_eq!(gamma_inverse(&alpha, k, &g).as_ref(), Ok(&p), "{p} -> {g}");
                assert!(image.insert(g.to_string()), "{p} collides at {g}");
            }
            assert_eq!(image, target, "alpha={:?} k={k}", alpha.parts());
            for p in DensePath::all(n, k, &LabelSpec::Content(alpha.clone())) {
                let back = gamma_inverse(&alpha, k, &p);
                assert_eq!(back.is_ok(), p.wdinv() == 0, "{p}");
            }
        }
    }
}

fn permutations(block: &[usize]) -> Vec<Vec<usize>> {
    if block.len() <= 1 {
        return vec![block.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..block.len() {
        let mut rest = block.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[test]
fn minimaj_is_the_least_rearranged_maj() {
    for alpha in compositions_up_to(5) {
        for k in 1..=alpha.size() {
            for p in enumerate_osp(&alpha, k) {
                let mut words: Vec<Vec<usize>> = vec![Vec::new()];
                for block in p.blocks() {
                    words = words
                        .iter()
                        .flat_map(|w| permutations(block).into_iter().map(move |b| [w.clone(), b].concat()))
                        .collect();
                }
                let least = words.iter().map(|w| major_index(w)).min().unwrap();
                assert!(words.contains(&p.minimaj_word().tau().to_vec()));
                assert_eq!(least, p.minimaj(), "{p}");
            }
        }
    }
}

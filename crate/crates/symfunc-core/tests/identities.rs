use exact_algebra::{rat, Monomial, MultiPoly, RatFunc, Var};
use proptest::prelude::*;
use symfunc_core::{
    expand_vars, expand_vars_in, plethysm_poly, symmetry_violation, Alphabet, Basis, Partition, SymFunc,
};

const BASES: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

#[test]
fn conversions_round_trip_through_every_pair() {
    for n in 1..=7 {
        for lambda in Partition::all(n) {
            for from in BASES {
                let f = SymFunc::basis_element(from, lambda.clone());
                for to in BASES {
                    let back = f.convert(to).unwrap().convert(from).unwrap();
                    assert_eq!(back, f, "{from} -> {to} -> {from} at {lambda}");
                }
            }
        }
    }
}

fn xy_alphabet(nx: usize, ny: usize) -> Alphabet {
    let mut mons = Vec::new();
    for i in 1..=nx {
        for j in 1..=ny {
            mons.push(Monomial::var(Var::X(i)).mul(&Monomial::var(Var::X(nx + j))));
        }
    }
    Alphabet::from_monomials(mons)
}

#[test]
fn cauchy_formula_for_dual_bases() {
    let xs = [1, 2, 3];
    let ys = [4, 5, 6];
    for n in 1..=5 {
        let lhs = plethysm_poly(&SymFunc::e(n), &xy_alphabet(3, 3)).unwrap();
        for (a, b) in [(Basis::M, Basis::H), (Basis::S, Basis::S)] {
            let mut rhs = MultiPoly::zero();
            for lambda in Partition::all(n) {
                let left = SymFunc::basis_element(a, lambda.clone()).omega().unwrap();
                let right = SymFunc::basis_element(b, lambda);
                rhs += &(&expand_vars_in(&left, &xs).unwrap() * &expand_vars_in(&right, &ys).unwrap());
            }
            assert_eq!(lhs, rhs, "n={n} pair ({a},{b})");
        }
    }
}

#[test]
fn plethysm_with_the_variables_is_the_identity() {
    for n in 1..=5 {
        for lambda in Partition::all(n) {
            let f = SymFunc::s(lambda);
            let via_plethysm = plethysm_poly(&f, &Alphabet::x_vars(n)).unwrap();
            assert_eq!(via_plethysm, expand_vars(&f, n).unwrap());
        }
    }
}

#[test]
fn expansions_are_symmetric() {
    for n in 1..=5 {
        for lambda in Partition::all(n) {
            for b in BASES {
                let p = expand_vars(&SymFunc::basis_element(b, lambda.clone()), n).unwrap();
                assert_eq!(symmetry_violation(&p, n), None);
            }
        }
    }
}

fn random_symfunc() -> impl Strategy<Value = SymFunc> {
    (1usize..=6, 0usize..5, prop::collection::vec((0usize..11, -4i64..=4, 0u32..3), 1..5)).prop_map(|(n, b, terms)| {
        let parts = Partition::all(n);
        let basis = BASES[b];
        let mut f = SymFunc::zero(basis, n);
        for (i, c, e) in terms {
            let coeff = MultiPoly::term(Monomial::qt(e, 0), rat(c));
            f.add_term(parts[i % parts.len()].clone(), &RatFunc::from_poly(coeff));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn omega_is_an_isometric_involution(f in random_symfunc(), g in random_symfunc()) {
        let wf = f.omega().unwrap();
        prop_assert_eq!(wf.omega().unwrap(), f.clone());
        let g = if g.degree() == f.degree() { g } else { f.clone() };
        prop_assert_eq!(wf.hall_inner(&g.omega().unwrap()).unwrap(), f.hall_inner(&g).unwrap());
    }
}

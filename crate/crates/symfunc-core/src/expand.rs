//! Passage between symmetric functions and explicit polynomials in x-variables.

use std::collections::BTreeMap;

use exact_algebra::{Monomial, MultiPoly, RatFunc, Var, MAX_X_VARS};

use crate::partition::{Composition, Partition};
use crate::symfunc::{Basis, SymFunc};
use crate::SymError;

/// Distinct rearrangements of `exps` (with zeros), each visited once.
fn distinct_permutations(exps: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    exps.sort_unstable();
    loop {
        visit(exps);
        // Next lexicographic permutation.
        let Some(i) = (1..exps.len()).rev().find(|&i| exps[i - 1] < exps[i]) else {
            return;
        };
        let j = (i..exps.len()).rev().find(|&j| exps[j] > exps[i - 1]).expect("pivot");
        exps.swap(i - 1, j);
        exps[i..].reverse();
    }
}

fn x_monomial(exps: &[usize], vars: &[usize]) -> Monomial {
    let pairs: Vec<(Var, u32)> =
        vars.iter().zip(exps).filter(|(_, &e)| e > 0).map(|(&v, &e)| (Var::X(v), e as u32)).collect();
    Monomial::from_pairs(&pairs)
}

/// `f(x_1, ..., x_n)`; coefficients must be polynomials.
pub fn expand_vars(f: &SymFunc, n: usize) -> Result<MultiPoly, SymError> {
    let vars: Vec<usize> = (1..=n).collect();
    expand_vars_in(f, &vars)
}

/// `f` evaluated on the x-variables with the given indices.
pub fn expand_vars_in(f: &SymFunc, vars: &[usize]) -> Result<MultiPoly, SymError> {
    if vars.iter().any(|&v| v == 0 || v > MAX_X_VARS) {
        return Err(SymError::TooManyVariables(vars.len()));
    }
    let m = f.convert(Basis::M)?;
    let mut out = MultiPoly::zero();
    for (lambda, c) in m.terms() {
        if lambda.len() > vars.len() {
            continue;
        }
        let c = c.as_poly().ok_or(SymError::NonPolynomialCoefficient)?;
        let mut exps = lambda.parts().to_vec();
        exps.resize(vars.len(), 0);
        distinct_permutations(&mut exps, &mut |e| {
            out += &c.mul_monomial(&x_monomial(e, vars));
        });
    }
    Ok(out)
}

/// Coefficient of `x_1^{α_1} ... x_ℓ^{α_ℓ}`, i.e. of the monomial quasisymmetric `M_α`.
pub fn qsym_coeff(p: &MultiPoly, alpha: &Composition) -> MultiPoly {
    let vars: Vec<usize> = (1..=alpha.len()).collect();
    p.x_coefficient(&x_monomial(alpha.parts(), &vars))
}

/// First adjacent transposition `(i, i+1)` that changes `p`, if any.
pub fn symmetry_violation(p: &MultiPoly, n_vars: usize) -> Option<(usize, usize)> {
    // Fast path: every term agrees with its sorted representative.
    let grouped = p.split_by_x();
    let symmetric = grouped.iter().all(|(xm, c)| {
        let mut e = xm.x_exponents(n_vars);
        e.sort_unstable_by(|a, b| b.cmp(a));
        let e: Vec<usize> = e.into_iter().map(|v| v as usize).collect();
        let vars: Vec<usize> = (1..=n_vars).collect();
        grouped.get(&x_monomial(&e, &vars)) == Some(c)
    });
    if symmetric {
        return None;
    }
    (1..n_vars).find(|&i| p.swap_x(i, i + 1) != *p).map(|i| (i, i + 1))
}

/// Reads a symmetric polynomial in `x_1..x_{n_vars}` of degree `deg` back into the
/// monomial basis. Fails with the first violated swap if `p` is not symmetric.
pub fn from_x_poly(p: &MultiPoly, deg: usize, n_vars: usize) -> Result<SymFunc, SymError> {
    if let Some((i, j)) = symmetry_violation(p, n_vars) {
        return Err(SymError::NotSymmetric { i, j });
    }
    let grouped = p.split_by_x();
    let vars: Vec<usize> = (1..=n_vars).collect();
    let mut out = SymFunc::zero(Basis::M, deg);
    for lambda in Partition::all(deg) {
        if lambda.len() > n_vars {
            continue;
        }
        if let Some(c) = grouped.get(&x_monomial(lambda.parts(), &vars)) {
            out.add_term(lambda, &RatFunc::from_poly(c.clone()));
        }
    }
    Ok(out)
}

/// Schur coefficients and whether all of them are polynomials with nonnegative coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    pub coeffs: BTreeMap<Partition, RatFunc>,
    pub positive: bool,
}

/// Schur expansion of a symmetric function.
pub fn schur_expand(f: &SymFunc) -> Result<SchurExpansion, SymError> {
    let s = f.convert(Basis::S)?;
    let coeffs: BTreeMap<Partition, RatFunc> = s.terms().map(|(p, c)| (p.clone(), c.clone())).collect();
    let positive = coeffs.values().all(|c| c.as_poly().is_some_and(|p| p.has_nonnegative_integer_coefficients()));
    Ok(SchurExpansion { coeffs, positive })
}

/// Schur expansion of an explicit polynomial, after checking symmetry.
pub fn schur_expand_poly(p: &MultiPoly, deg: usize, n_vars: usize) -> Result<SchurExpansion, SymError> {
    schur_expand(&from_x_poly(p, deg, n_vars)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_algebra::rat;

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(Var::X(i))
    }

    #[test]
    fn small_expansions() {
        assert_eq!(expand_vars(&SymFunc::e(2), 2).unwrap(), &x(1) * &x(2));
        let h2 = &(&x(1) * &x(1)) + &(&(&x(1) * &x(2)) + &(&x(2) * &x(2)));
        assert_eq!(expand_vars(&SymFunc::h(2), 2).unwrap(), h2);
        let s21 = expand_vars(&SymFunc::s(Partition::new(vec![2, 1]).unwrap()), 3).unwrap();
        let x123 = Monomial::from_pairs(&[(Var::X(1), 1), (Var::X(2), 1), (Var::X(3), 1)]);
        let x112 = Monomial::from_pairs(&[(Var::X(1), 2), (Var::X(2), 1)]);
        assert_eq!(s21.coefficient(&x123), rat(2));
        assert_eq!(s21.coefficient(&x112), rat(1));
    }

    #[test]
    fn qsym_coefficients() {
        let en = expand_vars(&SymFunc::e(4), 4).unwrap();
        assert_eq!(qsym_coeff(&en, &"(1,1,1,1)".parse().unwrap()), MultiPoly::one());
        let h2 = expand_vars(&SymFunc::h(2), 2).unwrap();
        assert_eq!(qsym_coeff(&h2, &"(2)".parse().unwrap()), MultiPoly::one());
    }

    #[test]
    fn asymmetric_input_names_the_swap() {
        let p = &(&x(1) * &x(1)) + &x(2);
        let err = schur_expand_poly(&p, 2, 3).unwrap_err();
        assert!(matches!(err, SymError::NotSymmetric { i: 1, j: 2 }));
        let e2 = expand_vars(&SymFunc::e(2), 3).unwrap();
        let exp = schur_expand_poly(&e2, 2, 3).unwrap();
        assert!(exp.positive);
        assert_eq!(exp.coeffs.len(), 1);
    }
}

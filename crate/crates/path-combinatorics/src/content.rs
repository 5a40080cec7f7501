//! Generating functions indexed by label content.

use std::collections::BTreeMap;
use std::fmt;

use exact_algebra::{Monomial, MultiPoly, RatFunc, Var, MAX_X_VARS};
use symfunc_core::{Basis, Composition, Partition, SymError, SymFunc};

use crate::PathError;

/// A quasisymmetric generating function of degree `n`, stored as the coefficient
/// of `x_1^{α_1} ... x_ℓ^{α_ℓ}` for each strong composition `α ⊨ n`.
///
/// The coefficient of `x^β` for a weak composition `β` is the coefficient of the
/// composition obtained by deleting the zeros of `β`, so this is the full
/// polynomial in any number of variables.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ContentGf {
    n: usize,
    coeffs: BTreeMap<Composition, MultiPoly>,
}

impl ContentGf {
    pub fn zero(n: usize) -> ContentGf {
        ContentGf { n, coeffs: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&mut self, alpha: &Composition, p: &MultiPoly) {
        debug_assert_eq!(alpha.size(), self.n);
        let slot = self.coeffs.entry(alpha.clone()).or_insert_with(MultiPoly::zero);
        *slot += p;
        if slot.is_zero() {
            self.coeffs.remove(alpha);
        }
    }

    pub fn merge(&mut self, other: &ContentGf) {
        for (alpha, p) in &other.coeffs {
            self.add(alpha, p);
        }
    }

    /// Coefficient of `x^α`.
    pub fn coefficient(&self, alpha: &Composition) -> MultiPoly {
        self.coeffs.get(alpha).cloned().unwrap_or_else(MultiPoly::zero)
    }

    /// Nonzero coefficients in lexicographic order of compositions.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &MultiPoly)> {
        self.coeffs.iter()
    }

    pub fn map_coeffs<F: Fn(&MultiPoly) -> MultiPoly>(&self, f: F) -> ContentGf {
        let mut out = ContentGf::zero(self.n);
        for (alpha, p) in &self.coeffs {
            out.add(alpha, &f(p));
        }
        out
    }

    /// Reads every `x^α` coefficient of a symmetric function with polynomial
    /// coefficients: it is the coefficient of `m_λ` for `λ` the sorted `α`.
    pub fn from_symfunc(f: &SymFunc) -> Result<ContentGf, PathError> {
        let m = f.convert(Basis::M)?;
        let mut out = ContentGf::zero(m.degree());
        let mut by_shape: BTreeMap<Partition, MultiPoly> = BTreeMap::new();
        for (lambda, c) in m.terms() {
            let p = c.as_poly().ok_or(SymError::NonPolynomialCoefficient)?;
            by_shape.insert(lambda.clone(), p);
        }
        for alpha in Composition::all(m.degree()) {
            if let Some(p) = by_shape.get(&alpha.sorted()) {
                out.add(&alpha, p);
            }
        }
        Ok(out)
    }

    /// An adjacent transposition `(i, i+1)` of x-variables that changes the
    /// polynomial, witnessed by a composition, or `None` if it is symmetric.
    pub fn symmetry_violation(&self) -> Option<(Composition, usize)> {
        for alpha in Composition::all(self.n) {
            let parts = alpha.parts();
            for i in 0..parts.len().saturating_sub(1) {
                let mut swapped = parts.to_vec();
                swapped.swap(i, i + 1);
                let swapped = Composition::new(swapped).expect("positive parts");
                if self.coefficient(&alpha) != self.coefficient(&swapped) {
                    return Some((alpha, i + 1));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    /// The symmetric function in the monomial basis with these coefficients.
    pub fn to_symfunc(&self) -> Result<SymFunc, PathError> {
        if let Some((_, i)) = self.symmetry_violation() {
            return Err(SymError::NotSymmetric { i, j: i + 1 }.into());
        }
        let mut out = SymFunc::zero(Basis::M, self.n);
        for lambda in Partition::all(self.n) {
            let alpha = Composition::new(lambda.parts().to_vec()).expect("positive parts");
            if let Some(p) = self.coeffs.get(&alpha) {
                out.add_term(lambda, &RatFunc::from_poly(p.clone()));
            }
        }
        Ok(out)
    }

    /// The polynomial in `x_1, ..., x_{n_vars}`.
    pub fn to_x_poly(&self, n_vars: usize) -> Result<MultiPoly, PathError> {
        if n_vars > MAX_X_VARS {
            return Err(PathError::Variables(n_vars));
        }
        let mut out = MultiPoly::zero();
        let mut beta = vec![0; n_vars];
        weak_compositions(self.n, 0, &mut beta, &mut |b| {
            let strong: Vec<usize> = b.iter().copied().filter(|&v| v > 0).collect();
            let Some(c) = self.coeffs.get(&Composition::new(strong).expect("positive parts")) else {
                return;
            };
            let pairs: Vec<(Var, u32)> =
                b.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (Var::X(i + 1), e as u32)).collect();
            out += &c.mul_monomial(&Monomial::from_pairs(&pairs));
        });
        Ok(out)
    }

    /// The first composition where `self` and `other` differ, with both coefficients.
    pub fn first_difference(&self, other: &ContentGf) -> Option<(Composition, MultiPoly, MultiPoly)> {
        let keys: std::collections::BTreeSet<&Composition> = self.coeffs.keys().chain(other.coeffs.keys()).collect();
        keys.into_iter().find_map(|alpha| {
            let (a, b) = (self.coefficient(alpha), other.coefficient(alpha));
            (a != b).then(|| (alpha.clone(), a, b))
        })
    }
}

fn weak_compositions(rest: usize, i: usize, beta: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    if i + 1 >= beta.len() {
        if let Some(last) = beta.last_mut() {
            *last = rest;
            visit(beta);
        } else if rest == 0 {
            visit(beta);
        }
        return;
    }
    for v in 0..=rest {
        beta[i] = v;
        weak_compositions(rest - v, i + 1, beta, visit);
    }
    beta[i] = 0;
}

impl fmt::Debug for ContentGf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ContentGf(n={}) {{", self.n)?;
        for (alpha, p) in &self.coeffs {
            write!(f, " {alpha}: {p};")?;
        }
        f.write_str(" }")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use symfunc_core::expand_vars;

    #[test]
    fn round_trip_through_symmetric_functions() {
        let f = SymFunc::s("(2,1)".parse().unwrap());
        let g = ContentGf::from_symfunc(&f).unwrap();
        assert!(g.is_symmetric());
        assert_eq!(g.to_x_poly(3).unwrap(), expand_vars(&f, 3).unwrap());
        assert_eq!(g.to_symfunc().unwrap().convert(Basis::S).unwrap(), f);
    }

    #[test]
    fn asymmetry_is_located() {
        let mut g = ContentGf::zero(3);
        g.add(&"(1,2)".parse().unwrap(), &MultiPoly::one());
        assert_eq!(g.symmetry_violation(), Some(("(1,2)".parse().unwrap(), 1)));
        assert!(g.to_symfunc().is_err());
    }
}

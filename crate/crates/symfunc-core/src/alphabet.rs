//! Alphabets of signed monomials and plethystic substitution.

use exact_algebra::{rat, Monomial, MultiPoly, RatFunc, Var};
use num_traits::ToPrimitive;

use crate::symfunc::{Basis, SymFunc};
use crate::SymError;

/// A formal sum of monomials with signs ±1.
///
/// A negative entry follows `p_k[-a] = -p_k[a]`. Equal monomials with opposite
/// signs cancel when the alphabet is built, so `B_μ - 1` is the alphabet `B_μ`
/// with one copy of the monomial 1 removed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Alphabet {
    entries: Vec<(Monomial, bool)>,
}

impl Alphabet {
    pub fn new() -> Alphabet {
        Alphabet::default()
    }

    /// `x_1 + ... + x_n`.
    pub fn x_vars(n: usize) -> Alphabet {
        Alphabet::from_monomials((1..=n).map(|i| Monomial::var(Var::X(i))))
    }

    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(it: I) -> Alphabet {
        let mut a = Alphabet::new();
        for m in it {
            a.push(m, true);
        }
        a
    }

    /// Reads a polynomial with integer coefficients as a multiset of signed monomials.
    pub fn from_poly(p: &MultiPoly) -> Result<Alphabet, SymError> {
        let mut a = Alphabet::new();
        for (m, c) in p.terms() {
            if !c.is_integer() {
                return Err(SymError::NonIntegerAlphabet(p.to_string()));
            }
            let k = c.to_integer();
            let count = k.magnitude().to_usize().ok_or(SymError::NonIntegerAlphabet(p.to_string()))?;
            let positive = k > 0.into();
            for _ in 0..count {
                a.entries.push((*m, positive));
            }
        }
        Ok(a)
    }

    /// Adds one entry, cancelling against an opposite-signed copy if present.
    pub fn push(&mut self, m: Monomial, positive: bool) {
        if let Some(i) = self.entries.iter().position(|&(e, s)| e == m && s != positive) {
            self.entries.swap_remove(i);
        } else {
            self.entries.push((m, positive));
        }
    }

    /// `self - m`.
    pub fn minus(mut self, m: Monomial) -> Alphabet {
        self.push(m, false);
        self
    }

    /// Entries as `(monomial, sign)` pairs.
    pub fn entries(&self) -> &[(Monomial, bool)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The sum of the entries as a polynomial.
    pub fn as_poly(&self) -> MultiPoly {
        MultiPoly::from_terms(self.entries.iter().map(|&(m, s)| (m, rat(if s { 1 } else { -1 }))))
    }

    /// `p_k[A] = Σ ± a^k`.
    pub fn power_sum(&self, k: usize) -> MultiPoly {
        MultiPoly::from_terms(self.entries.iter().map(|&(m, s)| (m.pow(k as u32), rat(if s { 1 } else { -1 }))))
    }

    /// Product of power sums `p_λ[A]`, with the single power sums memoized.
    fn power_products(&self, f: &SymFunc) -> impl Fn(&[usize]) -> MultiPoly {
        let top = f.degree();
        let sums: Vec<MultiPoly> = (0..=top).map(|k| self.power_sum(k)).collect();
        move |parts: &[usize]| parts.iter().fold(MultiPoly::one(), |acc, &k| &acc * &sums[k])
    }
}

/// `f[A]`: expand `f` in power sums and replace `p_k` by `p_k[A]`.
pub fn plethysm(f: &SymFunc, alphabet: &Alphabet) -> Result<RatFunc, SymError> {
    let p = f.convert(Basis::P)?;
    let product = alphabet.power_products(&p);
    let mut total = RatFunc::zero();
    for (lambda, c) in p.terms() {
        total += &c.mul_poly(&product(lambda.parts()));
    }
    Ok(total)
}

/// `f[A]` as a polynomial, for `f` with polynomial coefficients.
pub fn plethysm_poly(f: &SymFunc, alphabet: &Alphabet) -> Result<MultiPoly, SymError> {
    plethysm(f, alphabet)?.as_poly().ok_or(SymError::NonPolynomialCoefficient)
}

/// `f[X·A]` for a scalar alphabet `A`, as a symmetric function in the p basis.
///
/// Uses `p_k[XA] = p_k[X] p_k[A]`.
pub fn plethysm_x_times(f: &SymFunc, alphabet: &Alphabet) -> Result<SymFunc, SymError> {
    if alphabet.entries.iter().any(|(m, _)| m.has_x()) {
        return Err(SymError::NotScalarAlphabet);
    }
    let p = f.convert(Basis::P)?;
    let product = alphabet.power_products(&p);
    let mut out = SymFunc::zero(Basis::P, p.degree());
    for (lambda, c) in p.terms() {
        out.add_term(lambda.clone(), &c.mul_poly(&product(lambda.parts())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    #[test]
    fn e1_returns_the_alphabet() {
        let a = Alphabet::from_poly(&(MultiPoly::q() + MultiPoly::t().scale(&rat(2)))).unwrap();
        assert_eq!(plethysm(&SymFunc::e(1), &a).unwrap().as_poly().unwrap(), a.as_poly());
    }

    #[test]
    fn e2_of_one_plus_q() {
        let a = Alphabet::from_poly(&(MultiPoly::one() + MultiPoly::q())).unwrap();
        assert_eq!(plethysm_poly(&SymFunc::e(2), &a).unwrap(), MultiPoly::q());
    }

    #[test]
    fn two_row_schur_at_one_plus_u() {
        let a = Alphabet::from_poly(&(MultiPoly::one() + MultiPoly::var(Var::U))).unwrap();
        for n in 1..=6 {
            for m in 0..=n / 2 {
                let lambda = Partition::from_unsorted(vec![n - m, m]);
                let got = plethysm_poly(&SymFunc::s(lambda), &a).unwrap();
                let expected =
                    MultiPoly::from_terms((m..=n - m).map(|p| (Monomial::var(Var::U).pow(p as u32), rat(1))));
                assert_eq!(got, expected, "n={n} m={m}");
            }
        }
    }

    #[test]
    fn negative_entry_cancels_one() {
        let a = Alphabet::from_poly(&(MultiPoly::one() + MultiPoly::q())).unwrap().minus(Monomial::ONE);
        assert_eq!(a.as_poly(), MultiPoly::q());
        assert_eq!(a.len(), 1);
    }
}

//! Greatest common divisors in ℚ[q, t].
//!
//! A polynomial is viewed as a polynomial in t whose coefficients lie in ℚ[q].
//! The gcd is the product of the gcd of the contents (a univariate Euclid in q)
//! and the primitive part of a primitive pseudo-remainder sequence in t.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::monomial::{Monomial, Var};
use crate::poly::MultiPoly;

/// Dense univariate polynomial in q, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct QPoly(pub(crate) Vec<BigRational>);

impl QPoly {
    fn trimmed(mut v: Vec<BigRational>) -> QPoly {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        QPoly(v)
    }

    fn one() -> QPoly {
        QPoly(vec![BigRational::one()])
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::default();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::trimmed(out)
    }

    fn sub(&self, other: &QPoly) -> QPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            out[i] += a;
        }
        for (i, b) in other.0.iter().enumerate() {
            out[i] -= b;
        }
        QPoly::trimmed(out)
    }

    fn monic(&self) -> QPoly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().clone();
        QPoly(self.0.iter().map(|c| c / &l).collect())
    }

    /// Quotient and remainder of Euclidean division.
    pub(crate) fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return (QPoly::default(), self.clone());
        }
        let dl = d.lead().clone();
        let dd = d.degree();
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (QPoly::trimmed(quot), QPoly::trimmed(rem))
    }

    pub(crate) fn gcd(&self, other: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    fn div_exact(&self, d: &QPoly) -> QPoly {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact division in ℚ[q]");
        q
    }

    pub(crate) fn from_poly(p: &MultiPoly) -> QPoly {
        let mut v = vec![BigRational::zero(); p.degree_in(Var::Q) as usize + 1];
        for (m, c) in p.terms() {
            v[m.exp(Var::Q) as usize] = c.clone();
        }
        QPoly::trimmed(v)
    }

    pub(crate) fn to_poly(&self) -> MultiPoly {
        MultiPoly::from_terms(self.0.iter().enumerate().map(|(i, c)| (Monomial::qt(i as u32, 0), c.clone())))
    }
}

/// Dense polynomial in t over ℚ[q], lowest t-degree first.
#[derive(Clone, Debug)]
struct TPoly(Vec<QPoly>);

impl TPoly {
    fn from_poly(p: &MultiPoly) -> TPoly {
        let dq = p.degree_in(Var::Q) as usize + 1;
        let dt = p.degree_in(Var::T) as usize + 1;
        let mut v = vec![vec![BigRational::zero(); dq]; dt];
        for (m, c) in p.terms() {
            v[m.exp(Var::T) as usize][m.exp(Var::Q) as usize] = c.clone();
        }
        TPoly::trimmed(v.into_iter().map(QPoly::trimmed).collect())
    }

    fn to_poly(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (j, c) in self.0.iter().enumerate() {
            for (i, v) in c.0.iter().enumerate() {
                out.add_term(Monomial::qt(i as u32, j as u32), v.clone());
            }
        }
        out
    }

    fn trimmed(mut v: Vec<QPoly>) -> TPoly {
        while v.last().is_some_and(QPoly::is_zero) {
            v.pop();
        }
        TPoly(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &QPoly {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn content(&self) -> QPoly {
        let mut g = QPoly::default();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_constant() && !g.is_zero() {
                return QPoly::one();
            }
        }
        g
    }

    fn div_content(&self, c: &QPoly) -> TPoly {
        TPoly(self.0.iter().map(|x| x.div_exact(c)).collect())
    }

    fn scale(&self, c: &QPoly) -> TPoly {
        TPoly::trimmed(self.0.iter().map(|x| x.mul(c)).collect())
    }

    /// lead(b)^(deg a − deg b + 1) · a mod b, computed step by step.
    fn pseudo_rem(&self, b: &TPoly) -> TPoly {
        let mut r = self.clone();
        let db = b.degree();
        let lb = b.lead().clone();
        while !r.is_zero() && r.degree() >= db {
            let shift = r.degree() - db;
            let lr = r.lead().clone();
            let mut next = r.scale(&lb).0;
            for (j, bc) in b.0.iter().enumerate() {
                let sub = bc.mul(&lr);
                next[j + shift] = next[j + shift].sub(&sub);
            }
            r = TPoly::trimmed(next);
        }
        r
    }

    fn primitive(&self) -> TPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.div_content(&c)
    }
}

/// Greatest common divisor of two polynomials in q and t.
///
/// Returns `None` when either argument involves a variable other than q and t.
/// The result is normalized to leading coefficient +1 in the lex order q > t.
pub fn gcd_qt(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    if !a.is_qt_only() || !b.is_qt_only() {
        return None;
    }
    if a.is_zero() {
        return Some(normalize(b));
    }
    if b.is_zero() {
        return Some(normalize(a));
    }
    // Monomial content first: it is cheap and usually the only common factor.
    let mono = a.monomial_content().gcd(&b.monomial_content());
    let a = a.div_monomial(&a.monomial_content()).expect("content divides");
    let b = b.div_monomial(&b.monomial_content()).expect("content divides");
    if a.is_constant() || b.is_constant() {
        return Some(MultiPoly::monomial(mono));
    }
    let ta = TPoly::from_poly(&a);
    let tb = TPoly::from_poly(&b);
    let content = ta.content().gcd(&tb.content());
    let (mut x, mut y) = (ta.primitive(), tb.primitive());
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = x.pseudo_rem(&y).primitive();
        x = y;
        y = r;
    }
    let g = if x.degree() == 0 { content.to_poly() } else { &x.primitive().to_poly() * &content.to_poly() };
    Some(normalize(&g.mul_monomial(&mono)))
}

/// Scales a polynomial so its leading coefficient is +1.
pub fn normalize(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    let lc = p.leading_coefficient();
    p.scale(&lc.recip())
}

/// Remainder of univariate division in ℚ[q].
pub fn rem_q(a: &MultiPoly, m: &MultiPoly) -> MultiPoly {
    QPoly::from_poly(a).div_rem(&QPoly::from_poly(m)).1.to_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn q() -> MultiPoly {
        MultiPoly::q()
    }
    fn t() -> MultiPoly {
        MultiPoly::t()
    }

    #[test]
    fn gcd_recovers_planted_factor() {
        let f = &t() - &q();
        let g1 = &(&t() * &t()) - &q();
        let g2 = &(&q() * &q()) + &(&t() + &MultiPoly::int(3));
        let a = &(&f * &g1) * &q();
        let b = &(&f * &g2) * &(&q() * &t());
        let g = gcd_qt(&a, &b).unwrap();
        assert_eq!(g, normalize(&(&f * &q())));
    }

    #[test]
    fn coprime_inputs_have_unit_gcd() {
        let a = &t() - &q();
        let b = &t() - &(&q() * &q());
        assert_eq!(gcd_qt(&a, &b).unwrap(), MultiPoly::one());
    }

    #[test]
    fn content_in_q_is_found() {
        let c = &q() + &MultiPoly::one();
        let a = &c * &(&t() + &MultiPoly::int(2));
        let b = &c * &(&(&t() * &t()) + &MultiPoly::one());
        assert_eq!(gcd_qt(&a, &b).unwrap(), c);
        assert_eq!(gcd_qt(&a.scale(&rat(5)), &a).unwrap(), normalize(&a));
    }
}

//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::monomial::{Monomial, Var};
use crate::AlgebraError;

/// A polynomial in q, t, z, w, u and the x-variables over the rationals.
///
/// No stored coefficient is zero, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> MultiPoly {
        MultiPoly::term(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> MultiPoly {
        MultiPoly::constant(rat(n))
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::term(Monomial::var(v), BigRational::one())
    }

    pub fn q() -> MultiPoly {
        MultiPoly::var(Var::Q)
    }

    pub fn t() -> MultiPoly {
        MultiPoly::var(Var::T)
    }

    pub fn monomial(m: Monomial) -> MultiPoly {
        MultiPoly::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> MultiPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, merging repeats.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> MultiPoly {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, leading term first.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// True if the polynomial is a single term.
    pub fn as_single_term(&self) -> Option<(Monomial, BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c.clone()))
        } else {
            None
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> BigRational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn is_qt_only(&self) -> bool {
        self.terms.keys().all(Monomial::is_qt_only)
    }

    pub fn has_x(&self) -> bool {
        self.terms.keys().any(Monomial::has_x)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |g, m| g.gcd(m)),
        }
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect() }
    }

    /// Divides every term by `m`; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            terms.insert(m.div(k)?, v.clone());
        }
        Some(MultiPoly { terms })
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// The polynomial multiplying `var^k`, with `var` removed.
    pub fn coeff_extract(&self, var: Var, k: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(var) == k)
                .map(|(m, c)| (m.without(var), c.clone()))
                .collect(),
        }
    }

    /// Keeps the terms whose x-part equals `xm`, returning their scalar parts.
    pub fn x_coefficient(&self, xm: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.x_part() == *xm)
                .map(|(m, c)| (m.scalar_part(), c.clone()))
                .collect(),
        }
    }

    /// Groups terms by their x-part.
    pub fn split_by_x(&self) -> BTreeMap<Monomial, MultiPoly> {
        let mut out: BTreeMap<Monomial, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.x_part()).or_default().add_term(m.scalar_part(), c.clone());
        }
        out
    }

    pub fn map_monomials<F: Fn(&Monomial) -> Monomial>(&self, f: F) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    pub fn swap_x(&self, i: usize, j: usize) -> MultiPoly {
        self.map_monomials(|m| m.swap_x(i, j))
    }

    /// Polynomial substitution of `var` by `value`.
    pub fn substitute(&self, var: Var, value: &MultiPoly) -> MultiPoly {
        let maxdeg = self.degree_in(var) as usize;
        if maxdeg == 0 {
            return self.clone();
        }
        let mut powers = vec![MultiPoly::one()];
        for i in 1..=maxdeg {
            let next = &powers[i - 1] * value;
            powers.push(next);
        }
        let mut out = MultiPoly::zero();
        let mut grouped: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            grouped.entry(m.exp(var)).or_default().add_term(m.without(var), c.clone());
        }
        for (e, rest) in grouped {
            out += &(&rest * &powers[e as usize]);
        }
        out
    }

    /// Evaluates at rational values for every variable that occurs.
    pub fn evaluate(&self, value: &dyn Fn(Var) -> BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.factors() {
                term *= num_traits::pow(value(v), e as usize);
            }
            total += term;
        }
        total
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (dm, dc) = divisor.leading_term()?;
        let (dm, dc) = (*dm, dc.clone());
        if let Some((m, c)) = divisor.as_single_term() {
            return self.div_monomial(&m).map(|p| p.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((lm, lc)) = rem.leading_term() {
            let qm = dm.div(lm)?;
            let qc = lc / &dc;
            let step = MultiPoly::term(qm, qc);
            rem -= &(&step * divisor);
            quot += &step;
        }
        Some(quot)
    }

    /// True if every coefficient is a nonnegative integer.
    pub fn has_nonnegative_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |a, c| a + c)
    }

    pub fn to_i64_coefficients(&self) -> Option<Vec<(Monomial, i64)>> {
        self.terms
            .iter()
            .map(|(m, c)| if c.is_integer() { c.to_integer().to_i64().map(|v| (*m, v)) } else { None })
            .collect()
    }

    /// Canonical text form, leading term first.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<MultiPoly, AlgebraError> {
        s.parse()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, e) in m.factors() {
                write!(f, "*{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for MultiPoly {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || AlgebraError::Parse(s.to_string());
        if s == "0" {
            return Ok(MultiPoly::zero());
        }
        let mut p = MultiPoly::zero();
        for term in s.split(" + ") {
            let mut parts = term.trim().split('*');
            let coeff: BigRational = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let mut m = Monomial::ONE;
            for factor in parts {
                let (name, exp) = factor.split_once('^').ok_or_else(bad)?;
                let v = Var::parse(name).ok_or_else(bad)?;
                let e: u32 = exp.parse().map_err(|_| bad())?;
                if e == 0 || m.exp(v) != 0 {
                    return Err(bad());
                }
                m = m.with(v, e);
            }
            if p.terms.contains_key(&m) || coeff.is_zero() {
                return Err(bad());
            }
            p.terms.insert(m, coeff);
        }
        Ok(p)
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero();
        }
        let (small, large) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut acc: std::collections::HashMap<Monomial, BigRational> =
            std::collections::HashMap::with_capacity(large.len() * 2);
        for (m1, c1) in &small.terms {
            for (m2, c2) in &large.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += c;
                    }
                }
            }
        }
        MultiPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> MultiPoly {
        MultiPoly::int(n)
    }
}

impl From<BigRational> for MultiPoly {
    fn from(c: BigRational) -> MultiPoly {
        MultiPoly::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MultiPoly {
        MultiPoly::q()
    }
    fn t() -> MultiPoly {
        MultiPoly::t()
    }
    fn z() -> MultiPoly {
        MultiPoly::var(Var::Z)
    }

    #[test]
    fn sum_of_q_plus_t_and_q_minus_t() {
        assert_eq!(&(&q() + &t()) + &(&q() - &t()), q().scale(&rat(2)));
    }

    #[test]
    fn exact_division_difference_of_squares() {
        let num = &t().pow(2) - &q().pow(2);
        let den = &t() - &q();
        assert_eq!(num.div_exact(&den), Some(&t() + &q()));
        assert_eq!((&t() + &MultiPoly::one()).div_exact(&den), None);
    }

    #[test]
    fn coefficient_extraction() {
        let p = &(&q() + &(&t() * &z())) + &z().pow(2);
        assert_eq!(p.coeff_extract(Var::Z, 1), t());
        let w = MultiPoly::var(Var::W);
        let p2 = &(&(&q() + &t()) + &z()) + &w;
        assert_eq!(p2.coeff_extract(Var::Z, 0), &(&q() + &t()) + &w);
        // (1+z)(1+z/t)*t = t + z + t z + z^2
        let p3 = &(&(&t() + &z()) + &(&t() * &z())) + &z().pow(2);
        assert_eq!(p3.coeff_extract(Var::Z, 1), &t() + &MultiPoly::one());
    }

    #[test]
    fn text_round_trip() {
        let p = &(&q().pow(3).scale(&ratio(-3, 2)) + &(&t() * &MultiPoly::var(Var::X(3)))) + &MultiPoly::int(7);
        let s = p.serialize();
        assert_eq!(s, "-3/2*q^3 + 1*t^1*x3^1 + 7");
        assert_eq!(MultiPoly::parse(&s).unwrap(), p);
        assert_eq!(MultiPoly::parse("0").unwrap(), MultiPoly::zero());
        assert!(MultiPoly::parse("1*q^0").is_err());
    }

    #[test]
    fn substitution_composes() {
        let p = &(&q() * &t()) - &MultiPoly::one();
        let at_one = p.substitute(Var::Q, &MultiPoly::one()).substitute(Var::T, &MultiPoly::one());
        assert!(at_one.is_zero());
    }
}

//! Simultaneous substitution of rational functions for scalar variables.

use std::collections::BTreeMap;

use crate::monomial::{Monomial, Var};
use crate::poly::MultiPoly;
use crate::ratfunc::RatFunc;
use crate::AlgebraError;

/// A partial assignment of values to the scalar variables q, t, z, w, u.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    values: BTreeMap<Var, RatFunc>,
}

impl Bindings {
    pub fn new() -> Bindings {
        Bindings::default()
    }

    /// Binds `var` to `value`. Only q, t, z, w, u may be bound.
    pub fn set(mut self, var: Var, value: impl Into<RatFunc>) -> Result<Bindings, AlgebraError> {
        if matches!(var, Var::X(_)) {
            return Err(AlgebraError::InvalidBinding(var.name()));
        }
        self.values.insert(var, value.into());
        Ok(self)
    }

    /// Binds `var` to 1/q.
    pub fn reciprocal_q(self, var: Var) -> Result<Bindings, AlgebraError> {
        let value = RatFunc::new(MultiPoly::one(), MultiPoly::q())?;
        self.set(var, value)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Powers of a bound value's numerator and denominator, built on demand.
struct PowerTable {
    num: Vec<MultiPoly>,
    den: Vec<MultiPoly>,
    top: u32,
}

impl PowerTable {
    fn new(value: &RatFunc, top: u32) -> PowerTable {
        let mut num = vec![MultiPoly::one()];
        let mut den = vec![MultiPoly::one()];
        for i in 1..=top as usize {
            num.push(&num[i - 1] * value.numerator());
            den.push(&den[i - 1] * value.denominator());
        }
        PowerTable { num, den, top }
    }
}

/// Substitutes into a polynomial, returning numerator and denominator before reduction.
fn substitute_parts(p: &MultiPoly, bindings: &Bindings) -> (MultiPoly, MultiPoly) {
    let tables: Vec<(Var, PowerTable)> =
        bindings.values.iter().map(|(v, r)| (*v, PowerTable::new(r, p.degree_in(*v)))).collect();
    let mut num = MultiPoly::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut term = MultiPoly::one();
        for (v, table) in &tables {
            let e = m.exp(*v) as usize;
            rest = rest.without(*v);
            let top = table.top as usize;
            if table.num[e].is_one() && table.den[top - e].is_one() {
                continue;
            }
            term = &term * &(&table.num[e] * &table.den[top - e]);
        }
        num += &term.mul_monomial(&rest).scale(c);
    }
    let mut den = MultiPoly::one();
    for (_, table) in &tables {
        den = &den * &table.den[table.top as usize];
    }
    (num, den)
}

/// Specializes a polynomial. Bindings are applied simultaneously.
pub fn specialize_poly(p: &MultiPoly, bindings: &Bindings) -> Result<RatFunc, AlgebraError> {
    if bindings.values.values().all(|r| r.denominator().is_one()) {
        let (num, _) = substitute_parts(p, bindings);
        return Ok(RatFunc::from_poly(num));
    }
    let (num, den) = substitute_parts(p, bindings);
    RatFunc::new(num, den)
}

/// Specializes a rational function. Bindings are applied simultaneously.
pub fn specialize(r: &RatFunc, bindings: &Bindings) -> Result<RatFunc, AlgebraError> {
    let num = specialize_poly(r.numerator(), bindings)?;
    let den = specialize_poly(r.denominator(), bindings)?;
    if den.is_zero() {
        return Err(AlgebraError::ZeroDenominator(r.to_string()));
    }
    num.checked_div(&den)
}

/// Sends `t ↦ 1/q` in a polynomial in q and t, returning the Laurent polynomial as
/// `(numerator, shift)` meaning `numerator / q^shift`.
pub fn t_to_reciprocal_q(p: &MultiPoly) -> (MultiPoly, u32) {
    let shift = p.terms().map(|(m, _)| m.exp(Var::T).saturating_sub(m.exp(Var::Q))).max().unwrap_or(0);
    let num = MultiPoly::from_terms(p.terms().map(|(m, c)| {
        let a = m.exp(Var::Q) + shift - m.exp(Var::T);
        (m.without(Var::T).with(Var::Q, a), c.clone())
    }));
    (num, shift)
}

/// Monomial helper used by callers that build `q^a` denominators.
pub fn q_power(a: u32) -> MultiPoly {
    MultiPoly::monomial(Monomial::qt(a, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qnumbers::{qtint, QtZero};

    #[test]
    fn t_to_one_over_q() {
        let b = Bindings::new().reciprocal_q(Var::T).unwrap();
        let r = specialize_poly(&(MultiPoly::q() + MultiPoly::t()), &b).unwrap();
        let expected = RatFunc::new(MultiPoly::q().pow(2) + MultiPoly::one(), MultiPoly::q()).unwrap();
        assert_eq!(r, expected);
        assert_eq!(r.denominator(), &MultiPoly::q());
    }

    #[test]
    fn qtint_at_t_one() {
        let b = Bindings::new().set(Var::T, 1).unwrap();
        let r = specialize_poly(&qtint(3, QtZero::Zero), &b).unwrap();
        let expected = MultiPoly::one() + MultiPoly::q() + MultiPoly::q().pow(2);
        assert_eq!(r.as_poly(), Some(expected));
    }

    #[test]
    fn both_to_one() {
        let b = Bindings::new().set(Var::Q, 1).unwrap().set(Var::T, 1).unwrap();
        let p = MultiPoly::q() * MultiPoly::t() - MultiPoly::one();
        assert!(specialize_poly(&p, &b).unwrap().is_zero());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        let r = RatFunc::new(MultiPoly::one(), MultiPoly::t() - MultiPoly::q()).unwrap();
        let b = Bindings::new().set(Var::T, RatFunc::var(Var::Q)).unwrap();
        assert!(matches!(specialize(&r, &b), Err(AlgebraError::ZeroDenominator(_))));
    }

    #[test]
    fn simultaneous_swap() {
        let b = Bindings::new().set(Var::Q, RatFunc::var(Var::T)).unwrap().set(Var::T, RatFunc::var(Var::Q)).unwrap();
        let p = MultiPoly::q().pow(2) + MultiPoly::t();
        let r = specialize_poly(&p, &b).unwrap();
        assert_eq!(r.as_poly(), Some(MultiPoly::t().pow(2) + MultiPoly::q()));
    }

    #[test]
    fn laurent_shift() {
        let p = MultiPoly::q() + MultiPoly::t();
        let (num, shift) = t_to_reciprocal_q(&p);
        assert_eq!(shift, 1);
        assert_eq!(num, MultiPoly::q().pow(2) + MultiPoly::one());
    }
}

//! Dense integer polynomials in q and t for hot loops.
//!
//! Coefficients are `i128` with checked arithmetic: an overflow panics with an
//! explicit message instead of wrapping. Desk-scale computations stay far below
//! the limit; anything that does not is a bug worth stopping for.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::monomial::{Monomial, Var};
use crate::poly::MultiPoly;

/// Row-major dense array: entry `(a, b)` is the coefficient of `q^a t^b`.
#[derive(Clone, Default)]
pub struct ZPoly {
    qlen: usize,
    tlen: usize,
    c: Vec<i128>,
}

fn overflow() -> ! {
    panic!("coefficient overflow in the dense q,t kernel")
}

fn add_c(a: i128, b: i128) -> i128 {
    a.checked_add(b).unwrap_or_else(|| overflow())
}

fn mul_c(a: i128, b: i128) -> i128 {
    a.checked_mul(b).unwrap_or_else(|| overflow())
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly::default()
    }

    pub fn constant(v: i128) -> ZPoly {
        ZPoly::monomial(0, 0, v)
    }

    pub fn one() -> ZPoly {
        ZPoly::constant(1)
    }

    /// `v · q^a t^b`.
    pub fn monomial(a: usize, b: usize, v: i128) -> ZPoly {
        if v == 0 {
            return ZPoly::zero();
        }
        let mut p = ZPoly::with_shape(a + 1, b + 1);
        p.c[a * (b + 1) + b] = v;
        p
    }

    fn with_shape(qlen: usize, tlen: usize) -> ZPoly {
        ZPoly { qlen, tlen, c: vec![0; qlen * tlen] }
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, usize, i128)>>(it: I) -> ZPoly {
        let terms: Vec<_> = it.into_iter().collect();
        let qlen = terms.iter().map(|t| t.0 + 1).max().unwrap_or(0);
        let tlen = terms.iter().map(|t| t.1 + 1).max().unwrap_or(0);
        let mut p = ZPoly::with_shape(qlen, tlen);
        for (a, b, v) in terms {
            let i = a * tlen + b;
            p.c[i] = add_c(p.c[i], v);
        }
        p.trim()
    }

    /// Converts a polynomial with integer coefficients in q and t only.
    pub fn from_poly(p: &MultiPoly) -> Option<ZPoly> {
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            if !m.is_qt_only() || !c.is_integer() {
                return None;
            }
            let v = c.to_integer().to_i128()?;
            terms.push((m.exp(Var::Q) as usize, m.exp(Var::T) as usize, v));
        }
        Some(ZPoly::from_terms(terms))
    }

    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::from_terms(
            self.terms()
                .map(|(a, b, v)| (Monomial::qt(a as u32, b as u32), BigRational::from_integer(BigInt::from(v)))),
        )
    }

    /// Nonzero terms `(a, b, coefficient)`, q-degree then t-degree ascending.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, i128)> + '_ {
        let tlen = self.tlen;
        self.c.iter().enumerate().filter(|(_, &v)| v != 0).map(move |(i, &v)| (i / tlen, i % tlen, v))
    }

    pub fn coeff(&self, a: usize, b: usize) -> i128 {
        if a < self.qlen && b < self.tlen {
            self.c[a * self.tlen + b]
        } else {
            0
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeff(0, 0) == 1 && self.terms().count() == 1
    }

    /// Largest q-degree and t-degree that occur.
    pub fn degrees(&self) -> (usize, usize) {
        let mut dq = 0;
        let mut dt = 0;
        for (a, b, _) in self.terms() {
            dq = dq.max(a);
            dt = dt.max(b);
        }
        (dq, dt)
    }

    /// Shrinks storage to the bounding box of the support.
    pub fn trim(self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let (dq, dt) = self.degrees();
        if dq + 1 == self.qlen && dt + 1 == self.tlen {
            return self;
        }
        let mut out = ZPoly::with_shape(dq + 1, dt + 1);
        for (a, b, v) in self.terms() {
            out.c[a * (dt + 1) + b] = v;
        }
        out
    }

    fn reshaped(&self, qlen: usize, tlen: usize) -> ZPoly {
        let mut out = ZPoly::with_shape(qlen.max(self.qlen), tlen.max(self.tlen));
        for (a, b, v) in self.terms() {
            out.c[a * out.tlen + b] = v;
        }
        out
    }

    pub fn scale(&self, k: i128) -> ZPoly {
        if k == 0 {
            return ZPoly::zero();
        }
        ZPoly { qlen: self.qlen, tlen: self.tlen, c: self.c.iter().map(|&v| mul_c(v, k)).collect() }
    }

    pub fn mul_monomial(&self, a: usize, b: usize) -> ZPoly {
        let mut out = ZPoly::with_shape(self.qlen + a, self.tlen + b);
        for (x, y, v) in self.terms() {
            out.c[(x + a) * out.tlen + y + b] = v;
        }
        out
    }

    pub fn pow(&self, k: u32) -> ZPoly {
        (0..k).fold(ZPoly::one(), |acc, _| &acc * self)
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> i128 {
        self.c.iter().fold(0i128, |g, &v| g.gcd(&v))
    }

    /// Divides every coefficient by `k`; `None` unless all are divisible.
    pub fn div_scalar(&self, k: i128) -> Option<ZPoly> {
        if k == 0 || self.c.iter().any(|v| v % k != 0) {
            return None;
        }
        Some(ZPoly { qlen: self.qlen, tlen: self.tlen, c: self.c.iter().map(|v| v / k).collect() })
    }

    /// Leading term in the lex order q > t as `(a, b, coefficient)`.
    pub fn leading(&self) -> Option<(usize, usize, i128)> {
        self.terms().last()
    }

    /// Exact division; `None` if `d` does not divide `self` over ℤ.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        let (la, lb, lc) = d.leading()?;
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let (dq, dt) = self.degrees();
        let (ddq, ddt) = d.degrees();
        if dq < la {
            return None;
        }
        let tlen = dt + ddt + 1;
        let mut rem = self.reshaped(dq + 1, tlen);
        let mut quot = ZPoly::with_shape(dq + 1 - la, tlen);
        let dterms: Vec<_> = d.terms().collect();
        // Scanning downward in lex order: subtracting a multiple of d only touches
        // monomials below the one being cancelled.
        for a in (0..=dq).rev() {
            for b in (0..tlen).rev() {
                let v = rem.c[a * tlen + b];
                if v == 0 {
                    continue;
                }
                if a < la || b < lb || v % lc != 0 {
                    return None;
                }
                let k = v / lc;
                let (qa, qb) = (a - la, b - lb);
                quot.c[qa * tlen + qb] = k;
                for &(x, y, w) in &dterms {
                    let ty = qb + y;
                    if ty >= tlen {
                        return None;
                    }
                    let i = (qa + x) * tlen + ty;
                    rem.c[i] = add_c(rem.c[i], -mul_c(k, w));
                }
                debug_assert_eq!(rem.c[a * tlen + b], 0);
            }
        }
        let _ = ddq;
        Some(quot.trim())
    }

    /// Evaluates at integer points.
    pub fn eval(&self, q: &BigInt, t: &BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (a, b, v) in self.terms() {
            total += BigInt::from(v) * num_traits::pow(q.clone(), a) * num_traits::pow(t.clone(), b);
        }
        total
    }
}

impl PartialEq for ZPoly {
    fn eq(&self, other: &ZPoly) -> bool {
        let qlen = self.qlen.max(other.qlen);
        let tlen = self.tlen.max(other.tlen);
        (0..qlen).all(|a| (0..tlen).all(|b| self.coeff(a, b) == other.coeff(a, b)))
    }
}

impl Eq for ZPoly {}

impl AddAssign<&ZPoly> for ZPoly {
    fn add_assign(&mut self, rhs: &ZPoly) {
        if rhs.qlen > self.qlen || rhs.tlen > self.tlen {
            *self = self.reshaped(rhs.qlen, rhs.tlen);
        }
        for (a, b, v) in rhs.terms() {
            let i = a * self.tlen + b;
            self.c[i] = add_c(self.c[i], v);
        }
    }
}

impl SubAssign<&ZPoly> for ZPoly {
    fn sub_assign(&mut self, rhs: &ZPoly) {
        *self += &-rhs;
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        self.scale(-1)
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = ZPoly::with_shape(self.qlen + rhs.qlen - 1, self.tlen + rhs.tlen - 1);
        let right: Vec<_> = rhs.terms().collect();
        for (a, b, v) in self.terms() {
            for &(x, y, w) in &right {
                let i = (a + x) * out.tlen + b + y;
                out.c[i] = add_c(out.c[i], mul_c(v, w));
            }
        }
        out
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ZPoly {
        ZPoly::monomial(1, 0, 1)
    }
    fn t() -> ZPoly {
        ZPoly::monomial(0, 1, 1)
    }

    #[test]
    fn exact_division() {
        let a = &t() - &q();
        let b = &(&t() * &t()) - &q();
        let p = &(&a * &b) * &(&t() + &ZPoly::constant(3));
        assert_eq!(p.div_exact(&a), Some(&b * &(&t() + &ZPoly::constant(3))));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(p.scale(2).div_exact(&a.scale(2)), p.div_exact(&a));
    }

    #[test]
    fn round_trip_through_multipoly() {
        let p = &(&q() * &t()).scale(-4) + &ZPoly::constant(7);
        assert_eq!(ZPoly::from_poly(&p.to_poly()), Some(p));
    }

    #[test]
    #[should_panic(expected = "coefficient overflow")]
    fn overflow_is_loud() {
        let big = ZPoly::constant(i128::MAX / 2 + 1);
        let _ = &big + &big;
    }
}

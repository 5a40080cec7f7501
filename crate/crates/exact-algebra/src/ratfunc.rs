//! Rational functions, reduced as far as the q,t gcd allows.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;

use crate::gcd::{gcd_qt, normalize};
use crate::monomial::Var;
use crate::poly::MultiPoly;
use crate::AlgebraError;

/// A quotient `num / den` with `den ≠ 0` and the leading coefficient of `den` equal to +1.
///
/// Denominators live in ℚ[q, t]. Numerators may mention other variables, in which
/// case only monomial and constant factors are cancelled. Equality is decided by
/// cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<RatFunc, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    /// Builds `num / den` without cancelling any common factor beyond normalizing signs.
    pub fn unreduced(num: MultiPoly, den: MultiPoly) -> Result<RatFunc, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let lc = den.leading_coefficient().recip();
        Ok(RatFunc { num: num.scale(&lc), den: den.scale(&lc) })
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        if let Some(c) = den.constant_value() {
            return RatFunc { num: num.scale(&c.recip()), den: MultiPoly::one() };
        }
        let g = if den.len() == 1 || num.len() == 1 || !num.is_qt_only() {
            MultiPoly::monomial(num.monomial_content().gcd(&den.monomial_content()))
        } else {
            gcd_qt(&num, &den).expect("q,t-only operands")
        };
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        let lc = den.leading_coefficient().recip();
        RatFunc { num: num.scale(&lc), den: normalize(&den) }
    }

    pub fn zero() -> RatFunc {
        RatFunc::from_poly(MultiPoly::zero())
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(MultiPoly::one())
    }

    pub fn int(n: i64) -> RatFunc {
        RatFunc::from_poly(MultiPoly::int(n))
    }

    pub fn constant(c: BigRational) -> RatFunc {
        RatFunc::from_poly(MultiPoly::constant(c))
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(MultiPoly::var(v))
    }

    pub fn from_poly(p: MultiPoly) -> RatFunc {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn as_poly(&self) -> Option<MultiPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            self.num.div_exact(&self.den)
        }
    }

    pub fn is_poly(&self) -> bool {
        self.as_poly().is_some()
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> RatFunc {
        RatFunc::reduce(&self.num * p, self.den.clone())
    }

    pub fn recip(&self) -> Result<RatFunc, AlgebraError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatFunc::reduce(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn pow(&self, k: u32) -> RatFunc {
        RatFunc { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// Text form: the numerator alone when the denominator is 1, else `(num)/(den)`.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    pub fn parse(s: &str) -> Result<RatFunc, AlgebraError> {
        s.parse()
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &RatFunc) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Default for RatFunc {
    fn default() -> RatFunc {
        RatFunc::zero()
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> RatFunc {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> RatFunc {
        RatFunc::int(n)
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_poly(&self.num + &rhs.num);
            }
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl std::ops::AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RatFunc {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (num, den) = rest.split_once(")/(").ok_or_else(|| AlgebraError::Parse(s.to_string()))?;
            let den = den.strip_suffix(')').ok_or_else(|| AlgebraError::Parse(s.to_string()))?;
            let num: MultiPoly = num.parse()?;
            let den: MultiPoly = den.parse()?;
            if den.is_zero() || !den.leading_coefficient().is_one() {
                return Err(AlgebraError::Parse(s.to_string()));
            }
            return Ok(RatFunc { num, den });
        }
        Ok(RatFunc::from_poly(s.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::var(Var::Q)
    }
    fn t() -> RatFunc {
        RatFunc::var(Var::T)
    }

    #[test]
    fn difference_of_squares_cancels() {
        let r = (&t() * &t() - &q() * &q()).checked_div(&(&t() - &q())).unwrap();
        assert_eq!(r.as_poly(), Some(MultiPoly::t() + MultiPoly::q()));
        assert!(r.denominator().is_one());
    }

    #[test]
    fn shifted_difference_over_t_minus_q_is_one() {
        let one = RatFunc::one();
        let num = (&one + &t()) - (&one + &q());
        assert_eq!(num.checked_div(&(&t() - &q())).unwrap(), RatFunc::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q().checked_div(&RatFunc::zero()), Err(AlgebraError::DivisionByZero));
        assert!(RatFunc::new(MultiPoly::one(), MultiPoly::zero()).is_err());
    }

    #[test]
    fn denominator_is_monic_and_text_round_trips() {
        let r = RatFunc::new(MultiPoly::one(), MultiPoly::t() - MultiPoly::q()).unwrap();
        assert!(r.denominator().leading_coefficient().is_one());
        assert_eq!(r.serialize(), "(-1)/(1*q^1 + -1*t^1)");
        let back = RatFunc::parse(&r.serialize()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.serialize(), r.serialize());
    }
}

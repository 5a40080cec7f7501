//! q-integers, q,t-integers, q-binomials, cyclotomic polynomials and q-Lucas.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::gcd::rem_q;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::AlgebraError;

/// Value chosen for the empty q,t-integer `[0]_{q,t}`.
///
/// The sum-of-monomials definition gives 0; some formulas are written with the
/// convention 1. Callers pick explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QtZero {
    Zero,
    One,
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn qint(n: u32) -> MultiPoly {
    MultiPoly::from_terms((0..n).map(|i| (Monomial::qt(i, 0), BigRational::from_integer(1.into()))))
}

/// `[n]_{q,t} = Σ_{i<n} q^i t^{n-1-i}`, with `[0]` fixed by `zero`.
pub fn qtint(n: u32, zero: QtZero) -> MultiPoly {
    if n == 0 {
        return match zero {
            QtZero::Zero => MultiPoly::zero(),
            QtZero::One => MultiPoly::one(),
        };
    }
    MultiPoly::from_terms((0..n).map(|i| (Monomial::qt(i, n - 1 - i), BigRational::from_integer(1.into()))))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn qfact(n: u32) -> MultiPoly {
    (1..=n).fold(MultiPoly::one(), |acc, i| &acc * &qint(i))
}

/// Gaussian binomial `[n]_q! / ([k]_q! [n-k]_q!)`.
pub fn qbinom(n: u32, k: u32) -> Result<MultiPoly, AlgebraError> {
    if k > n {
        return Err(AlgebraError::InvalidBinomial { n, k });
    }
    // Pascal recurrence keeps every intermediate a polynomial.
    let mut row = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let left = if j > 0 { row[j as usize - 1].clone() } else { MultiPoly::zero() };
            let right = if j < m { row[j as usize].mul_monomial(&Monomial::qt(j, 0)) } else { MultiPoly::zero() };
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

/// Ordinary binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// The cyclotomic polynomial `Φ_p(q)`.
pub fn cyclotomic(p: u32) -> MultiPoly {
    assert!(p >= 1, "cyclotomic index must be positive");
    let mut value = MultiPoly::monomial(Monomial::qt(p, 0)) - MultiPoly::one();
    for d in (1..p).filter(|d| p.is_multiple_of(*d)) {
        value = value.div_exact(&cyclotomic(d)).expect("cyclotomic factors divide q^p - 1");
    }
    value
}

/// Outcome of a q-Lucas congruence check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LucasOutcome {
    pub holds: bool,
    /// `qbinom(n, k)` reduced modulo `Φ_p(q)`.
    pub residue: MultiPoly,
}

/// Checks `qbinom(n,k) ≡ binom(n₁,k₁)·qbinom(n₀,k₀) (mod Φ_p)` with n = n₁p + n₀, k = k₁p + k₀.
pub fn q_lucas_check(n: u32, k: u32, p: u32) -> Result<LucasOutcome, AlgebraError> {
    let modulus = cyclotomic(p);
    let lhs = rem_q(&qbinom(n, k)?, &modulus);
    let (n1, n0) = (n / p, n % p);
    let (k1, k0) = (k / p, k % p);
    let rhs = if k0 > n0 {
        MultiPoly::zero()
    } else {
        let c = BigRational::from_integer(binomial(n1.into(), k1.into()));
        rem_q(&qbinom(n0, k0)?.scale(&c), &modulus)
    };
    Ok(LucasOutcome { holds: lhs == rhs, residue: lhs })
}

/// True iff `a` divides `b` in ℚ[q].
pub fn poly_divides(a: &MultiPoly, b: &MultiPoly) -> bool {
    poly_quotient(a, b).is_some()
}

/// `b / a` in ℚ[q] when the division is exact.
pub fn poly_quotient(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    assert!(!a.is_zero(), "divisor must be nonzero");
    b.div_exact(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn qpoly(coeffs: &[i64]) -> MultiPoly {
        MultiPoly::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (Monomial::qt(i as u32, 0), rat(c))))
    }

    #[test]
    fn small_values() {
        assert_eq!(qtint(2, QtZero::Zero), MultiPoly::q() + MultiPoly::t());
        assert_eq!(qtint(0, QtZero::Zero), MultiPoly::zero());
        assert_eq!(qtint(0, QtZero::One), MultiPoly::one());
        assert_eq!(qbinom(4, 2).unwrap(), qpoly(&[1, 1, 2, 1, 1]));
        assert!(qbinom(2, 3).is_err());
        assert_eq!(qbinom(5, 2).unwrap(), qfact(5).div_exact(&(&qfact(2) * &qfact(3))).unwrap());
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic(1), qpoly(&[-1, 1]));
        assert_eq!(cyclotomic(2), qpoly(&[1, 1]));
        assert_eq!(cyclotomic(6), qpoly(&[1, -1, 1]));
    }

    #[test]
    fn lucas_examples() {
        let out = q_lucas_check(4, 2, 2).unwrap();
        assert!(out.holds);
        assert_eq!(out.residue, MultiPoly::int(2));
        assert!(q_lucas_check(6, 3, 3).unwrap().holds);
    }

    #[test]
    fn divisibility_examples() {
        let quotient = poly_quotient(&qint(2), &qbinom(4, 1).unwrap());
        assert_eq!(quotient, Some(qpoly(&[1, 0, 1])));
        assert!(!poly_divides(&qint(2), &qint(3)));
        assert!(poly_divides(&MultiPoly::one(), &qint(7)));
    }
}

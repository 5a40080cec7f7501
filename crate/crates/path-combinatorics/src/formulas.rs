//! Closed forms that the enumerations are checked against.

use std::collections::BTreeMap;

use exact_algebra::{binomial, qtint, BigInt, BigRational, Monomial, MultiPoly, QtZero, RatFunc};
use symfunc_core::{plethysm_x_times, Alphabet, Basis, Partition, SymFunc};

use crate::dyck::DyckPath;
use crate::PathError;

/// `Σ_{m ≤ n/2} s_{2^m,1^{n-2m}} Σ_{p=m}^{n-m} [p]_{q,t}`.
pub fn k1_formula(n: usize, zero: QtZero) -> Result<SymFunc, PathError> {
    let terms = (0..=n / 2).map(|m| {
        let c = (m..=n - m).fold(MultiPoly::zero(), |acc, p| &acc + &qtint(p as u32, zero));
        (Partition::two_column(m, n - 2 * m), RatFunc::from_poly(c))
    });
    Ok(SymFunc::from_terms(Basis::S, n, terms)?)
}

/// `(1/(k+1)) binom(n,k) e_n[(k+1)X]`, in the p basis.
pub fn q1_formula(n: usize, k: usize) -> Result<SymFunc, PathError> {
    if k > n {
        return Err(PathError::BadParameters { n, k });
    }
    let copies = Alphabet::from_monomials(std::iter::repeat_n(Monomial::ONE, k + 1));
    let f = plethysm_x_times(&SymFunc::e(n), &copies)?;
    let scale = BigRational::new(binomial(n as u64, k as u64), BigInt::from(k + 1));
    Ok(f.scale_rational(&scale))
}

/// Dyck paths of order `|λ|` with `c_i(λ)` vertical runs of length `i`:
/// `(1/(n+1)) (n+1)! / (c_1! ... c_n! (n-ℓ(λ)+1)!)`.
pub fn run_type_count(lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let factorial = |m: usize| (1..=m).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i));
    let denominator =
        lambda.multiplicities().iter().fold(factorial(n - lambda.len() + 1), |acc, &c| acc * factorial(c));
    factorial(n + 1) / denominator / BigInt::from(n + 1)
}

/// Dyck paths of order `n` counted by the sorted lengths of their vertical runs.
pub fn run_type_census(n: usize) -> BTreeMap<Partition, BigInt> {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for d in DyckPath::all(n) {
        *out.entry(Partition::from_unsorted(d.vertical_runs())).or_default() += 1;
    }
    out
}

/// `Σ_{i = max(0, m-j-1)}^{n-m-j-1} q^i`, zero when the range is empty.
pub fn two_column_formula(n: usize, m: usize, j: usize) -> MultiPoly {
    let lo = (m as i64 - j as i64 - 1).max(0);
    let hi = n as i64 - m as i64 - j as i64 - 1;
    (lo..=hi).fold(MultiPoly::zero(), |acc, i| &acc + &MultiPoly::monomial(Monomial::qt(i as u32, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_counts_sum_to_catalan() {
        for n in 1..=7 {
            let census = run_type_census(n);
            for (lambda, count) in &census {
                assert_eq!(&run_type_count(lambda), count, "{lambda}");
            }
            assert_eq!(
                Partition::all(n).iter().map(run_type_count).sum::<BigInt>(),
                BigInt::from(DyckPath::all(n).len())
            );
        }
    }

    #[test]
    fn k1_small() {
        let f = k1_formula(2, QtZero::Zero).unwrap();
        let q = MultiPoly::q();
        let t = MultiPoly::t();
        assert_eq!(f.coeff(&Partition::row(2)).as_poly().unwrap(), MultiPoly::one());
        assert_eq!(f.coeff(&Partition::column(2)).as_poly().unwrap(), &(&MultiPoly::one() + &q) + &t);
    }
}

//! The specialization `t = 1/q` of `Δ_f e_n` in closed form.

use exact_algebra::{qbinom, qint, Bindings, Monomial, MultiPoly, RatFunc, Var};
use symfunc_core::{plethysm, plethysm_x_times, Alphabet, Basis, SymFunc};

use crate::MacError;

/// `{1, q, ..., q^{m-1}}`, so that `X·[m]_q` is the alphabet `{x_i q^j}`.
fn q_string(m: usize) -> Alphabet {
    Alphabet::from_monomials((0..m).map(|j| Monomial::qt(j as u32, 0)))
}

/// `e_n[X [m]_q]` in the Schur basis.
fn en_q_string(n: usize, m: usize) -> Result<SymFunc, MacError> {
    Ok(plethysm_x_times(&SymFunc::e(n), &q_string(m))?.convert(Basis::S)?)
}

/// `f[[n]_q] e_n[X [k+1]_q] / (q^{k(n-1)} [k+1]_q)` for `f` of degree `k`.
pub fn delta_t_recip(f: &SymFunc, n: usize) -> Result<SymFunc, MacError> {
    let k = f.degree();
    let numer = plethysm(f, &q_string(n))?;
    let den = &MultiPoly::monomial(Monomial::qt((k * n.saturating_sub(1)) as u32, 0)) * &qint(k as u32 + 1);
    let scale = numer.checked_div(&RatFunc::from_poly(den))?;
    Ok(en_q_string(n, k + 1)?.scale(&scale))
}

/// `q^{binom(k,2) - k(n-1)} / [k+1]_q · [n choose k]_q · e_n[X [k+1]_q]`.
pub fn delta_e_t_recip_closed(k: usize, n: usize) -> Result<SymFunc, MacError> {
    let shift = (k * k.saturating_sub(1) / 2) as i64 - (k * n.saturating_sub(1)) as i64;
    let power = |e: i64| MultiPoly::monomial(Monomial::qt(e.unsigned_abs() as u32, 0));
    let (num_shift, den_shift) =
        if shift >= 0 { (power(shift), MultiPoly::one()) } else { (MultiPoly::one(), power(shift)) };
    let num = &num_shift * &qbinom(n as u32, k as u32)?;
    let den = &den_shift * &qint(k as u32 + 1);
    let scale = RatFunc::new(num, den)?;
    Ok(en_q_string(n, k + 1)?.scale(&scale))
}

/// Replaces `t` by `1/q` in every coefficient.
pub fn specialize_t_recip(f: &SymFunc) -> Result<SymFunc, MacError> {
    let b = Bindings::new().reciprocal_q(Var::T)?;
    Ok(f.try_map_coeffs(|c| exact_algebra::specialize(c, &b).map_err(Into::into))?)
}

//! Checks with a Macdonald-operator side.

use exact_algebra::{poly_divides, qbinom, qint, Monomial, MultiPoly, Var};
use macdonald_ops::{delta_e_t_recip_closed, delta_t_recip, specialize_t_recip, Op};
use num_integer::Integer;
use path_combinatorics::{k1_formula, ContentGf};
use symfunc_core::{Basis, Composition, SymFunc};

use super::{at_q_t, first_failure, same_content, same_poly, same_sym};
use crate::catalog::Scope;
use crate::context::Context;
use crate::report::{Outcome, Params};
use crate::VerifierError;

fn n_k_cases(scope: &Scope, cap: usize, ks: impl Fn(usize) -> std::ops::RangeInclusive<usize>) -> Vec<Params> {
    (1..=cap).flat_map(|n| ks(n).filter(|&k| scope.wants_k(k)).map(move |k| Params::n(n).k(k))).collect()
}

pub fn delta_cases(scope: &Scope) -> Vec<Params> {
    n_k_cases(scope, scope.cap(4, 6), |n| 0..=n - 1)
}

fn delta_against(ctx: &Context, p: &Params, side: &ContentGf, name: &str) -> Result<Outcome, VerifierError> {
    let (n, k) = (p.n, p.k_value());
    let operator = ContentGf::from_symfunc(&*ctx.delta_prime_e(k, n)?)?;
    let vars = ctx.vars.unwrap_or(n);
    if side.to_x_poly(vars)? == operator.to_x_poly(vars)? {
        return Ok(Outcome::Pass);
    }
    let what = format!("{name} against Δ′_{{e_{k}}} e_{n}");
    Ok(match same_content(&what, side, &operator) {
        Outcome::Pass => {
            same_poly(format!("{what} in {vars} variables"), &side.to_x_poly(vars)?, &operator.to_x_poly(vars)?)
        }
        other => other,
    })
}

pub fn delta_rise(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let rise = ctx.rise(p.n)?;
    delta_against(ctx, p, &rise[p.k_value()], "Rise")
}

pub fn delta_valley(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let val = ctx.val(p.n)?;
    delta_against(ctx, p, &val[p.k_value()], "Val")
}

pub fn eq3_cases(scope: &Scope) -> Vec<Params> {
    n_k_cases(scope, scope.cap(4, 6), |n| 1..=n + 2)
}

pub fn eq3(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, k) = (p.n, p.k_value());
    if ctx.mac.delta_identity_check(n, k)? {
        return Ok(Outcome::Pass);
    }
    let en = SymFunc::e(n);
    let lhs = ctx.mac.delta(&SymFunc::e(k), &en)?;
    let mut rhs = ctx.mac.delta_prime(&SymFunc::e(k), &en)?;
    if k > n {
        rhs = SymFunc::zero(Basis::S, n);
    } else {
        rhs = rhs.add(&ctx.mac.delta_prime(&SymFunc::e(k - 1), &en)?)?;
    }
    same_sym("Δ_{e_k} e_n against the expected right side", &lhs, &rhs)
}

pub fn battery_cases(scope: &Scope) -> Vec<Params> {
    (1..=scope.cap(4, 6)).map(Params::n).collect()
}

pub fn battery(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let report = ctx.mac.battery_report(p.n)?;
    if report.passed() {
        return Ok(Outcome::Pass);
    }
    let failing: Vec<&str> = report.checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| name.as_str()).collect();
    Ok(Outcome::mismatch("identities that fail", failing.join("; "), "none"))
}

pub fn zero_cases(scope: &Scope) -> Vec<Params> {
    n_k_cases(scope, scope.cap(4, 6), |n| 0..=n - 1)
}

pub fn thm_zero(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, k) = (p.n, p.k_value());
    let ones = Composition::new(vec![1; n])?;
    let rise = ctx.rise(n)?[k].coefficient(&ones);
    let val = ctx.val(n)?[k].coefficient(&ones);
    let op = ContentGf::from_symfunc(&*ctx.delta_prime_e(k, n)?)?.coefficient(&ones);
    let (q, zero) = (MultiPoly::q(), MultiPoly::zero());
    let reference = at_q_t(&rise, &q, &zero);
    let others = [
        ("Rise(0,q)", at_q_t(&rise, &zero, &q)),
        ("Val(q,0)", at_q_t(&val, &q, &zero)),
        ("Δ′_{e_k} e_n at t = 0", at_q_t(&op, &q, &zero)),
        ("Δ′_{e_k} e_n at q = 0, t = q", at_q_t(&op, &zero, &q)),
    ];
    Ok(first_failure(
        others.iter().map(|(name, poly)| same_poly(format!("Rise(q,0) against {name}"), &reference, poly)),
    ))
}

pub fn t_recip_cases(scope: &Scope) -> Vec<Params> {
    let mut out: Vec<Params> =
        n_k_cases(scope, scope.cap(4, 6), |n| 0..=n - 1).into_iter().map(|p| p.variant("e")).collect();
    out.extend(n_k_cases(scope, scope.cap(4, 5), |_| 1..=3).into_iter().map(|p| p.variant("h")));
    out
}

pub fn t_recip(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, k) = (p.n, p.k_value());
    let f = if p.variant_str() == "h" { SymFunc::h(k) } else { SymFunc::e(k) };
    let operator = specialize_t_recip(&ctx.mac.delta(&f, &SymFunc::e(n))?)?;
    let closed = delta_t_recip(&f, n)?;
    let general =
        same_sym("Δ_f e_n at t = 1/q against f[[n]_q] e_n[X[k+1]_q] / (q^{k(n-1)} [k+1]_q)", &operator, &closed)?;
    if p.variant_str() == "h" || !general.is_pass() {
        return Ok(general);
    }
    same_sym("against the q-binomial form for f = e_k", &closed, &delta_e_t_recip_closed(k, n)?)
}

pub fn schur_pos_cases(scope: &Scope) -> Vec<Params> {
    let mut out: Vec<Params> =
        n_k_cases(scope, scope.cap(4, 6), |n| 0..=n - 1).into_iter().map(|p| p.variant("schur")).collect();
    out.extend(n_k_cases(scope, 2 * scope.cap(4, 6), |n| 0..=n).into_iter().map(|p| p.variant("lucas")));
    out
}

pub fn schur_pos(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, k) = (p.n, p.k_value());
    if p.variant_str() == "lucas" {
        let d = (k + 1).gcd(&n);
        let binom = qbinom(n as u32, k as u32)?;
        return Ok(if poly_divides(&qint(d as u32), &binom) {
            Outcome::Pass
        } else {
            Outcome::mismatch(
                format!("[{d}]_q does not divide [{n} choose {k}]_q"),
                qint(d as u32).serialize(),
                binom.serialize(),
            )
        });
    }
    let shift = MultiPoly::monomial(Monomial::qt((k * (n - 1) - k * k.saturating_sub(1) / 2) as u32, 0));
    let g = specialize_t_recip(&ctx.mac.delta(&SymFunc::e(k), &SymFunc::e(n))?)?.convert(Basis::S)?;
    for (lambda, c) in g.terms() {
        let scaled = c.mul_poly(&shift);
        let ok = scaled.as_poly().is_some_and(|poly| {
            poly.has_nonnegative_integer_coefficients()
                && poly.terms().all(|(m, _)| *m == Monomial::qt(m.exp(Var::Q), 0))
        });
        if !ok {
            return Ok(Outcome::mismatch(
                format!("coefficient of s_{lambda} is not in N[q]"),
                scaled.serialize(),
                "a polynomial in q with nonnegative integer coefficients",
            ));
        }
    }
    Ok(Outcome::Pass)
}

pub fn k1_cases(scope: &Scope) -> Vec<Params> {
    let mut out: Vec<Params> = (1..=scope.cap(4, 6)).map(|n| Params::n(n).variant("operator")).collect();
    out.extend((1..=scope.cap(6, 8)).map(|n| Params::n(n).variant("rise")));
    out
}

pub fn k1(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let n = p.n;
    let formula = k1_formula(n, ctx.qtint_zero)?;
    if p.variant_str() == "operator" {
        let op = ctx.operator(&[Op::Delta(SymFunc::e(1))], &SymFunc::e(n))?;
        return same_sym("Δ_{e_1} e_n against the closed form", &op, &formula);
    }
    let by_k = ctx.rise(n)?;
    let mut sum = by_k[0].clone();
    if n > 1 {
        sum.merge(&by_k[1]);
    }
    Ok(same_content("Rise_{n,0} + Rise_{n,1} against the closed form", &sum, &ContentGf::from_symfunc(&formula)?))
}

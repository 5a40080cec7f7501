//! Four-variable Catalan polynomials and partially labeled paths.

use exact_algebra::{binomial, BigInt, MultiPoly, RatFunc, Var};
use macdonald_ops::Op;
use path_combinatorics::{cat4_touch, catmod4_comp, catmod4_touch, partial_touch_gf, ContentGf, DinvVariant};
use symfunc_core::{Composition, Partition, SymFunc};

use super::{at_q_t, first_failure, int_poly, same_content, same_poly, same_ratfunc};
use crate::catalog::Scope;
use crate::context::Context;
use crate::report::{Outcome, Params};
use crate::VerifierError;

/// `f(q,t,w,z)`.
fn swap_zw(p: &MultiPoly) -> MultiPoly {
    p.substitute(Var::Z, &MultiPoly::var(Var::U))
        .substitute(Var::W, &MultiPoly::var(Var::Z))
        .substitute(Var::U, &MultiPoly::var(Var::W))
}

fn coefficient(p: &MultiPoly, k: usize, l: usize) -> MultiPoly {
    p.coeff_extract(Var::Z, k as u32).coeff_extract(Var::W, l as u32)
}

pub fn cat4_cases(scope: &Scope) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=scope.cap(6, 8) {
        out.push(Params::n(n).variant("cat=cat'"));
        out.push(Params::n(n).variant("kl-symmetry"));
    }
    for n in 1..=scope.cap(4, 6) {
        for k in (0..n).filter(|&k| scope.wants_k(k)) {
            out.extend((0..n - k).map(|l| Params::n(n).k(k).l(l).variant("operator")));
        }
    }
    out
}

pub fn cat4(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let n = p.n;
    let (cat, catmod) = (ctx.catalan(n, false)?, ctx.catalan(n, true)?);
    match p.variant_str() {
        "cat=cat'" => Ok(same_poly("Cat_n against Cat'_n", &cat, &catmod)),
        "kl-symmetry" => Ok(first_failure([
            same_poly("Cat_n against Cat_n with z and w exchanged", &cat, &swap_zw(&cat)),
            same_poly("Cat'_n against Cat'_n with z and w exchanged", &catmod, &swap_zw(&catmod)),
        ])),
        _ => {
            let (k, l) = (p.k_value(), p.l_value());
            let m = n - k;
            let hk = Op::Delta(SymFunc::h(k));
            let nabla = ctx.operator(&[hk.clone(), Op::Nabla], &SymFunc::e(m))?;
            let hook = SymFunc::s(Partition::hook(l + 1, m - l - 1));
            let second = nabla.hall_inner(&hook)?;
            let prime = ctx.operator(&[hk, Op::DeltaPrime(SymFunc::e(m - l - 1))], &SymFunc::e(m))?;
            let third = prime.hall_inner(&SymFunc::e(m))?;
            let path_sides = [("Cat_n", coefficient(&cat, k, l)), ("Cat'_n", coefficient(&catmod, k, l))];
            Ok(first_failure(path_sides.into_iter().flat_map(|(name, c)| {
                let c = RatFunc::from_poly(c);
                [
                    same_ratfunc(format!("{name} at z^{k} w^{l} against <Δ_h ∇ e, s_hook>"), &c, &second),
                    same_ratfunc(format!("{name} at z^{k} w^{l} against <Δ_h Δ′_e e, e>"), &c, &third),
                ]
            })))
        }
    }
}

pub fn eval_cases(scope: &Scope) -> Vec<Params> {
    (1..=scope.cap(6, 8)).map(Params::n).collect()
}

pub fn eval(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let n = p.n;
    let (cat, catmod) = (ctx.catalan(n, false)?, ctx.catalan(n, true)?);
    let catalan: BigInt = binomial(2 * n as u64, n as u64) / BigInt::from(n + 1);
    let at = |f: &MultiPoly, z: i64, w: i64| {
        at_q_t(f, &MultiPoly::one(), &MultiPoly::one())
            .substitute(Var::Z, &MultiPoly::int(z))
            .substitute(Var::W, &MultiPoly::int(w))
    };
    let one = MultiPoly::one();
    let (q, w) = (MultiPoly::q(), MultiPoly::var(Var::W));
    let chain = |f: &MultiPoly| {
        let zw = at_q_t(f, &one, &one);
        let q10w = at_q_t(&f.substitute(Var::Z, &MultiPoly::zero()), &q, &one);
        let one_q_w0 = at_q_t(&f.substitute(Var::W, &MultiPoly::zero()).substitute(Var::Z, &w), &one, &q);
        (zw, q10w, one_q_w0)
    };
    let (a, b, c) = chain(&cat);
    let (d, e, f) = chain(&catmod);
    let mut outcomes = Vec::new();
    for (name, poly) in [("Cat_n", &*cat), ("Cat'_n", &*catmod)] {
        outcomes.push(same_poly(
            format!("{name}(1,1,0,0) against the Catalan number"),
            &at(poly, 0, 0),
            &int_poly(&catalan),
        ));
        let doubled = &catalan << (n - 1);
        outcomes.push(same_poly(
            format!("{name}(1,1,1,1) against 2^(n-1) times the Catalan number"),
            &at(poly, 1, 1),
            &int_poly(&doubled),
        ));
    }
    outcomes.extend([
        same_poly("Cat_n(1,1,z,w) against Cat_n(1,1,w,z)", &a, &swap_zw(&a)),
        same_poly("Cat_n(1,1,z,w) against Cat'_n(1,1,z,w)", &a, &d),
        same_poly("Cat_n(1,1,z,w) against Cat'_n(1,1,w,z)", &a, &swap_zw(&d)),
        same_poly("Cat_n(q,1,0,w) against Cat_n(1,q,w,0)", &b, &c),
        same_poly("Cat_n(q,1,0,w) against Cat'_n(q,1,0,w)", &b, &e),
        same_poly("Cat_n(q,1,0,w) against Cat'_n(1,q,w,0)", &b, &f),
    ]);
    Ok(first_failure(outcomes))
}

pub fn touch_cases(scope: &Scope) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 1..=scope.cap(6, 8) {
        out.extend((1..=n).map(|r| Params::n(n).r(r)));
        out.push(Params::n(n).variant("sum"));
    }
    out
}

pub fn touch(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let n = p.n;
    if let Some(r) = p.r {
        return Ok(same_poly(
            format!("Cat_{{n,{r}}} against Cat'_{{n,{r}}}"),
            &cat4_touch(n, r)?,
            &catmod4_touch(n, r)?,
        ));
    }
    let (mut a, mut b) = (MultiPoly::zero(), MultiPoly::zero());
    for r in 1..=n {
        a += &cat4_touch(n, r)?;
        b += &catmod4_touch(n, r)?;
    }
    Ok(first_failure([
        same_poly("sum over r of Cat_{n,r} against Cat_n", &a, &*ctx.catalan(n, false)?),
        same_poly("sum over r of Cat'_{n,r} against Cat'_n", &b, &*ctx.catalan(n, true)?),
    ]))
}

pub fn comp_cases(scope: &Scope) -> Vec<Params> {
    (1..=scope.cap(6, 8)).flat_map(|n| (0..n).map(move |l| Params::n(n).l(l))).collect()
}

pub fn comp(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, l) = (p.n, p.l_value());
    let mut sum = MultiPoly::zero();
    for alpha in Composition::all(n - l) {
        sum += &catmod4_comp(n, &alpha)?;
    }
    let expected = ctx.catalan(n, true)?.coeff_extract(Var::W, l as u32);
    Ok(same_poly(format!("sum over compositions of {} against the w^{l} part of Cat'_n", n - l), &sum, &expected))
}

const GAMMAS: [&str; 3] = ["1", "h1", "h2"];

pub fn sym_cases(scope: &Scope) -> Vec<Params> {
    let mut out = Vec::new();
    for m in 2..=scope.cap(4, 6) {
        for k in (1..m).filter(|&k| scope.wants_k(k)) {
            out.extend(GAMMAS.map(|g| Params::n(m).k(k).variant(g)));
        }
    }
    out
}

pub fn sym(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (m, k) = (p.n, p.k_value());
    let gamma: Vec<Op> = match p.variant_str() {
        "h1" => vec![Op::Delta(SymFunc::h(1))],
        "h2" => vec![Op::Delta(SymFunc::h(2))],
        _ => Vec::new(),
    };
    let with = |op: Op| gamma.iter().cloned().chain([op]).collect::<Vec<Op>>();
    let hook = SymFunc::s(Partition::hook(k + 1, m - k - 1));
    for lambda in Partition::all(m) {
        let f = SymFunc::s(lambda.clone());
        let left = ctx.operator(&with(Op::Nabla), &f)?.hall_inner(&hook)?;
        let right = ctx.operator(&with(Op::DeltaPrime(SymFunc::e(m - k - 1))), &f)?.hall_inner(&SymFunc::e(m))?;
        let o = same_ratfunc(format!("f = s_{lambda}"), &left, &right);
        if !o.is_pass() {
            return Ok(o);
        }
    }
    Ok(Outcome::Pass)
}

const VARIANTS: [DinvVariant; 2] = [DinvVariant::Zero, DinvVariant::Prime];

fn variant_of(p: &Params) -> DinvVariant {
    if p.variant_str() == DinvVariant::Prime.to_string() {
        DinvVariant::Prime
    } else {
        DinvVariant::Zero
    }
}

/// `(n, l)` with `n ≥ 1` and `n + l` at most the cap.
fn n_l_pairs(cap: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=cap).flat_map(move |n| (0..=cap - n).map(move |l| (n, l)))
}

pub fn eh_cases(scope: &Scope) -> Vec<Params> {
    let mut out = Vec::new();
    for (n, l) in n_l_pairs(scope.cap(4, 5)) {
        for k in (0..n).filter(|&k| scope.wants_k(k)) {
            out.extend(VARIANTS.map(|v| Params::n(n).k(k).l(l).variant(v.to_string())));
        }
    }
    out
}

pub fn eh(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, k, l) = (p.n, p.k_value(), p.l_value());
    let partial = ctx.partial(n, l, variant_of(p))?;
    let ops = [Op::Delta(SymFunc::h(l)), Op::DeltaPrime(SymFunc::e(n - k - 1))];
    let operator = ContentGf::from_symfunc(&*ctx.operator(&ops, &SymFunc::e(n))?)?;
    let lhs = partial.get(&k).cloned().unwrap_or_else(|| ContentGf::zero(n));
    Ok(same_content("partially labeled sum against Δ_{h_l} Δ′_{e_{n-k-1}} e_n", &lhs, &operator))
}

pub fn eh_touch_cases(scope: &Scope) -> Vec<Params> {
    n_l_pairs(scope.cap(4, 5)).flat_map(|(n, l)| VARIANTS.map(|v| Params::n(n).l(l).variant(v.to_string()))).collect()
}

pub fn eh_touch(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, l) = (p.n, p.l_value());
    let variant = variant_of(p);
    let mut total = ContentGf::zero(n);
    for f in partial_touch_gf(n, l, variant)?.values() {
        total.merge(f);
    }
    let partial = ctx.partial(n, l, variant)?;
    Ok(same_content("sum over touch values against the unrefined sum", &total, &partial[&0]))
}

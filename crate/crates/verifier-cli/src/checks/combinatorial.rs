//! Checks whose both sides are enumerations or closed forms.

use std::collections::BTreeSet;

use exact_algebra::{Monomial, MultiPoly};
use osp_combinatorics::{distribution, enumerate_osp, gamma, gamma_inverse, Statistic};
use path_combinatorics::{
    llt_content, phi, phi_inverse, psi, psi_inverse, q1_formula, theta, theta_inverse, two_column_formula,
    two_column_instances, two_column_table, xy_diagram, ContentGf, DecoratedPath, Decoration, DensePath, LabelSpec,
    StackPath, StackShape, XYDiagram,
};
use symfunc_core::Composition;

use super::{at_q_t, first_failure, same_content, same_poly};
use crate::catalog::Scope;
use crate::context::Context;
use crate::report::{Outcome, Params};
use crate::VerifierError;

fn n_k_cases(scope: &Scope, cap: usize, ks: impl Fn(usize) -> std::ops::RangeInclusive<usize>) -> Vec<Params> {
    (1..=cap).flat_map(|n| ks(n).filter(|&k| scope.wants_k(k)).map(move |k| Params::n(n).k(k))).collect()
}

pub fn omp_cases(scope: &Scope) -> Vec<Params> {
    n_k_cases(scope, scope.cap(5, 6), |n| 0..=n - 1)
}

pub fn omp(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, k) = (p.n, p.k_value());
    let (rise, val) = (ctx.rise(n)?, ctx.val(n)?);
    let (q, zero) = (MultiPoly::q(), MultiPoly::zero());
    for alpha in Composition::all(n) {
        let (r, v) = (rise[k].coefficient(&alpha), val[k].coefficient(&alpha));
        let pairs = [
            ("Rise(q,0)", at_q_t(&r, &q, &zero), Statistic::Dinv),
            ("Rise(0,q)", at_q_t(&r, &zero, &q), Statistic::Maj),
            ("Val(q,0)", at_q_t(&v, &q, &zero), Statistic::Inv),
            ("Val(0,q)", at_q_t(&v, &zero, &q), Statistic::Minimaj),
        ];
        for (name, poly, stat) in pairs {
            let o = same_poly(
                format!("{name} at x^{:?} against {stat}", alpha.parts()),
                &poly,
                &distribution(&alpha, k + 1, stat),
            );
            if !o.is_pass() {
                return Ok(o);
            }
        }
    }
    Ok(Outcome::Pass)
}

pub fn minimaj_cases(scope: &Scope) -> Vec<Params> {
    n_k_cases(scope, scope.cap(6, 7), |n| 0..=n - 1)
}

pub fn minimaj_equi(_: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, k) = (p.n, p.k_value());
    for alpha in Composition::all(n) {
        let inv = distribution(&alpha, k + 1, Statistic::Inv);
        for stat in [Statistic::Dinv, Statistic::Maj, Statistic::Minimaj] {
            let o = same_poly(
                format!("inv against {stat} on OSP({:?}, {})", alpha.parts(), k + 1),
                &inv,
                &distribution(&alpha, k + 1, stat),
            );
            if !o.is_pass() {
                return Ok(o);
            }
        }
    }
    Ok(Outcome::Pass)
}

pub fn q1_cases(scope: &Scope) -> Vec<Params> {
    n_k_cases(scope, scope.cap(6, 8), |n| 1..=n)
}

pub fn q1(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, k) = (p.n, p.k_value());
    let by_k = ctx.rise(n)?;
    let mut sum = if k < n { by_k[k].clone() } else { ContentGf::zero(n) };
    sum.merge(&by_k[k - 1]);
    let one = MultiPoly::one();
    let at_one = sum.map_coeffs(|c| at_q_t(c, &one, &one));
    let expected = ContentGf::from_symfunc(&q1_formula(n, k)?)?;
    Ok(same_content("Rise_{n,k} + Rise_{n,k-1} at q = t = 1 against the closed form", &at_one, &expected))
}

pub fn sym_cases(scope: &Scope) -> Vec<Params> {
    n_k_cases(scope, scope.cap(6, 7), |n| 0..=n - 1)
}

/// Content symmetry, then invariance of the polynomial in `N` variables under
/// every adjacent swap.
fn symmetric(f: &ContentGf, vars: usize) -> Result<Outcome, VerifierError> {
    if let Some((alpha, i)) = f.symmetry_violation() {
        let mut swapped = alpha.parts().to_vec();
        swapped.swap(i - 1, i);
        let swapped = Composition::new(swapped)?;
        return Ok(Outcome::mismatch(
            format!("x^{:?} against x^{:?} (swap {i}, {})", alpha.parts(), swapped.parts(), i + 1),
            f.coefficient(&alpha).serialize(),
            f.coefficient(&swapped).serialize(),
        ));
    }
    let x = f.to_x_poly(vars)?;
    Ok(first_failure((1..vars).map(|i| same_poly(format!("swap of x_{i} and x_{}", i + 1), &x, &x.swap_x(i, i + 1)))))
}

pub fn llt_sym(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let (n, k) = (p.n, p.k_value());
    let rise = ctx.rise(n)?;
    let sym = symmetric(&rise[k], ctx.vars.unwrap_or(n))?;
    if !sym.is_pass() {
        return Ok(sym);
    }
    let mut total = ContentGf::zero(n);
    for shape in StackShape::all(n, k) {
        let area = MultiPoly::monomial(Monomial::qt(0, shape.area() as u32));
        total.merge(&llt_content(&shape).map_coeffs(|c| c * &area));
    }
    Ok(same_content("Rise_{n,k} against the LLT sum", &rise[k], &total))
}

pub fn val_sym(ctx: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let val = ctx.val(p.n)?;
    symmetric(&val[p.k_value()], ctx.vars.unwrap_or(p.n))
}

pub fn xy_cases(scope: &Scope) -> Vec<Params> {
    (1..=scope.cap(8, 10)).map(Params::n).collect()
}

pub fn xy(_: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let n = p.n;
    for path in two_column_instances(n) {
        let d = xy_diagram(&path)?;
        d.classify()?;
        let text = d.to_string();
        let round = d.to_path()? == path
            && d.hdinv() == path.hdinv()
            && d.area() == path.area()
            && text.parse::<XYDiagram>()? == d;
        if !round {
            return Ok(Outcome::mismatch("XY diagram round trip", &d, &path));
        }
    }
    for ((m, j), c) in two_column_table(n) {
        let o =
            same_poly(format!("coefficient of t^{j} s_{{2^{m},1^{}}}", n - 2 * m), &c, &two_column_formula(n, m, j));
        if !o.is_pass() {
            return Ok(o);
        }
    }
    Ok(Outcome::Pass)
}

pub fn bijection_cases(scope: &Scope) -> Vec<Params> {
    (1..=scope.cap(5, 6)).flat_map(|n| ["gamma", "phi", "psi", "theta"].map(|v| Params::n(n).variant(v))).collect()
}

/// The maps depend only on the relative order of labels, so every content
/// `α ⊨ n` covers all labelings up to an order-preserving relabeling.
pub fn bijections(_: &Context, p: &Params) -> Result<Outcome, VerifierError> {
    let n = p.n;
    let broken =
        |what: String, object: String| Ok(Outcome::mismatch(what, object, "the statistic or the inverse disagrees"));
    for alpha in Composition::all(n) {
        let spec = LabelSpec::Content(alpha.clone());
        match p.variant_str() {
            "phi" | "psi" => {
                let fall = p.variant_str() == "phi";
                let kind = if fall { Decoration::Fall } else { Decoration::Val };
                for size in 0..n {
                    for d in DecoratedPath::all(kind, n, size, &spec) {
                        let s = if fall { phi(&d)? } else { psi(&d)? };
                        let back = if fall { phi_inverse(&s)? } else { psi_inverse(&s)? };
                        let stats = if fall {
                            s.area() == d.area_minus() && s.hdinv() == d.path().dinv()
                        } else {
                            s.area() == d.path().area() && s.wdinv() == d.dinv_minus()
                        };
                        if s.k() != n - size - 1 || !stats || back != d {
                            return broken(format!("{} of {d}", p.variant_str()), s.to_string());
                        }
                    }
                }
            }
            "theta" => {
                for k in 0..n {
                    let stacks = StackPath::all(n, k, &spec);
                    let dense = DensePath::all(n, k, &spec);
                    if stacks.len() != dense.len() {
                        return Ok(Outcome::mismatch(
                            format!("sizes at content {:?}, k={k}", alpha.parts()),
                            stacks.len(),
                            dense.len(),
                        ));
                    }
                    for s in stacks {
                        let d = theta(&s)?;
                        if d.area() != s.area()
                            || d.wdinv() != s.wdinv()
                            || d.x_monomial() != s.x_monomial()
                            || theta_inverse(&d)? != s
                        {
                            return broken(format!("theta of {s}"), d.to_string());
                        }
                    }
                }
            }
            "gamma" => {
                if let Some(o) = gamma_failure(&alpha)? {
                    return Ok(o);
                }
            }
            other => return Err(VerifierError::Config(format!("unknown bijection {other:?}"))),
        }
    }
    Ok(Outcome::Pass)
}

fn gamma_failure(alpha: &Composition) -> Result<Option<Outcome>, VerifierError> {
    let n = alpha.size();
    let spec = LabelSpec::Content(alpha.clone());
    for k in 0..n {
        let dense = DensePath::all(n, k, &spec);
        let target: BTreeSet<String> = dense.iter().filter(|d| d.wdinv() == 0).map(|d| d.to_string()).collect();
        let mut image = BTreeSet::new();
        for pi in enumerate_osp(alpha, k + 1) {
            let g = gamma(alpha, k, &pi)?;
            let ok = g.wdinv() == 0
                && g.area() == pi.minimaj()
                && g.content() == *alpha
                && gamma_inverse(alpha, k, &g).ok() == Some(pi.clone());
            if !ok || !image.insert(g.to_string()) {
                return Ok(Some(Outcome::mismatch(
                    format!("gamma of {pi}"),
                    g,
                    "an injective, minimaj-to-area, invertible image",
                )));
            }
        }
        if image != target {
            let missing = target.difference(&image).next().cloned().unwrap_or_default();
            return Ok(Some(Outcome::mismatch(
                format!("image of gamma at content {:?}, k={k}", alpha.parts()),
                image.len(),
                format!("{} paths with wdinv 0, e.g. {missing}", target.len()),
            )));
        }
        for d in &dense {
            if gamma_inverse(alpha, k, d).is_ok() != (d.wdinv() == 0) {
                return Ok(Some(Outcome::mismatch("gamma inverse accepts exactly wdinv 0", d, d.wdinv())));
            }
        }
    }
    Ok(None)
}

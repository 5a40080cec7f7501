//! Case generators and check bodies, grouped by what they compute.

pub mod catalan;
pub mod combinatorial;
pub mod operator;

use exact_algebra::{MultiPoly, RatFunc, Var};
use path_combinatorics::ContentGf;
use symfunc_core::{Basis, SymFunc};

use crate::report::Outcome;
use crate::VerifierError;

/// The first failure, or a pass when there is none.
fn first_failure(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes.into_iter().find(|o| !o.is_pass()).unwrap_or(Outcome::Pass)
}

fn same_poly(what: impl Into<String>, left: &MultiPoly, right: &MultiPoly) -> Outcome {
    if left == right {
        Outcome::Pass
    } else {
        Outcome::mismatch(what, left.serialize(), right.serialize())
    }
}

fn same_ratfunc(what: impl Into<String>, left: &RatFunc, right: &RatFunc) -> Outcome {
    if left == right {
        Outcome::Pass
    } else {
        Outcome::mismatch(what, left.serialize(), right.serialize())
    }
}

/// Compares two symmetric functions in the Schur basis.
fn same_sym(what: &str, left: &SymFunc, right: &SymFunc) -> Result<Outcome, VerifierError> {
    let (a, b) = (left.convert(Basis::S)?, right.convert(Basis::S)?);
    Ok(if a == b {
        Outcome::Pass
    } else {
        Outcome::mismatch(format!("{what} (Schur expansions)"), a.serialize(), b.serialize())
    })
}

/// Compares coefficientwise by x-content, reporting the first differing `x^α`.
fn same_content(what: &str, left: &ContentGf, right: &ContentGf) -> Outcome {
    match left.first_difference(right) {
        None => Outcome::Pass,
        Some((alpha, a, b)) => {
            Outcome::mismatch(format!("{what}, coefficient of x^{:?}", alpha.parts()), a.serialize(), b.serialize())
        }
    }
}

fn at_q_t(p: &MultiPoly, q: &MultiPoly, t: &MultiPoly) -> MultiPoly {
    // Substitute t first so that a value of t involving q is not rewritten again.
    let u = MultiPoly::var(Var::U);
    p.substitute(Var::T, &u).substitute(Var::Q, q).substitute(Var::U, t)
}

fn int_poly(n: &exact_algebra::BigInt) -> MultiPoly {
    MultiPoly::constant(exact_algebra::BigRational::from_integer(n.clone()))
}

//! Exact arithmetic kernel: rationals, sparse polynomials in q, t, z, w, u and
//! x-variables, rational functions in q and t, and q-analogues.
//!
//! Nothing here uses floating point. Equality of rational functions is decided by
//! cross-multiplication, so correctness never depends on how far a fraction was
//! reduced.

pub mod gcd;
pub mod monomial;
pub mod poly;
pub mod qnumbers;
pub mod ratfunc;
pub mod specialize;
pub mod zpoly;

pub use monomial::{Monomial, Var, MAX_X_VARS};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{rat, ratio, MultiPoly};
pub use qnumbers::{
    binomial, cyclotomic, poly_divides, poly_quotient, q_lucas_check, qbinom, qfact, qint, qtint, LucasOutcome, QtZero,
};
pub use ratfunc::RatFunc;
pub use specialize::{specialize, specialize_poly, Bindings};
pub use zpoly::ZPoly;

/// Errors raised by the algebra kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("substitution makes a denominator identically zero: {0}")]
    ZeroDenominator(String),
    #[error("binomial with k = {k} > n = {n}")]
    InvalidBinomial { n: u32, k: u32 },
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("binding for {0} is not allowed here")]
    InvalidBinding(String),
}

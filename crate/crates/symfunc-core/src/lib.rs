//! Symmetric functions over ℚ(q,t): partitions, the classical bases, the Hall
//! inner product, `ω`, plethysm and explicit x-variable expansions.
//!
//! The monomial basis is the hub: every conversion passes through it using
//! transition matrices that are counted by brute force and memoized per degree.

pub mod alphabet;
pub mod expand;
pub mod partition;
pub mod symfunc;
pub mod tables;

pub use alphabet::{plethysm, plethysm_poly, plethysm_x_times, Alphabet};
pub use expand::{
    expand_vars, expand_vars_in, from_x_poly, qsym_coeff, schur_expand, schur_expand_poly, symmetry_violation,
    SchurExpansion,
};
pub use partition::{Composition, Partition};
pub use symfunc::{Basis, MacdonaldBasis, SymFunc};
pub use tables::{count_ssyt, tables, Classical, DegreeTables};

use exact_algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("not symmetric: swapping x{i} and x{j} changes the polynomial")]
    NotSymmetric { i: usize, j: usize },
    #[error("degrees {left} and {right} differ")]
    DegreeMismatch { left: usize, right: usize },
    #[error("a coefficient is not a polynomial")]
    NonPolynomialCoefficient,
    #[error("conversion involving the Htilde basis needs a Macdonald basis provider")]
    NeedsMacdonaldBasis,
    #[error("alphabet {0} does not have integer multiplicities")]
    NonIntegerAlphabet(String),
    #[error("alphabet must not contain x-variables here")]
    NotScalarAlphabet,
    #[error("{0} x-variables requested; at most 11 are supported")]
    TooManyVariables(usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("{0}")]
    Basis(String),
}

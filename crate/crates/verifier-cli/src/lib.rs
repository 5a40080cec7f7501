//! A catalog of exact checks around the Delta Conjecture, a concurrent runner
//! with a disk cache for the Macdonald basis, and deterministic reports.
//!
//! Each check compares two exactly computed objects (symmetric functions,
//! polynomials in q, t, z, w, or generating functions stored by x-content).
//! Theorem-status checks must pass; conjecture-status checks report mismatches
//! without failing the run.

pub mod catalog;
pub mod checks;
pub mod context;
pub mod report;
pub mod runner;

pub use catalog::{find, CheckSpec, Profile, Scope, Status, CATALOG};
pub use context::Context;
pub use report::{CaseResult, Format, Outcome, Params, Report};
pub use runner::{run_check, run_suite, Settings};

use exact_algebra::AlgebraError;
use macdonald_ops::MacError;
use osp_combinatorics::OspError;
use path_combinatorics::PathError;
use symfunc_core::SymError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifierError {
    #[error("unknown check {0:?}; run with --list to see the catalog")]
    UnknownCheck(String),
    #[error("configuration: {0}")]
    Config(String),
    #[error("cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Mac(MacError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Osp(#[from] OspError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl From<MacError> for VerifierError {
    fn from(e: MacError) -> VerifierError {
        match e {
            MacError::Cache(msg) => VerifierError::Cache(msg),
            other => VerifierError::Mac(other),
        }
    }
}

impl VerifierError {
    /// Usage and configuration problems, which stop the run with exit code 2
    /// instead of being recorded against a single case.
    pub fn is_fatal(&self) -> bool {
        matches!(self, VerifierError::UnknownCheck(_) | VerifierError::Config(_) | VerifierError::Cache(_))
    }
}

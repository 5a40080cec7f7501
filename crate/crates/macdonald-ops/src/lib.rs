//! Modified Macdonald polynomials `H̃_μ`, the alphabets `B_μ` and `T_μ`, and the
//! eigenoperators `Δ_f`, `Δ′_f` and `∇`.
//!
//! `H̃_μ` comes from the filling formula and is only used after it passes a
//! battery of inner-product identities. Operators act by expanding in the `H̃`
//! basis, scaling by eigenvalues and recombining in the Schur basis.

pub mod basis;
pub mod cache;
pub mod cells;
pub mod engine;
pub mod fillings;
pub mod trecip;

pub use cells::{bmu, bmu_minus_one, cells, tmu, CellStats};
pub use engine::{BatteryReport, Config, Macdonald, Op, CACHE_DIR_ENV, DEFAULT_CAP};
pub use trecip::{delta_e_t_recip_closed, delta_t_recip, specialize_t_recip};

use exact_algebra::AlgebraError;
use symfunc_core::{Partition, SymError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MacError {
    #[error(transparent)]
    Sym(#[from] SymError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("degree {n} exceeds the configured cap {cap}")]
    DegreeCap { n: usize, cap: usize },
    #[error("H̃{mu} fails the identity {identity}")]
    Validation { mu: Partition, identity: String },
    #[error("cannot solve in the H̃ basis: {0}")]
    Singular(String),
    #[error("cache: {0}")]
    Cache(String),
}

//! Ordered multiset partitions, their four statistics, and the bijection γ onto
//! densely labeled paths with `wdinv = 0`.

pub mod gamma;
pub mod osp;
pub mod stats;

pub use gamma::{gamma, gamma_inverse};
pub use osp::{enumerate_osp, OrderedMultisetPartition};
pub use stats::{distribution, MinimajWord, Statistic};

use path_combinatorics::PathError;
use symfunc_core::SymError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OspError {
    #[error("invalid ordered multiset partition: {0}")]
    Invalid(String),
    #[error("cannot parse {0:?} as blocks separated by '|'")]
    Parse(String),
    #[error("content {alpha} with {blocks} blocks does not match {found}")]
    Mismatch { alpha: String, blocks: usize, found: String },
    #[error("path is not in the image of gamma: {0}")]
    NotInImage(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

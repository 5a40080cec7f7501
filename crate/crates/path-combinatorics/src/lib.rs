//! Dyck-path combinatorics for the Delta Conjecture.
//!
//! Labeled Dyck paths with their rise, fall and valley decorations, paths under
//! leaning stacks, densely labeled paths, the bijections between them, the
//! generating functions `Rise_{n,k}` and `Val_{n,k}`, LLT refinements with XY
//! diagrams, 4-variable Catalan polynomials and partially labeled paths.
//!
//! Generating functions in the x-variables are stored by content: the coefficient
//! of `x^α` for every strong composition `α` (see [`ContentGf`]). Every statistic
//! here depends only on the relative order of labels, so this determines the
//! polynomial in any number of variables.

pub mod catalan;
pub mod content;
pub mod decorated;
pub mod dense;
pub mod dyck;
pub mod formulas;
pub mod gf;
pub mod labels;
pub mod llt;
pub mod partial;
pub mod stack;
pub mod tally;

mod parallel;

pub use catalan::{
    b_vector, cat4, cat4_touch, catalan_dinv_vector, catmod4, catmod4_comp, catmod4_touch, peak_report, reading_order,
    star_composition, PeakReport,
};
pub use content::ContentGf;
pub use decorated::{DecoratedPath, Decoration};
pub use dense::{theta, theta_inverse, DensePath, DenseSquare};
pub use dyck::{DyckPath, LabeledPath, PathStats};
pub use formulas::{k1_formula, q1_formula, run_type_census, run_type_count, two_column_formula};
pub use gf::{rise_by_k, rise_gf, rise_gf_content, route_gf, val_by_k, val_gf, val_gf_content, Family, Route};
pub use labels::LabelSpec;
pub use llt::{
    is_yamanouchi, llt, llt_content, two_column_instances, two_column_table, xy_diagram, yamanouchi_schur, Letter,
    Side, XYClass, XYDiagram,
};
pub use partial::{partial_gf, partial_gf_x, partial_touch_gf, DinvVariant, PartialPath};
pub use stack::{phi, phi_inverse, psi, psi_inverse, StackPath, StackShape};
pub use tally::Tally;

use symfunc_core::SymError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("row or column {index} is not a legal {kind} decoration")]
    IllegalDecoration { kind: Decoration, index: usize },
    #[error("decoration has {found} entries, expected {expected}")]
    DecorationSize { expected: usize, found: usize },
    #[error(
        "{family} n={n} k={k} content {content}: route {left} gives {left_value}, route {right} gives {right_value}"
    )]
    RouteDisagreement {
        family: Family,
        n: usize,
        k: usize,
        content: String,
        left: Route,
        right: Route,
        left_value: String,
        right_value: String,
    },
    #[error("route {route} does not compute {family}")]
    RouteNotApplicable { family: Family, route: Route },
    #[error("requires 0 <= k < n, got n={n} k={k}")]
    BadParameters { n: usize, k: usize },
    #[error("leaning stack must have at most one diagonal step, found {0}")]
    NotTwoColumn(usize),
    #[error("reading word {0:?} is not Yamanouchi")]
    NotYamanouchi(Vec<usize>),
    #[error("invalid XY diagram: {0}")]
    InvalidDiagram(String),
    #[error("XY diagram fits neither type: {0}")]
    Unclassifiable(String),
    #[error("a statistic produced the negative exponent {exponent} of {var}")]
    NegativeExponent { var: &'static str, exponent: i64 },
    #[error("{0} x-variables requested; supported range is n..=11")]
    Variables(usize),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Sym(#[from] SymError),
}

//! Exact arithmetic substrate.
//!
//! Everything here is integer-exact: arbitrary-precision integers, Laurent
//! polynomials with integer coefficients in one or several commuting
//! variables, words in free groups, and truncated Magnus expansions in
//! non-commuting variables.

mod free_group;
mod laurent;
mod magnus;
mod matrix;

pub use free_group::{FreeWord, Letter};
pub use laurent::LaurentPoly;
pub use magnus::{magnus_expand, MagnusSeries};
pub use matrix::{bareiss_det, det, det_by_permutations, permutations, Ring};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("expected {expected} derivative orders, got {got}")]
    OrderArity { expected: usize, got: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("variable lists differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("generator index {gen} out of range for rank {rank}")]
    GeneratorOutOfRange { gen: usize, rank: usize },
    #[error("truncation degree must be at least 1")]
    ZeroDegree,
}

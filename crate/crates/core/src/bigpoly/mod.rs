//! Exact arithmetic substrate: integer polynomials, reduced rational
//! functions, and power-series expansion.
//!
//! Everything downstream (Chebyshev constructions, transfer matrices,
//! lattice-path generating functions) is built on these three types.
//! All values are immutable after construction and all operations are
//! pure, so they can be shared freely across threads.

mod poly;
mod ratfunc;
mod series;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use series::Series;

use thiserror::Error;

/// Errors from the exact-arithmetic layer.
///
/// These signal either a precondition violation that user input can reach
/// (a denominator with no power series at 0) or an internal consistency
/// failure that would indicate a transcription bug in a closed formula
/// (a division that should be exact but is not, a series that should be
/// integral but is not).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomial division is not exact")]
    NotExact,
    #[error("denominator has zero constant term; no power series at x = 0")]
    ZeroConstantTerm,
    #[error("series coefficient at index {0} is not an integer")]
    NonIntegerSeries(usize),
}

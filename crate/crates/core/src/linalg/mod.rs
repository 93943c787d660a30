//! Exact rational sparse linear algebra: ranks, kernels, and homology
//! dimensions of chain complexes, with a modular-arithmetic cross-check
//! oracle.
//!
//! Everything downstream of this module reduces to [`rank`] eventually, so
//! determinism matters here: entry iteration is ordered and pivot choices
//! are tie-broken canonically.

mod complex;
mod matrix;
mod modular;
mod rank;

pub use complex::ChainComplexDims;
pub use matrix::{add_scaled, rat, Rational, SparseMatrix, SparseVec};
pub use modular::{is_prime, random_prime_31, rank_modular};
pub use rank::{kernel_basis, rank, Echelon, SpanSolver};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    /// A stored denominator is divisible by the chosen prime; the caller
    /// retries with a fresh prime.
    #[error("denominator divisible by prime {prime}")]
    DenominatorCollision { prime: u64 },
    #[error("composite of differentials at position {position} is nonzero")]
    NotAComplex { position: usize },
    #[error(
        "differential at position {position} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}"
    )]
    ShapeMismatch {
        position: usize,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
}

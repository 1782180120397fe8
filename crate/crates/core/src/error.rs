//! Crate-wide error type.

use thiserror::Error;

use crate::pair::VerificationReport;

#[derive(Debug, Error)]
pub enum Error {
    /// Minimal polynomial is not squarefree; the matrix is not
    /// diagonalizable over any field.
    #[error("matrix is not diagonalizable (minimal polynomial {min_poly} is not squarefree)")]
    NotDiagonalizable { min_poly: String },

    /// The minimal polynomial has a factor with no rational roots. The
    /// matrix may be diagonalizable over an extension field, but such
    /// instances are outside this toolkit's exact-rational scope.
    #[error("spectrum is not rational (irreducible non-linear factor {factor})")]
    IrrationalSpectrum { factor: String },

    /// The eigenspace support graph does not admit end-to-end orderings.
    #[error("eigenspace support graph of {matrix} is not a single path: {detail}")]
    NotAPath { matrix: &'static str, detail: String },

    /// Split-sequence machinery needs a one-dimensional first split subspace.
    #[error("first split subspace has dimension {dim}, expected 1")]
    Rho0NotOne { dim: usize },

    #[error("bad parameter: {0}")]
    BadParameter(String),

    /// A generated pair failed its own verification; the report carries the
    /// failing axiom and witness.
    #[error("constructed pair rejected by verification: {}", .0.summary())]
    ConstructionRejected(Box<VerificationReport>),

    /// Input matrices do not form a tridiagonal pair.
    #[error("not a tridiagonal pair: {}", .0.summary())]
    NotATdPair(Box<VerificationReport>),

    /// The bilinear-form solution space did not have dimension 1.
    #[error("invariant form solution space has dimension {0}, expected 1")]
    FormSpaceDimension(usize),

    /// The intertwiner solution space had dimension above 1, which the
    /// Schur-type uniqueness contract rules out for irreducible pairs.
    #[error("intertwiner solution space has dimension {0}, expected 0 or 1")]
    SolutionSpaceDimension(usize),

    /// An internal consistency assertion failed; indicates a bug or
    /// non-conforming input that slipped past verification.
    #[error("internal invariant violation: {0}")]
    InternalInvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

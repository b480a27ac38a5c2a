//! Error types shared across the crate.
//!
//! # Design Notes
//! - A single `Error` enum with one variant per failure mode keeps the
//!   `Result` plumbing uniform; variants carry human-readable context.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exact polynomial division left a nonzero remainder.
    #[error("not divisible: {0}")]
    NotDivisible(String),
    /// A quantity that must be a monomial (graded-homogeneous) is not.
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    /// Division by zero in an exact scalar domain.
    #[error("division by zero")]
    DivisionByZero,
    /// A rational function expected to be polynomial has a nontrivial denominator.
    #[error("not a polynomial: {0}")]
    NotPolynomial(String),
    /// An index was outside its valid range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    /// Two combinatorial objects have incompatible sizes or levels.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    /// A content-system evaluation outside its certified validity range.
    #[error("out of validity range: {0}")]
    OutOfValidityRange(String),
    /// A node is not an addable or removable node of the requested residue.
    #[error("not an i-node: {0}")]
    NotAnINode(String),
    /// A transposition was applied where the neighbouring tableau is nonstandard.
    #[error("nonstandard neighbour: {0}")]
    NonstandardNeighbor(String),
    /// Canonical-basis elimination could not symmetrize a coefficient.
    #[error("elimination stuck: {0}")]
    EliminationStuck(String),
    /// A matrix operation requiring a square matrix received a non-square one.
    #[error("matrix is not square: {0}")]
    NotSquare(String),
    /// A multipartition is not a crystal vertex (not Kleshchev).
    #[error("not Kleshchev: {0}")]
    NotKleshchev(String),
    /// Replaying a good sequence through the other crystal failed.
    #[error("replay failed: {0}")]
    ReplayFailed(String),
    /// A configuration value is invalid for the requested construction.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    /// Text input could not be parsed.
    #[error("parse error: {0}")]
    ParseError(String),
    /// A constructed content system failed its axiom certification.
    #[error("content-system axiom violated: {0}")]
    AxiomViolated(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

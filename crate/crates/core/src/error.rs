//! Error type shared across the crate.

use thiserror::Error;

/// Errors reported by the lattice, compression, and oracle operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A point (or profile) has the wrong number of coordinates for the signature.
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A coordinate index is outside `0..dims`.
    #[error("coordinate index {index} out of range for {dims} coordinates")]
    IndexOutOfRange { index: usize, dims: usize },

    /// A nonnegative-type coordinate carries a negative value.
    #[error("coordinate {index} must be nonnegative, found {value}")]
    NegativeCoordinate { index: usize, value: i64 },

    /// The operation is only defined on pure Z^k or pure N^d signatures.
    #[error("{operation} requires a pure signature (all-Z or all-N), not a mixed one")]
    MixedDomain { operation: &'static str },

    /// The operation needs a Z-type coordinate at this index.
    #[error("coordinate {index} is not Z-type")]
    NotZCoordinate { index: usize },

    /// The operation needs an N-type coordinate at this index.
    #[error("coordinate {index} is not N-type")]
    NotNCoordinate { index: usize },

    /// The operation needs more coordinates than the signature offers.
    #[error("{operation} requires at least {need} coordinates")]
    TooFewCoordinates {
        operation: &'static str,
        need: usize,
    },

    /// The set is not compressed along the named coordinate, which the
    /// projection-sum boundary count requires.
    #[error("set is not compressed in coordinate {coordinate}")]
    NotCompressed { coordinate: usize },

    /// The operation is undefined on the empty set.
    #[error("operation is undefined on the empty set")]
    EmptySet,

    /// A size argument must be at least one.
    #[error("size must be at least 1")]
    ZeroSize,

    /// The search would enumerate more states than the configured budget allows.
    #[error("search needs {needed} enumeration steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    /// The search box fails to contain the initial segment it is compared against.
    #[error("search box does not contain the initial segment of size {n}")]
    BoxExcludesInitialSegment { n: u64 },

    /// A malformed search box (empty interval, or negative floor on an N coordinate).
    #[error("invalid search box: {0}")]
    InvalidBox(String),

    /// Rendering only supports two-dimensional signatures.
    #[error("rendering requires a 2-dimensional signature, found {dims} coordinates")]
    NotTwoDimensional { dims: usize },

    /// The text format cannot represent zero-dimensional sets.
    #[error("zero-dimensional signatures are not supported here")]
    ZeroDimensional,

    /// A point-set text document failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

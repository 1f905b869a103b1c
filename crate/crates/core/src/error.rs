//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index pair ({i}, {j}) out of range for n = {n} (need 1 <= i < j <= n)")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
    #[error("duplicate coefficient pair ({i}, {j})")]
    DuplicatePair { i: usize, j: usize },
    #[error("zero coefficient for pair ({i}, {j}); omit absent pairs instead")]
    ZeroCoefficient { i: usize, j: usize },
    #[error("vector length {got} does not match the form on {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the unit form is not connected")]
    NotConnected,
    #[error("the unit form is not non-negative")]
    NotNonNegative,
    #[error("no Dynkin type has {count} roots in rank {rank}; input violates a precondition")]
    UnrecognizedRootCount { rank: usize, count: usize },
    #[error("vector {vec} is not a root of the form")]
    NotARoot { vec: String },
    #[error("root {vec} is not non-isotropic")]
    NotNonIsotropic { vec: String },
    #[error("gauge was built from a different unit form")]
    GaugeMismatch,
    #[error("element belongs to a different unit form")]
    FormMismatch,
    #[error("malformed bracket word: {0}")]
    MalformedWord(String),
    #[error("invalid form document: {0}")]
    InvalidDocument(String),
    #[error("composed form is not a unit form (diagonal != 1)")]
    NotUnitForm,
}

impl Error {
    /// Stable machine-readable code, used by the CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DuplicatePair { .. } => "DuplicatePair",
            Error::ZeroCoefficient { .. } => "ZeroCoefficient",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotConnected => "NotConnected",
            Error::NotNonNegative => "NotNonNegative",
            Error::UnrecognizedRootCount { .. } => "UnrecognizedRootCount",
            Error::NotARoot { .. } => "NotARoot",
            Error::NotNonIsotropic { .. } => "NotNonIsotropic",
            Error::GaugeMismatch => "GaugeMismatch",
            Error::FormMismatch => "FormMismatch",
            Error::MalformedWord(_) => "MalformedWord",
            Error::InvalidDocument(_) => "InvalidDocument",
            Error::NotUnitForm => "NotUnitForm",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, HvError>;

/// Error type shared by all modules of the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum HvError {
    #[error("invalid h-vector: {0}")]
    InvalidHVector(String),

    #[error("not linkable: {0}")]
    NotLinkable(String),

    #[error("improper inclusion: the section exhausts the complete intersection")]
    ImproperInclusion,

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("codimension mismatch: expected {expected}, got {got}")]
    CodimMismatch { expected: usize, got: usize },

    #[error("not Borel-fixed: moving x{from} to x{to} in {gen} leaves the ideal")]
    NotBorel { gen: String, from: usize, to: usize },

    #[error("not a Hilbert polynomial: {0}")]
    NotHilbertPolynomial(String),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown table: {0}")]
    UnknownTable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

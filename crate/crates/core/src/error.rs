use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and strictly decreasing")]
    InvalidPartition,
    #[error("cell ({0}, {1}) lies outside the diagram")]
    CellOutsideDiagram(u32, u32),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("no value assigned to variable {0}")]
    MissingAssignment(u32),
    #[error("a denominator vanishes under the given assignment")]
    ZeroDenominator,
    #[error("{0}")]
    OutOfRange(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("cannot parse {0:?} as {1}")]
    Parse(String, &'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::complex::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("face {0:?} lists a vertex more than once")]
    DuplicateVertexInFace(Vec<usize>),
    #[error("no faces given")]
    EmptyInput,
    #[error("a face must have at least one vertex")]
    EmptyFace,
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    /// Exhaustive enumeration would need `2^required_log2` steps.
    #[error("budget exceeded: enumeration needs 2^{required_log2} steps, budget is {budget}")]
    BudgetExceeded { required_log2: u32, budget: u64 },
    #[error("dimension {0} has no cells above it; the coboundary norm is undefined")]
    EmptyCodomain(isize),
    #[error("every {0}-cochain is a coboundary; there is nothing to minimize over")]
    TrivialQuotient(isize),
    #[error("expected a complete complex K_n^({0})")]
    NotCompleteComplex(usize),
    #[error("expected a graph (dimension at most 1), found dimension {0}")]
    NotAGraph(isize),
    #[error("expected the complete graph on its vertex set")]
    NotComplete,
    #[error("sign matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("sign matrix diagonal entry ({0}, {0}) is not +1")]
    BadDiagonal(usize),
    #[error("sign matrix entry ({row}, {col}) = {value} is not +1 or -1")]
    BadEntry { row: usize, col: usize, value: i64 },
    #[error("vertex {vertex} out of range for a vertex set of size {count}")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("vertex sets differ: {0}")]
    VertexSetMismatch(String),
    #[error("at least {needed} vertices are required, found {found}")]
    TooFewVertices { needed: usize, found: usize },
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(String),
    #[error("face {0} is not in the complex")]
    UnknownFace(Face),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn mismatch(expected: impl ToString, found: impl ToString) -> Self {
        Error::DimensionMismatch { expected: expected.to_string(), found: found.to_string() }
    }
}

/// Fails unless `2^log2 <= budget`.
pub fn check_budget(log2: usize, budget: u64) -> Result<()> {
    if log2 < 64 && (1u64 << log2) <= budget {
        Ok(())
    } else {
        Err(Error::BudgetExceeded { required_log2: log2 as u32, budget })
    }
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("{what} out of range: {value} not in {}", range(*lo, *hi))]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("tableaux have different shapes: {0} vs {1}")]
    ShapeMismatch(String, String),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("not a standard tableau: {0}")]
    InvalidTableau(String),

    #[error("factors are not square ({p}x{q})")]
    NonSquare { p: usize, q: usize },

    #[error("element is not central: [{element}, E[{a},{b}]] = {commutator}")]
    NotCentral {
        element: String,
        a: usize,
        b: usize,
        commutator: String,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

fn range(lo: i64, hi: i64) -> String {
    if hi == i64::MAX {
        format!("{lo}..")
    } else {
        format!("{lo}..={hi}")
    }
}

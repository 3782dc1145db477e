use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order must be at least 1")]
    InvalidGroupOrder,
    #[error("exponent {exponent} is not reduced modulo {k}")]
    InvalidExponent { exponent: u32, k: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroNotInvertible,
    #[error("malformed order: {0}")]
    MalformedOrder(String),
    #[error("row length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("group order mismatch: {left} vs {right}")]
    MixedModulus { left: u32, right: u32 },
    #[error("rows {row} and {} of the prefix block are not in lexicographic order", row + 1)]
    PreconditionS4 { row: usize },
    #[error("invalid monomial matrix: {0}")]
    InvalidMonomial(String),
    #[error("integer overflow in cyclotomic arithmetic")]
    Overflow,
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

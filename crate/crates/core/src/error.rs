use thiserror::Error;

/// Errors raised by the combinatorial and algebraic routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..n: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not standard")]
    NotStandard,

    #[error("not a cocharge word: {0:?}")]
    NotCochargeWord(Vec<usize>),

    #[error("word content {0:?} is not a partition")]
    NonPartitionContent(Vec<usize>),

    #[error("catabolism insertion did not terminate within {0} reads")]
    NonTermination(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("chains seed violates condition ({condition}): {detail}")]
    ChainsCondition { condition: u8, detail: String },

    #[error("monomial vanishes under the antisymmetrizer: {0}")]
    VanishingAntisymmetrization(String),

    #[error("time budget of {millis} ms exceeded")]
    TimeBudgetExceeded { millis: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

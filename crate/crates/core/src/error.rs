use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length must be at least {min}, got {got}")]
    InvalidLength { got: usize, min: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("{what} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid Parikh vector: {0}")]
    InvalidParikh(String),

    #[error("permutation does not have exactly one orbit")]
    NotOneOrbit,

    #[error("word is not primitive, its cyclic shifts are not all distinct")]
    NotPrimitive,

    #[error("Parikh vector sums to {sum}, expected {n}")]
    ParikhSumMismatch { sum: usize, n: usize },

    #[error("first value must be the maximum {expected}, got {got}")]
    MissingSentinel { got: usize, expected: usize },

    #[error("not a BW-array for this Parikh vector")]
    NotBwArray,

    #[error("no word with this Parikh vector has this suffix array")]
    NotSuffixArray,

    #[error("not a mid-sentinel suffix array")]
    NotMidSentinelSuffixArray,

    #[error("word is not binary, letter rank {0} found")]
    NotBinary(usize),

    #[error("search space of {size} exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u64 },
}

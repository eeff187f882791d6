use thiserror::Error;

/// Errors raised by the exact-algebra tower and the operator pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable counts differ: {0} vs {1}")]
    VariableCountMismatch(usize, usize),

    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("variable indices must be distinct, got x{0} twice")]
    IndicesNotDistinct(usize),

    #[error("polynomial is not divisible by (x{i} - x{j})")]
    NonzeroRemainder { i: usize, j: usize },

    #[error("polynomial is not symmetric under all variable swaps")]
    NotSymmetric,

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),

    #[error("partitions have unequal weights: {0} vs {1}")]
    WeightMismatch(u32, u32),

    #[error("partition has {len} parts but n = {n}")]
    PartitionTooLong { len: usize, n: usize },

    #[error("check needs at least {needed} variables but the expansion was computed with n = {n}")]
    NotEnoughVariables { needed: usize, n: usize },

    #[error("parts must be weakly decreasing and positive: {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("subset indices must be strictly increasing within 1..={n}: {indices:?}")]
    InvalidSubset { indices: Vec<usize>, n: usize },

    #[error("denominator is zero")]
    ZeroDenominator,

    #[error("Gram-Schmidt pivot <P,P> vanished at partition {0}")]
    DegenerateGram(String),

    #[error(
        "oracle coefficient for ({lambda}; {mu}) did not clear to an integer polynomial: {value}"
    )]
    OracleNotIntegral {
        lambda: String,
        mu: String,
        value: String,
    },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared across the polynomial, combinatorial, and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Series inversion requires the constant term to be exactly 1.
    #[error("constant term is not 1")]
    NonUnitConstantTerm,
    /// Two truncated series with different orders were combined.
    #[error("truncation orders differ: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    /// An odd-degree term survived where an even polynomial was required.
    #[error("odd-degree term survived at x^{0}")]
    OddTermSurvived(usize),
    /// A substitution produced a negative exponent.
    #[error("substitution produced a negative exponent ({0})")]
    NegativeExponent(i64),
    /// A state space or enumeration exceeded its configured capacity.
    #[error("capacity exceeded: needs {needed}, cap is {cap}")]
    CapacityExceeded { needed: u128, cap: u128 },
    /// An index or argument fell outside its documented range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    /// A composition had a part that is not a positive odd integer.
    #[error("not a composition into odd parts")]
    NotOddComposition,
    /// A composition's sum exceeded the ambient bound N.
    #[error("composition sum exceeds N")]
    SumExceedsN,
    /// Two containers that must have equal sizes did not.
    #[error("size mismatch")]
    SizeMismatch,
    /// A partition was expected to be almost self-conjugate and is not.
    #[error("partition is not almost self-conjugate")]
    NotAsc,
    /// A partition listing was not weakly decreasing and positive.
    #[error("malformed partition")]
    MalformedPartition,
    /// An enumeration over partitions of an even number got an odd target.
    #[error("target must be even")]
    OddTarget,
    /// A function's stated precondition was violated by the arguments.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// An argument violated a required inequality.
    #[error("range violation: {0}")]
    RangeViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

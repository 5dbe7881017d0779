use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {degree} out of range (must be 1..=65535)")]
    DegreeOutOfRange { degree: usize },

    #[error("cannot parse permutation: {msg}")]
    ParsePermutation { msg: String },

    #[error("bad generator file: {msg}")]
    GeneratorFile { msg: String },

    #[error("group order {order} exceeds exhaustive cap {cap}")]
    CapExceeded { order: u128, cap: u128 },

    #[error("quotient index {index} exceeds quotient cap {cap}")]
    QuotientCapExceeded { index: u128, cap: u128 },

    #[error("subgroup is not normal in the parent group")]
    NotNormal,

    #[error("not a member of the group: {0}")]
    NotInGroup(String),

    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: u128 },

    #[error("constructor error: {0}")]
    Constructor(String),

    #[error("syntax error at byte {pos}: {msg}")]
    ExprSyntax { pos: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("bad formation spec: {0}")]
    SpecFile(String),

    #[error("covering is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("covering is not a partition of its prime set")]
    NotPartition,

    #[error("arithmetic overflow computing a group-theoretic quantity")]
    Overflow,

    #[error("unknown appendix item: {0}")]
    UnknownAppendixItem(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

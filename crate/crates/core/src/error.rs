use thiserror::Error;

use crate::exactlin::FieldTag;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime no larger than 2^31")]
    NotPrime(u64),
    #[error("unrecognised field `{0}` (expected gf:<p>, q, r or c)")]
    BadFieldSpec(String),
    #[error("no exact arithmetic over field {0}")]
    FieldNotComputable(FieldTag),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("brute-force search needs {needed} vectors, above the bound {bound}")]
    BoundExceeded { needed: u128, bound: u128 },
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("invalid transformation: {0}")]
    InvalidTransformation(String),
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("J-class {0} contains no idempotent")]
    NoIdempotents(usize),
    #[error("the monoid is a permutation group; use the group path")]
    IsGroup,
    #[error("the monoid is not 0-transitive")]
    Not0Transitive,
    #[error("the monoid is not 2-transitive")]
    NotTwoTransitive,
    #[error("the element list is not closed under composition")]
    NotClosed,
    #[error("structure is disconnected")]
    Disconnected,
    #[error("digraph has a directed cycle")]
    Cyclic,
    #[error("semilattice has no minimum, or some meet is undefined: {0}")]
    NoMinimum(String),
    #[error("invalid 0/1 matrix: {0}")]
    BadMatrix(String),
    #[error("column {0} is not the indicator of an upper set")]
    NotUpperSets(usize),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

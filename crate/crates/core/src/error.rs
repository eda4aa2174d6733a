use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index set contains duplicate element {0}")]
    DuplicateElement(i64),

    #[error("block coordinates must have odd length, got {0}")]
    EvenBlockLength(usize),

    #[error("block coordinates must be strictly increasing at position {0}")]
    NonIncreasingBlocks(usize),

    #[error("parse error at column {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(i64),

    #[error("ladder shift must be nonzero")]
    ZeroShift,

    #[error("empty window: lo = {lo} exceeds hi = {hi}")]
    EmptyWindow { lo: i64, hi: i64 },

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("the zero polynomial has no Sturm chain")]
    ZeroPolynomial,

    #[error("diagram {0} is singular: its potential has real poles")]
    NotRegular(String),

    #[error("state {0} is a member of the diagram")]
    StateInDiagram(i64),

    #[error("flip order {order:?} is not a permutation of {set:?}")]
    NotAPermutation { order: Vec<i64>, set: Vec<i64> },

    #[error("cannot compose arrows: source {source_diagram} differs from target {target}")]
    ArrowMismatch {
        source_diagram: String,
        target: String,
    },

    #[error("flip multiset has repeated element {0}; use the multiset intertwiner")]
    RepeatedFlip(i64),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("computation cancelled")]
    Cancelled,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

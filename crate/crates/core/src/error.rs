use thiserror::Error;

use crate::partition::Partition;
use crate::ring::Grassmannian;

/// Errors raised by the library.
///
/// Variants split into two families: malformed input text ([`Error::is_parse`])
/// and well-formed input that is mathematically invalid in its context.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {text:?}: {reason}")]
    InvalidPartition { text: String, reason: String },

    #[error("partition {partition} does not fit the {rows}x{cols} rectangle")]
    DoesNotFit {
        partition: Partition,
        rows: usize,
        cols: usize,
    },

    #[error("invalid Grassmannian Gr({k},{n}): need 1 <= k < n")]
    InvalidGrassmannian { k: usize, n: usize },

    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch {
        left: Grassmannian,
        right: Grassmannian,
    },

    #[error("degree mismatch: expected total degree {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("cannot integrate a non-homogeneous element")]
    NotHomogeneous,

    #[error("polynomial is not symmetric under the transposition ({alphabet}{i} {alphabet}{j})")]
    NotSymmetric { alphabet: char, i: usize, j: usize },

    #[error("exponent vector of length {actual} does not match alphabet sizes ({x}, {y})")]
    AlphabetMismatch { x: usize, y: usize, actual: usize },

    #[error("non-integral Chern class in degree {degree}")]
    NonIntegral { degree: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("bundle of rank {rank} exceeds the ambient dimension {dimension}")]
    RankExceedsDimension { rank: usize, dimension: usize },

    #[error("zero locus is not a surface: bundle rank {rank}, expected {expected}")]
    NotASurface { rank: usize, expected: usize },

    #[error("bundle has too many Chern roots ({rank}) to expand")]
    TooManyRoots { rank: u128 },

    #[error("first Betti number must be even, got {0}")]
    OddFirstBetti(i64),

    #[error("{0}")]
    InvalidInvariant(String),
}

impl Error {
    /// True for errors caused by unparseable text rather than bad mathematics.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::InvalidPartition { .. } | Error::Syntax { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Two operands act on different numbers of points.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// An image table is not a bijection, or a point is out of range.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// A rank outside `0..n!` was passed to `unrank`.
    #[error("rank {rank} out of range for degree {degree}")]
    RankOutOfRange { rank: usize, degree: usize },

    /// A graph constructor was fed loops, duplicate edges or bad vertex ids.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// Textual input could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// The requested computation exceeds the configured size guard.
    #[error("capacity exceeded: {task} needs {required} but the limit is {limit}")]
    Capacity {
        task: String,
        required: usize,
        limit: usize,
    },

    /// An operation that assumes a generating set was given a set whose
    /// transposition graph is disconnected.
    #[error("set does not generate the symmetric group: {0}")]
    NotGenerating(String),

    /// The degree is outside the range an operation supports.
    #[error("unsupported degree {n}: {reason}")]
    UnsupportedDegree { n: usize, reason: String },

    /// A named family was requested with a bad name or degree.
    #[error("invalid family: {0}")]
    InvalidFamily(String),

    /// A documented precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A certified internal property failed; indicates a bug or an input
    /// that silently violates a contract (e.g. a mapping presented as an
    /// automorphism that is not one).
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

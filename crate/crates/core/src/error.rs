use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("vertex {vertex} out of range for a tree of order {n}")]
    BadVertexId { vertex: usize, n: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("not a permutation of 0..{n}: {msg}")]
    NotAPermutation { n: usize, msg: String },

    #[error("negative color increment between positions {position} and {}", position + 1)]
    NegativeIncrement { position: usize },

    #[error("no certifying ordering found: {0}")]
    SearchFailed(String),

    #[error("bad family parameters: {0}")]
    BadParams(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("tree of order {n} exceeds the exact-search limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("coloring has {got} entries, tree has {n} vertices")]
    IncompleteColoring { n: usize, got: usize },

    #[error("vertex {vertex} has negative color {color}")]
    NegativeColor { vertex: usize, color: i64 },

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

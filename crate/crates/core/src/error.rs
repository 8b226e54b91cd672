use thiserror::Error;

/// Errors raised by graph construction, solvers, and reductions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("pattern graph has {size} vertices, the search bound is {bound}")]
    PatternTooLarge { size: usize, bound: usize },

    #[error("colouring has {got} entries but {expected} are required")]
    NotTotal { expected: usize, got: usize },

    #[error("search budget exhausted")]
    BudgetExhausted,

    #[error("{0} colours exceed the supported maximum of {max}", max = crate::engine::MAX_COLOURS)]
    TooManyColours(usize),

    #[error("no valid colouring exists")]
    NotColourable,

    #[error("input violates precondition: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("source instance is trivially a no-instance: {0}")]
    TrivialNo(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A self-check failed. Always a bug in this crate.
    #[error("internal verification failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

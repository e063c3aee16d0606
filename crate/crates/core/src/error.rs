use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {edge:?} repeats a vertex")]
    DegenerateEdge { edge: [usize; 3] },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: [usize; 3] },

    #[error("unknown catalog graph `{0}`")]
    UnknownCatalogName(String),

    #[error("invalid catalog parameters for `{name}`: {reason}")]
    CatalogParams { name: String, reason: String },

    #[error("blow-up factor must be at least 1")]
    ZeroBlowUp,

    #[error("{what} is {actual}, above the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("{what} timed out after {elapsed_ms} ms")]
    Timeout { what: String, elapsed_ms: u64 },

    #[error("invalid certificate: {0}")]
    Certificate(String),

    #[error("invalid reduced 3-graph: {0}")]
    Reduced(String),

    #[error("vertex class {pair:?} is empty")]
    EmptyClass { pair: (usize, usize) },

    #[error("subset size {size} exceeds vertex count {n}")]
    SubsetTooLarge { size: usize, n: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}

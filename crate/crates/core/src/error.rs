use thiserror::Error;

/// What went wrong while reading a graph file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("missing problem line")]
    MissingProblemLine,
    #[error("malformed edge line: {0}")]
    MalformedEdge(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("unknown line type: {0}")]
    UnknownLine(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("a graph needs at least one vertex")]
    EmptyGraph,

    #[error("invalid edge {{{0},{1}}}: {2}")]
    InvalidEdge(usize, usize, &'static str),

    #[error("vertex {0} is not a member of the attribute set")]
    NotInAttributes(usize),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid graph family: {0}")]
    InvalidFamily(String),

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("{what} of size {size} exceeds the bound {bound}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        bound: usize,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, kind: ParseErrorKind) -> Self {
        Error::Parse { line, kind }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

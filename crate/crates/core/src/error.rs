use thiserror::Error;

/// Diagnostics produced while reading a score file or an arc list.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header: {msg}")]
    MalformedHeader { line: usize, msg: String },
    #[error("line {line}: malformed line: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: unknown vertex name `{name}`")]
    UnknownVertex { line: usize, name: String },
    #[error("line {line}: vertex `{name}` lists itself as a parent")]
    SelfParent { line: usize, name: String },
    #[error("line {line}: duplicate parent set for vertex `{name}`")]
    DuplicateParentSet { line: usize, name: String },
    #[error("line {line}: zero score entry (scores are given in non-zero representation)")]
    ZeroScore { line: usize },
    #[error("line {line}: negative score `{value}`")]
    NegativeScore { line: usize, value: String },
    #[error("line {line}: empty parent set entry (the empty set always scores 0)")]
    EmptyParentSet { line: usize },
    #[error("line {line}: duplicate vertex name `{name}`")]
    DuplicateVertex { line: usize, name: String },
    #[error("line {line}: vertex name `{name}` collides with a reserved padding name")]
    ReservedName { line: usize, name: String },
    #[error("unexpected end of input after line {line}: {msg}")]
    UnexpectedEof { line: usize, msg: String },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::MalformedHeader { line, .. }
            | ParseError::Malformed { line, .. }
            | ParseError::UnknownVertex { line, .. }
            | ParseError::SelfParent { line, .. }
            | ParseError::DuplicateParentSet { line, .. }
            | ParseError::ZeroScore { line }
            | ParseError::NegativeScore { line, .. }
            | ParseError::EmptyParentSet { line }
            | ParseError::DuplicateVertex { line, .. }
            | ParseError::ReservedName { line, .. }
            | ParseError::UnexpectedEof { line, .. } => *line,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("padding size {p} is smaller than an existing parent set of size {size}")]
    PaddingTooSmall { p: usize, size: usize },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("invalid table key: {0}")]
    InvalidKey(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("randomized truncation failed after retries (last seed {seed})")]
    TruncationFailure { seed: u64 },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

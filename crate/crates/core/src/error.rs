use thiserror::Error;

use crate::laws::LawId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a structure needs at least one element")]
    EmptyCarrier,
    #[error("element name must be non-empty and contain no whitespace: {0:?}")]
    InvalidName(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("unknown element `{0}`")]
    UnknownName(String),
    #[error("order contains a cycle through `{0}` and `{1}`")]
    CycleDetected(String, String),
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("`{0}` and `{1}` have no greatest lower bound")]
    NoMeet(String, String),
    #[error("no least element")]
    NoBottom,
    #[error("operand set must be non-empty")]
    EmptyOperand,
    #[error("{0} requires a bounded structure")]
    RequiresBounded(String),
    #[error("relation is not an equivalence")]
    NotEquivalence,
    #[error("subset is not a filter")]
    NotAFilter,
    #[error("structure has {size} elements; this operation is limited to {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("invalid structure spec `{0}`")]
    InvalidSpec(String),
    #[error("gave up after {0} rejected samples")]
    RetriesExhausted(usize),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn requires_bounded(law: LawId) -> Self {
        Error::RequiresBounded(law.to_string())
    }

    /// Strips line information, exposing the underlying construction error.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

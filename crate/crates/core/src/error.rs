//! Error type shared by the whole crate.

use thiserror::Error;

/// Everything that can go wrong while building or operating on
/// labeled graphs and words.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text could not be parsed. Positions are 1-based.
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),

    #[error("self-loop at `{0}`")]
    SelfLoop(String),

    #[error("invalid vertex name `{0}`")]
    InvalidVertexName(String),

    #[error("vertex group label must be non-trivial")]
    TrivialLabel,

    #[error("torsion order must be at least 2, got {0}")]
    BadTorsionOrder(u64),

    #[error("integer overflow in label arithmetic")]
    Overflow,

    #[error("empty vertex set")]
    EmptyVertexSet,

    #[error("vertex set {{{0}}} does not span a clique")]
    NotAClique(String),

    #[error("vertex `{vertex}` has non-cyclic label `{label}`; words require cyclic vertex groups (refine the graph first)")]
    NonCyclicVertex { vertex: String, label: String },

    #[error("vertex `{vertex}` has label `{label}` which is not directly indecomposable; refine the graph first")]
    NotIndecomposable { vertex: String, label: String },

    #[error("words belong to different context graphs")]
    ContextMismatch,

    #[error("element is not a commuting product; conjugate it into a clique subgroup first")]
    NotCommutingProduct,

    #[error("element has infinite order; no unique minimal conjugacy representative")]
    InfiniteOrder,

    #[error("radius {requested} exceeds the enumeration cap {cap}")]
    RadiusCap { requested: usize, cap: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    /// Attach a line number to a position-free error, turning it into a
    /// parse diagnostic. Used by the graph file reader.
    pub(crate) fn at_line(self, line: usize) -> Self {
        match self {
            Error::Parse { .. } => self,
            other => Error::Parse {
                line,
                col: 1,
                msg: other.to_string(),
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

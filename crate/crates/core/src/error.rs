use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid family spec `{spec}`: {reason}")]
    InvalidSpec { spec: String, reason: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("operation requires a nonempty graph")]
    EmptyGraph,

    #[error("operation requires a connected graph")]
    Disconnected,

    #[error("order {order} exceeds the exact solver limit of {limit}")]
    TooLarge { order: usize, limit: usize },

    /// A lemma predicate failed while running the constructive pipeline.
    /// This happens when the input violates the forbidden-subgraph hypothesis.
    #[error("hypothesis violated ({lemma}): {detail}")]
    HypothesisViolated { lemma: &'static str, detail: String },

    #[error("input contains induced {member} (at vertices {witness:?})")]
    NotFree { member: String, witness: Vec<usize> },

    #[error("invalid {kind}: {detail}")]
    InvalidSystem { kind: &'static str, detail: String },
}

impl Error {
    pub(crate) fn violated(lemma: &'static str, detail: impl Into<String>) -> Self {
        Error::HypothesisViolated {
            lemma,
            detail: detail.into(),
        }
    }
}

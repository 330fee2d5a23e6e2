use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph order {0} is not supported (at most {max} vertices)", max = crate::vset::MAX_ORDER)]
    UnsupportedOrder(usize),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {0}-{1}: {2}")]
    InvalidEdge(usize, usize, &'static str),

    #[error("vertex {0} is not a member of the given set")]
    NotAMember(usize),

    #[error("clique size must be at least 1")]
    ZeroCliqueSize,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported regime: k = {k} with maximum degree {delta} ({reason})")]
    Regime {
        k: usize,
        delta: usize,
        reason: &'static str,
    },

    #[error("invalid packing certificate: {0}")]
    Certificate(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("invalid family parameters: {0}")]
    Parameter(String),

    #[error("graph on {n} vertices exceeds the exact-solver cap of {cap} (use force to override)")]
    TooLarge { n: usize, cap: usize },
}

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family}: parameter out of domain, requires {bound}")]
    ParameterOutOfDomain { family: &'static str, bound: String },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("malformed family spec `{spec}`: {reason}")]
    MalformedFamilySpec { spec: String, reason: String },

    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{operation}: order {order} exceeds the cap of {cap}")]
    CapExceeded {
        operation: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("graph6: {reason} at byte {offset}")]
    Graph6 { offset: usize, reason: &'static str },

    #[error("vertex {0} is not a pendant vertex")]
    NotPendant(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("the given vertex map does not induce the pattern graph")]
    NotInduced,

    #[error("petal counts: expected {expected} entries, got {got}")]
    PetalCountMismatch { expected: usize, got: usize },

    #[error("census cache: {0}")]
    Cache(String),
}

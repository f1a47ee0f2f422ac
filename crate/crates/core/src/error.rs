use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("arc ({tail}, {head}) must have tail < head")]
    ArcOrientation { tail: usize, head: usize },

    #[error("graph order must be at least 1")]
    EmptyOrder,

    #[error("graph is disconnected; the Gutman index is only defined for connected graphs")]
    DisconnectedGraph,

    #[error("edge-joint operand {0} is disconnected")]
    DisconnectedInput(&'static str),

    #[error("integer overflow in exact index arithmetic")]
    Overflow,

    #[error("formula requires f(x) = x, got f(x) = {m}x + {c}")]
    WrongFunction { m: u64, c: u64 },

    #[error("order {n} is below the required minimum {min}")]
    OrderTooSmall { n: usize, min: usize },

    #[error("formula requires n >= m >= 2, got n = {n}, m = {m}")]
    OrderConstraint { n: usize, m: usize },

    #[error("structural assumption violated: {0}")]
    StructureAssumptionViolated(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

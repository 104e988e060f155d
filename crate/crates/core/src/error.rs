use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A search ran out of its configured allowance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what} budget of {limit} exhausted after {progress}")]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub limit: u64,
    pub progress: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("vertex {vertex} has degree {degree}; clustering needs degree >= 2")]
    DegreeTooSmall { vertex: usize, degree: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {len}")]
    TooShort { len: usize },
    #[error("vertex {vertex} repeats in the cycle")]
    RepeatedVertex { vertex: usize },
    #[error("consecutive cycle vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: usize, v: usize },
    #[error("the cycle is hamiltonian and cannot be extended")]
    AlreadyHamiltonian,
    #[error("the graph has no triangle to start from")]
    NoTriangle,
    #[error("graph of order {n} exceeds the limit {max} for this search")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Malformed edge-list text. `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

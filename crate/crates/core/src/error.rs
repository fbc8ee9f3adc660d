use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("not a closed walk: {0}")]
    NotAWalk(String),
    #[error("underlying graphs differ")]
    UnderlyingMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorError {
    #[error("optimum exceeds the bound {0}")]
    ExceedsBound(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("sub-solver broke its contract: {0}")]
    SolverContractBroken(String),
    #[error("class {class} is not independent in the negative subgraph")]
    PartitionNotIndependent { class: usize },
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no sample accepted after {0} attempts")]
    SamplingExhausted(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("iteration cap {0} exceeded")]
    IterationCapExceeded(usize),
    #[error("class violation: {0}")]
    ClassViolation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Color(#[from] ColorError),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("{requested} vertices exceed the size guard of {limit}")]
    SizeGuard { requested: u128, limit: usize },
    #[error("unknown named instance {0:?}")]
    UnknownInstance(String),
    #[error("no connected sample after {attempts} attempts")]
    CouldNotConnect { attempts: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("cop has no winning strategy at radius {k}")]
    NoWinningStrategy { k: u32 },
    #[error("robber has no evasion strategy at radius {k}")]
    NoEvasionStrategy { k: u32 },
    #[error("{role} moved illegally from {from} to {to} (cop at {cop}, robber at {robber})")]
    IllegalMove {
        role: crate::game::Role,
        from: usize,
        to: usize,
        cop: usize,
        robber: usize,
    },
    #[error("{role} placed on vertex {vertex}, outside a graph on {n} vertices")]
    IllegalPlacement {
        role: crate::game::Role,
        vertex: usize,
        n: usize,
    },
    #[error("strategy certificate failed: {0}")]
    Certificate(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("not an outerplanar embedding: {0}")]
    NotOuterplanarEmbedding(String),
    #[error("edge set mismatch: {0}")]
    EdgeSetMismatch(String),
    #[error("embedding syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RetractionError {
    #[error("not a retraction: {0}")]
    NotARetraction(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("graph6 parse error at byte {offset}: {msg}")]
    Graph6 { offset: usize, msg: String },
    #[error("edge list error at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("edge list error at line {line}: {source}")]
    EdgeListGraph { line: usize, source: GraphError },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error("record id {0:?} contains a comma")]
    BadId(String),
    #[error("bound violation for {id}: rc {rc} outside [{lb}, {ub}]")]
    BoundViolation {
        id: String,
        rc: u32,
        lb: u32,
        ub: u32,
    },
}

use crate::graph::Vertex;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    MissingVertex(Vertex),
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("input graph is disconnected")]
    DisconnectedInput,
    #[error("first edge ({0}, {1}) is not incident to the root")]
    BadFirstEdge(Vertex, Vertex),
    #[error("graph is not sufficiently connected to augment the given paths")]
    NotSufficientlyConnected,
    #[error("graph is acyclic")]
    Acyclic,
    #[error("search budget of {budget} node expansions exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("graph has {0} vertices; the exact oracles support at most 128")]
    TooLarge(usize),
    #[error("graph is bipartite")]
    BipartiteInput,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("pinned assignment is improper: {0}")]
    InfeasiblePin(String),
    #[error("cut vertices {0} and {1} are adjacent")]
    AdjacentCutPair(Vertex, Vertex),
    #[error("{{{0}, {1}}} does not separate the graph")]
    NotACut(Vertex, Vertex),
    #[error("removing {{{0}, {1}}} leaves {2} components, expected 2")]
    NotExactlyTwoComponents(Vertex, Vertex, usize),
    #[error("2-cut classification failed: {0}")]
    TypeClassificationFailed(String),
    #[error("edge ({0}, {1}) is not present")]
    EdgeNotPresent(Vertex, Vertex),
    #[error("vertex sets overlap")]
    OverlappingVertexSets,
    #[error("tree has a node of degree {degree}, limit is {limit}")]
    DegreeTooHigh { degree: usize, limit: usize },
    #[error("bad selection: {0}")]
    BadSelection(String),
    #[error("no construction for order {n} with k = {k}")]
    UnsupportedOrder { k: usize, n: usize },
    #[error("invalid tree: {0}")]
    NotDfsTree(String),
    #[error("all weights are zero")]
    AllZeroWeights,
    #[error("level {level} has {count} vertices, bound is {bound}")]
    LevelBoundViolated { level: usize, count: usize, bound: String },
    #[error("X and Y must be disjoint pairs")]
    OverlappingXY,
    #[error("invalid hammock: {0}")]
    InvalidHammock(String),
    #[error("hammock is singular")]
    SingularInput,
    #[error("path uses the virtual edge to the parent node ({0}, {1})")]
    VirtualParentEdgeOnPath(Vertex, Vertex),
    #[error("graph is not {0}-critical")]
    NotCritical(usize),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("bound not met: {0}")]
    BoundNotMet(String),
    #[error("decomposition error: {0}")]
    Decomposition(String),
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown family: {0}")]
    GenerationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

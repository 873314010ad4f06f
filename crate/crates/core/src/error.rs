use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("coloring has {colors} entries but the graph has {edges} edges")]
    ColoringLength { colors: usize, edges: usize },

    #[error("coloring is not proper: edges {first:?} and {second:?} share color {color} at vertex {vertex}")]
    ImproperColoring {
        vertex: usize,
        first: (usize, usize),
        second: (usize, usize),
        color: u32,
    },

    #[error("color {0} does not occur in the coloring")]
    ColorAbsent(u32),

    #[error("invalid broom B_{{{k},{handle}}}: need k >= handle >= 1")]
    InvalidBroom { k: usize, handle: usize },

    #[error("pattern graph is not a tree")]
    NotATree,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

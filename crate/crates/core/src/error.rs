use thiserror::Error;

/// Errors raised by the library.
///
/// Node and block indices are stored 0-based; the `Display` output
/// reports them 1-based, matching every external format.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric at ({}, {})", .i + 1, .j + 1)]
    NotSymmetric { i: usize, j: usize },

    #[error("nonzero diagonal weight at node {}", .0 + 1)]
    NonZeroDiagonal(usize),

    #[error("non-finite entry at ({}, {})", .i + 1, .j + 1)]
    NonFinite { i: usize, j: usize },

    #[error("a graph needs at least one node")]
    EmptyGraph,

    #[error("node index {} out of range for {len} nodes", .index + 1)]
    IndexOutOfRange { index: usize, len: usize },

    #[error("node {} listed twice", .0 + 1)]
    DuplicateIndex(usize),

    #[error("edge ({}, {}) given twice", .i + 1, .j + 1)]
    DuplicateEdge { i: usize, j: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("negative weight on edge ({}, {}) requires a signed computation", .i + 1, .j + 1)]
    NegativeWeightInUnsignedMode { i: usize, j: usize },

    #[error("node {} is isolated", .0 + 1)]
    IsolatedVertex(usize),

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("Jacobi iteration did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("vector must be nonzero")]
    ZeroVector,

    #[error("k = {k} is outside the admissible range {min}..={max}")]
    InvalidK { k: usize, min: usize, max: usize },

    #[error("matrix does not have full column rank")]
    RankDeficient,

    #[error("drawing dimension {dim} is invalid for a graph with {nodes} nodes")]
    DimensionTooLarge { dim: usize, nodes: usize },

    #[error("graph has no negative edges; use the unsigned drawing")]
    NoNegativeEdges,

    #[error("bipartite drawings need a balanced signed graph")]
    NotBalanced,

    #[error("operation needs at least {min} nodes, graph has {nodes}")]
    TooFewNodes { nodes: usize, min: usize },

    #[error("subset must be a nonempty proper subset with positive volume on both sides")]
    DegenerateSubset,

    #[error("continuous solution lies entirely on one side of zero")]
    AllOneSide,

    #[error("block {} is empty", .0 + 1)]
    EmptyBlock(usize),

    #[error("block {} has zero volume", .0 + 1)]
    ZeroVolume(usize),

    #[error("node {} has block label {label} but only {k} blocks exist", .node + 1)]
    InvalidLabel { node: usize, label: usize, k: usize },

    #[error("bipartition disagrees with the sign of edge ({}, {})", .i + 1, .j + 1)]
    InconsistentBipartition { i: usize, j: usize },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::NotSymmetric { .. } => "NotSymmetric",
            Error::NonZeroDiagonal(_) => "NonZeroDiagonal",
            Error::NonFinite { .. } => "NonFinite",
            Error::EmptyGraph => "EmptyGraph",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DuplicateIndex(_) => "DuplicateIndex",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NegativeWeightInUnsignedMode { .. } => "NegativeWeightInUnsignedMode",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::Disconnected { .. } => "Disconnected",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::ZeroVector => "ZeroVector",
            Error::InvalidK { .. } => "InvalidK",
            Error::RankDeficient => "RankDeficient",
            Error::DimensionTooLarge { .. } => "DimensionTooLarge",
            Error::NoNegativeEdges => "NoNegativeEdges",
            Error::NotBalanced => "NotBalanced",
            Error::TooFewNodes { .. } => "TooFewNodes",
            Error::DegenerateSubset => "DegenerateSubset",
            Error::AllOneSide => "AllOneSide",
            Error::EmptyBlock(_) => "EmptyBlock",
            Error::ZeroVolume(_) => "ZeroVolume",
            Error::InvalidLabel { .. } => "InvalidLabel",
            Error::InconsistentBipartition { .. } => "InconsistentBipartition",
            Error::Precondition(_) => "Precondition",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

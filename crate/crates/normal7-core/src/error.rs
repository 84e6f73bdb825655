use alloc::string::String;

use crate::graph::{EdgeId, VertexId};

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("edge {0} is a loop")]
    LoopEdge(EdgeId),
    #[error("graph has a bridge {0}")]
    Bridge(EdgeId),
    #[error("edge set is not a {size}-edge-cut")]
    NotACut { size: usize },
    #[error("3-edge-cut is trivial (one side is a single vertex)")]
    TrivialCut,
    #[error("graph has no two edge-disjoint spanning trees")]
    NoPacking,
    #[error("no perfect matching contains edge {0}")]
    NoPerfectMatching(EdgeId),
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    Degree {
        vertex: VertexId,
        degree: usize,
        expected: &'static str,
    },
    #[error("edges {0} and {1} share an endpoint but have the same color")]
    Improper(EdgeId, EdgeId),
    #[error("edge {0} is not colored")]
    Uncolored(EdgeId),
    #[error("edge {0} carries the zero flow value")]
    ZeroFlow(EdgeId),
    #[error("flow violates conservation at vertex {0}")]
    NotAFlow(VertexId),
    #[error("vectors are linearly dependent over GF(2)")]
    Dependent,
    #[error("seed value must have leading coordinate 1")]
    SeedLeadingZero,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("internal verification failed in {stage}: {detail}")]
    Verification { stage: &'static str, detail: String },
}

//! Provably bounded balanced cuts and bisections of graphs that come with a
//! tree decomposition.
//!
//! The pipeline is:
//!
//! 1. make the decomposition nonredundant ([`treedec::make_nonredundant`]),
//! 2. pick a heaviest path ([`treedec::heaviest_path`]) and lay out the
//!    circular path labeling ([`labeling::build_plabeling`]),
//! 3. repeatedly apply the weight-doubling tri-cut ([`engine::doubling_step`]),
//!    which either finishes with an exact-size cut or hands a smaller graph
//!    whose heaviest-path weight has at least doubled to the next round.
//!
//! [`engine::minimum_bisection`] runs the whole thing for `m = floor(n/2)` and
//! reports the achieved width next to the guaranteed bound
//! `t·Δ·((log2 1/r)² + 9·log2 1/r + 8) / 2`.
//!
//! Vertices are dense IDs `1..=n`. Tree-decomposition nodes are indices
//! `0..node_count` into the decomposition.

pub mod approx_cut;
pub mod bench;
pub mod engine;
pub mod generate;
pub mod graph;
pub mod io;
pub mod labeling;
pub mod oracle;
pub mod treedec;

pub use graph::{cut_width, max_degree, Graph, Partition};
pub use treedec::{TreeDecomposition, TreePath};

/// A vertex of a graph, in `1..=n`.
pub type Vertex = usize;

/// A node of a tree decomposition, in `0..node_count`.
pub type NodeId = usize;

/// Exact non-negative rational used for relative weights and fractions.
pub type Ratio = num_rational::Ratio<u64>;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge {{{0}, {1}}}")]
    ParallelEdge(Vertex, Vertex),
    #[error("vertex {vertex} outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("invalid partition: {0}")]
    PartitionInvalid(String),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not a forest")]
    NotAForest,
    #[error("decomposition tree is malformed: {0}")]
    MalformedTree(String),
    #[error("not a tree decomposition of the graph: {0}")]
    InvalidDecomposition(String),
    #[error("all clusters are empty")]
    EmptyDecomposition,
    #[error("kept node set does not induce a tree")]
    DisconnectedKeepTree,
    #[error("path is not nonredundant from its designated end")]
    RedundantPath,
    #[error("nodes {0:?} do not form a path in the decomposition tree")]
    NotAPath(Vec<NodeId>),
    #[error("fraction must lie strictly between 0 and 1")]
    BadFraction,
    #[error("size {m} outside 1..={n}")]
    BadSize { m: usize, n: usize },
    #[error("input too large for exhaustive search: n = {n} > {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Counts elementary operations (cluster entries read, tree nodes visited,
/// labels scanned) so that linear-time claims can be checked empirically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounter(u64);

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, k: usize) {
        self.0 += k as u64;
    }

    pub fn get(&self) -> u64 {
        self.0
    }
}

/// Returns the internal-invariant error when `cond` is false.
pub(crate) fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InternalInvariant(what()))
    }
}

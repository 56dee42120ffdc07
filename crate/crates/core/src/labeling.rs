//! Circular path labelings.
//!
//! For a path `P = (i_0, …, i_ℓ)` of the decomposition tree, every vertex gets
//! a path node: the first path node whose cluster holds it (vertices of `R`,
//! the union of path clusters), or the path node whose hanging subtree `T_i`
//! holds it (vertices of `S`). Labels `1..=n` are handed out path node by
//! path node, each node's off-path vertices `S_i` first and its own path
//! vertices `R_i` last.
//!
//! The label arrays are indexed by the names of the universe the labeling
//! was built over, so that a labeling can later be shrunk to a vertex subset
//! without renaming anything.

use std::fmt::Write as _;

use crate::graph::Graph;
use crate::treedec::{PathEnd, TreeDecomposition, TreePath};
use crate::{Error, NodeId, OpCounter, Result, Vertex};

pub(crate) const NONE: usize = usize::MAX;

/// Labels `1..=n` read circularly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircularIndex {
    n: usize,
}

impl CircularIndex {
    pub fn new(n: usize) -> Self {
        assert!(n > 0, "circular index over an empty label set");
        CircularIndex { n }
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    /// `N_m(x) = x + m`, reduced into `1..=n`.
    pub fn forward(&self, x: usize, m: usize) -> usize {
        (x - 1 + m % self.n) % self.n + 1
    }

    /// `N_m^{-1}(x) = x - m`, reduced into `1..=n`.
    pub fn backward(&self, x: usize, m: usize) -> usize {
        (x - 1 + self.n - m % self.n) % self.n + 1
    }

    /// Whether `b` is reached from `a` no later than `c` when counting upwards.
    pub fn between(&self, a: usize, b: usize, c: usize) -> bool {
        if a == c {
            return b == a;
        }
        let db = (b + self.n - a) % self.n;
        let dc = (c + self.n - a) % self.n;
        db <= dc
    }

    /// Number of labels from `a` to `c`, both included.
    pub fn span(&self, a: usize, c: usize) -> usize {
        (c + self.n - a) % self.n + 1
    }
}

/// Label interval of one path node: `S_i` is `s_start..r_start`, `R_i` is
/// `r_start..=end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub node: NodeId,
    pub s_start: usize,
    pub r_start: usize,
    pub end: usize,
}

impl Block {
    pub fn s_len(&self) -> usize {
        self.r_start - self.s_start
    }

    pub fn r_len(&self) -> usize {
        self.end + 1 - self.r_start
    }
}

/// A path labeling together with its lookup arrays.
#[derive(Clone, Debug)]
pub struct PLabeling {
    n: usize,
    label_of: Vec<usize>,
    vertex_at: Vec<Vertex>,
    in_r: Vec<bool>,
    path_node_of: Vec<NodeId>,
    path: Vec<NodeId>,
    position: Vec<usize>,
    hanging: Vec<Vec<(NodeId, NodeId)>>,
}

impl PLabeling {
    /// Current number of labeled vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the vertex universe the arrays are indexed by.
    pub fn universe(&self) -> usize {
        self.label_of.len() - 1
    }

    pub fn circular(&self) -> CircularIndex {
        CircularIndex::new(self.n)
    }

    /// Label of a current vertex.
    pub fn label(&self, v: Vertex) -> Option<usize> {
        let k = *self.label_of.get(v)?;
        (k >= 1 && k <= self.n && self.vertex_at[k] == v).then_some(k)
    }

    pub fn vertex(&self, label: usize) -> Vertex {
        self.vertex_at[label]
    }

    /// Current vertices in label order.
    pub fn vertices_by_label(&self) -> &[Vertex] {
        &self.vertex_at[1..]
    }

    pub fn in_r(&self, v: Vertex) -> bool {
        self.in_r[v]
    }

    pub fn path_node(&self, v: Vertex) -> NodeId {
        self.path_node_of[v]
    }

    /// Path nodes, from the designated end.
    pub fn path(&self) -> &[NodeId] {
        &self.path
    }

    pub fn start(&self) -> NodeId {
        self.path[0]
    }

    /// Position of a path node in [`PLabeling::path`].
    pub fn position(&self, node: NodeId) -> Option<usize> {
        let p = *self.position.get(node)?;
        (p < self.path.len() && self.path[p] == node).then_some(p)
    }

    /// The subtree `T_i` hanging at path node `i`, in preorder, as
    /// `(node, index of its parent in this list)` pairs; the first pair is
    /// `(i, usize::MAX)`.
    pub fn hanging(&self, node: NodeId) -> &[(NodeId, NodeId)] {
        &self.hanging[node]
    }

    /// `|R|`, the number of current vertices on the path clusters.
    pub fn r_count(&self) -> usize {
        self.vertex_at[1..].iter().filter(|&&v| self.in_r[v]).count()
    }

    /// Label intervals of all path nodes, in path order, by one scan over the
    /// labels.
    pub fn blocks(&self) -> Vec<Block> {
        let mut out: Vec<Block> = Vec::with_capacity(self.path.len());
        for k in 1..=self.n {
            let v = self.vertex_at[k];
            let node = self.path_node_of[v];
            match out.last_mut() {
                Some(b) if b.node == node => {
                    b.end = k;
                    if !self.in_r[v] && b.r_start == b.end {
                        // still inside S_i
                        b.r_start = k + 1;
                    }
                }
                _ => out.push(Block {
                    node,
                    s_start: k,
                    r_start: if self.in_r[v] { k } else { k + 1 },
                    end: k,
                }),
            }
        }
        out
    }

    /// Multi-line dump: one line per path node with its `S_i` and `R_i`
    /// label intervals.
    pub fn dump(&self, td: &TreeDecomposition) -> String {
        let mut out = String::new();
        for b in self.blocks() {
            let s = if b.s_len() == 0 {
                "-".to_string()
            } else {
                format!("{}..{}", b.s_start, b.r_start - 1)
            };
            let _ = writeln!(
                out,
                "node {} S {} R {}..{}",
                td.id(b.node),
                s,
                b.r_start,
                b.end
            );
        }
        out
    }

    /// Relabels the vertices of the labels `first..=last` (read circularly)
    /// as `1..=k`, rotated so that a range running past label `n` keeps its
    /// part starting at label 1 first. The path becomes the path nodes of
    /// the kept vertices in their new order, and the subtree hanging at the
    /// path node of label `first` shrinks to its root.
    pub(crate) fn shrink_to_range(&mut self, first: usize, last: usize, ops: &mut OpCounter) {
        let ci = self.circular();
        let len = ci.span(first, last);
        let head = self.path_node_of[self.vertex_at[first]];
        let order: Vec<usize> = if first + len - 1 > self.n {
            (1..=last).chain(first..=self.n).collect()
        } else {
            (first..=last).collect()
        };
        let mut vertex_at = Vec::with_capacity(len + 1);
        vertex_at.push(0);
        for &k in &order {
            vertex_at.push(self.vertex_at[k]);
        }
        for (k, &v) in vertex_at.iter().enumerate().skip(1) {
            self.label_of[v] = k;
        }
        self.vertex_at = vertex_at;
        self.n = len;

        let mut path = Vec::new();
        for &v in &self.vertex_at[1..] {
            let node = self.path_node_of[v];
            if path.last() != Some(&node) {
                path.push(node);
            }
        }
        for (p, &node) in path.iter().enumerate() {
            self.position[node] = p;
        }
        ops.add(2 * len + self.path.len() + path.len());
        self.path = path;
        self.hanging[head].truncate(1);
    }

    /// The tree these parameters describe: path edges between consecutive
    /// path nodes plus the hanging subtrees. Returns the nodes and edges in
    /// terms of decomposition node IDs.
    pub fn tree(&self) -> (Vec<NodeId>, Vec<(NodeId, NodeId)>) {
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        for (p, &i) in self.path.iter().enumerate() {
            if p > 0 {
                edges.push((self.path[p - 1], i));
            }
            let list = &self.hanging[i];
            for &(j, parent) in list {
                nodes.push(j);
                if parent != NONE {
                    edges.push((list[parent].0, j));
                }
            }
        }
        (nodes, edges)
    }
}

/// Builds the labeling for `p`, whose first node must be a nonredundant end.
pub fn build_plabeling(td: &TreeDecomposition, p: &TreePath) -> Result<PLabeling> {
    build_plabeling_counted(td, p, &mut OpCounter::new())
}

pub fn build_plabeling_counted(
    td: &TreeDecomposition,
    p: &TreePath,
    ops: &mut OpCounter,
) -> Result<PLabeling> {
    if crate::treedec::is_nonredundant_path(td, p) != Some(PathEnd::Front)
        && !single_nonempty(td, p)
    {
        return Err(Error::RedundantPath);
    }
    let universe = td.universe();
    let nodes = td.node_count();
    let mut label_of = vec![0usize; universe + 1];
    let mut vertex_at = vec![0usize; universe + 1];
    let mut in_r = vec![false; universe + 1];
    let mut path_node_of = vec![NONE; universe + 1];
    let mut on_path = vec![false; nodes];
    let mut position = vec![NONE; nodes];
    let mut hanging = vec![Vec::new(); nodes];
    for (k, &i) in p.nodes().iter().enumerate() {
        on_path[i] = true;
        position[i] = k;
    }
    // stamp[v] == i while processing path node i marks v ∈ X^i
    let mut stamp = vec![NONE; universe + 1];
    let mut next = 1usize;

    for &i in p.nodes() {
        ops.add(1 + 2 * td.cluster(i).len());
        for &v in td.cluster(i) {
            stamp[v] = i;
        }
        // S_i: vertices of the hanging subtree outside X^i, labeled when
        // their node finishes
        let mut pre = vec![(i, NONE)];
        // (node, parent node, next neighbor index, own index in pre)
        let mut stack: Vec<(NodeId, NodeId, usize, usize)> = vec![(i, NONE, 0, 0)];
        while let Some(top) = stack.last_mut() {
            let (j, parent, idx, at) = *top;
            let adj = td.neighbors(j);
            if idx < adj.len() {
                top.2 += 1;
                let c = adj[idx];
                if c != parent && !on_path[c] {
                    pre.push((c, at));
                    stack.push((c, j, 0, pre.len() - 1));
                }
                continue;
            }
            stack.pop();
            ops.add(1 + adj.len());
            if j == i {
                continue;
            }
            ops.add(td.cluster(j).len());
            for &v in td.cluster(j) {
                if stamp[v] != i && label_of[v] == 0 {
                    label_of[v] = next;
                    vertex_at[next] = v;
                    path_node_of[v] = i;
                    next += 1;
                }
            }
        }
        hanging[i] = pre;
        // R_i: path-cluster vertices not owned by an earlier path node
        let before = next;
        for &v in td.cluster(i) {
            in_r[v] = true;
            if label_of[v] == 0 {
                label_of[v] = next;
                vertex_at[next] = v;
                path_node_of[v] = i;
                next += 1;
            }
        }
        if next == before {
            return Err(Error::RedundantPath);
        }
    }
    let n = next - 1;
    if n != universe {
        return Err(Error::InternalInvariant(format!(
            "labeling reached {n} of {universe} vertices; some vertex is in no cluster"
        )));
    }
    vertex_at.truncate(n + 1);
    Ok(PLabeling {
        n,
        label_of,
        vertex_at,
        in_r,
        path_node_of,
        path: p.nodes().to_vec(),
        position,
        hanging,
    })
}

fn single_nonempty(td: &TreeDecomposition, p: &TreePath) -> bool {
    p.len() == 1 && !td.cluster(p.start()).is_empty()
}

/// `E_G(i)`: edges with at least one endpoint in `X^i`, sorted.
pub fn cluster_boundary_edges(g: &Graph, td: &TreeDecomposition, i: NodeId) -> Vec<(Vertex, Vertex)> {
    let mut out: Vec<(Vertex, Vertex)> = td
        .cluster(i)
        .iter()
        .flat_map(|&u| g.neighbors(u).iter().map(move |&v| (u.min(v), u.max(v))))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// The pieces left after deleting `E_G(i)` for a path node `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NodeParts {
    /// `R_i`, each vertex isolated.
    pub isolated: Vec<Vertex>,
    /// `S_i`.
    pub hanging: Vec<Vertex>,
    /// Labels before node `i`'s block; empty when `i` is the designated end.
    pub prefix: Vec<Vertex>,
    /// Labels after node `i`'s block; empty when `i` is the last path node.
    pub suffix: Vec<Vertex>,
}

impl NodeParts {
    /// The pieces as vertex lists, dropping empty ones and splitting
    /// `isolated` into singletons.
    pub fn parts(&self) -> Vec<Vec<Vertex>> {
        let mut out: Vec<Vec<Vertex>> = self.isolated.iter().map(|&v| vec![v]).collect();
        for part in [&self.hanging, &self.prefix, &self.suffix] {
            if !part.is_empty() {
                out.push(part.clone());
            }
        }
        out
    }
}

pub fn decompose_by_node(pl: &PLabeling, i: NodeId) -> Result<NodeParts> {
    let blocks = pl.blocks();
    let b = blocks
        .iter()
        .find(|b| b.node == i)
        .ok_or_else(|| Error::NotAPath(vec![i]))?;
    let take = |range: std::ops::Range<usize>| -> Vec<Vertex> {
        range.map(|k| pl.vertex(k)).collect()
    };
    Ok(NodeParts {
        isolated: take(b.r_start..b.end + 1),
        hanging: take(b.s_start..b.r_start),
        prefix: take(1..b.s_start),
        suffix: take(b.end + 1..pl.n() + 1),
    })
}

//! Tree decompositions: representation, validity checking, nonredundant
//! contraction, restriction to subtrees and subgraphs, and heaviest paths.
//!
//! Most routines here rely on the connectivity property of a valid
//! decomposition: when the tree is traversed from any root, the vertices of a
//! newly discovered cluster that already occur in some discovered cluster are
//! exactly the ones shared with the parent cluster. A single stamp array over
//! the vertex universe therefore yields `|X^i ∩ X^parent|` in `O(|X^i|)`.

use crate::graph::{self, Graph};
use crate::{Error, NodeId, OpCounter, Ratio, Result, Vertex};

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    ids: Vec<u64>,
    clusters: Vec<Vec<Vertex>>,
    edges: Vec<(NodeId, NodeId)>,
    adj: Vec<Vec<NodeId>>,
    universe: usize,
}

impl TreeDecomposition {
    /// Decomposition over vertices `1..=universe` with node IDs `0..clusters.len()`.
    pub fn new(
        universe: usize,
        clusters: Vec<Vec<Vertex>>,
        edges: Vec<(NodeId, NodeId)>,
    ) -> Result<Self> {
        let ids = (0..clusters.len() as u64).collect();
        Self::with_ids(universe, ids, clusters, edges)
    }

    /// Like [`TreeDecomposition::new`] but with caller-chosen external node IDs.
    /// `edges` refer to node positions, not IDs.
    pub fn with_ids(
        universe: usize,
        ids: Vec<u64>,
        clusters: Vec<Vec<Vertex>>,
        edges: Vec<(NodeId, NodeId)>,
    ) -> Result<Self> {
        let nodes = clusters.len();
        if nodes == 0 {
            return Err(Error::MalformedTree("no nodes".into()));
        }
        if ids.len() != nodes {
            return Err(Error::MalformedTree("id count differs from node count".into()));
        }
        let mut sorted_ids = ids.clone();
        sorted_ids.sort_unstable();
        if sorted_ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedTree("duplicate node id".into()));
        }
        let mut seen = vec![NONE; universe + 1];
        for (i, cluster) in clusters.iter().enumerate() {
            for &v in cluster {
                if v == 0 || v > universe {
                    return Err(Error::VertexOutOfRange { vertex: v, n: universe });
                }
                if seen[v] == i {
                    return Err(Error::MalformedTree(format!(
                        "vertex {v} repeated in cluster of node {}",
                        ids[i]
                    )));
                }
                seen[v] = i;
            }
        }
        let adj = tree_adjacency(nodes, &edges)
            .ok_or_else(|| Error::MalformedTree("edges do not form a tree".into()))?;
        Ok(TreeDecomposition {
            ids,
            clusters,
            edges,
            adj,
            universe,
        })
    }

    /// Same decomposition over a larger vertex universe (for graphs with
    /// vertices that no cluster mentions).
    pub fn with_universe(mut self, universe: usize) -> Result<Self> {
        if let Some(v) = self.clusters.iter().flatten().find(|&&v| v > universe) {
            return Err(Error::VertexOutOfRange { vertex: *v, n: universe });
        }
        self.universe = universe;
        Ok(self)
    }

    pub fn node_count(&self) -> usize {
        self.clusters.len()
    }

    /// Size of the vertex universe `1..=n` the clusters draw from.
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn cluster(&self, i: NodeId) -> &[Vertex] {
        &self.clusters[i]
    }

    pub fn clusters(&self) -> &[Vec<Vertex>] {
        &self.clusters
    }

    pub fn neighbors(&self, i: NodeId) -> &[NodeId] {
        &self.adj[i]
    }

    /// Tree edges in input order, as node positions.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn id(&self, i: NodeId) -> u64 {
        self.ids[i]
    }

    pub fn ids(&self) -> &[u64] {
        &self.ids
    }

    pub fn node_by_id(&self, id: u64) -> Option<NodeId> {
        self.ids.iter().position(|&x| x == id)
    }

    /// `|V(T)| + Σ |X^i|`.
    pub fn size(&self) -> usize {
        self.node_count() + self.clusters.iter().map(Vec::len).sum::<usize>()
    }

    /// `max |X^i| - 1`; `-1` when every cluster is empty.
    pub fn width(&self) -> isize {
        self.max_cluster_size() as isize - 1
    }

    /// `max |X^i|`, the `t` of the width bounds.
    pub fn max_cluster_size(&self) -> usize {
        self.clusters.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Nodes in DFS preorder from `root`, together with each node's parent
    /// (`usize::MAX` for the root).
    pub fn dfs_preorder(&self, root: NodeId) -> (Vec<NodeId>, Vec<NodeId>) {
        let n = self.node_count();
        let mut parent = vec![NONE; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(i) = stack.pop() {
            order.push(i);
            for &j in self.adj[i].iter().rev() {
                if parent[j] == NONE {
                    parent[j] = i;
                    stack.push(j);
                }
            }
        }
        parent[root] = NONE;
        (order, parent)
    }

    /// The unique tree path from `a` to `b`, both ends included.
    pub fn path_between(&self, a: NodeId, b: NodeId) -> Vec<NodeId> {
        let (_, parent) = self.dfs_preorder(a);
        let mut out = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            out.push(cur);
        }
        out.reverse();
        out
    }
}

/// Adjacency lists when `edges` form a spanning tree on `nodes` nodes.
fn tree_adjacency(nodes: usize, edges: &[(NodeId, NodeId)]) -> Option<Vec<Vec<NodeId>>> {
    if edges.len() + 1 != nodes {
        return None;
    }
    let mut adj = vec![Vec::new(); nodes];
    for &(a, b) in edges {
        if a >= nodes || b >= nodes || a == b {
            return None;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    // n - 1 edges and connected implies acyclic
    let mut seen = vec![false; nodes];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                reached += 1;
                stack.push(j);
            }
        }
    }
    (reached == nodes).then_some(adj)
}

/// A path in the decomposition tree, listed from its designated end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePath {
    nodes: Vec<NodeId>,
}

impl TreePath {
    /// Checks that consecutive nodes are adjacent and no node repeats.
    pub fn new(td: &TreeDecomposition, nodes: Vec<NodeId>) -> Result<Self> {
        let bad = || Error::NotAPath(nodes.clone());
        if nodes.is_empty() || nodes.iter().any(|&i| i >= td.node_count()) {
            return Err(bad());
        }
        let mut seen = vec![false; td.node_count()];
        for &i in &nodes {
            if std::mem::replace(&mut seen[i], true) {
                return Err(bad());
            }
        }
        if nodes.windows(2).any(|w| !td.neighbors(w[0]).contains(&w[1])) {
            return Err(bad());
        }
        Ok(TreePath { nodes })
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    /// The designated end `i_0`.
    pub fn start(&self) -> NodeId {
        self.nodes[0]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn reversed(&self) -> TreePath {
        let mut nodes = self.nodes.clone();
        nodes.reverse();
        TreePath { nodes }
    }
}

/// Weight of a path: `w = |∪ X^i|` over its nodes, and `w / n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub weight: usize,
    pub relative: Ratio,
    /// Set when the path was produced by [`heaviest_path`].
    pub heaviest: bool,
}

/// Which end of a path satisfies the nonredundant-end condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathEnd {
    Front,
    Back,
}

/// Per-property outcome of [`validate`], each with the smallest witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidityReport {
    /// `(graph n, decomposition universe)` when they differ; nothing else is
    /// checked in that case.
    pub universe_mismatch: Option<(usize, usize)>,
    /// A vertex in no cluster.
    pub uncovered_vertex: Option<Vertex>,
    /// An edge contained in no cluster.
    pub uncovered_edge: Option<(Vertex, Vertex)>,
    /// A vertex whose occurrence nodes do not induce a connected subtree.
    pub disconnected_vertex: Option<Vertex>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.universe_mismatch.is_none()
            && self.uncovered_vertex.is_none()
            && self.uncovered_edge.is_none()
            && self.disconnected_vertex.is_none()
    }
}

impl std::fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if let Some((g, t)) = self.universe_mismatch {
            return write!(f, "universe mismatch: graph has {g} vertices, decomposition {t}");
        }
        let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
        write!(f, "vertex coverage: {}", mark(self.uncovered_vertex.is_none()))?;
        if let Some(v) = self.uncovered_vertex {
            write!(f, " (vertex {v})")?;
        }
        write!(f, "; edge coverage: {}", mark(self.uncovered_edge.is_none()))?;
        if let Some((u, v)) = self.uncovered_edge {
            write!(f, " (edge {{{u}, {v}}})")?;
        }
        write!(f, "; connectivity: {}", mark(self.disconnected_vertex.is_none()))?;
        if let Some(v) = self.disconnected_vertex {
            write!(f, " (vertex {v})")?;
        }
        Ok(())
    }
}

/// Checks vertex coverage, edge coverage, and connectivity of every vertex's
/// occurrence subtree.
pub fn validate(g: &Graph, td: &TreeDecomposition) -> ValidityReport {
    let mut report = ValidityReport::default();
    if g.n() != td.universe() {
        report.universe_mismatch = Some((g.n(), td.universe()));
        return report;
    }
    let n = g.n();
    // occurrences and shared tree edges per vertex
    let mut occurrences = vec![0usize; n + 1];
    let mut shared_edges = vec![0usize; n + 1];
    let mut stamp = vec![NONE; n + 1];
    let (order, parent) = td.dfs_preorder(0);
    for &i in &order {
        for &v in td.cluster(i) {
            occurrences[v] += 1;
        }
    }
    // stamp each node's cluster, then count what its children share with it
    for &i in &order {
        for &v in td.cluster(i) {
            stamp[v] = i;
        }
        for &j in td.neighbors(i) {
            if j == parent[i] {
                continue;
            }
            for &v in td.cluster(j) {
                if stamp[v] == i {
                    shared_edges[v] += 1;
                }
            }
        }
    }
    report.uncovered_vertex = (1..=n).find(|&v| occurrences[v] == 0);
    report.disconnected_vertex =
        (1..=n).find(|&v| occurrences[v] > 0 && shared_edges[v] + 1 != occurrences[v]);

    // edge coverage: within each cluster, mark edges between its members
    let mut covered = std::collections::HashSet::new();
    let mut stamp = vec![NONE; n + 1];
    for i in 0..td.node_count() {
        for &v in td.cluster(i) {
            stamp[v] = i;
        }
        for &u in td.cluster(i) {
            for &v in g.neighbors(u) {
                if u < v && stamp[v] == i {
                    covered.insert((u, v));
                }
            }
        }
    }
    report.uncovered_edge = g.edges().find(|e| !covered.contains(e));
    report
}

/// A renaming of a vertex subset of `1..=universe` onto `1..=k`, preserving
/// relative order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRenaming {
    new_of: Vec<Vertex>,
    old_of: Vec<Vertex>,
}

impl VertexRenaming {
    pub fn keep(universe: usize, keep: &[Vertex]) -> Result<Self> {
        let mut new_of = vec![0; universe + 1];
        for &v in keep {
            if v == 0 || v > universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            new_of[v] = 1;
        }
        let mut old_of = vec![0];
        for (v, slot) in new_of.iter_mut().enumerate().skip(1) {
            if *slot != 0 {
                old_of.push(v);
                *slot = old_of.len() - 1;
            }
        }
        Ok(VertexRenaming { new_of, old_of })
    }

    pub fn identity(universe: usize) -> Self {
        VertexRenaming {
            new_of: (0..=universe).collect(),
            old_of: (0..=universe).collect(),
        }
    }

    pub fn new_name(&self, v: Vertex) -> Option<Vertex> {
        match self.new_of.get(v) {
            Some(&k) if k != 0 => Some(k),
            _ => None,
        }
    }

    pub fn old_name(&self, k: Vertex) -> Vertex {
        self.old_of[k]
    }

    /// Number of kept vertices.
    pub fn len(&self) -> usize {
        self.old_of.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Restriction to the subtree on `keep` (plus an optional extra edge) and to
/// the renamed vertex subset. Empty clusters are kept. The result is not
/// checked for validity.
pub fn restrict(
    td: &TreeDecomposition,
    keep: &[NodeId],
    extra_edge: Option<(NodeId, NodeId)>,
    renaming: &VertexRenaming,
) -> Result<TreeDecomposition> {
    let mut pos = vec![NONE; td.node_count()];
    for (k, &i) in keep.iter().enumerate() {
        if i >= td.node_count() || pos[i] != NONE {
            return Err(Error::DisconnectedKeepTree);
        }
        pos[i] = k;
    }
    let mut edges: Vec<(NodeId, NodeId)> = td
        .edges()
        .iter()
        .filter(|&&(a, b)| pos[a] != NONE && pos[b] != NONE)
        .map(|&(a, b)| (pos[a], pos[b]))
        .collect();
    if let Some((a, b)) = extra_edge {
        if a >= td.node_count() || b >= td.node_count() || pos[a] == NONE || pos[b] == NONE {
            return Err(Error::DisconnectedKeepTree);
        }
        edges.push((pos[a], pos[b]));
    }
    let clusters: Vec<Vec<Vertex>> = keep
        .iter()
        .map(|&i| {
            td.cluster(i)
                .iter()
                .filter_map(|&v| renaming.new_name(v))
                .collect()
        })
        .collect();
    let ids = keep.iter().map(|&i| td.id(i)).collect();
    TreeDecomposition::with_ids(renaming.len(), ids, clusters, edges).map_err(|e| match e {
        Error::MalformedTree(_) => Error::DisconnectedKeepTree,
        other => other,
    })
}

/// Restriction to the whole tree and the renamed vertex subset.
pub fn restrict_to_vertices(
    td: &TreeDecomposition,
    renaming: &VertexRenaming,
) -> Result<TreeDecomposition> {
    let all: Vec<NodeId> = (0..td.node_count()).collect();
    restrict(td, &all, None, renaming)
}

/// Contracts tree edges `{i, j}` with nested clusters until none remain.
pub fn make_nonredundant(td: &TreeDecomposition) -> Result<TreeDecomposition> {
    make_nonredundant_counted(td, &mut OpCounter::new())
}

/// [`make_nonredundant`] with operation counting.
///
/// One DFS from node 0. When a node `i` is discovered, `c_i` (its cluster
/// entries already stamped) equals `|X^i ∩ X^q|` where `q` is the output node
/// its DFS parent was merged into. Then `i` is merged into `q` when
/// `X^i ⊆ X^q`, `q` takes over `X^i` when `X^q ⊆ X^i`, and otherwise `i`
/// starts a new output node.
pub fn make_nonredundant_counted(
    td: &TreeDecomposition,
    ops: &mut OpCounter,
) -> Result<TreeDecomposition> {
    let nodes = td.node_count();
    let mut stamped = vec![false; td.universe() + 1];
    let mut slot_of = vec![NONE; nodes];
    let mut slot_src: Vec<NodeId> = Vec::new();
    let mut slot_edges: Vec<(usize, usize)> = Vec::new();

    let mut stack = vec![(0usize, NONE)];
    while let Some((i, parent)) = stack.pop() {
        ops.add(1 + td.neighbors(i).len());
        let cluster = td.cluster(i);
        ops.add(cluster.len());
        if parent == NONE {
            slot_of[i] = slot_src.len();
            slot_src.push(i);
            stamp_all(cluster, &mut stamped);
        } else {
            let q = slot_of[parent];
            let shared = cluster.iter().filter(|&&v| stamped[v]).count();
            let q_size = td.cluster(slot_src[q]).len();
            if shared == cluster.len() {
                slot_of[i] = q;
            } else if shared == q_size {
                slot_src[q] = i;
                slot_of[i] = q;
                ops.add(cluster.len());
                stamp_all(cluster, &mut stamped);
            } else {
                slot_of[i] = slot_src.len();
                slot_edges.push((q, slot_src.len()));
                slot_src.push(i);
                ops.add(cluster.len());
                stamp_all(cluster, &mut stamped);
            }
        }
        for &j in td.neighbors(i).iter().rev() {
            if j != parent {
                stack.push((j, i));
            }
        }
    }
    if slot_src.len() == 1 && td.cluster(slot_src[0]).is_empty() {
        return Err(Error::EmptyDecomposition);
    }
    let ids = slot_src.iter().map(|&i| td.id(i)).collect();
    let clusters = slot_src.iter().map(|&i| td.cluster(i).to_vec()).collect();
    TreeDecomposition::with_ids(td.universe(), ids, clusters, slot_edges)
}

fn stamp_all(cluster: &[Vertex], stamped: &mut [bool]) {
    for &v in cluster {
        stamped[v] = true;
    }
}

/// True when no tree edge joins nested clusters.
pub fn is_nonredundant(td: &TreeDecomposition) -> bool {
    let mut stamp = vec![NONE; td.universe() + 1];
    td.edges().iter().enumerate().all(|(e, &(a, b))| {
        for &v in td.cluster(a) {
            stamp[v] = 2 * e;
        }
        let shared = td.cluster(b).iter().filter(|&&v| stamp[v] == 2 * e).count();
        shared != td.cluster(a).len() && shared != td.cluster(b).len()
    })
}

/// One weighted sweep from `start`: `w(start, i) = |∪ X^j|` over the tree
/// path, computed incrementally. Returns the first node in discovery order
/// of maximal weight, its weight, and the DFS parent table.
fn weight_sweep(
    td: &TreeDecomposition,
    start: NodeId,
    stamped: &mut [bool],
    ops: &mut OpCounter,
) -> (NodeId, usize, Vec<NodeId>) {
    let nodes = td.node_count();
    let mut parent = vec![NONE; nodes];
    let mut weight = vec![0usize; nodes];
    let mut visited = vec![false; nodes];
    let mut best = (start, 0usize);
    let mut stack = vec![start];
    visited[start] = true;
    while let Some(i) = stack.pop() {
        let cluster = td.cluster(i);
        ops.add(1 + td.neighbors(i).len() + 2 * cluster.len());
        let shared = cluster.iter().filter(|&&v| stamped[v]).count();
        let base = if parent[i] == NONE { 0 } else { weight[parent[i]] };
        weight[i] = base + cluster.len() - shared;
        stamp_all(cluster, stamped);
        if weight[i] > best.1 {
            best = (i, weight[i]);
        }
        for &j in td.neighbors(i).iter().rev() {
            if !visited[j] {
                visited[j] = true;
                parent[j] = i;
                stack.push(j);
            }
        }
    }
    for cluster in td.clusters() {
        for &v in cluster {
            stamped[v] = false;
        }
    }
    (best.0, best.1, parent)
}

/// A path maximizing `|∪ X^i|`, by two weighted sweeps. The path is listed
/// from the second sweep's farthest node back to the first sweep's.
pub fn heaviest_path(td: &TreeDecomposition) -> (TreePath, WeightReport) {
    heaviest_path_counted(td, &mut OpCounter::new())
}

pub fn heaviest_path_counted(
    td: &TreeDecomposition,
    ops: &mut OpCounter,
) -> (TreePath, WeightReport) {
    let mut stamped = vec![false; td.universe() + 1];
    let (s, _, _) = weight_sweep(td, 0, &mut stamped, ops);
    let (t, weight, parent) = weight_sweep(td, s, &mut stamped, ops);
    let mut nodes = vec![t];
    let mut cur = t;
    while cur != s {
        cur = parent[cur];
        nodes.push(cur);
    }
    ops.add(nodes.len());
    let report = WeightReport {
        weight,
        relative: Ratio::new(weight as u64, td.universe().max(1) as u64),
        heaviest: true,
    };
    (TreePath { nodes }, report)
}

/// `r(T, X)`: relative weight of a heaviest path.
pub fn heaviest_relative_weight(td: &TreeDecomposition) -> Ratio {
    heaviest_path(td).1.relative
}

pub fn path_weight(td: &TreeDecomposition, p: &TreePath) -> WeightReport {
    let mut stamped = vec![false; td.universe() + 1];
    let mut weight = 0;
    for &i in p.nodes() {
        for &v in td.cluster(i) {
            if !stamped[v] {
                stamped[v] = true;
                weight += 1;
            }
        }
    }
    WeightReport {
        weight,
        relative: Ratio::new(weight as u64, td.universe().max(1) as u64),
        heaviest: false,
    }
}

fn nonredundant_from_front(td: &TreeDecomposition, nodes: &[NodeId]) -> bool {
    if td.cluster(nodes[0]).is_empty() {
        return false;
    }
    let mut stamp = vec![NONE; td.universe() + 1];
    nodes.windows(2).enumerate().all(|(h, w)| {
        for &v in td.cluster(w[0]) {
            stamp[v] = h;
        }
        td.cluster(w[1]).iter().any(|&v| stamp[v] != h)
    })
}

/// The end (front preferred) from which the path is nonredundant, if any:
/// its first cluster is nonempty and no cluster is contained in its
/// predecessor's.
pub fn is_nonredundant_path(td: &TreeDecomposition, p: &TreePath) -> Option<PathEnd> {
    if nonredundant_from_front(td, p.nodes()) {
        return Some(PathEnd::Front);
    }
    let mut rev = p.nodes().to_vec();
    rev.reverse();
    nonredundant_from_front(td, &rev).then_some(PathEnd::Back)
}

/// Width-one decomposition of a tree: one node per edge, cluster = its two
/// endpoints. The tree is rooted at the smaller end of a longest path; the
/// edges from a vertex to its children hang off the edge to its parent as a
/// chain, with the longest-path child first, so the longest path becomes a
/// decomposition path.
pub fn tree_to_width1_td(g: &Graph) -> Result<TreeDecomposition> {
    let mut longest = graph::longest_path_in_tree(g)?;
    if g.n() == 1 {
        return TreeDecomposition::new(1, vec![vec![1]], Vec::new());
    }
    if longest[0] > longest[longest.len() - 1] {
        longest.reverse();
    }
    let n = g.n();
    let mut next_on_path = vec![0; n + 1];
    for w in longest.windows(2) {
        next_on_path[w[0]] = w[1];
    }
    let root = longest[0];
    // edge_node[u] = decomposition node of edge {parent(u), u}
    let mut edge_node = vec![NONE; n + 1];
    let mut parent = vec![0; n + 1];
    let mut clusters = Vec::with_capacity(n - 1);
    let mut edges = Vec::with_capacity(n.saturating_sub(2));
    let mut queue = std::collections::VecDeque::from([root]);
    let mut visited = vec![false; n + 1];
    visited[root] = true;
    while let Some(v) = queue.pop_front() {
        let mut children: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&c| !visited[c])
            .collect();
        if let Some(k) = children.iter().position(|&c| c == next_on_path[v]) {
            let c = children.remove(k);
            children.insert(0, c);
        }
        let mut prev = edge_node[v];
        for c in children {
            visited[c] = true;
            parent[c] = v;
            let node = clusters.len();
            clusters.push(vec![v, c]);
            edge_node[c] = node;
            if prev != NONE {
                edges.push((prev, node));
            }
            prev = node;
            queue.push_back(c);
        }
    }
    TreeDecomposition::new(n, clusters, edges)
}

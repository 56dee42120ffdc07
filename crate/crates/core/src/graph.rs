//! Undirected simple graphs on the dense vertex set `1..=n`, cut accounting,
//! and the tree/forest utilities used by the width-one decomposition route.

use std::collections::VecDeque;

use crate::{Error, Ratio, Result, Vertex};

/// An undirected simple graph whose vertices are `1..=n`.
///
/// Adjacency lists are indexed by vertex; slot 0 is unused so that vertex IDs
/// can be used directly as indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Graph {
            n,
            adj: vec![Vec::new(); n + 1],
            edge_count: 0,
        })
    }

    /// Builds a graph from an edge list. Self-loops, parallel edges, and
    /// endpoints outside `1..=n` are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        // parallel edges: sort each list and look for repeats
        for u in 1..=n {
            let list = &mut g.adj[u];
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        for x in [u, v] {
            if x == 0 || x > self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.n
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (1..=self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj
            .get(u)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// The subgraph induced by `keep` (any order, no repeats), with vertices
    /// renamed to `1..=keep.len()` in increasing order of their old IDs.
    /// Returns the subgraph and the new-to-old name table (slot 0 unused).
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<(Graph, Vec<Vertex>)> {
        let mut old: Vec<Vertex> = keep.to_vec();
        old.sort_unstable();
        let mut new_of = vec![0usize; self.n + 1];
        for (k, &v) in old.iter().enumerate() {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if new_of[v] != 0 {
                return Err(Error::PartitionInvalid(format!("vertex {v} listed twice")));
            }
            new_of[v] = k + 1;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| new_of[u] != 0 && new_of[v] != 0)
            .map(|(u, v)| (new_of[u], new_of[v]));
        let sub = Graph::from_edges(old.len(), edges)?;
        let mut back = Vec::with_capacity(old.len() + 1);
        back.push(0);
        back.extend(old);
        Ok((sub, back))
    }
}

/// Maximum degree; 0 for edgeless graphs.
pub fn max_degree(g: &Graph) -> usize {
    g.vertices().map(|v| g.degree(v)).max().unwrap_or(0)
}

/// A partition of `1..=n` into `k >= 1` classes, stored as a class index per
/// vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: usize,
}

impl Partition {
    /// Validates that `classes` are pairwise disjoint and cover `1..=n`.
    pub fn from_classes(n: usize, classes: &[Vec<Vertex>]) -> Result<Self> {
        const UNSET: usize = usize::MAX;
        let mut class_of = vec![UNSET; n + 1];
        for (k, class) in classes.iter().enumerate() {
            for &v in class {
                if v == 0 || v > n {
                    return Err(Error::PartitionInvalid(format!(
                        "vertex {v} outside 1..={n}"
                    )));
                }
                if class_of[v] != UNSET {
                    return Err(Error::PartitionInvalid(format!(
                        "vertex {v} in classes {} and {k}",
                        class_of[v]
                    )));
                }
                class_of[v] = k;
            }
        }
        if let Some(v) = (1..=n).find(|&v| class_of[v] == UNSET) {
            return Err(Error::PartitionInvalid(format!("vertex {v} not covered")));
        }
        Ok(Partition {
            class_of,
            classes: classes.len(),
        })
    }

    /// The cut `(black, V \ black)`.
    pub fn bipartition(n: usize, black: &[Vertex]) -> Result<Self> {
        let mut in_black = vec![false; n + 1];
        for &v in black {
            if v == 0 || v > n || in_black[v] {
                return Err(Error::PartitionInvalid(format!(
                    "bad or repeated vertex {v}"
                )));
            }
            in_black[v] = true;
        }
        let white: Vec<Vertex> = (1..=n).filter(|&v| !in_black[v]).collect();
        Partition::from_classes(n, &[black.to_vec(), white])
    }

    pub fn n(&self) -> usize {
        self.class_of.len() - 1
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, v: Vertex) -> usize {
        self.class_of[v]
    }
}

/// Number of edges whose endpoints lie in different classes.
pub fn cut_width(g: &Graph, p: &Partition) -> Result<usize> {
    if p.n() != g.n() {
        return Err(Error::PartitionInvalid(format!(
            "partition covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    Ok(g
        .edges()
        .filter(|&(u, v)| p.class_of(u) != p.class_of(v))
        .count())
}

/// Width of the cut `(black, V \ black)` given as a membership mask of length
/// `n + 1`.
pub fn cut_width_of_mask(g: &Graph, black: &[bool]) -> usize {
    g.edges().filter(|&(u, v)| black[u] != black[v]).count()
}

/// Width of the cut `(black, V \ black)`; `black` must hold distinct vertices.
pub fn cut_width_of_set(g: &Graph, black: &[Vertex]) -> usize {
    let mut mask = vec![false; g.n() + 1];
    for &v in black {
        mask[v] = true;
    }
    cut_width_of_mask(g, &mask)
}

/// Connected components, each listed in BFS order from its smallest vertex.
/// Components are ordered by their smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.n() + 1];
    let mut out = Vec::new();
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + components(g).len() == g.n()
}

pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() + 1 == g.n() && components(g).len() == 1
}

/// BFS from `source` restricted to its component. Returns the farthest
/// vertex (smallest ID among ties) and the BFS parent table.
fn farthest_from(g: &Graph, source: Vertex) -> (Vertex, Vec<Vertex>) {
    let mut dist = vec![usize::MAX; g.n() + 1];
    let mut parent = vec![0; g.n() + 1];
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    let mut best = source;
    while let Some(u) = queue.pop_front() {
        if dist[u] > dist[best] || (dist[u] == dist[best] && u < best) {
            best = u;
        }
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    (best, parent)
}

/// A longest path of the tree component containing `start`, via two
/// farthest-vertex searches. The path runs from the second search's source
/// to its farthest vertex.
fn longest_path_from(g: &Graph, start: Vertex) -> Vec<Vertex> {
    let (a, _) = farthest_from(g, start);
    let (b, parent) = farthest_from(g, a);
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// A longest path (maximum vertex count) in a tree.
pub fn longest_path_in_tree(g: &Graph) -> Result<Vec<Vertex>> {
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    Ok(longest_path_from(g, 1))
}

/// `(1/n) * sum over components of |V(longest path)|`, exactly.
pub fn relative_diameter(g: &Graph) -> Result<Ratio> {
    if !is_forest(g) {
        return Err(Error::NotAForest);
    }
    let covered: usize = components(g)
        .iter()
        .map(|comp| longest_path_from(g, comp[0]).len())
        .sum();
    Ok(Ratio::new(covered as u64, g.n() as u64))
}

//! Deterministic instance generators. Every instance comes with a valid tree
//! decomposition: trees with their width-one decomposition, grids with the
//! sliding-window path decomposition, partial k-trees with the decomposition
//! they were grown from.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::treedec::{tree_to_width1_td, TreeDecomposition};
use crate::{Error, Result, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Star,
    Spider,
    Caterpillar,
    Ternary,
    RandomTree,
    Grid,
    KTree,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Path,
        Family::Star,
        Family::Spider,
        Family::Caterpillar,
        Family::Ternary,
        Family::RandomTree,
        Family::Grid,
        Family::KTree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Spider => "spider",
            Family::Caterpillar => "caterpillar",
            Family::Ternary => "ternary",
            Family::RandomTree => "random-tree",
            Family::Grid => "grid",
            Family::KTree => "k-tree",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// What to generate.
///
/// | family | `size` | `arg` |
/// |---|---|---|
/// | path | vertices | - |
/// | star | leaves | - |
/// | spider | legs | leg length |
/// | caterpillar | spine length | leaves per spine vertex |
/// | ternary | height `h` | - |
/// | random-tree | vertices | - |
/// | grid | side `k` | - |
/// | k-tree | vertices | `k` |
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub family: Family,
    pub size: usize,
    #[serde(default)]
    pub arg: usize,
    #[serde(default)]
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(family: Family, size: usize, arg: usize, seed: u64) -> Self {
        InstanceSpec {
            family,
            size,
            arg,
            seed,
        }
    }

    pub fn id(&self) -> String {
        match self.family {
            Family::Path | Family::Star | Family::Ternary | Family::Grid => {
                format!("{}-{}", self.family, self.size)
            }
            Family::Spider | Family::Caterpillar => {
                format!("{}-{}x{}", self.family, self.size, self.arg)
            }
            Family::RandomTree => format!("{}-{}-s{}", self.family, self.size, self.seed),
            Family::KTree => format!("{}-{}-k{}-s{}", self.family, self.size, self.arg, self.seed),
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn generate(spec: &InstanceSpec) -> Result<(Graph, TreeDecomposition)> {
    let s = spec.size;
    let tree = match spec.family {
        Family::Path => path(s)?,
        Family::Star => star(s)?,
        Family::Spider => spider(s, spec.arg)?,
        Family::Caterpillar => caterpillar(s, spec.arg)?,
        Family::Ternary => ternary(s)?,
        Family::RandomTree => random_tree(s, &mut rng(spec.seed))?,
        Family::Grid => return grid(s),
        Family::KTree => return partial_k_tree(s, spec.arg, &mut rng(spec.seed)),
    };
    let td = tree_to_width1_td(&tree)?;
    Ok((tree, td))
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|v| (v, v + 1)))
}

/// `K_{1,leaves}` with center 1.
pub fn star(leaves: usize) -> Result<Graph> {
    Graph::from_edges(leaves + 1, (2..=leaves + 1).map(|v| (1, v)))
}

/// `legs` paths of `leg_len` vertices each, joined at center 1.
pub fn spider(legs: usize, leg_len: usize) -> Result<Graph> {
    let n = 1 + legs * leg_len;
    let mut edges = Vec::with_capacity(n - 1);
    for leg in 0..legs {
        let first = 2 + leg * leg_len;
        for k in 0..leg_len {
            let v = first + k;
            edges.push((if k == 0 { 1 } else { v - 1 }, v));
        }
    }
    Graph::from_edges(n, edges)
}

/// A spine `1..=spine` with `leaves` pendant vertices on every spine vertex.
pub fn caterpillar(spine: usize, leaves: usize) -> Result<Graph> {
    let n = spine * (1 + leaves);
    let mut edges: Vec<(Vertex, Vertex)> = (1..spine).map(|v| (v, v + 1)).collect();
    let mut next = spine + 1;
    for v in 1..=spine {
        for _ in 0..leaves {
            edges.push((v, next));
            next += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn ternary_size(h: usize) -> usize {
    (3usize.pow(h as u32 + 1) - 1) / 2
}

/// Perfect ternary tree of height `h`, numbered breadth-first from root 1.
pub fn ternary(h: usize) -> Result<Graph> {
    let n = ternary_size(h);
    Graph::from_edges(n, (2..=n).map(|v| ((v + 1) / 3, v)))
}

/// Uniform random labeled tree via a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Result<Graph> {
    if n <= 2 {
        return path(n);
    }
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    Graph::from_edges(n, prufer_edges(n, &code))
}

/// Decodes a Prüfer sequence over `1..=n` in linear time.
pub fn prufer_edges(n: usize, code: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut degree = vec![1usize; n + 1];
    for &v in code {
        degree[v] += 1;
    }
    let mut ptr = 1;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    let mut edges = Vec::with_capacity(n - 1);
    for &v in code {
        edges.push((leaf.min(v), leaf.max(v)));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n));
    edges
}

/// `k×k` grid, row-major, with clusters `{v, …, v+k}` for `v ∈ 1..=k²−k`.
pub fn grid(k: usize) -> Result<(Graph, TreeDecomposition)> {
    let n = k * k;
    let mut edges = Vec::with_capacity(2 * n);
    for v in 1..=n {
        if v % k != 0 {
            edges.push((v, v + 1));
        }
        if v + k <= n {
            edges.push((v, v + k));
        }
    }
    let g = Graph::from_edges(n, edges)?;
    if k == 1 {
        return Ok((g, TreeDecomposition::new(1, vec![vec![1]], vec![])?));
    }
    let windows = n - k;
    let clusters = (1..=windows).map(|v| (v..=v + k).collect()).collect();
    let tree = (1..windows).map(|i| (i - 1, i)).collect();
    Ok((g, TreeDecomposition::new(n, clusters, tree)?))
}

/// A random k-tree on `n` vertices with each edge then kept with
/// probability 3/4, together with the width-`k` decomposition it was built on.
pub fn partial_k_tree<R: Rng>(n: usize, k: usize, rng: &mut R) -> Result<(Graph, TreeDecomposition)> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let base = (k + 1).min(n);
    let mut clusters: Vec<Vec<Vertex>> = vec![(1..=base).collect()];
    let mut tree = Vec::new();
    let mut edges = Vec::new();
    for u in 1..=base {
        for v in u + 1..=base {
            edges.push((u, v));
        }
    }
    for v in base + 1..=n {
        let host = rng.gen_range(0..clusters.len());
        let mut clique = clusters[host].clone();
        clique.remove(rng.gen_range(0..clique.len()));
        edges.extend(clique.iter().map(|&u| (u, v)));
        clique.push(v);
        clusters.push(clique);
        tree.push((host, clusters.len() - 1));
    }
    edges.retain(|_| rng.gen_ratio(3, 4));
    let g = Graph::from_edges(n, edges)?;
    Ok((g, TreeDecomposition::new(n, clusters, tree)?))
}

/// Adds `extra` redundant nodes: subdivisions carrying the shared part of an
/// edge, or leaves carrying a random subset (possibly empty) of their host.
/// The result decomposes the same graphs.
pub fn inflate_redundant<R: Rng>(td: &TreeDecomposition, extra: usize, rng: &mut R) -> Result<TreeDecomposition> {
    let mut clusters = td.clusters().to_vec();
    let mut edges = td.edges().to_vec();
    for _ in 0..extra {
        let new = clusters.len();
        if !edges.is_empty() && rng.gen_bool(0.5) {
            let e = rng.gen_range(0..edges.len());
            let (a, b) = edges[e];
            let shared = clusters[a].iter().copied().filter(|v| clusters[b].contains(v)).collect();
            clusters.push(shared);
            edges[e] = (a, new);
            edges.push((new, b));
        } else {
            let host = rng.gen_range(0..clusters.len());
            let mut sub = clusters[host].clone();
            sub.shuffle(rng);
            sub.truncate(rng.gen_range(0..=sub.len()));
            clusters.push(sub);
            edges.push((host, new));
        }
    }
    TreeDecomposition::new(td.universe(), clusters, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{self, max_degree};
    use crate::treedec::validate;

    fn check(spec: InstanceSpec) -> (Graph, TreeDecomposition) {
        let (g, td) = generate(&spec).unwrap();
        assert!(validate(&g, &td).is_valid(), "{spec}");
        (g, td)
    }

    #[test]
    fn small_families() {
        let (g, td) = check(InstanceSpec::new(Family::Path, 6, 0, 0));
        assert_eq!((g.n(), td.max_cluster_size()), (6, 2));
        let (g, _) = check(InstanceSpec::new(Family::Ternary, 2, 0, 0));
        assert_eq!((g.n(), max_degree(&g)), (13, 4));
        assert_eq!(graph::relative_diameter(&g).unwrap(), crate::Ratio::new(5, 13));
        let (g, _) = check(InstanceSpec::new(Family::Spider, 3, 8, 0));
        assert_eq!(g.n(), 25);
        let (g, _) = check(InstanceSpec::new(Family::Caterpillar, 4, 2, 0));
        assert_eq!((g.n(), g.edge_count()), (12, 11));
        let (g, _) = check(InstanceSpec::new(Family::Star, 4, 0, 0));
        assert_eq!(max_degree(&g), 4);
    }

    #[test]
    fn grid_window_decomposition() {
        let (g, td) = check(InstanceSpec::new(Family::Grid, 4, 0, 0));
        assert_eq!((g.n(), td.width()), (16, 4));
        assert!(td.edges().iter().all(|&(a, b)| b == a + 1));
        check(InstanceSpec::new(Family::Grid, 1, 0, 0));
    }

    #[test]
    fn prufer_known_code() {
        // code (4, 4, 4, 5) on 6 vertices
        let mut e = prufer_edges(6, &[4, 4, 4, 5]);
        e.sort_unstable();
        assert_eq!(e, vec![(1, 4), (2, 4), (3, 4), (4, 5), (5, 6)]);
    }

    #[test]
    fn deterministic_in_seed() {
        let a = InstanceSpec::new(Family::RandomTree, 40, 0, 9);
        assert_eq!(generate(&a).unwrap(), generate(&a).unwrap());
        let b = InstanceSpec::new(Family::KTree, 14, 3, 9);
        let (g, td) = check(b);
        assert_eq!(generate(&b).unwrap().0, g);
        assert!(td.max_cluster_size() <= 4);
    }

    #[test]
    fn inflation_stays_valid() {
        let (g, td) = check(InstanceSpec::new(Family::KTree, 10, 2, 1));
        let fat = inflate_redundant(&td, 6, &mut rng(3)).unwrap();
        assert_eq!(fat.node_count(), td.node_count() + 6);
        assert!(validate(&g, &fat).is_valid());
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("blob".parse::<Family>().is_err());
    }
}

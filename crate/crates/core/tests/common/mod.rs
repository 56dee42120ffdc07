#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use treecut_core::generate::{generate, inflate_redundant, partial_k_tree, Family, InstanceSpec};
use treecut_core::treedec::{heaviest_path, is_nonredundant_path, make_nonredundant, PathEnd, TreePath};
use treecut_core::{Graph, TreeDecomposition};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random graph with a (usually redundant) decomposition of at most
/// `max_nodes` nodes.
pub fn random_instance(seed: u64, max_n: usize, max_nodes: usize) -> (Graph, TreeDecomposition) {
    let mut r = rng(seed);
    let k = r.gen_range(1..=3);
    let n = r.gen_range(1..=max_n.min(max_nodes + k));
    let (g, td) = partial_k_tree(n, k, &mut r).unwrap();
    let room = max_nodes.saturating_sub(td.node_count());
    let extra = r.gen_range(0..=room);
    let td = inflate_redundant(&td, extra, &mut r).unwrap();
    (g, td)
}

pub fn random_tree(n: usize, seed: u64) -> (Graph, TreeDecomposition) {
    generate(&InstanceSpec::new(Family::RandomTree, n, 0, seed)).unwrap()
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v, v + 1))).unwrap()
}

pub fn p6_td() -> TreeDecomposition {
    TreeDecomposition::new(
        6,
        (1..6).map(|v| vec![v, v + 1]).collect(),
        (0..4).map(|i| (i, i + 1)).collect(),
    )
    .unwrap()
}

/// BFS distances from `s` in `g`.
pub fn distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut d = vec![usize::MAX; g.n() + 1];
    d[s] = 0;
    let mut q = std::collections::VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &v in g.neighbors(u) {
            if d[v] == usize::MAX {
                d[v] = d[u] + 1;
                q.push_back(v);
            }
        }
    }
    d
}

/// Heaviest path of the nonredundant form, oriented from a nonredundant end.
pub fn prepared(td: &TreeDecomposition) -> (TreeDecomposition, TreePath) {
    let nr = make_nonredundant(td).unwrap();
    let (p, _) = heaviest_path(&nr);
    let p = match is_nonredundant_path(&nr, &p) {
        Some(PathEnd::Front) => p,
        Some(PathEnd::Back) => p.reversed(),
        None => panic!("path in a nonredundant decomposition is redundant"),
    };
    (nr, p)
}

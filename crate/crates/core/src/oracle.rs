//! Exact reference answers for small instances.

use crate::graph::{self, Graph, Partition};
use crate::treedec::{TreeDecomposition, TreePath};
use crate::{Error, Result, Vertex};

pub const BRUTE_FORCE_LIMIT: usize = 24;
pub const TREE_DP_LIMIT: usize = 5000;
pub const HEAVIEST_PATH_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub width: usize,
    /// One optimal `B`, sorted.
    pub black: Vec<Vertex>,
    /// Number of candidate sets or table entries examined.
    pub searched: u64,
}

impl OracleResult {
    pub fn partition(&self, n: usize) -> Result<Partition> {
        Partition::bipartition(n, &self.black)
    }
}

pub fn brute_force_min_bisection(g: &Graph) -> Result<OracleResult> {
    brute_force_min_cut_size_m(g, g.n() / 2)
}

/// Minimum width over all `m`-subsets, by enumeration.
pub fn brute_force_min_cut_size_m(g: &Graph, m: usize) -> Result<OracleResult> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if m > n {
        return Err(Error::BadSize { m, n });
    }
    let adj: Vec<u32> = (1..=n)
        .map(|v| g.neighbors(v).iter().fold(0, |a, &u| a | 1 << (u - 1)))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let width = |mask: u32| -> usize {
        let mut rest = mask;
        let mut w = 0;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            w += (adj[v] & !mask & full).count_ones() as usize;
        }
        w
    };
    let mut best = (usize::MAX, 0u32);
    let mut searched = 0u64;
    if m == 0 {
        best = (0, 0);
        searched = 1;
    } else {
        let mut mask: u32 = (1 << m) - 1;
        while mask <= full {
            searched += 1;
            let w = width(mask);
            if w < best.0 {
                best = (w, mask);
            }
            // next subset of the same size
            let low = mask & mask.wrapping_neg();
            let ripple = mask.wrapping_add(low);
            if ripple == 0 || ripple > full {
                break;
            }
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    let black = (1..=n).filter(|&v| best.1 >> (v - 1) & 1 == 1).collect();
    Ok(OracleResult {
        width: best.0,
        black,
        searched,
    })
}

pub fn tree_dp_min_bisection(g: &Graph) -> Result<OracleResult> {
    tree_dp_min_cut_size_m(g, g.n() / 2)
}

const INF: u32 = u32::MAX / 4;

/// Minimum width over all `m`-subsets of a tree, by a subtree-size DP over
/// (vertex, black vertices below, vertex color).
pub fn tree_dp_min_cut_size_m(g: &Graph, m: usize) -> Result<OracleResult> {
    let n = g.n();
    if n > TREE_DP_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: TREE_DP_LIMIT,
        });
    }
    if !graph::is_tree(g) {
        return Err(Error::NotATree);
    }
    if m > n {
        return Err(Error::BadSize { m, n });
    }
    let mut parent = vec![0; n + 1];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![1];
    let mut seen = vec![false; n + 1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
                stack.push(u);
            }
        }
    }
    let parent = &parent;
    let children = |v: Vertex| g.neighbors(v).iter().copied().filter(move |&u| parent[u] == v);

    // table[k][c], flattened; stages[v][j] is the table before merging child j
    let mut table: Vec<Vec<[u32; 2]>> = vec![Vec::new(); n + 1];
    let mut stages: Vec<Vec<Vec<[u32; 2]>>> = vec![Vec::new(); n + 1];
    let mut searched = 0u64;
    for &v in order.iter().rev() {
        let mut cur = vec![[0, INF], [INF, 0]];
        for u in children(v) {
            let child = std::mem::take(&mut table[u]);
            let mut next = vec![[INF; 2]; cur.len() + child.len() - 1];
            for (k1, a) in cur.iter().enumerate() {
                for (k2, b) in child.iter().enumerate() {
                    searched += 4;
                    for c in 0..2 {
                        for (cu, &bw) in b.iter().enumerate() {
                            let w = a[c] + bw + (c != cu) as u32;
                            if w < next[k1 + k2][c] {
                                next[k1 + k2][c] = w;
                            }
                        }
                    }
                }
            }
            stages[v].push(std::mem::replace(&mut cur, next));
            table[u] = child;
        }
        table[v] = cur;
    }

    let root = &table[1];
    let c0 = if root[m][0] <= root[m][1] { 0 } else { 1 };
    let width = root[m][c0] as usize;
    let mut black = Vec::with_capacity(m);
    let mut work = vec![(1, m, c0)];
    while let Some((v, mut k, c)) = work.pop() {
        if c == 1 {
            black.push(v);
        }
        let kids: Vec<Vertex> = children(v).collect();
        let mut target = if stages[v].is_empty() { 0 } else { table[v][k][c] };
        for (j, &u) in kids.iter().enumerate().rev() {
            let prev = &stages[v][j];
            let child = &table[u];
            let found = (0..prev.len())
                .filter(|&k1| k1 <= k && k - k1 < child.len())
                .flat_map(|k1| (0..2).map(move |cu| (k1, cu)))
                .find(|&(k1, cu)| prev[k1][c] + child[k - k1][cu] + (c != cu) as u32 == target)
                .expect("table entry has a witness");
            work.push((u, k - found.0, found.1));
            k = found.0;
            target = prev[k][c];
        }
    }
    black.sort_unstable();
    Ok(OracleResult {
        width,
        black,
        searched,
    })
}

/// Heaviest path by checking the path between every pair of nodes. Ties go
/// to the lexicographically first `(start, end)` pair.
pub fn brute_force_heaviest_path(td: &TreeDecomposition) -> Result<(TreePath, usize)> {
    let k = td.node_count();
    if k > HEAVIEST_PATH_LIMIT {
        return Err(Error::TooLarge {
            n: k,
            limit: HEAVIEST_PATH_LIMIT,
        });
    }
    if k == 0 {
        return Err(Error::EmptyDecomposition);
    }
    let mut stamp = vec![usize::MAX; td.universe() + 1];
    let mut best: Option<(Vec<usize>, usize)> = None;
    let mut round = 0;
    for a in 0..k {
        for b in a..k {
            let nodes = td.path_between(a, b);
            let mut w = 0;
            for &i in &nodes {
                for &v in td.cluster(i) {
                    if stamp[v] != round {
                        stamp[v] = round;
                        w += 1;
                    }
                }
            }
            round += 1;
            if best.as_ref().is_none_or(|(_, bw)| w > *bw) {
                best = Some((nodes, w));
            }
        }
    }
    let (nodes, w) = best.expect("at least one node");
    Ok((TreePath::new(td, nodes)?, w))
}

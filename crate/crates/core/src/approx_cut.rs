//! Approximate cuts: a set `B` with `c·m < |B| ≤ m` whose boundary is paid
//! for by at most `⌈log2(1/(1-c))⌉` clusters.
//!
//! The tree is rooted, `y_i = |Y^i|` counts the vertices in clusters at or
//! below `i`, and `ỹ_i = |Y^i \ X^parent|`. Starting from a lowest node with
//! `y ≥ m`, each round swallows the heaviest-first prefix of child subtrees
//! that still fits, then either tops up from the current cluster or walks
//! down into the first child that did not fit.

use crate::graph::{self, Graph};
use crate::labeling::NONE;
use crate::treedec::TreeDecomposition;
use crate::{Error, NodeId, OpCounter, Ratio, Result, Vertex};

/// `y_i`, `ỹ_i`, and children sorted by `ỹ` (descending, ties in preorder).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtreeWeights {
    pub root: NodeId,
    pub y: Vec<usize>,
    pub y_tilde: Vec<usize>,
    pub parent: Vec<NodeId>,
    pub children: Vec<Vec<NodeId>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproxCutResult {
    /// The vertices of `B`, sorted.
    pub black: Vec<Vertex>,
    /// Number of outer rounds `s*`.
    pub iterations: u32,
}

impl ApproxCutResult {
    pub fn width(&self, g: &Graph) -> usize {
        graph::cut_width_of_set(g, &self.black)
    }
}

/// `⌈log2(1/(1-c))⌉` for `0 < c < 1`, computed exactly.
pub fn iteration_limit(c: Ratio) -> u32 {
    let (num, den) = (*c.numer() as u128, *c.denom() as u128);
    let gap = den - num;
    let mut k = 0;
    while (gap << k) < den {
        k += 1;
    }
    k
}

pub fn compute_subtree_weights(td: &TreeDecomposition, root: NodeId) -> SubtreeWeights {
    let (order, parent) = td.dfs_preorder(root);
    subtree_weights(td.universe(), &order, &parent, td.clusters(), &mut OpCounter::new())
}

fn subtree_weights<C: AsRef<[Vertex]>>(
    n: usize,
    order: &[usize],
    parent: &[usize],
    clusters: &[C],
    ops: &mut OpCounter,
) -> SubtreeWeights {
    let k = parent.len();
    let mut shared = vec![0usize; k];
    let mut stamped = vec![false; n + 1];
    for &i in order {
        let cl = clusters[i].as_ref();
        ops.add(1 + 2 * cl.len());
        shared[i] = cl.iter().filter(|&&v| stamped[v]).count();
        for &v in cl {
            stamped[v] = true;
        }
    }
    let mut y = vec![0usize; k];
    let mut y_tilde = vec![0usize; k];
    for &i in order.iter().rev() {
        y[i] += clusters[i].as_ref().len();
        y_tilde[i] = y[i] - shared[i];
        if parent[i] != NONE {
            y[parent[i]] += y_tilde[i];
        }
    }
    // one counting sort over all non-root nodes, then split by parent
    let mut count = vec![0usize; n + 2];
    for &i in order.iter().skip(1) {
        count[y_tilde[i]] += 1;
    }
    let mut start = vec![0usize; n + 2];
    let mut acc = 0;
    for key in (0..=n).rev() {
        start[key] = acc;
        acc += count[key];
    }
    let mut sorted = vec![0usize; order.len().saturating_sub(1)];
    for &i in order.iter().skip(1) {
        sorted[start[y_tilde[i]]] = i;
        start[y_tilde[i]] += 1;
    }
    ops.add(2 * order.len() + n);
    let mut children = vec![Vec::new(); k];
    for &i in &sorted {
        children[parent[i]].push(i);
    }
    SubtreeWeights {
        root: order[0],
        y,
        y_tilde,
        parent: parent.to_vec(),
        children,
    }
}

/// Approximate cut of the graph behind `td` (vertices `1..=td.universe()`),
/// rooted at node 0.
pub fn approximate_cut(td: &TreeDecomposition, m: usize, c: Ratio) -> Result<ApproxCutResult> {
    approximate_cut_counted(td, m, c, &mut OpCounter::new())
}

pub fn approximate_cut_counted(
    td: &TreeDecomposition,
    m: usize,
    c: Ratio,
    ops: &mut OpCounter,
) -> Result<ApproxCutResult> {
    let (order, parent) = td.dfs_preorder(0);
    ops.add(td.node_count());
    approximate_cut_rooted(td.universe(), &order, &parent, td.clusters(), m, c, ops)
}

/// The algorithm on a rooted tree given by its preorder and parent table
/// (`usize::MAX` at the root), with clusters over `1..=n`.
pub(crate) fn approximate_cut_rooted<C: AsRef<[Vertex]>>(
    n: usize,
    order: &[usize],
    parent: &[usize],
    clusters: &[C],
    m: usize,
    c: Ratio,
    ops: &mut OpCounter,
) -> Result<ApproxCutResult> {
    if *c.numer() == 0 || c.numer() >= c.denom() {
        return Err(Error::BadFraction);
    }
    if m == 0 || m > n {
        return Err(Error::BadSize { m, n });
    }
    let (num, den) = (*c.numer() as u128, *c.denom() as u128);
    let w = subtree_weights(n, order, parent, clusters, ops);

    let mut i = w.root;
    loop {
        ops.add(1 + w.children[i].len());
        match w.children[i].iter().find(|&&j| w.y[j] >= m) {
            Some(&j) => i = j,
            None => break,
        }
    }

    let mut in_b = vec![false; n + 1];
    let mut size = 0usize;
    let mut rounds = 0u32;
    let mut stack = Vec::new();
    while (size as u128) * den <= num * (m as u128) {
        rounds += 1;
        if rounds > 128 {
            return Err(Error::InternalInvariant("approximate cut does not converge".into()));
        }
        let room = m - size;
        let kids = &w.children[i];
        let mut taken = 0;
        let mut sum = 0;
        while taken < kids.len() && sum + w.y_tilde[kids[taken]] <= room {
            sum += w.y_tilde[kids[taken]];
            taken += 1;
        }
        ops.add(1 + taken);
        for &j in &kids[..taken] {
            stack.push(j);
            while let Some(h) = stack.pop() {
                let cl = clusters[h].as_ref();
                ops.add(1 + cl.len() + w.children[h].len());
                for &v in cl {
                    in_b[v] = true;
                }
                stack.extend_from_slice(&w.children[h]);
            }
        }
        if taken > 0 {
            let cl = clusters[i].as_ref();
            ops.add(cl.len());
            for &v in cl {
                in_b[v] = false;
            }
        }
        size += sum;
        if taken == kids.len() {
            let mut need = m - size;
            for &v in clusters[i].as_ref() {
                if need == 0 {
                    break;
                }
                ops.add(1);
                if !in_b[v] {
                    in_b[v] = true;
                    need -= 1;
                    size += 1;
                }
            }
            if need > 0 {
                return Err(Error::InternalInvariant(
                    "cluster too small to complete the approximate cut".into(),
                ));
            }
        } else {
            let mut j = kids[taken];
            while j != NONE && w.y[j] >= m - size {
                ops.add(1);
                i = j;
                j = w.children[i].first().copied().unwrap_or(NONE);
            }
        }
    }
    ops.add(n);
    let black: Vec<Vertex> = (1..=n).filter(|&v| in_b[v]).collect();
    if black.len() != size {
        return Err(Error::InternalInvariant(format!(
            "approximate cut tracked {size} vertices but marked {}",
            black.len()
        )));
    }
    Ok(ApproxCutResult {
        black,
        iterations: rounds,
    })
}

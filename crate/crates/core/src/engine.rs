//! The weight-doubling tri-cut and the exact-size cut drivers built on it.

use serde::Serialize;

use crate::approx_cut::{approximate_cut_rooted, ApproxCutResult};
use crate::graph::{self, Graph};
use crate::labeling::{build_plabeling_counted, Block, PLabeling, NONE};
use crate::treedec::{
    self, heaviest_path_counted, make_nonredundant_counted, TreeDecomposition, TreePath,
    VertexRenaming,
};
use crate::{ensure, Error, NodeId, OpCounter, Ratio, Result, Vertex};

/// Exact `log2(1/r)` when `1/r` is a power of two.
fn exact_log2_inverse(r: Ratio) -> Option<u32> {
    let (num, den) = (*r.numer(), *r.denom());
    (num == 1 && den.is_power_of_two()).then(|| den.trailing_zeros())
}

fn check_bound_args(t: usize, r: Ratio) {
    assert!(t >= 1, "cluster size bound must be positive");
    assert!(*r.numer() > 0 && r.numer() <= r.denom(), "relative weight outside (0, 1]");
}

/// `t·Δ·((log2 1/r)² + 9·log2 1/r + 8) / 2`.
pub fn bound_value(t: usize, delta: usize, r: Ratio) -> f64 {
    check_bound_args(t, r);
    let l = match exact_log2_inverse(r) {
        Some(k) => k as f64,
        None => (*r.denom() as f64 / *r.numer() as f64).log2(),
    };
    0.5 * (t * delta) as f64 * (l * l + 9.0 * l + 8.0)
}

/// `8·t·Δ / r`.
pub fn legible_bound(t: usize, delta: usize, r: Ratio) -> f64 {
    check_bound_args(t, r);
    8.0 * (t * delta) as f64 * *r.denom() as f64 / *r.numer() as f64
}

/// `width ≤ bound_value(t, delta, r)`, in integers when `log2(1/r)` is.
pub fn within_bound(width: usize, t: usize, delta: usize, r: Ratio) -> bool {
    check_bound_args(t, r);
    match exact_log2_inverse(r) {
        Some(l) => {
            let l = l as u128;
            2 * width as u128 <= (t * delta) as u128 * (l + 1) * (l + 8)
        }
        None => width as f64 <= bound_value(t, delta, r),
    }
}

/// `width ≤ 8·t·Δ/r`, exactly.
pub fn within_legible_bound(width: usize, t: usize, delta: usize, r: Ratio) -> bool {
    check_bound_args(t, r);
    width as u128 * *r.numer() as u128 <= 8 * (t * delta) as u128 * *r.denom() as u128
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StepCase {
    #[serde(rename = "1")]
    Case1,
    #[serde(rename = "2a")]
    Case2a,
    #[serde(rename = "2b")]
    Case2b,
}

impl std::fmt::Display for StepCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            StepCase::Case1 => "1",
            StepCase::Case2a => "2a",
            StepCase::Case2b => "2b",
        })
    }
}

/// A cut `(B, W, Z)` of the current graph; `W` is everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriCut {
    pub black: Vec<Vertex>,
    pub z: Vec<Vertex>,
    pub case: StepCase,
}

impl TriCut {
    /// Edges of `g` between different classes, among the vertices of
    /// `current` (all of `g` when `None`).
    pub fn width(&self, g: &Graph, current: Option<&[Vertex]>) -> usize {
        const OUT: u8 = 0;
        let mut class = vec![OUT; g.n() + 1];
        match current {
            Some(vs) => vs.iter().for_each(|&v| class[v] = 3),
            None => class.iter_mut().skip(1).for_each(|c| *c = 3),
        }
        self.black.iter().for_each(|&v| class[v] = 1);
        self.z.iter().for_each(|&v| class[v] = 2);
        g.edges()
            .filter(|&(u, v)| class[u] != OUT && class[v] != OUT && class[u] != class[v])
            .count()
    }
}

/// Per path node counts for the second case, in path order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NodeCounts {
    pub node: NodeId,
    pub s_len: usize,
    pub u_b: usize,
    pub u_f: usize,
    pub h_b: usize,
    pub h_f: usize,
    /// Smallest and largest label `x` in `S_i` with `N_m^{-1}(x) ∈ R`.
    pub b_witness: Option<(usize, usize)>,
    /// Smallest and largest label `x` in `S_i` with `N_m(x) ∈ R`.
    pub f_witness: Option<(usize, usize)>,
}

impl NodeCounts {
    pub fn b_special(&self) -> bool {
        self.u_b > 0
    }

    pub fn f_special(&self) -> bool {
        self.u_f > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialNodeAnalysis {
    pub n: usize,
    pub m: usize,
    pub r_count: usize,
    pub nodes: Vec<NodeCounts>,
}

impl SpecialNodeAnalysis {
    fn qualifies(&self, s_len: usize, u: usize, h: usize) -> bool {
        let r = self.r_count as u128;
        u > 0 && r * (s_len + h) as u128 <= (self.n - self.r_count) as u128 * u as u128
    }

    /// First path position (b preferred) meeting the counting condition.
    pub fn pick(&self) -> Option<(usize, bool)> {
        self.nodes.iter().enumerate().find_map(|(p, c)| {
            if self.qualifies(c.s_len, c.u_b, c.h_b) {
                Some((p, true))
            } else if self.qualifies(c.s_len, c.u_f, c.h_f) {
                Some((p, false))
            } else {
                None
            }
        })
    }

    /// The partition and counting facts the second case rests on.
    pub fn check(&self) -> Result<()> {
        let sum_b: usize = self.nodes.iter().map(|c| c.u_b).sum();
        let sum_f: usize = self.nodes.iter().map(|c| c.u_f).sum();
        ensure(sum_b == self.r_count && sum_f == self.r_count, || {
            format!("U sets cover {sum_b} / {sum_f} of {} path vertices", self.r_count)
        })?;
        for c in &self.nodes {
            ensure(c.u_b + c.h_b <= c.s_len && c.u_f + c.h_f <= c.s_len, || {
                format!("U and H exceed S at node {}", c.node)
            })?;
        }
        let b = self.nodes.iter().filter(|c| c.b_special()).count();
        let f = self.nodes.iter().filter(|c| c.f_special()).count();
        ensure(b == f && b > 0, || format!("{b} b-special but {f} f-special nodes"))
    }
}

fn analyze(pl: &PLabeling, m: usize, blocks: &[Block], ops: &mut OpCounter) -> SpecialNodeAnalysis {
    let n = pl.n();
    let ci = pl.circular();
    let mut nodes: Vec<NodeCounts> = blocks
        .iter()
        .map(|b| NodeCounts {
            node: b.node,
            s_len: b.s_len(),
            ..NodeCounts::default()
        })
        .collect();
    let mut r_count = 0;
    for (p, b) in blocks.iter().enumerate() {
        r_count += b.r_len();
        let c = &mut nodes[p];
        for k in b.s_start..b.r_start {
            if pl.in_r(pl.vertex(ci.backward(k, m))) {
                c.u_b += 1;
                c.b_witness = Some((c.b_witness.map_or(k, |w| w.0), k));
            }
            if pl.in_r(pl.vertex(ci.forward(k, m))) {
                c.u_f += 1;
                c.f_witness = Some((c.f_witness.map_or(k, |w| w.0), k));
            }
        }
        if let Some((x, y)) = c.b_witness {
            c.h_b = ci.span(x, y) - c.u_b;
        }
        if let Some((x, y)) = c.f_witness {
            c.h_f = ci.span(x, y) - c.u_f;
        }
    }
    ops.add(3 * n);
    SpecialNodeAnalysis {
        n,
        m,
        r_count,
        nodes,
    }
}

/// Outcome of one doubling step.
#[derive(Clone, Debug)]
pub struct Step {
    pub cut: TriCut,
    /// Vertex count before the step.
    pub n: usize,
    /// `|R|` before the step.
    pub r_count: usize,
    /// `|U|`, the weight of the new path (second case only).
    pub u_count: usize,
}

impl Step {
    /// `w*(P, X)` before the step.
    pub fn w_star(&self) -> Ratio {
        Ratio::new(self.r_count as u64, self.n as u64)
    }

    /// `w*(P', X')` after the step (second case only).
    pub fn w_star_after(&self) -> Option<Ratio> {
        (!self.cut.z.is_empty())
            .then(|| Ratio::new(self.u_count as u64, self.cut.z.len() as u64))
    }
}

/// One tri-cut on the labeled graph. `source` supplies the clusters of the
/// hanging subtrees. In the second case the labeling is shrunk in place to
/// `Z` and its new path.
pub fn doubling_step(pl: &mut PLabeling, m: usize, source: &TreeDecomposition) -> Result<Step> {
    doubling_step_counted(pl, m, source, &mut OpCounter::new())
}

pub fn doubling_step_counted(
    pl: &mut PLabeling,
    m: usize,
    source: &TreeDecomposition,
    ops: &mut OpCounter,
) -> Result<Step> {
    let n = pl.n();
    if m == 0 || m > n {
        return Err(Error::BadSize { m, n });
    }
    let ci = pl.circular();
    let labels = |range: &mut dyn Iterator<Item = usize>| -> Vec<Vertex> {
        range.map(|k| pl.vertex(k)).collect()
    };

    ops.add(2 * n);
    if let Some(x) = (1..=n).find(|&k| pl.in_r(pl.vertex(k)) && pl.in_r(pl.vertex(ci.forward(k, m)))) {
        let black = labels(&mut (1..=m).map(|d| ci.forward(x, d)));
        ops.add(m);
        return Ok(Step {
            cut: TriCut {
                black,
                z: Vec::new(),
                case: StepCase::Case1,
            },
            n,
            r_count: pl.r_count(),
            u_count: 0,
        });
    }

    let blocks = pl.blocks();
    ensure(blocks.len() == pl.path().len(), || {
        format!("{} label blocks for {} path nodes", blocks.len(), pl.path().len())
    })?;
    let analysis = analyze(pl, m, &blocks, ops);
    if cfg!(debug_assertions) {
        analysis.check()?;
    }
    let r_count = analysis.r_count;
    ensure(2 * r_count <= n, || "second case with more than half the vertices on the path".into())?;
    let (p, backward) = analysis
        .pick()
        .ok_or_else(|| Error::InternalInvariant("no special node meets the counting bound".into()))?;
    let counts = analysis.nodes[p];
    let block = blocks[p];
    let pos_of = |label: usize| pl.position(pl.path_node(pl.vertex(label))).unwrap_or(NONE);
    let len = blocks.len();

    let (z_first, z_last, b1, u_count, case) = if backward {
        let (x, y) = counts.b_witness.expect("b-special node has a witness");
        let (z_first, z_last) = (ci.backward(x, m), ci.backward(y, m));
        let last = pos_of(z_last);
        ensure(blocks[last].end == z_last && blocks[pos_of(z_first)].r_start == z_first, || {
            "Z does not span whole R blocks".into()
        })?;
        let v = blocks[last].end;
        let w = blocks[(p + len - 1) % len].end;
        let b1 = if v == w {
            Vec::new()
        } else {
            labels(&mut (1..ci.span(v, w)).map(|d| ci.forward(v, d)))
        };
        (z_first, z_last, b1, counts.u_b, StepCase::Case2a)
    } else {
        let (x, y) = counts.f_witness.expect("f-special node has a witness");
        let (z_first, z_last) = (ci.forward(x, m), ci.forward(y, m));
        let first = pos_of(z_first);
        ensure(blocks[first].r_start == z_first && blocks[pos_of(z_last)].end == z_last, || {
            "Z does not span whole R blocks".into()
        })?;
        let w = block.r_start;
        let v = blocks[first].r_start;
        let b1 = if v == w {
            Vec::new()
        } else {
            labels(&mut (0..ci.span(w, v) - 1).map(|d| ci.forward(w, d)))
        };
        (z_first, z_last, b1, counts.u_f, StepCase::Case2b)
    };
    ops.add(b1.len());
    let m_rest = m - b1.len();
    ensure(m_rest >= 1 && m_rest <= block.s_len(), || {
        format!("remaining size {m_rest} outside 1..={}", block.s_len())
    })?;

    let mut black = b1;
    let c_num = (n - 2 * r_count) as u64;
    if c_num > 0 {
        let c = Ratio::new(c_num, (n - r_count) as u64);
        let b2 = cut_hanging_part(pl, source, &block, m_rest, c, ops)?;
        black.extend(b2.black.iter().map(|&k| pl.vertex(k + block.s_start - 1)));
    }
    let z = labels(&mut (0..ci.span(z_first, z_last)).map(|d| ci.forward(z_first, d)));
    ensure(black.len() <= m && m <= black.len() + z.len(), || {
        format!("|B| = {}, |Z| = {}, m = {m}", black.len(), z.len())
    })?;
    ensure(2 * z.len() <= n, || format!("|Z| = {} exceeds half of {n}", z.len()))?;
    ops.add(z.len());
    pl.shrink_to_range(z_first, z_last, ops);
    Ok(Step {
        cut: TriCut { black, z, case },
        n,
        r_count,
        u_count,
    })
}

/// Approximate cut of `G[S_i]` on the hanging subtree of the block's node,
/// with `S_i` renamed to `1..=|S_i|` by label offset.
fn cut_hanging_part(
    pl: &PLabeling,
    source: &TreeDecomposition,
    block: &Block,
    m: usize,
    c: Ratio,
    ops: &mut OpCounter,
) -> Result<ApproxCutResult> {
    let list = pl.hanging(block.node);
    let order: Vec<usize> = (0..list.len()).collect();
    let parent: Vec<usize> = list.iter().map(|&(_, p)| p).collect();
    let clusters: Vec<Vec<Vertex>> = list
        .iter()
        .enumerate()
        .map(|(e, &(h, _))| {
            if e == 0 {
                return Vec::new();
            }
            ops.add(source.cluster(h).len());
            source
                .cluster(h)
                .iter()
                .filter_map(|&v| pl.label(v))
                .filter(|&k| k >= block.s_start && k < block.r_start)
                .map(|k| k + 1 - block.s_start)
                .collect()
        })
        .collect();
    approximate_cut_rooted(block.s_len(), &order, &parent, &clusters, m, c, ops)
}

/// Postcondition checks for one step.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StepAudit {
    pub width: usize,
    pub option1: bool,
    pub option2: bool,
    pub doubled: bool,
    pub z_at_most_half: bool,
    /// Whether the decomposition of `G[Z]` described by the updated labeling
    /// is valid and its path carries the new weight.
    pub restricted_valid: bool,
}

impl StepAudit {
    pub fn passed(&self) -> bool {
        self.option1 != self.option2
            && (self.option1 || (self.doubled && self.z_at_most_half && self.restricted_valid))
    }
}

/// Checks a finished step. `g` uses the labeling's vertex names, `current`
/// lists the vertices before the step, `m` is the requested size, and `pl`
/// is the labeling after the step.
pub fn audit_step(
    g: &Graph,
    current: &[Vertex],
    m: usize,
    t: usize,
    step: &Step,
    pl: &PLabeling,
    source: &TreeDecomposition,
) -> StepAudit {
    let delta = graph::max_degree(g);
    let cut = &step.cut;
    let width = cut.width(g, Some(current));
    let td = (t * delta) as f64;
    let option1 = cut.black.len() == m && cut.z.is_empty() && width <= 2 * t * delta;
    let log_term = (16.0 * step.n as f64 / step.r_count as f64).log2();
    let option2 = !cut.z.is_empty()
        && cut.black.len() <= m
        && m <= cut.black.len() + cut.z.len()
        && 2 * cut.z.len() <= step.n
        && width as f64 <= td * log_term + 1e-9;
    let mut audit = StepAudit {
        width,
        option1,
        option2,
        ..StepAudit::default()
    };
    if cut.z.is_empty() {
        return audit;
    }
    audit.z_at_most_half = 2 * cut.z.len() <= step.n;
    audit.doubled = step.u_count as u128 * step.n as u128
        >= 2 * step.r_count as u128 * cut.z.len() as u128;
    audit.restricted_valid = restricted_tree_is_valid(g, pl, source, step.u_count).unwrap_or(false);
    audit
}

/// Builds the decomposition of `G[Z]` from the labeling's tree (names are
/// the new labels), validates it, and checks the weight of the new path.
fn restricted_tree_is_valid(
    g: &Graph,
    pl: &PLabeling,
    source: &TreeDecomposition,
    weight: usize,
) -> Result<bool> {
    let (nodes, edges) = pl.tree();
    let mut local = std::collections::HashMap::new();
    for (k, &i) in nodes.iter().enumerate() {
        local.insert(i, k);
    }
    let edges = edges.iter().map(|(a, b)| (local[a], local[b])).collect();
    let clusters = nodes
        .iter()
        .map(|&i| source.cluster(i).iter().filter_map(|&v| pl.label(v)).collect())
        .collect();
    let ids = nodes.iter().map(|&i| source.id(i)).collect();
    let td = TreeDecomposition::with_ids(pl.n(), ids, clusters, edges)?;
    let sub_edges = pl.vertices_by_label().iter().flat_map(|&u| {
        g.neighbors(u)
            .iter()
            .filter_map(move |&v| Some((pl.label(u)?, pl.label(v)?)))
            .filter(|(a, b)| a < b)
    });
    let sub = Graph::from_edges(pl.n(), sub_edges)?;
    if !treedec::validate(&sub, &td).is_valid() {
        return Ok(false);
    }
    let path = TreePath::new(&td, pl.path().iter().map(|i| local[i]).collect())?;
    Ok(treedec::path_weight(&td, &path).weight == weight
        && treedec::is_nonredundant_path(&td, &path) == Some(treedec::PathEnd::Front))
}

/// Which driver to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum Implementation {
    /// Recomputes the restriction, nonredundant form, heaviest path, and
    /// labeling every round.
    First,
    /// Computes them once and shrinks the labeling in place.
    #[default]
    Linear,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CutOptions {
    pub implementation: Implementation,
    /// Run [`audit_step`] after every step and record the result.
    pub audit: bool,
}

/// A cut `(B, V \ B)` of the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    /// Sorted.
    pub black: Vec<Vertex>,
    pub width: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StepTrace {
    pub case: StepCase,
    pub b_added: usize,
    pub z_size: usize,
    #[serde(serialize_with = "ratio_as_f64")]
    pub w_star: Ratio,
    #[serde(serialize_with = "opt_ratio_as_f64")]
    pub w_star_after: Option<Ratio>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<StepAudit>,
}

fn ratio_as_f64<S: serde::Serializer>(r: &Ratio, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(*r.numer() as f64 / *r.denom() as f64)
}

fn opt_ratio_as_f64<S: serde::Serializer>(
    r: &Option<Ratio>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => ratio_as_f64(r, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CutReport {
    pub width: usize,
    pub bound: f64,
    pub legible_bound: f64,
    pub within_bound: bool,
    pub within_legible_bound: bool,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub delta: usize,
    /// `r` of the input decomposition.
    #[serde(serialize_with = "ratio_as_f64")]
    pub r: Ratio,
    /// Relative weight of the first path the driver used.
    #[serde(serialize_with = "ratio_as_f64")]
    pub r_working: Ratio,
    /// Whether the number of steps is at most `log2(1/r_working) + 1`.
    pub step_limit_ok: bool,
    pub steps: Vec<StepTrace>,
    pub ops: u64,
    pub implementation: Implementation,
}

/// A size-`m` cut with the first driver.
pub fn exact_size_cut(g: &Graph, td: &TreeDecomposition, m: usize) -> Result<(Cut, CutReport)> {
    let opts = CutOptions {
        implementation: Implementation::First,
        audit: false,
    };
    exact_size_cut_with(g, td, m, &opts)
}

/// A size-`m` cut with the linear-time driver.
pub fn exact_size_cut_linear(
    g: &Graph,
    td: &TreeDecomposition,
    m: usize,
) -> Result<(Cut, CutReport)> {
    exact_size_cut_with(g, td, m, &CutOptions::default())
}

/// A bisection with `|B| = floor(n/2)`, linear-time driver.
pub fn minimum_bisection(g: &Graph, td: &TreeDecomposition) -> Result<(Cut, CutReport)> {
    exact_size_cut_linear(g, td, g.n() / 2)
}

pub fn exact_size_cut_with(
    g: &Graph,
    td: &TreeDecomposition,
    m: usize,
    opts: &CutOptions,
) -> Result<(Cut, CutReport)> {
    let report = treedec::validate(g, td);
    if !report.is_valid() {
        return Err(Error::InvalidDecomposition(report.to_string()));
    }
    if m > g.n() {
        return Err(Error::BadSize { m, n: g.n() });
    }
    let t = td.max_cluster_size();
    let delta = graph::max_degree(g);
    let r = treedec::heaviest_relative_weight(td);
    let mut ops = OpCounter::new();
    let (black, steps, r_working) = if m == 0 {
        (Vec::new(), Vec::new(), r)
    } else {
        match opts.implementation {
            Implementation::First => run_first(g, td, m, t, opts.audit, &mut ops)?,
            Implementation::Linear => run_linear(g, td, m, t, opts.audit, &mut ops)?,
        }
    };
    let mut black = black;
    black.sort_unstable();
    ensure(black.len() == m && black.windows(2).all(|w| w[0] < w[1]), || {
        format!("driver produced {} vertices for m = {m}", black.len())
    })?;
    let width = graph::cut_width_of_set(g, &black);
    let step_limit_ok = steps.is_empty()
        || (*r_working.numer() as u128) << (steps.len() - 1) <= *r_working.denom() as u128;
    let cut_report = CutReport {
        width,
        bound: bound_value(t, delta, r),
        legible_bound: legible_bound(t, delta, r),
        within_bound: within_bound(width, t, delta, r),
        within_legible_bound: within_legible_bound(width, t, delta, r),
        n: g.n(),
        m,
        t,
        delta,
        r,
        r_working,
        step_limit_ok,
        steps,
        ops: ops.get(),
        implementation: opts.implementation,
    };
    Ok((Cut { black, width }, cut_report))
}

const MAX_STEPS: usize = 64;

fn trace(step: &Step, audit: Option<StepAudit>) -> StepTrace {
    StepTrace {
        case: step.cut.case,
        b_added: step.cut.black.len(),
        z_size: step.cut.z.len(),
        w_star: step.w_star(),
        w_star_after: step.w_star_after(),
        audit,
    }
}

type DriverOutput = (Vec<Vertex>, Vec<StepTrace>, Ratio);

fn run_first(
    g: &Graph,
    td: &TreeDecomposition,
    m: usize,
    t: usize,
    audit: bool,
    ops: &mut OpCounter,
) -> Result<DriverOutput> {
    let mut cur_td = make_nonredundant_counted(td, ops)?;
    // names[k] = input name of current vertex k
    let mut names: Vec<Vertex> = (0..=g.n()).collect();
    let mut cur_g = audit.then(|| g.clone());
    let mut black = Vec::with_capacity(m);
    let mut steps = Vec::new();
    let mut remaining = m;
    let mut r_working = None;
    loop {
        ensure(steps.len() < MAX_STEPS, || "too many doubling steps".into())?;
        let (path, weight) = heaviest_path_counted(&cur_td, ops);
        r_working.get_or_insert(weight.relative);
        let mut pl = build_plabeling_counted(&cur_td, &path, ops)?;
        let before = audit.then(|| pl.vertices_by_label().to_vec());
        let step = doubling_step_counted(&mut pl, remaining, &cur_td, ops)?;
        let check = match (&cur_g, &before) {
            (Some(cg), Some(vs)) => Some(audit_step(cg, vs, remaining, t, &step, &pl, &cur_td)),
            _ => None,
        };
        steps.push(trace(&step, check));
        black.extend(step.cut.black.iter().map(|&v| names[v]));
        remaining -= step.cut.black.len();
        if remaining == 0 {
            break;
        }
        ensure(!step.cut.z.is_empty(), || "step made no progress".into())?;
        let renaming = VertexRenaming::keep(cur_td.universe(), &step.cut.z)?;
        ops.add(cur_td.universe() + cur_td.size());
        let restricted = treedec::restrict_to_vertices(&cur_td, &renaming)?;
        cur_td = make_nonredundant_counted(&restricted, ops)?;
        names = (0..=renaming.len())
            .map(|k| if k == 0 { 0 } else { names[renaming.old_name(k)] })
            .collect();
        if let Some(cg) = cur_g.as_mut() {
            let kept: Vec<Vertex> = (1..=renaming.len()).map(|k| renaming.old_name(k)).collect();
            *cg = cg.induced_subgraph(&kept)?.0;
        }
    }
    Ok((black, steps, r_working.expect("at least one step")))
}

fn run_linear(
    g: &Graph,
    td: &TreeDecomposition,
    m: usize,
    t: usize,
    audit: bool,
    ops: &mut OpCounter,
) -> Result<DriverOutput> {
    let td0 = make_nonredundant_counted(td, ops)?;
    let (path, weight) = heaviest_path_counted(&td0, ops);
    let mut pl = build_plabeling_counted(&td0, &path, ops)?;
    let mut black = Vec::with_capacity(m);
    let mut steps = Vec::new();
    let mut remaining = m;
    loop {
        ensure(steps.len() < MAX_STEPS, || "too many doubling steps".into())?;
        let before = audit.then(|| pl.vertices_by_label().to_vec());
        let step = doubling_step_counted(&mut pl, remaining, &td0, ops)?;
        let check = before.map(|vs| audit_step(g, &vs, remaining, t, &step, &pl, &td0));
        steps.push(trace(&step, check));
        black.extend_from_slice(&step.cut.black);
        remaining -= step.cut.black.len();
        if remaining == 0 {
            break;
        }
        ensure(!step.cut.z.is_empty(), || "step made no progress".into())?;
    }
    Ok((black, steps, weight.relative))
}

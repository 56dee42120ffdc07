//! Sweeps over generated instances, tabulating achieved widths against the
//! bounds. Instances run in parallel; each run is single-threaded.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{exact_size_cut_with, CutOptions, Implementation};
use crate::generate::{generate, Family, InstanceSpec};
use crate::graph::{self, Graph};
use crate::oracle;
use crate::Result;

#[derive(Clone, Copy, Debug)]
pub struct BenchConfig {
    /// Also run the first driver.
    pub differential: bool,
    /// Largest `n` handed to the brute-force oracle.
    pub brute_force_limit: usize,
    /// Largest tree handed to the tree DP.
    pub tree_dp_limit: usize,
    /// Audit every doubling step.
    pub audit: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            differential: false,
            brute_force_limit: 16,
            tree_dp_limit: 1200,
            audit: false,
        }
    }
}

/// One instance. Column order is the CSV header order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub id: String,
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub delta: usize,
    pub diam_star: Option<f64>,
    pub r: f64,
    pub width: usize,
    pub width_first: Option<usize>,
    pub oracle: Option<usize>,
    pub bound: f64,
    pub legible_bound: f64,
    pub within_bound: bool,
    pub steps: usize,
    pub ops: u64,
    pub td_size: usize,
    pub ops_per_size: f64,
    pub audit_ok: Option<bool>,
    pub time_ms: f64,
}

fn ratio_f64(r: crate::Ratio) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn oracle_width(g: &Graph, cfg: &BenchConfig) -> Result<Option<usize>> {
    if g.n() <= cfg.brute_force_limit {
        return Ok(Some(oracle::brute_force_min_bisection(g)?.width));
    }
    if g.n() <= cfg.tree_dp_limit && graph::is_tree(g) {
        return Ok(Some(oracle::tree_dp_min_bisection(g)?.width));
    }
    Ok(None)
}

pub fn run_instance(spec: &InstanceSpec, cfg: &BenchConfig) -> Result<BenchRow> {
    let (g, td) = generate(spec)?;
    let m = g.n() / 2;
    let opts = CutOptions {
        implementation: Implementation::Linear,
        audit: cfg.audit,
    };
    let start = Instant::now();
    let (cut, report) = exact_size_cut_with(&g, &td, m, &opts)?;
    let time_ms = start.elapsed().as_secs_f64() * 1e3;
    let width_first = if cfg.differential {
        let opts = CutOptions {
            implementation: Implementation::First,
            audit: cfg.audit,
        };
        Some(exact_size_cut_with(&g, &td, m, &opts)?.0.width)
    } else {
        None
    };
    let audit_ok = cfg
        .audit
        .then(|| report.steps.iter().all(|s| s.audit.is_some_and(|a| a.passed())));
    let diam_star = graph::is_forest(&g).then(|| graph::relative_diameter(&g).map(ratio_f64)).transpose()?;
    Ok(BenchRow {
        id: spec.id(),
        family: spec.family.to_string(),
        n: g.n(),
        m,
        t: report.t,
        delta: report.delta,
        diam_star,
        r: ratio_f64(report.r),
        width: cut.width,
        width_first,
        oracle: oracle_width(&g, cfg)?,
        bound: report.bound,
        legible_bound: report.legible_bound,
        within_bound: report.within_bound,
        steps: report.steps.len(),
        ops: report.ops,
        td_size: td.size(),
        ops_per_size: report.ops as f64 / td.size() as f64,
        audit_ok,
        time_ms,
    })
}

pub fn run(specs: &[InstanceSpec], cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    specs.par_iter().map(|s| run_instance(s, cfg)).collect()
}

/// The default sweep: every family at a few sizes.
pub fn default_sweep() -> Vec<InstanceSpec> {
    let mut specs = Vec::new();
    let mut add = |f, size, arg, seed| specs.push(InstanceSpec::new(f, size, arg, seed));
    for n in [10, 100, 1000] {
        add(Family::Path, n, 0, 0);
    }
    for h in 2..=6 {
        add(Family::Ternary, h, 0, 0);
    }
    for leaves in [5, 50] {
        add(Family::Star, leaves, 0, 0);
    }
    for (legs, len) in [(3, 8), (5, 8), (8, 20)] {
        add(Family::Spider, legs, len, 0);
    }
    for (spine, leaves) in [(10, 2), (50, 3)] {
        add(Family::Caterpillar, spine, leaves, 0);
    }
    for k in [4, 8, 16] {
        add(Family::Grid, k, 0, 0);
    }
    for seed in 0..200 {
        add(Family::RandomTree, 2 + seed as usize % 15, 0, seed);
    }
    for seed in 0..20 {
        add(Family::KTree, 14 + seed as usize * 10, 1 + seed as usize % 3, seed);
    }
    specs
}

pub fn ternary_sweep(heights: std::ops::RangeInclusive<usize>) -> Vec<InstanceSpec> {
    heights
        .map(|h| InstanceSpec::new(Family::Ternary, h, 0, 0))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, rows)?;
    Ok(())
}

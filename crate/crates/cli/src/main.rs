use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use treecut_core::approx_cut::{approximate_cut, iteration_limit};
use treecut_core::bench::{self, BenchConfig};
use treecut_core::engine::{exact_size_cut_with, CutOptions, Implementation};
use treecut_core::generate::{generate, Family, InstanceSpec};
use treecut_core::io::{self as tio, GraphFormat};
use treecut_core::{graph, oracle, treedec, Error, Ratio};

#[derive(Parser)]
#[command(name = "treecut", version, about = "Bounded balanced cuts from tree decompositions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance and its tree decomposition.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        arg: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Graph output (stdout when omitted).
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::EdgeList)]
        format: Format,
    },
    /// Check that a tree decomposition fits a graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        td: PathBuf,
    },
    /// Cut with |B| = m (default floor(n/2)).
    Bisect(CutArgs),
    /// Cut with |B| = m; --m is required.
    Cut(CutArgs),
    /// Approximate cut: c·m < |B| ≤ m.
    ApproxCut {
        #[arg(long)]
        td: PathBuf,
        #[arg(long)]
        m: usize,
        /// Fraction strictly between 0 and 1, as `p/q` or a decimal.
        #[arg(long)]
        c: String,
        /// Graph for width reporting and the bound check.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Exact minimum cut of size m (default floor(n/2)).
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Run an instance sweep and tabulate widths against the bounds.
    Bench {
        #[arg(long, value_enum, default_value_t = Sweep::Default)]
        sweep: Sweep,
        /// Also run the first driver.
        #[arg(long)]
        differential: bool,
        #[arg(long)]
        audit: bool,
        #[arg(long, value_enum, default_value_t = Table::Csv)]
        format: Table,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct CutArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    td: PathBuf,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long = "impl", value_enum, default_value_t = Impl::Linear)]
    implementation: Impl,
    /// Print the full report in this format.
    #[arg(long)]
    report: Option<ReportFormat>,
    /// Check every doubling step.
    #[arg(long)]
    audit: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    EdgeList,
    Dimacs,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Impl {
    First,
    Linear,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    TreeDp,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sweep {
    Default,
    Ternary,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Csv,
    Json,
}

/// A run that completed but broke a guarantee.
#[derive(Debug)]
struct Violation(String);

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "contract violation: {}", self.0)
    }
}

impl std::error::Error for Violation {}

fn violation(msg: impl Into<String>) -> anyhow::Error {
    Violation(msg.into()).into()
}

fn output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn read_graph(p: &Path) -> anyhow::Result<treecut_core::Graph> {
    tio::read_graph(p).with_context(|| format!("reading graph {}", p.display()))
}

fn read_td(p: &Path) -> anyhow::Result<treecut_core::TreeDecomposition> {
    tio::read_td(p).with_context(|| format!("reading decomposition {}", p.display()))
}

fn parse_fraction(s: &str) -> anyhow::Result<Ratio> {
    if let Some((p, q)) = s.split_once('/') {
        let (p, q): (u64, u64) = (p.trim().parse()?, q.trim().parse()?);
        if q == 0 {
            bail!("zero denominator in {s:?}");
        }
        return Ok(Ratio::new(p, q));
    }
    let digits = s.trim();
    let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if frac.len() > 18 || !frac.chars().all(|c| c.is_ascii_digit()) {
        bail!("cannot read fraction {s:?}");
    }
    let den = 10u64.pow(frac.len() as u32);
    let int: u64 = if int.is_empty() { 0 } else { int.parse()? };
    let frac: u64 = if frac.is_empty() { 0 } else { frac.parse()? };
    Ok(Ratio::new(int * den + frac, den))
}

fn format_set(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.cmd {
        Cmd::Gen {
            family,
            size,
            arg,
            seed,
            graph,
            td,
            format,
        } => {
            let family: Family = family.parse()?;
            let (g, t) = generate(&InstanceSpec::new(family, size, arg, seed))?;
            let format = match format {
                Format::EdgeList => GraphFormat::EdgeList,
                Format::Dimacs => GraphFormat::Dimacs,
                Format::Json => GraphFormat::Json,
            };
            output(graph.as_deref())?.write_all(tio::write_graph(&g, format)?.as_bytes())?;
            if let Some(p) = td {
                let mut w = output(Some(&p))?;
                writeln!(w, "{}", tio::td_to_json(&t)?)?;
            }
        }
        Cmd::Validate { graph, td } => {
            let g = read_graph(&graph)?;
            let t = read_td(&td)?;
            let report = treedec::validate(&g, &t);
            if !report.is_valid() {
                return Err(violation(report.to_string()));
            }
            println!(
                "valid: n={} nodes={} width={} size={} r={}",
                g.n(),
                t.node_count(),
                t.width(),
                t.size(),
                treedec::heaviest_relative_weight(&t)
            );
        }
        Cmd::Bisect(args) => cut(args, false)?,
        Cmd::Cut(args) => cut(args, true)?,
        Cmd::ApproxCut { td, m, c, graph } => {
            let t = read_td(&td)?;
            let c = parse_fraction(&c)?;
            let res = approximate_cut(&t, m, c)?;
            let limit = iteration_limit(c);
            println!("size {} iterations {} limit {}", res.black.len(), res.iterations, limit);
            println!("B {}", format_set(&res.black));
            if let Some(p) = graph {
                let g = read_graph(&p)?;
                let width = res.width(&g);
                let cap = limit as usize * t.max_cluster_size() * graph::max_degree(&g);
                println!("width {width} bound {cap}");
                if width > cap {
                    return Err(violation(format!("width {width} exceeds {cap}")));
                }
            }
            if res.iterations > limit {
                return Err(violation(format!("{} iterations exceed {limit}", res.iterations)));
            }
        }
        Cmd::Oracle { graph, m, method } => {
            let g = read_graph(&graph)?;
            let m = m.unwrap_or(g.n() / 2);
            let res = match method {
                Method::Brute => oracle::brute_force_min_cut_size_m(&g, m)?,
                Method::TreeDp => oracle::tree_dp_min_cut_size_m(&g, m)?,
            };
            println!("width {} searched {}", res.width, res.searched);
            println!("B {}", format_set(&res.black));
        }
        Cmd::Bench {
            sweep,
            differential,
            audit,
            format,
            out,
        } => {
            let specs = match sweep {
                Sweep::Default => bench::default_sweep(),
                Sweep::Ternary => bench::ternary_sweep(2..=6),
            };
            let cfg = BenchConfig {
                differential,
                audit,
                ..BenchConfig::default()
            };
            let rows = bench::run(&specs, &cfg)?;
            let w = output(out.as_deref())?;
            match format {
                Table::Csv => bench::write_csv(&rows, w)?,
                Table::Json => bench::write_json(&rows, w)?,
            }
            let bad: Vec<&str> = rows
                .iter()
                .filter(|r| !r.within_bound || r.audit_ok == Some(false))
                .map(|r| r.id.as_str())
                .collect();
            if !bad.is_empty() {
                return Err(violation(format!("rows {bad:?}")));
            }
        }
    }
    Ok(())
}

fn cut(args: CutArgs, need_m: bool) -> anyhow::Result<()> {
    let g = read_graph(&args.graph)?;
    let t = read_td(&args.td)?;
    let m = match (args.m, need_m) {
        (Some(m), _) => m,
        (None, false) => g.n() / 2,
        (None, true) => bail!("--m is required"),
    };
    let opts = CutOptions {
        implementation: match args.implementation {
            Impl::First => Implementation::First,
            Impl::Linear => Implementation::Linear,
        },
        audit: args.audit,
    };
    let (cut, report) = exact_size_cut_with(&g, &t, m, &opts)?;
    match args.report {
        Some(ReportFormat::Json) => println!("{}", serde_json::to_string_pretty(&report)?),
        None => {
            println!(
                "width {} bound {:.3} legible {:.3} steps {}",
                cut.width,
                report.bound,
                report.legible_bound,
                report.steps.len()
            );
            println!("B {}", format_set(&cut.black));
        }
    }
    if !report.within_bound || !report.within_legible_bound {
        return Err(violation(format!("width {} exceeds the bound", cut.width)));
    }
    if report.steps.iter().any(|s| s.audit.is_some_and(|a| !a.passed())) {
        return Err(violation("a doubling step failed its audit"));
    }
    Ok(())
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Violation>().is_some() {
        return 2;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::InternalInvariant(_) | Error::InvalidDecomposition(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

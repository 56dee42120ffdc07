//! Graph and tree-decomposition file formats.
//!
//! Graphs: plain edge lists (`n m` header, one `u v` per line), DIMACS
//! (`c`, `p edge n m`, `e u v`), and JSON `{n, m, edges}`.
//! Decompositions: JSON `{universe, nodes: [{id, cluster}], edges: [[id, id]]}`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::treedec::TreeDecomposition;
use crate::{Error, Result, Vertex};

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

fn numbers<const K: usize>(line_no: usize, fields: &mut std::str::SplitAsciiWhitespace) -> Result<[usize; K]> {
    let mut out = [0; K];
    for slot in &mut out {
        let tok = fields.next().ok_or_else(|| parse_err(line_no, "missing number"))?;
        *slot = tok.parse().map_err(|_| parse_err(line_no, format!("bad number {tok:?}")))?;
    }
    Ok(out)
}

/// `n m` on the first non-blank line, then `m` lines `u v`. Lines starting
/// with `#` or `%` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#') && !l.starts_with('%'));
    let (k, header) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let [n, m] = numbers(k, &mut header.split_ascii_whitespace())?;
    let mut edges = Vec::with_capacity(m);
    for (k, line) in lines {
        let [u, v] = numbers(k, &mut line.split_ascii_whitespace())?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DIMACS graph format. The edge count in the `p` line is checked.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut m = 0;
    let mut edges = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let k = k + 1;
        let mut fields = line.split_ascii_whitespace();
        match fields.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(k, "second problem line"));
                }
                fields.next().ok_or_else(|| parse_err(k, "missing format"))?;
                let [nn, mm] = numbers(k, &mut fields)?;
                n = Some(nn);
                m = mm;
            }
            Some("e") => {
                if n.is_none() {
                    return Err(parse_err(k, "edge before problem line"));
                }
                let [u, v] = numbers(k, &mut fields)?;
                edges.push((u, v));
            }
            Some(tok) => return Err(parse_err(k, format!("unknown line type {tok:?}"))),
        }
    }
    let n = n.ok_or_else(|| Error::Parse("no problem line".into()))?;
    if edges.len() != m {
        return Err(Error::Parse(format!("problem line announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            m: g.edge_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        if j.edges.len() != j.m {
            return Err(Error::Parse(format!("m = {} but {} edges listed", j.m, j.edges.len())));
        }
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

pub fn graph_to_json(g: &Graph) -> Result<String> {
    Ok(serde_json::to_string_pretty(&GraphJson::from(g))?)
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    serde_json::from_str::<GraphJson>(text)?.try_into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: u64,
    pub cluster: Vec<Vertex>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdJson {
    /// Defaults to the largest vertex mentioned.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub universe: Option<usize>,
    pub nodes: Vec<NodeJson>,
    pub edges: Vec<[u64; 2]>,
}

impl From<&TreeDecomposition> for TdJson {
    fn from(td: &TreeDecomposition) -> Self {
        TdJson {
            universe: Some(td.universe()),
            nodes: (0..td.node_count())
                .map(|i| NodeJson {
                    id: td.id(i),
                    cluster: td.cluster(i).to_vec(),
                })
                .collect(),
            edges: td.edges().iter().map(|&(a, b)| [td.id(a), td.id(b)]).collect(),
        }
    }
}

impl TryFrom<TdJson> for TreeDecomposition {
    type Error = Error;

    fn try_from(j: TdJson) -> Result<TreeDecomposition> {
        let pos: HashMap<u64, usize> = j.nodes.iter().enumerate().map(|(k, nd)| (nd.id, k)).collect();
        let lookup = |id: u64| {
            pos.get(&id)
                .copied()
                .ok_or_else(|| Error::MalformedTree(format!("edge mentions unknown node {id}")))
        };
        let edges = j
            .edges
            .iter()
            .map(|&[a, b]| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let universe = j.universe.unwrap_or_else(|| {
            j.nodes.iter().flat_map(|nd| nd.cluster.iter().copied()).max().unwrap_or(0)
        });
        let ids = j.nodes.iter().map(|nd| nd.id).collect();
        let clusters = j.nodes.into_iter().map(|nd| nd.cluster).collect();
        TreeDecomposition::with_ids(universe, ids, clusters, edges)
    }
}

pub fn td_to_json(td: &TreeDecomposition) -> Result<String> {
    Ok(serde_json::to_string_pretty(&TdJson::from(td))?)
}

pub fn td_from_json(text: &str) -> Result<TreeDecomposition> {
    serde_json::from_str::<TdJson>(text)?.try_into()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
    Json,
}

impl GraphFormat {
    /// By extension (`.json`, `.dimacs`/`.col`/`.gr`), else by content.
    pub fn detect(path: &Path, text: &str) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => return GraphFormat::Json,
            Some("dimacs" | "col" | "gr") => return GraphFormat::Dimacs,
            _ => {}
        }
        let first = text.trim_start();
        if first.starts_with('{') {
            GraphFormat::Json
        } else if first.starts_with("c ") || first.starts_with('p') || first.starts_with("c\n") {
            GraphFormat::Dimacs
        } else {
            GraphFormat::EdgeList
        }
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::Json => graph_from_json(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    match format {
        GraphFormat::EdgeList => Ok(write_edge_list(g)),
        GraphFormat::Dimacs => Ok(write_dimacs(g)),
        GraphFormat::Json => graph_to_json(g),
    }
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, GraphFormat::detect(path, &text))
}

pub fn read_td(path: impl AsRef<Path>) -> Result<TreeDecomposition> {
    td_from_json(&std::fs::read_to_string(path)?)
}

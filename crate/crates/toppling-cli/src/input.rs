//! Graph files and the flag/divisor literals accepted on the command line.

use std::path::Path;

use serde::{Deserialize, Serialize};
use toppling::{ConnectedFlag, Divisor, PointedGraph, VertexSet};

use crate::error::{CliError, Result};

/// The JSON graph format; vertices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub q: usize,
    pub edges: Vec<(usize, usize, u32)>,
}

pub fn load_graph(path: &Path) -> Result<PointedGraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Read { path: path.display().to_string(), source })?;
    parse_graph(&text, &path.display().to_string())
}

/// Accepts either format; text starting with `{` is read as JSON.
pub fn parse_graph(text: &str, origin: &str) -> Result<PointedGraph> {
    if text.trim_start().starts_with('{') {
        let g: GraphJson =
            serde_json::from_str(text).map_err(|source| CliError::Json { path: origin.to_string(), source })?;
        return from_json(&g);
    }
    parse_graph_text(text, origin)
}

pub fn from_json(g: &GraphJson) -> Result<PointedGraph> {
    let mut edges = Vec::with_capacity(g.edges.len());
    for &(u, v, m) in &g.edges {
        edges.push((one_based(u)?, one_based(v)?, m));
    }
    Ok(PointedGraph::new(g.n, &edges, one_based(g.q)?)?)
}

fn one_based(v: usize) -> Result<usize> {
    v.checked_sub(1).ok_or_else(|| CliError::Syntax("vertices are numbered from 1".into()))
}

/// `v <n>`, `q <vertex>`, `e <u> <v> [mult]`, `#` comments.
pub fn parse_graph_text(text: &str, origin: &str) -> Result<PointedGraph> {
    let err = |line: usize, msg: String| CliError::Parse { path: origin.to_string(), line, msg };
    let mut n = None;
    let mut q = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| err(line, format!("expected a number, found `{}`", s)));
        match (fields[0], fields.len()) {
            ("v", 2) => n = Some(num(fields[1])?),
            ("q", 2) => q = Some(num(fields[1])?),
            ("e", 3) | ("e", 4) => {
                let (u, v) = (num(fields[1])?, num(fields[2])?);
                let m = match fields.get(3) {
                    Some(s) => s.parse::<u32>().map_err(|_| err(line, format!("bad multiplicity `{}`", s)))?,
                    None => 1,
                };
                let limit = n.ok_or_else(|| err(line, "edge before the `v` line".into()))?;
                for x in [u, v] {
                    if x == 0 || x > limit {
                        return Err(err(line, format!("vertex {} out of range 1..={}", x, limit)));
                    }
                }
                if u == v {
                    return Err(err(line, format!("loop at vertex {}", u)));
                }
                if m == 0 {
                    return Err(err(line, "multiplicity must be at least 1".into()));
                }
                edges.push((u - 1, v - 1, m));
            }
            _ => return Err(err(line, format!("unrecognized line `{}`", body))),
        }
    }
    let n = n.ok_or_else(|| err(0, "missing `v` line".into()))?;
    let q = q.ok_or_else(|| err(0, "missing `q` line".into()))?;
    if q == 0 || q > n {
        return Err(err(0, format!("q = {} out of range 1..={}", q, n)));
    }
    Ok(PointedGraph::new(n, &edges, q - 1)?)
}

/// Text format that [`parse_graph_text`] reads back.
pub fn format_graph(g: &PointedGraph) -> String {
    let mut s = format!("v {}\nq {}\n", g.n(), g.q() + 1);
    for (u, v, m) in g.edges() {
        if m == 1 {
            s.push_str(&format!("e {} {}\n", u + 1, v + 1));
        } else {
            s.push_str(&format!("e {} {} {}\n", u + 1, v + 1, m));
        }
    }
    s
}

pub fn graph_json(g: &PointedGraph) -> GraphJson {
    GraphJson { n: g.n(), q: g.q() + 1, edges: g.edges().into_iter().map(|(u, v, m)| (u + 1, v + 1, m)).collect() }
}

fn parse_set(text: &str, n: usize) -> Result<VertexSet> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| CliError::Syntax(format!("expected `{{...}}`, found `{}`", text.trim())))?;
    let mut s = VertexSet::EMPTY;
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let v: usize = tok.parse().map_err(|_| CliError::Syntax(format!("bad vertex `{}`", tok)))?;
        if v == 0 || v > n {
            return Err(CliError::Syntax(format!("vertex {} out of range 1..={}", v, n)));
        }
        s.insert(v - 1);
    }
    Ok(s)
}

/// `{1}<{1,2}<{1,2,3,4}`, validated against `g`.
pub fn parse_flag_literal(text: &str, g: &PointedGraph) -> Result<ConnectedFlag> {
    let chain = text.split('<').map(|t| parse_set(t, g.n())).collect::<Result<Vec<_>>>()?;
    Ok(toppling::validate_flag(g, chain)?)
}

/// Whitespace- or comma-separated integers, one per vertex.
pub fn parse_divisor(text: &str, n: usize) -> Result<Divisor> {
    let values = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| CliError::Syntax(format!("bad divisor entry `{}`", t))))
        .collect::<Result<Vec<_>>>()?;
    if values.len() != n {
        return Err(CliError::Syntax(format!("divisor has {} entries, graph has {} vertices", values.len(), n)));
    }
    Ok(Divisor(values))
}

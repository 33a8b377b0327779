//! Instance files: a DIMACS-like text format.
//!
//! ```text
//! c optional comments
//! p edge <n> <m>
//! e <u> <v>          m edge lines, 1-based ids
//! w <v> <weight>     vertex weights, default 1
//! l <v> <colors>     color lists, nonempty string over {1,2,3}, default 123
//! k <v> <c> <cost>   per-color nonnegative costs, default 0
//! ew <u> <v> <w>     edge weights for induced matching, default 1
//! ```
//!
//! Ids are 1-based on disk and shifted to dense 0-based ids in memory.

use std::collections::BTreeMap;

use crate::coloring::CostMap;
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightMap};
use crate::paths::ListAssignment;

/// A parsed instance: the graph plus every optional annotation, with
/// defaults filled in.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub weights: WeightMap,
    pub lists: ListAssignment,
    pub costs: CostMap,
    /// Weight per edge, keyed by canonical `(u, v)` with `u < v`.
    pub edge_weights: BTreeMap<(u32, u32), i64>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses a full instance file.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut edge_lines = 0usize;
    let mut weights: Vec<i64> = Vec::new();
    let mut masks: Vec<u8> = Vec::new();
    let mut costs: Vec<[i64; 3]> = Vec::new();
    let mut raw_edge_weights: Vec<(usize, u32, u32, i64)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tok = line.split_ascii_whitespace();
        let kind = tok.next().unwrap();
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(lineno, "duplicate header"));
                }
                let fmt = tok
                    .next()
                    .ok_or_else(|| err(lineno, "missing format token"))?;
                if fmt != "edge" {
                    return Err(err(
                        lineno,
                        format!("unsupported format '{fmt}', expected 'edge'"),
                    ));
                }
                let n: usize = parse_num(tok.next(), lineno, "vertex count")?;
                let m: usize = parse_num(tok.next(), lineno, "edge count")?;
                expect_end(tok, lineno)?;
                if n > 10_000 {
                    return Err(err(
                        lineno,
                        format!("vertex count {n} exceeds the 10^4 cap"),
                    ));
                }
                header = Some((n, m));
                weights = vec![1; n];
                masks = vec![0b111; n];
                costs = vec![[0; 3]; n];
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err(lineno, "edge line before header"))?;
                let u = parse_vertex(tok.next(), lineno, n)?;
                let v = parse_vertex(tok.next(), lineno, n)?;
                expect_end(tok, lineno)?;
                if u == v {
                    return Err(err(lineno, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
                edge_lines += 1;
            }
            "w" => {
                let (n, _) = header.ok_or_else(|| err(lineno, "weight line before header"))?;
                let v = parse_vertex(tok.next(), lineno, n)?;
                let w: i64 = parse_num(tok.next(), lineno, "weight")?;
                expect_end(tok, lineno)?;
                weights[v as usize] = w;
            }
            "l" => {
                let (n, _) = header.ok_or_else(|| err(lineno, "list line before header"))?;
                let v = parse_vertex(tok.next(), lineno, n)?;
                let colors = tok
                    .next()
                    .ok_or_else(|| err(lineno, "missing color list"))?;
                expect_end(tok, lineno)?;
                let mut mask = 0u8;
                for ch in colors.chars() {
                    match ch {
                        '1' => mask |= 0b001,
                        '2' => mask |= 0b010,
                        '3' => mask |= 0b100,
                        _ => return Err(err(lineno, format!("invalid color '{ch}'"))),
                    }
                }
                if mask == 0 {
                    return Err(err(lineno, "empty color list"));
                }
                masks[v as usize] = mask;
            }
            "k" => {
                let (n, _) = header.ok_or_else(|| err(lineno, "cost line before header"))?;
                let v = parse_vertex(tok.next(), lineno, n)?;
                let c: u8 = parse_num(tok.next(), lineno, "color")?;
                let cost: i64 = parse_num(tok.next(), lineno, "cost")?;
                expect_end(tok, lineno)?;
                if !(1..=3).contains(&c) {
                    return Err(err(lineno, format!("color {c} out of range 1..3")));
                }
                if cost < 0 {
                    return Err(err(lineno, format!("negative cost {cost}")));
                }
                costs[v as usize][(c - 1) as usize] = cost;
            }
            "ew" => {
                let (n, _) = header.ok_or_else(|| err(lineno, "edge weight line before header"))?;
                let u = parse_vertex(tok.next(), lineno, n)?;
                let v = parse_vertex(tok.next(), lineno, n)?;
                let w: i64 = parse_num(tok.next(), lineno, "edge weight")?;
                expect_end(tok, lineno)?;
                raw_edge_weights.push((lineno, u.min(v), u.max(v), w));
            }
            other => return Err(err(lineno, format!("unknown line type '{other}'"))),
        }
    }

    let (n, m) = header.ok_or_else(|| err(text.lines().count() + 1, "missing 'p edge' header"))?;
    if edge_lines != m {
        return Err(Error::InvalidInput(format!(
            "header declares {m} edges but the file has {edge_lines} edge lines"
        )));
    }
    let graph = Graph::new(n, &edges)?;
    let mut edge_weights: BTreeMap<(u32, u32), i64> =
        graph.edges().into_iter().map(|e| (e, 1)).collect();
    for (lineno, u, v, w) in raw_edge_weights {
        if !graph.has_edge(u, v) {
            return Err(err(
                lineno,
                format!("edge weight for missing edge ({}, {})", u + 1, v + 1),
            ));
        }
        edge_weights.insert((u, v), w);
    }
    Ok(Instance {
        graph,
        weights: WeightMap::from_vec(weights),
        lists: ListAssignment::from_masks(masks),
        costs: CostMap::new(costs)?,
        edge_weights,
    })
}

/// Parses just the graph structure of an instance file.
pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_instance(text).map(|inst| inst.graph)
}

/// Canonical writer: header plus `e` lines sorted ascending, 1-based ids.
/// `parse_graph(write_graph(g))` reproduces `g` exactly.
pub fn write_graph(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("p edge {} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

fn parse_num<T: std::str::FromStr>(tok: Option<&str>, lineno: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| err(lineno, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| err(lineno, format!("invalid {what} '{tok}'")))
}

fn parse_vertex(tok: Option<&str>, lineno: usize, n: usize) -> Result<u32> {
    let id: usize = parse_num(tok, lineno, "vertex id")?;
    if id == 0 || id > n {
        return Err(err(lineno, format!("vertex id {id} out of range 1..{n}")));
    }
    Ok((id - 1) as u32)
}

fn expect_end<'a>(mut tok: impl Iterator<Item = &'a str>, lineno: usize) -> Result<()> {
    match tok.next() {
        None => Ok(()),
        Some(extra) => Err(err(lineno, format!("trailing token '{extra}'"))),
    }
}

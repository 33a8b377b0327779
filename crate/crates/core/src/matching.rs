//! Maximum weight induced matching via the squared line graph.
//!
//! Two edges can coexist in an induced matching exactly when they neither
//! intersect nor have adjacent endpoints, so induced matchings of `G` are
//! the independent sets of the square of its line graph. Squaring preserves
//! Pt-freeness for `t >= 4`, which lets the MWIS solver do the work.

use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, WeightMap};
use crate::mwis::{find_mis, BranchStats, SolveOptions};
use crate::paths::pt_free_certificate;

/// The square of the line graph: one vertex per edge of the source graph.
#[derive(Clone, Debug)]
pub struct SquaredLineGraph {
    pub h: Graph,
    /// Source edge of each vertex of `h`, in lexicographic edge order.
    pub edge_of: Vec<(u32, u32)>,
}

/// Whether two source edges conflict as induced-matching members.
fn edges_conflict(g: &Graph, (a, b): (u32, u32), (c, d): (u32, u32)) -> bool {
    a == c
        || a == d
        || b == c
        || b == d
        || g.has_edge(a, c)
        || g.has_edge(a, d)
        || g.has_edge(b, c)
        || g.has_edge(b, d)
}

/// Builds `L^2(G[active])` by direct pairwise tests.
pub fn squared_line_graph(g: &Graph, active: &VertexSet) -> SquaredLineGraph {
    let edge_of: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| active.contains(u) && active.contains(v))
        .collect();
    let mut edges = Vec::new();
    for i in 0..edge_of.len() {
        for j in (i + 1)..edge_of.len() {
            if edges_conflict(g, edge_of[i], edge_of[j]) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    let h = Graph::new(edge_of.len(), &edges).expect("squared line graph is simple");
    SquaredLineGraph { h, edge_of }
}

/// An induced matching and its total edge weight.
#[derive(Clone, Debug)]
pub struct MatchingSolution {
    pub edges: Vec<(u32, u32)>,
    pub weight: i64,
}

/// Maximum weight induced matching of the active subgraph. Requires
/// `t >= 4`, the range where squaring the line graph preserves Pt-freeness.
/// Unlisted edges weigh 1.
pub fn solve_induced_matching(
    g: &Graph,
    active: &VertexSet,
    edge_weights: &BTreeMap<(u32, u32), i64>,
    t: usize,
) -> Result<(MatchingSolution, BranchStats)> {
    if t < 4 {
        return Err(Error::InvalidInput(format!(
            "induced matching requires t >= 4 (squaring the line graph preserves \
             Pt-freeness only from there), got {t}"
        )));
    }
    if let Some(cert) = pt_free_certificate(g, active, t)? {
        return Err(Error::NotPtFree {
            t,
            path: cert.vertices().to_vec(),
        });
    }
    let sq = squared_line_graph(g, active);
    let weights = WeightMap::from_vec(
        sq.edge_of
            .iter()
            .map(|e| edge_weights.get(e).copied().unwrap_or(1))
            .collect(),
    );
    let (sol, stats) = match find_mis(
        &sq.h,
        &sq.h.full_set(),
        &weights,
        t,
        SolveOptions::default(),
    ) {
        Ok(out) => out,
        // The source graph already passed the Pt-freeness check, so the
        // squared line graph must be Pt-free too.
        Err(Error::NotPtFree { .. }) => {
            return Err(Error::InvariantViolation(
                "squared line graph of a Pt-free graph contained an induced Pt".into(),
            ))
        }
        Err(e) => return Err(e),
    };
    let edges: Vec<(u32, u32)> = sol.chosen.iter().map(|i| sq.edge_of[i as usize]).collect();
    verify_matching(g, &edges)?;
    Ok((
        MatchingSolution {
            edges,
            weight: sol.weight,
        },
        stats,
    ))
}

fn verify_matching(g: &Graph, edges: &[(u32, u32)]) -> Result<()> {
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            if edges_conflict(g, edges[i], edges[j]) {
                return Err(Error::InvariantViolation(format!(
                    "edges {:?} and {:?} do not form an induced matching",
                    edges[i], edges[j]
                )));
            }
        }
    }
    Ok(())
}

/// Take-or-skip oracle over the edge list, testing conflicts directly in the
/// source graph. Deterministic: lexicographically smallest optimal edge-index
/// set. Guarded to 20 edges.
pub fn brute_force_induced_matching(
    g: &Graph,
    active: &VertexSet,
    edge_weights: &BTreeMap<(u32, u32), i64>,
) -> Result<MatchingSolution> {
    let all: Vec<(u32, u32)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| active.contains(u) && active.contains(v))
        .collect();
    if all.len() > 20 {
        return Err(Error::InvalidInput(format!(
            "brute force induced matching capped at 20 edges, got {}",
            all.len()
        )));
    }
    let weights: Vec<i64> = all
        .iter()
        .map(|e| edge_weights.get(e).copied().unwrap_or(1))
        .collect();
    let (weight, picked) = bf(g, &all, &weights, 0, &mut Vec::new())?;
    let edges = picked.iter().map(|&i| all[i]).collect();
    Ok(MatchingSolution { edges, weight })
}

fn bf(
    g: &Graph,
    all: &[(u32, u32)],
    weights: &[i64],
    i: usize,
    taken: &mut Vec<usize>,
) -> Result<(i64, Vec<usize>)> {
    if i == all.len() {
        return Ok((0, Vec::new()));
    }
    // Skip edge i.
    let (skip_w, skip_set) = bf(g, all, weights, i + 1, taken)?;
    // Take edge i when compatible with everything taken so far.
    let compatible = taken.iter().all(|&j| !edges_conflict(g, all[j], all[i]));
    if !compatible {
        return Ok((skip_w, skip_set));
    }
    taken.push(i);
    let (rest_w, rest_set) = bf(g, all, weights, i + 1, taken)?;
    taken.pop();
    let take_w = rest_w.checked_add(weights[i]).ok_or(Error::Overflow)?;
    let mut take_set = vec![i];
    take_set.extend(rest_set);
    // Prefer the heavier set; on ties the one containing the earlier edge
    // index is lexicographically smaller.
    if take_w > skip_w || (take_w == skip_w && lex_le(&take_set, &skip_set)) {
        Ok((take_w, take_set))
    } else {
        Ok((skip_w, skip_set))
    }
}

fn lex_le(a: &[usize], b: &[usize]) -> bool {
    for (x, y) in a.iter().zip(b.iter()) {
        if x != y {
            return x < y;
        }
    }
    a.len() <= b.len()
}

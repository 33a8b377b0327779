//! Exact maximum weight independent set by heavy-vertex branching.
//!
//! Connected calls rebuild the induced-path buckets from scratch, pick a
//! heavy vertex `w`, and branch on deleting `N[w]` (take `w`) versus deleting
//! `w` (skip it). Disconnected calls split into components and sum. Negative
//! weights are allowed; the empty set is always a candidate solution.

use std::collections::HashMap;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::decompose::{find_heavy_vertex, potential};
use crate::error::{Error, Result};
use crate::graph::{components, Graph, WeightMap};
use crate::paths::enumerate_induced_paths;
use crate::util::with_big_stack;

/// An independent set and its total weight.
#[derive(Clone, Debug)]
pub struct MwisSolution {
    pub weight: i64,
    pub chosen: VertexSet,
}

/// Recursion-tree telemetry.
#[derive(Clone, Debug, Default, Serialize)]
pub struct BranchStats {
    /// Total recursion nodes.
    pub calls: u64,
    /// Nodes that returned without recursing (at most one active vertex).
    pub leaves: u64,
    pub max_depth: u64,
    /// Branching nodes resolved in favor of the take-`w` child.
    pub success_branches: u64,
    /// Branching nodes resolved in favor of the skip-`w` child.
    pub failure_branches: u64,
    /// Nodes that split into connected components.
    pub component_splits: u64,
    pub cache_hits: u64,
    /// Connected calls where the bucket-shrinkage progress bound was checked.
    pub shrinkage_checks: u64,
    /// Checks where fewer than `ceil(C(n,2)/2t)` buckets lost a `1/(2t)`
    /// fraction of their paths. Stays zero on Pt-free inputs.
    pub shrinkage_violations: u64,
    /// `(depth, bucket potential)` samples, when sampling is enabled.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub potential_samples: Vec<(u64, f64)>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Memoize results by active set. Off by default so the measured tree
    /// stays faithful to the plain recursion.
    pub use_cache: bool,
    /// Record the bucket potential at every connected call.
    pub sample_potential: bool,
}

struct Ctx<'a> {
    g: &'a Graph,
    weights: &'a WeightMap,
    t: usize,
    opts: SolveOptions,
    stats: BranchStats,
    cache: HashMap<Vec<u64>, MwisSolution>,
}

/// Exact maximum weight independent set of the active subgraph.
///
/// `t` is clamped to at least 5 internally; a Pt-free graph is also
/// P(t')-free for every larger t'. Propagates [`Error::NotPtFree`] when path
/// enumeration uncovers an induced path on `t` vertices.
pub fn find_mis(
    g: &Graph,
    active: &VertexSet,
    weights: &WeightMap,
    t: usize,
    opts: SolveOptions,
) -> Result<(MwisSolution, BranchStats)> {
    if t < 2 {
        return Err(Error::InvalidInput(format!(
            "t must be at least 2, got {t}"
        )));
    }
    if weights.len() < g.vertex_count() {
        return Err(Error::InvalidInput(
            "weight map does not cover the vertex set".into(),
        ));
    }
    let t = t.max(5);
    let (solution, stats) = with_big_stack(|| {
        let mut ctx = Ctx {
            g,
            weights,
            t,
            opts,
            stats: BranchStats::default(),
            cache: HashMap::new(),
        };
        let solution = solve(&mut ctx, active, 0)?;
        Ok((solution, ctx.stats))
    })?;
    verify_solution(g, active, weights, &solution)?;
    Ok((solution, stats))
}

fn solve(ctx: &mut Ctx<'_>, active: &VertexSet, depth: u64) -> Result<MwisSolution> {
    ctx.stats.calls += 1;
    ctx.stats.max_depth = ctx.stats.max_depth.max(depth);

    if active.is_empty() {
        ctx.stats.leaves += 1;
        return Ok(MwisSolution {
            weight: 0,
            chosen: VertexSet::empty(ctx.g.vertex_count()),
        });
    }
    if active.len() == 1 {
        ctx.stats.leaves += 1;
        let v = active.first().unwrap();
        let w = ctx.weights.get(v);
        return Ok(if w > 0 {
            MwisSolution {
                weight: w,
                chosen: active.clone(),
            }
        } else {
            MwisSolution {
                weight: 0,
                chosen: VertexSet::empty(ctx.g.vertex_count()),
            }
        });
    }
    if ctx.opts.use_cache {
        if let Some(hit) = ctx.cache.get(active.words()) {
            ctx.stats.cache_hits += 1;
            return Ok(hit.clone());
        }
    }

    let comps = components(ctx.g, active);
    let solution = if comps.len() > 1 {
        ctx.stats.component_splits += 1;
        let mut weight: i64 = 0;
        let mut chosen = VertexSet::empty(ctx.g.vertex_count());
        for comp in &comps {
            let sub = solve(ctx, comp, depth + 1)?;
            weight = weight.checked_add(sub.weight).ok_or(Error::Overflow)?;
            chosen.union_with(&sub.chosen);
        }
        MwisSolution { weight, chosen }
    } else {
        let idx = enumerate_induced_paths(ctx.g, active, ctx.t)?;
        if ctx.opts.sample_potential {
            let mu = potential(&idx, ctx.t);
            ctx.stats.potential_samples.push((depth, mu));
        }
        let w = find_heavy_vertex(ctx.g, active, &idx, ctx.t)?.w;

        // Progress bound, recounted directly from the parent buckets: taking
        // w must shed at least a 1/(2t) fraction of the paths in at least
        // ceil(C(n,2)/(2t)) buckets.
        let halo = ctx.g.closed_neighbors(w).and(active);
        let t64 = ctx.t as u64;
        let mut shrunk: u64 = 0;
        for (_, paths) in idx.buckets() {
            let lost = paths
                .iter()
                .filter(|p| p.vertices().iter().any(|&x| halo.contains(x)))
                .count() as u64;
            if 2 * t64 * lost >= paths.len() as u64 {
                shrunk += 1;
            }
        }
        ctx.stats.shrinkage_checks += 1;
        let n64 = active.len() as u64;
        if 2 * t64 * shrunk < n64 * (n64 - 1) / 2 {
            ctx.stats.shrinkage_violations += 1;
        }
        drop(idx);

        let take_active = active.minus(&halo);
        let take_sub = solve(ctx, &take_active, depth + 1)?;
        let take_weight = take_sub
            .weight
            .checked_add(ctx.weights.get(w))
            .ok_or(Error::Overflow)?;

        let mut skip_active = active.clone();
        skip_active.remove(w);
        let skip = solve(ctx, &skip_active, depth + 1)?;

        if take_weight >= skip.weight {
            ctx.stats.success_branches += 1;
            let mut chosen = take_sub.chosen;
            chosen.insert(w);
            MwisSolution {
                weight: take_weight,
                chosen,
            }
        } else {
            ctx.stats.failure_branches += 1;
            skip
        }
    };

    if ctx.opts.use_cache {
        ctx.cache.insert(active.words().to_vec(), solution.clone());
    }
    Ok(solution)
}

fn verify_solution(
    g: &Graph,
    active: &VertexSet,
    weights: &WeightMap,
    sol: &MwisSolution,
) -> Result<()> {
    if !sol.chosen.is_subset_of(active) {
        return Err(Error::InvariantViolation(
            "solution leaves the active set".into(),
        ));
    }
    for v in sol.chosen.iter() {
        if g.neighbors(v).intersects(&sol.chosen) {
            return Err(Error::InvariantViolation(format!(
                "solution is not independent at vertex {v}"
            )));
        }
    }
    if weights.sum_over(&sol.chosen)? != sol.weight {
        return Err(Error::InvariantViolation(
            "solution weight does not match its vertex set".into(),
        ));
    }
    Ok(())
}

/// Textbook exact oracle: take-or-skip recursion on the smallest active
/// vertex, split over components first. Deterministic: among optima it
/// returns the lexicographically smallest vertex set. Guarded to 30 vertices.
pub fn brute_force_mis(g: &Graph, active: &VertexSet, weights: &WeightMap) -> Result<MwisSolution> {
    if active.len() > 30 {
        return Err(Error::InvalidInput(format!(
            "brute force oracle capped at 30 active vertices, got {}",
            active.len()
        )));
    }
    let (weight, chosen) = with_big_stack(|| bf(g, active, weights));
    let weight = weight?;
    Ok(MwisSolution { weight, chosen })
}

fn bf(g: &Graph, active: &VertexSet, weights: &WeightMap) -> (Result<i64>, VertexSet) {
    if active.is_empty() {
        return (Ok(0), VertexSet::empty(g.vertex_count()));
    }
    let comps = components(g, active);
    if comps.len() > 1 {
        let mut weight: i64 = 0;
        let mut chosen = VertexSet::empty(g.vertex_count());
        for comp in &comps {
            let (w, c) = bf(g, comp, weights);
            match w {
                Ok(w) => match weight.checked_add(w) {
                    Some(s) => weight = s,
                    None => return (Err(Error::Overflow), chosen),
                },
                Err(e) => return (Err(e), chosen),
            }
            chosen.union_with(&c);
        }
        return (Ok(weight), chosen);
    }

    let v = active.first().unwrap();
    let mut skip_active = active.clone();
    skip_active.remove(v);
    let (skip_w, skip_set) = bf(g, &skip_active, weights);
    let skip_w = match skip_w {
        Ok(w) => w,
        Err(e) => return (Err(e), skip_set),
    };

    let take_active = active.minus(&g.closed_neighbors(v));
    let (take_w, mut take_set) = bf(g, &take_active, weights);
    let take_w = match take_w.and_then(|w| w.checked_add(weights.get(v)).ok_or(Error::Overflow)) {
        Ok(w) => w,
        Err(e) => return (Err(e), take_set),
    };
    take_set.insert(v);

    // Maximize weight; break ties toward the lexicographically smaller set.
    if take_w > skip_w || (take_w == skip_w && set_lex_le(&take_set, &skip_set)) {
        (Ok(take_w), take_set)
    } else {
        (Ok(skip_w), skip_set)
    }
}

/// Lexicographic order on ascending vertex listings, shorter prefix first.
pub(crate) fn set_lex_le(a: &VertexSet, b: &VertexSet) -> bool {
    let mut ia = a.iter();
    let mut ib = b.iter();
    loop {
        match (ia.next(), ib.next()) {
            (None, _) => return true,
            (Some(_), None) => return false,
            (Some(x), Some(y)) if x != y => return x < y,
            _ => {}
        }
    }
}

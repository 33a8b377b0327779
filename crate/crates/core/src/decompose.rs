//! Structural subroutines behind the branching: the Gyarfas balanced
//! separator, heavy-vertex selection over plain and colored buckets, and the
//! bucket potential used as instrumentation.
//!
//! All accept/reject thresholds are evaluated with cross-multiplied integers;
//! floating point never gates a decision.

use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{closed_neighborhood, components, Graph};
use crate::paths::{ColoredPathIndex, ListAssignment, PathIndex};

/// A connected set `x` with `|x| <= t` whose closed neighborhood splits the
/// active graph into components of at most half the active size.
#[derive(Clone, Debug)]
pub struct SeparatorResult {
    pub x: VertexSet,
    /// `N[x]` restricted to the active set.
    pub halo: VertexSet,
    /// Sizes of the components of `active \ halo`, in component order.
    pub component_sizes: Vec<usize>,
}

/// Grows a connected set, one vertex at a time, until no component of
/// `active \ N[X]` keeps more than half the active vertices.
///
/// The grown set is maintained as an induced path: each added vertex is the
/// smallest-id neighbor of the last one that avoids all earlier members and
/// still touches the oversized component. If the path reaches `t` vertices
/// it is itself an induced path on `t` vertices, which is returned as a
/// certificate that the input was not Pt-free.
pub fn gyarfas_separator(g: &Graph, active: &VertexSet, t: usize) -> Result<SeparatorResult> {
    if t < 2 {
        return Err(Error::InvalidInput(format!(
            "t must be at least 2, got {t}"
        )));
    }
    if active.is_empty() {
        return Err(Error::InvariantViolation(
            "separator requires a non-empty active set".into(),
        ));
    }
    let comps = components(g, active);
    if comps.len() > 1 {
        return Err(Error::InvariantViolation(
            "separator requires a connected active set".into(),
        ));
    }
    let n_active = active.len();
    let mut path: Vec<u32> = vec![active.first().unwrap()];
    // Vertices adjacent to (or in) every path member except the last.
    let mut forbidden = VertexSet::empty(g.vertex_count());

    loop {
        let x = VertexSet::from_slice(g.vertex_count(), &path);
        let halo = closed_neighborhood(g, &x).and(active);
        let remainder = active.minus(&halo);
        let comps = components(g, &remainder);
        let large = comps.iter().find(|c| 2 * c.len() > n_active);
        match large {
            None => {
                return Ok(SeparatorResult {
                    x,
                    halo,
                    component_sizes: comps.iter().map(|c| c.len()).collect(),
                });
            }
            Some(big) => {
                if path.len() == t {
                    // The path itself witnesses an induced Pt.
                    return Err(Error::NotPtFree { t, path });
                }
                let last = *path.last().unwrap();
                // Candidates: active neighbors of the last path vertex that
                // avoid all earlier members and still reach the big component.
                let mut cand = g.neighbors(last).and(active);
                cand.subtract(&forbidden);
                let next = cand
                    .iter()
                    .find(|&y| g.neighbors(y).intersects(big))
                    .ok_or_else(|| {
                        Error::InvariantViolation(
                            "no extension vertex for the separator path".into(),
                        )
                    })?;
                forbidden.union_with(g.neighbors(last));
                forbidden.insert(last);
                path.push(next);
            }
        }
    }
}

/// Hit counts for the vertex chosen by [`find_heavy_vertex`].
#[derive(Clone, Debug)]
pub struct HeavyVertexReport {
    pub w: u32,
    /// Number of buckets `w` (1/2t)-hits.
    pub hit_buckets: u64,
    /// `C(n, 2)` over the active vertex count.
    pub total_buckets: u64,
    /// Per bucket, how many of its paths meet `N[w]`.
    pub per_bucket_hits: BTreeMap<(u32, u32), u64>,
}

/// Picks the active vertex hitting the most buckets, where `w` hits a bucket
/// when `N[w]` meets at least a `1/(2t)` fraction of its paths (evaluated as
/// `2t * hits >= |bucket|`). A connected Pt-free graph always has a vertex
/// hitting at least `C(n,2) / (2t)` buckets; failing that bound is reported
/// as an invariant violation.
pub fn find_heavy_vertex(
    g: &Graph,
    active: &VertexSet,
    idx: &PathIndex,
    t: usize,
) -> Result<HeavyVertexReport> {
    let n_active = active.len() as u64;
    if n_active < 2 {
        return Err(Error::InvariantViolation(
            "heavy vertex requires at least two active vertices".into(),
        ));
    }
    if !crate::graph::is_connected(g, active) {
        return Err(Error::InvariantViolation(
            "heavy vertex requires a connected active set".into(),
        ));
    }
    if idx.t() != t {
        return Err(Error::InvalidInput(format!(
            "path index built for t = {}, queried with t = {t}",
            idx.t()
        )));
    }

    let n = g.vertex_count();
    let nb = idx.bucket_count();
    // hits[w * nb + b] = paths of bucket b meeting N[w].
    let mut hits = vec![0u32; n * nb];
    let mut reach = VertexSet::empty(n);
    let sizes: Vec<usize> = idx.buckets().map(|(_, paths)| paths.len()).collect();
    for (b, (_, paths)) in idx.buckets().enumerate() {
        for p in paths {
            // N[w] meets the path exactly when w lies in N[path vertices].
            reach.clear();
            for &v in p.vertices() {
                reach.union_with(g.neighbors(v));
                reach.insert(v);
            }
            reach.intersect_with(active);
            for w in reach.iter() {
                hits[w as usize * nb + b] += 1;
            }
        }
    }

    let binom = n_active * (n_active - 1) / 2;
    let t64 = t as u64;
    let mut best: Option<(u32, u64)> = None;
    for w in active.iter() {
        let row = &hits[w as usize * nb..(w as usize + 1) * nb];
        let hit = row
            .iter()
            .zip(&sizes)
            .filter(|(&h, &s)| 2 * t64 * h as u64 >= s as u64)
            .count() as u64;
        if best.is_none_or(|(_, b)| hit > b) {
            best = Some((w, hit));
        }
    }
    let (w, hit_buckets) = best.unwrap();
    if 4 * t64 * hit_buckets < n_active * (n_active - 1) {
        return Err(Error::InvariantViolation(format!(
            "no (1/(2*{t}))-heavy vertex: best vertex {w} hits {hit_buckets} of {binom} buckets"
        )));
    }
    let per_bucket_hits = idx
        .buckets()
        .enumerate()
        .map(|(b, (&pair, _))| (pair, hits[w as usize * nb + b] as u64))
        .collect();
    Ok(HeavyVertexReport {
        w,
        hit_buckets,
        total_buckets: binom,
        per_bucket_hits,
    })
}

/// Selection result of [`find_heavy_vertex_color`].
#[derive(Clone, Debug)]
pub struct HeavyColorReport {
    pub w: u32,
    pub color: u8,
    /// Buckets in which at least a `1/(8t * 3^(t-1))` fraction of colored
    /// paths contain a vertex of `N[w]` colored `color`.
    pub qualifying_buckets: u64,
    pub total_buckets: u64,
    /// Per bucket, how many colored paths contain an `N[w]` vertex colored
    /// `color`.
    pub per_bucket_hits: BTreeMap<(u32, u32), u64>,
}

/// Colored analogue of [`find_heavy_vertex`]: picks the pair `(w, c)` with
/// `c` in the list of `w` that qualifies in the most buckets, breaking ties
/// lexicographically. On preprocessed connected Pt-free instances the winner
/// qualifies in at least `C(n,2) / (8t)` buckets.
pub fn find_heavy_vertex_color(
    g: &Graph,
    active: &VertexSet,
    cidx: &ColoredPathIndex,
    t: usize,
    lists: &ListAssignment,
) -> Result<HeavyColorReport> {
    let n_active = active.len() as u64;
    if n_active < 2 {
        return Err(Error::InvariantViolation(
            "heavy pair requires at least two active vertices".into(),
        ));
    }
    if !crate::graph::is_connected(g, active) {
        return Err(Error::InvariantViolation(
            "heavy pair requires a connected active set".into(),
        ));
    }
    if cidx.t() != t {
        return Err(Error::InvalidInput(format!(
            "colored index built for t = {}, queried with t = {t}",
            cidx.t()
        )));
    }

    let n = g.vertex_count();
    let nb = cidx.bucket_count();
    // hits[(w * 3 + (c-1)) * nb + b]
    let mut hits = vec![0u32; n * 3 * nb];
    let mut class = VertexSet::empty(n);
    let mut reach = VertexSet::empty(n);
    let sizes: Vec<usize> = cidx.buckets().map(|(_, paths)| paths.len()).collect();
    for (b, (_, paths)) in cidx.buckets().enumerate() {
        for cp in paths {
            for c in 1u8..=3 {
                class.clear();
                let mut any = false;
                for (&v, &vc) in cp.vertices().iter().zip(cp.colors()) {
                    if vc == c {
                        class.insert(v);
                        any = true;
                    }
                }
                if !any {
                    continue;
                }
                reach.clear();
                for v in class.iter() {
                    reach.union_with(g.neighbors(v));
                    reach.insert(v);
                }
                reach.intersect_with(active);
                for w in reach.iter() {
                    hits[(w as usize * 3 + (c - 1) as usize) * nb + b] += 1;
                }
            }
        }
    }

    let binom = n_active * (n_active - 1) / 2;
    let t64 = t as u64;
    let pow3 = 3u128.pow(t as u32 - 1);
    let mut best: Option<(u32, u8, u64)> = None;
    for w in active.iter() {
        for c in lists.colors(w) {
            let row_start = (w as usize * 3 + (c - 1) as usize) * nb;
            let row = &hits[row_start..row_start + nb];
            let q = row
                .iter()
                .zip(&sizes)
                .filter(|(&h, &s)| 8 * t64 as u128 * pow3 * h as u128 >= s as u128)
                .count() as u64;
            if best.is_none_or(|(_, _, bq)| q > bq) {
                best = Some((w, c, q));
            }
        }
    }
    let (w, color, qualifying_buckets) = best.ok_or_else(|| {
        Error::InvariantViolation("no candidate (vertex, color) pair: all lists empty".into())
    })?;
    if 8 * t64 * qualifying_buckets < binom {
        return Err(Error::InvariantViolation(format!(
            "no heavy (vertex, color) pair: best ({w}, {color}) qualifies in \
             {qualifying_buckets} of {binom} buckets"
        )));
    }
    let per_bucket_hits = cidx
        .buckets()
        .enumerate()
        .map(|(b, (&pair, _))| {
            (
                pair,
                hits[(w as usize * 3 + (color - 1) as usize) * nb + b] as u64,
            )
        })
        .collect();
    Ok(HeavyColorReport {
        w,
        color,
        qualifying_buckets,
        total_buckets: binom,
        per_bucket_hits,
    })
}

/// Bucket potential: `-sum over buckets of log_(1 - 1/2t) (1 + |bucket|)`.
/// Instrumentation only; never gates a branching decision.
pub fn potential(idx: &PathIndex, t: usize) -> f64 {
    let base = 1.0 - 1.0 / (2.0 * t as f64);
    let scale = -base.ln();
    idx.buckets()
        .map(|(_, paths)| (1.0 + paths.len() as f64).ln() / scale)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate_induced_paths;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn path_graph(n: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (1..=leaves as u32).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn check_separator(g: &Graph, active: &VertexSet, t: usize, sep: &SeparatorResult) {
        assert!(sep.x.len() <= t);
        assert!(crate::graph::is_connected(g, &sep.x));
        assert_eq!(sep.halo, closed_neighborhood(g, &sep.x).and(active));
        let remainder = active.minus(&sep.halo);
        for c in components(g, &remainder) {
            assert!(2 * c.len() <= active.len());
        }
    }

    #[test]
    fn separator_on_c5() {
        let g = cycle(5);
        let sep = gyarfas_separator(&g, &g.full_set(), 5).unwrap();
        assert_eq!(sep.x.to_vec(), vec![0]);
        assert_eq!(sep.halo.to_vec(), vec![0, 1, 4]);
        assert_eq!(sep.component_sizes, vec![2]);
        check_separator(&g, &g.full_set(), 5, &sep);
    }

    #[test]
    fn separator_on_single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        let sep = gyarfas_separator(&g, &g.full_set(), 5).unwrap();
        assert_eq!(sep.x.to_vec(), vec![0]);
        assert!(sep.component_sizes.is_empty());
    }

    #[test]
    fn separator_on_star() {
        let g = star(9);
        let sep = gyarfas_separator(&g, &g.full_set(), 5).unwrap();
        assert_eq!(sep.x.to_vec(), vec![0]);
        assert!(sep.component_sizes.is_empty());
        check_separator(&g, &g.full_set(), 5, &sep);
    }

    #[test]
    fn separator_rejects_disconnected() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            gyarfas_separator(&g, &g.full_set(), 5),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn separator_certifies_long_paths() {
        // P13: growing the path reaches t = 5 vertices while the far side is
        // still oversized, so the grown path is returned as a certificate.
        let g = path_graph(13);
        match gyarfas_separator(&g, &g.full_set(), 5) {
            Err(Error::NotPtFree { t, path }) => {
                assert_eq!(t, 5);
                assert_eq!(path, vec![0, 1, 2, 3, 4]);
                assert!(crate::paths::InducedPath::new(path).is_induced_in(&g));
            }
            other => panic!("expected certificate, got {other:?}"),
        }
    }

    #[test]
    fn separator_accepts_p12_at_t5() {
        // P12 needs exactly five path vertices and then balances: |X| = t is
        // allowed by the contract even though the input was not P5-free.
        let g = path_graph(12);
        let sep = gyarfas_separator(&g, &g.full_set(), 5).unwrap();
        check_separator(&g, &g.full_set(), 5, &sep);
    }

    #[test]
    fn heavy_vertex_on_c5() {
        let g = cycle(5);
        let idx = enumerate_induced_paths(&g, &g.full_set(), 5).unwrap();
        let rep = find_heavy_vertex(&g, &g.full_set(), &idx, 5).unwrap();
        // Every vertex hits 9 of the 10 buckets; ties break to the smallest id.
        assert_eq!(rep.w, 0);
        assert_eq!(rep.hit_buckets, 9);
        assert_eq!(rep.total_buckets, 10);
        // The only unhit bucket is {2,3}: its sole path, the edge 2-3,
        // avoids N[0] = {4,0,1}.
        assert_eq!(rep.per_bucket_hits[&(2, 3)], 0);
        assert!(rep
            .per_bucket_hits
            .iter()
            .filter(|(&pair, _)| pair != (2, 3))
            .all(|(_, &h)| h > 0));
        assert!(4 * 5 * rep.hit_buckets >= 5 * 4);
    }

    #[test]
    fn heavy_vertex_on_single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let idx = enumerate_induced_paths(&g, &g.full_set(), 5).unwrap();
        let rep = find_heavy_vertex(&g, &g.full_set(), &idx, 5).unwrap();
        assert_eq!(rep.w, 0);
        assert_eq!(rep.hit_buckets, 1);
        assert_eq!(rep.per_bucket_hits[&(0, 1)], 1);
    }

    #[test]
    fn heavy_vertex_on_star_center() {
        let g = star(5);
        let idx = enumerate_induced_paths(&g, &g.full_set(), 5).unwrap();
        let rep = find_heavy_vertex(&g, &g.full_set(), &idx, 5).unwrap();
        assert_eq!(rep.w, 0);
        assert_eq!(rep.hit_buckets, 15);
        assert_eq!(rep.total_buckets, 15);
    }

    #[test]
    fn heavy_pair_on_single_edge_full_lists() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let lists = ListAssignment::full(2);
        let cidx = crate::paths::enumerate_colored_paths(&g, &g.full_set(), 5, &lists).unwrap();
        let rep = find_heavy_vertex_color(&g, &g.full_set(), &cidx, 5, &lists).unwrap();
        assert_eq!((rep.w, rep.color), (0, 1));
        assert_eq!(rep.qualifying_buckets, 1);
        // 4 of the 6 colorings of the edge put color 1 on a vertex of N[0].
        assert_eq!(rep.per_bucket_hits[&(0, 1)], 4);
    }

    #[test]
    fn heavy_pair_on_triangle() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let lists = ListAssignment::full(3);
        let cidx = crate::paths::enumerate_colored_paths(&g, &g.full_set(), 5, &lists).unwrap();
        let rep = find_heavy_vertex_color(&g, &g.full_set(), &cidx, 5, &lists).unwrap();
        assert_eq!((rep.w, rep.color), (0, 1));
        assert_eq!(rep.qualifying_buckets, 3);
    }

    #[test]
    fn heavy_pair_on_edge_with_two_color_lists() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let lists = ListAssignment::from_masks(vec![0b011, 0b011]);
        let cidx = crate::paths::enumerate_colored_paths(&g, &g.full_set(), 5, &lists).unwrap();
        let rep = find_heavy_vertex_color(&g, &g.full_set(), &cidx, 5, &lists).unwrap();
        assert_eq!((rep.w, rep.color), (0, 1));
        assert_eq!(rep.per_bucket_hits[&(0, 1)], 2);
    }

    #[test]
    fn potential_values() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let empty =
            enumerate_induced_paths(&Graph::new(2, &[]).unwrap(), &VertexSet::full(2), 5).unwrap();
        assert_eq!(potential(&empty, 5), 0.0);
        let one = enumerate_induced_paths(&g, &g.full_set(), 5).unwrap();
        assert!((potential(&one, 5) - 6.5788).abs() < 1e-3);
        let c5 = cycle(5);
        let idx = enumerate_induced_paths(&c5, &c5.full_set(), 5).unwrap();
        assert!((potential(&idx, 5) - 85.03).abs() < 1e-2);
    }
}

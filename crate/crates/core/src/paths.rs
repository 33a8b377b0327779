//! Induced-path enumeration and the endpoint buckets driving every solver.
//!
//! A partial path `v1..vk` extends by any active neighbor of `vk` that is
//! non-adjacent to all of `v1..v(k-1)`; a path is recorded once, in the
//! orientation with the smaller endpoint first. Hitting a path on `t`
//! vertices aborts the scan and surfaces it as a certificate that the input
//! is not Pt-free.

use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// An induced path on at least two vertices, stored endpoint-to-endpoint
/// with `vertices[0] < vertices[last]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedPath {
    verts: Vec<u32>,
}

impl InducedPath {
    pub(crate) fn new(verts: Vec<u32>) -> InducedPath {
        debug_assert!(verts.len() >= 2);
        InducedPath { verts }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.verts
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.verts.len()
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.verts[0], *self.verts.last().unwrap())
    }

    /// Checks the path against a graph: consecutive vertices adjacent, all
    /// other pairs (including the endpoints) non-adjacent, no repeats.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        is_induced_path(g, &self.verts)
    }
}

/// Whether a vertex sequence forms an induced path in `g`.
pub fn is_induced_path(g: &Graph, verts: &[u32]) -> bool {
    let k = verts.len();
    if k < 2 {
        return false;
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if verts[i] == verts[j] {
                return false;
            }
            if (j == i + 1) != g.has_edge(verts[i], verts[j]) {
                return false;
            }
        }
    }
    true
}

/// All induced paths on `2..=t-1` vertices of an active subgraph, grouped by
/// unordered endpoint pair.
#[derive(Clone, Debug)]
pub struct PathIndex {
    t: usize,
    buckets: BTreeMap<(u32, u32), Vec<InducedPath>>,
    total_paths: u64,
}

impl PathIndex {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn total_paths(&self) -> u64 {
        self.total_paths
    }

    pub fn bucket_count(&self) -> usize {
        self.buckets.len()
    }

    pub fn buckets(&self) -> impl Iterator<Item = (&(u32, u32), &Vec<InducedPath>)> {
        self.buckets.iter()
    }

    pub fn bucket(&self, u: u32, v: u32) -> Option<&[InducedPath]> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.buckets.get(&key).map(|b| b.as_slice())
    }
}

/// One induced path together with a proper coloring that respects the lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPath {
    verts: Vec<u32>,
    colors: Vec<u8>,
}

impl ColoredPath {
    pub fn vertices(&self) -> &[u32] {
        &self.verts
    }

    /// Colors in `{1,2,3}` aligned with [`Self::vertices`].
    pub fn colors(&self) -> &[u8] {
        &self.colors
    }
}

/// Colored analogue of [`PathIndex`].
#[derive(Clone, Debug)]
pub struct ColoredPathIndex {
    t: usize,
    buckets: BTreeMap<(u32, u32), Vec<ColoredPath>>,
    total: u64,
}

impl ColoredPathIndex {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn bucket_count(&self) -> usize {
        self.buckets.len()
    }

    pub fn buckets(&self) -> impl Iterator<Item = (&(u32, u32), &Vec<ColoredPath>)> {
        self.buckets.iter()
    }

    pub fn bucket(&self, u: u32, v: u32) -> Option<&[ColoredPath]> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.buckets.get(&key).map(|b| b.as_slice())
    }
}

/// Per-vertex color lists over `{1,2,3}`, one bit per color.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    masks: Vec<u8>,
}

impl ListAssignment {
    /// Every vertex gets the full list `{1,2,3}`.
    pub fn full(n: usize) -> ListAssignment {
        ListAssignment {
            masks: vec![0b111; n],
        }
    }

    pub fn from_masks(masks: Vec<u8>) -> ListAssignment {
        debug_assert!(masks.iter().all(|&m| m <= 0b111));
        ListAssignment { masks }
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    #[inline]
    pub fn mask(&self, v: u32) -> u8 {
        self.masks[v as usize]
    }

    pub fn set_mask(&mut self, v: u32, mask: u8) {
        debug_assert!(mask <= 0b111);
        self.masks[v as usize] = mask;
    }

    #[inline]
    pub fn contains(&self, v: u32, color: u8) -> bool {
        debug_assert!((1..=3).contains(&color));
        self.masks[v as usize] >> (color - 1) & 1 != 0
    }

    /// Removes `color` from the list of `v`; returns whether it was present.
    pub fn remove(&mut self, v: u32, color: u8) -> bool {
        let had = self.contains(v, color);
        self.masks[v as usize] &= !(1 << (color - 1));
        had
    }

    /// Shrinks the list of `v` to the single color `c`.
    pub fn set_only(&mut self, v: u32, c: u8) {
        debug_assert!((1..=3).contains(&c));
        self.masks[v as usize] = 1 << (c - 1);
    }

    pub fn list_size(&self, v: u32) -> usize {
        self.masks[v as usize].count_ones() as usize
    }

    /// Colors of `v` in increasing order.
    pub fn colors(&self, v: u32) -> impl Iterator<Item = u8> + '_ {
        let mask = self.masks[v as usize];
        (1u8..=3).filter(move |c| mask >> (c - 1) & 1 != 0)
    }

    /// Sum of list sizes over a set; the branching measure of the coloring
    /// solver.
    pub fn total_size(&self, over: &VertexSet) -> usize {
        over.iter().map(|v| self.list_size(v)).sum()
    }
}

/// Depth-first scan over all induced paths with at most `t` vertices inside
/// `active`. `emit` sees every path on `2..=t-1` vertices exactly once, in
/// canonical orientation; a path reaching `t` vertices aborts the scan with
/// [`Error::NotPtFree`].
pub(crate) fn scan_induced_paths(
    g: &Graph,
    active: &VertexSet,
    t: usize,
    emit: &mut dyn FnMut(&[u32]),
) -> Result<()> {
    if t < 2 {
        return Err(Error::InvalidInput(format!(
            "t must be at least 2, got {t}"
        )));
    }
    let n = g.vertex_count();
    let mut path: Vec<u32> = Vec::with_capacity(t);
    // avail[k] while the path has k vertices: active vertices non-adjacent to
    // (and distinct from) all path vertices except the last.
    let mut avail: Vec<VertexSet> = vec![VertexSet::empty(n); t + 1];
    let mut cand: Vec<VertexSet> = vec![VertexSet::empty(n); t + 1];

    for start in active.iter() {
        path.clear();
        path.push(start);
        avail[1].copy_from(active);
        avail[1].remove(start);
        extend(g, t, &mut path, &mut avail, &mut cand, emit)?;
    }
    Ok(())
}

fn extend(
    g: &Graph,
    t: usize,
    path: &mut Vec<u32>,
    avail: &mut [VertexSet],
    cand: &mut [VertexSet],
    emit: &mut dyn FnMut(&[u32]),
) -> Result<()> {
    let k = path.len();
    let last = path[k - 1];
    cand[k].copy_from(&avail[k]);
    cand[k].intersect_with(g.neighbors(last));
    if cand[k].is_empty() {
        return Ok(());
    }
    if k + 1 < t {
        let (lo, hi) = avail.split_at_mut(k + 1);
        hi[0].copy_from(&lo[k]);
        hi[0].subtract(g.neighbors(last));
    }
    let mut rest = cand[k].first();
    while let Some(v) = rest {
        path.push(v);
        if path.len() == t {
            return Err(Error::NotPtFree {
                t,
                path: path.clone(),
            });
        }
        if path[0] < v {
            emit(path);
        }
        extend(g, t, path, avail, cand, emit)?;
        path.pop();
        cand[k].remove(v);
        rest = cand[k].first();
    }
    Ok(())
}

/// Enumerates all induced paths on `2..=t-1` vertices within `active` and
/// groups them into endpoint buckets.
pub fn enumerate_induced_paths(g: &Graph, active: &VertexSet, t: usize) -> Result<PathIndex> {
    let mut buckets: BTreeMap<(u32, u32), Vec<InducedPath>> = BTreeMap::new();
    let mut total = 0u64;
    scan_induced_paths(g, active, t, &mut |p: &[u32]| {
        let key = (p[0], *p.last().unwrap());
        buckets
            .entry(key)
            .or_default()
            .push(InducedPath::new(p.to_vec()));
        total += 1;
    })?;
    Ok(PathIndex {
        t,
        buckets,
        total_paths: total,
    })
}

/// Returns `None` when no induced path on `t` vertices exists within
/// `active`; otherwise a witness path.
pub fn pt_free_certificate(g: &Graph, active: &VertexSet, t: usize) -> Result<Option<InducedPath>> {
    match scan_induced_paths(g, active, t, &mut |_| {}) {
        Ok(()) => Ok(None),
        Err(Error::NotPtFree { path, .. }) => Ok(Some(InducedPath::new(path))),
        Err(e) => Err(e),
    }
}

/// Decision form of [`pt_free_certificate`].
pub fn is_pt_free(g: &Graph, active: &VertexSet, t: usize) -> Result<bool> {
    Ok(pt_free_certificate(g, active, t)?.is_none())
}

/// Enumerates induced paths together with all their proper list colorings,
/// computed by transfer along the path: each prefix stays proper and inside
/// the lists, so the full `3^k` product is never touched.
pub fn enumerate_colored_paths(
    g: &Graph,
    active: &VertexSet,
    t: usize,
    lists: &ListAssignment,
) -> Result<ColoredPathIndex> {
    let mut buckets: BTreeMap<(u32, u32), Vec<ColoredPath>> = BTreeMap::new();
    let mut total = 0u64;
    let mut colors: Vec<u8> = Vec::new();
    scan_induced_paths(g, active, t, &mut |p: &[u32]| {
        let key = (p[0], *p.last().unwrap());
        let entry = buckets.entry(key).or_default();
        colors.clear();
        color_path(lists, p, &mut colors, &mut |cs| {
            entry.push(ColoredPath {
                verts: p.to_vec(),
                colors: cs.to_vec(),
            });
            total += 1;
        });
    })?;
    // Paths whose every coloring dies leave empty buckets behind; drop them
    // so bucket existence keeps meaning "at least one colored path".
    buckets.retain(|_, v| !v.is_empty());
    Ok(ColoredPathIndex { t, buckets, total })
}

fn color_path(
    lists: &ListAssignment,
    verts: &[u32],
    colors: &mut Vec<u8>,
    out: &mut dyn FnMut(&[u8]),
) {
    let i = colors.len();
    if i == verts.len() {
        out(colors);
        return;
    }
    for c in lists.colors(verts[i]) {
        if i > 0 && colors[i - 1] == c {
            continue;
        }
        colors.push(c);
        color_path(lists, verts, colors, out);
        colors.pop();
    }
}

/// Per-bucket sizes of a [`PathIndex`].
#[derive(Clone, Debug, serde::Serialize)]
pub struct BucketReport {
    /// `(u, v, size)` rows in bucket order.
    pub buckets: Vec<(u32, u32, usize)>,
    pub total: u64,
    pub max: usize,
}

pub fn bucket_report(idx: &PathIndex) -> BucketReport {
    let buckets: Vec<(u32, u32, usize)> = idx
        .buckets()
        .map(|(&(u, v), paths)| (u, v, paths.len()))
        .collect();
    let max = buckets.iter().map(|&(_, _, s)| s).max().unwrap_or(0);
    BucketReport {
        buckets,
        total: idx.total_paths(),
        max,
    }
}

//! List 3-coloring of Pt-free graphs, with the min-cost generalization and
//! the independent odd cycle transversal reduction.
//!
//! Every call first preprocesses to a fixpoint: empty lists are infeasible,
//! singleton lists commit their vertex and propagate, and any color that no
//! proper list coloring of some induced subgraph on at most `t-1` vertices
//! can realize is dropped. The reduced instance has only 2- and 3-element
//! lists, and every surviving (vertex, color) choice extends to a proper
//! coloring of every small subgraph around it; those two properties are what
//! make the colored buckets dense enough to branch on.

use std::collections::BTreeMap;

use crate::bitset::VertexSet;
use crate::decompose::find_heavy_vertex_color;
use crate::error::{Error, Result};
use crate::graph::{components, Graph, WeightMap};
use crate::mwis::BranchStats;
use crate::paths::{enumerate_colored_paths, ListAssignment};
use crate::util::with_big_stack;

/// Per-vertex, per-color nonnegative costs.
#[derive(Clone, Debug)]
pub struct CostMap {
    costs: Vec<[i64; 3]>,
}

impl CostMap {
    pub fn new(costs: Vec<[i64; 3]>) -> Result<CostMap> {
        if costs.iter().flatten().any(|&c| c < 0) {
            return Err(Error::InvalidInput(
                "coloring costs must be nonnegative".into(),
            ));
        }
        Ok(CostMap { costs })
    }

    /// All costs zero.
    pub fn zero(n: usize) -> CostMap {
        CostMap {
            costs: vec![[0; 3]; n],
        }
    }

    #[inline]
    pub fn get(&self, v: u32, c: u8) -> i64 {
        self.costs[v as usize][(c - 1) as usize]
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }
}

/// A coloring sub-instance: the not-yet-colored vertices, their current
/// lists, and the colors committed so far.
#[derive(Clone, Debug)]
pub struct ColoringInstance {
    pub active: VertexSet,
    pub lists: ListAssignment,
    pub fixed: BTreeMap<u32, u8>,
}

impl ColoringInstance {
    pub fn new(active: VertexSet, lists: ListAssignment) -> ColoringInstance {
        ColoringInstance {
            active,
            lists,
            fixed: BTreeMap::new(),
        }
    }
}

/// A proper list coloring of the queried active set; `cost` is present for
/// the min-cost variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSolution {
    pub assignment: BTreeMap<u32, u8>,
    pub cost: Option<i64>,
}

/// Independent odd cycle transversal: an independent set whose removal
/// leaves the graph bipartite.
#[derive(Clone, Debug)]
pub struct OctSolution {
    pub vertices: VertexSet,
    pub weight: i64,
}

/// Exhaustive reduction. Returns `None` when the instance is infeasible.
///
/// Rules, applied to a fixpoint: (R1) an empty list is infeasible; (R2) a
/// singleton list `{c}` at `v` fixes `v = c`, deletes `v`, and removes `c`
/// from its neighbors; (R3) over every subset `S` of at most `t-1` active
/// vertices, a color of `v` in `S` realized by no proper list coloring of
/// the induced subgraph is removed, and a subset with no coloring at all is
/// infeasible.
pub fn preprocess(g: &Graph, inst: ColoringInstance, t: usize) -> Result<Option<ColoringInstance>> {
    if t < 2 {
        return Err(Error::InvalidInput(format!(
            "t must be at least 2, got {t}"
        )));
    }
    let ColoringInstance {
        mut active,
        mut lists,
        mut fixed,
    } = inst;
    loop {
        // R1 and R2 to their own fixpoint; smallest singleton first.
        loop {
            let mut singleton = None;
            for v in active.iter() {
                match lists.list_size(v) {
                    0 => return Ok(None),
                    1 if singleton.is_none() => singleton = Some(v),
                    _ => {}
                }
            }
            let Some(v) = singleton else { break };
            let c = lists.colors(v).next().unwrap();
            fixed.insert(v, c);
            active.remove(v);
            for u in g.neighbors(v).and(&active).iter() {
                lists.remove(u, c);
            }
        }

        // R3: one sweep by subset size; restart the whole rule set on the
        // first change.
        let verts = active.to_vec();
        let mut changed = false;
        'sweep: for size in 1..t {
            if size > verts.len() {
                break;
            }
            for subset in Combinations::new(&verts, size) {
                let Some(achievable) = achievable_colors(g, &lists, &subset) else {
                    return Ok(None);
                };
                for (i, &v) in subset.iter().enumerate() {
                    let dead = lists.mask(v) & !achievable[i];
                    if dead != 0 {
                        for c in 1u8..=3 {
                            if dead >> (c - 1) & 1 != 0 {
                                lists.remove(v, c);
                            }
                        }
                        changed = true;
                    }
                }
                if changed {
                    break 'sweep;
                }
            }
        }
        if !changed {
            return Ok(Some(ColoringInstance {
                active,
                lists,
                fixed,
            }));
        }
    }
}

/// For each position of `s`, the colors realized by some proper list
/// coloring of the induced subgraph; `None` when no coloring exists.
fn achievable_colors(g: &Graph, lists: &ListAssignment, s: &[u32]) -> Option<Vec<u8>> {
    let k = s.len();
    let mut earlier_adj = vec![0u8; k];
    for i in 0..k {
        for j in 0..i {
            if g.has_edge(s[i], s[j]) {
                earlier_adj[i] |= 1 << j;
            }
        }
    }
    let masks: Vec<u8> = s.iter().map(|&v| lists.mask(v)).collect();
    let mut achievable = vec![0u8; k];
    let mut chosen = vec![0u8; k];
    color_subgraph(&earlier_adj, &masks, 0, &mut chosen, &mut achievable);
    if achievable.iter().all(|&a| a == 0) && k > 0 {
        None
    } else {
        Some(achievable)
    }
}

/// Backtracking over proper list colorings of a small subgraph; records the
/// colors reached at each position. Returns true once every listed color is
/// achieved, which stops the search early.
fn color_subgraph(
    earlier_adj: &[u8],
    masks: &[u8],
    i: usize,
    chosen: &mut [u8],
    achievable: &mut [u8],
) -> bool {
    let k = masks.len();
    if i == k {
        for j in 0..k {
            achievable[j] |= 1 << (chosen[j] - 1);
        }
        return achievable.iter().zip(masks).all(|(a, m)| a & m == *m);
    }
    for c in 1u8..=3 {
        if masks[i] >> (c - 1) & 1 == 0 {
            continue;
        }
        let conflict = (0..i).any(|j| earlier_adj[i] >> j & 1 != 0 && chosen[j] == c);
        if conflict {
            continue;
        }
        chosen[i] = c;
        if color_subgraph(earlier_adj, masks, i + 1, chosen, achievable) {
            return true;
        }
    }
    false
}

/// Ascending-index combinations of a slice.
struct Combinations<'a> {
    items: &'a [u32],
    idx: Vec<usize>,
    done: bool,
}

impl<'a> Combinations<'a> {
    fn new(items: &'a [u32], k: usize) -> Combinations<'a> {
        Combinations {
            items,
            idx: (0..k).collect(),
            done: k > items.len(),
        }
    }
}

impl Iterator for Combinations<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out: Vec<u32> = self.idx.iter().map(|&i| self.items[i]).collect();
        let k = self.idx.len();
        if k == 0 {
            self.done = true;
            return Some(out);
        }
        let n = self.items.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - (k - i) {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Both properties guaranteed by [`preprocess`], checked from scratch:
/// every active list has 2 or 3 colors, and every listed color of every
/// vertex is realized in every induced subgraph on at most `t-1` vertices
/// containing it.
pub fn preprocessed_properties_hold(
    g: &Graph,
    active: &VertexSet,
    lists: &ListAssignment,
    t: usize,
) -> bool {
    for v in active.iter() {
        if !(2..=3).contains(&lists.list_size(v)) {
            return false;
        }
    }
    let verts = active.to_vec();
    for size in 1..t {
        if size > verts.len() {
            break;
        }
        for subset in Combinations::new(&verts, size) {
            match achievable_colors(g, lists, &subset) {
                None => return false,
                Some(ach) => {
                    for (i, &v) in subset.iter().enumerate() {
                        if lists.mask(v) & !ach[i] != 0 {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn validate_t(t: usize) -> Result<usize> {
    if t < 2 {
        return Err(Error::InvalidInput(format!(
            "t must be at least 2, got {t}"
        )));
    }
    if t > 8 {
        return Err(Error::InvalidInput(format!(
            "coloring solvers support t up to 8 (colored path space grows as (3n)^(t-1)), got {t}"
        )));
    }
    Ok(t.max(5))
}

struct Ctx<'a> {
    g: &'a Graph,
    t: usize,
    costs: Option<&'a CostMap>,
    stats: BranchStats,
}

/// Decides list 3-colorability of the active subgraph and returns a proper
/// list coloring when one exists. `None` means infeasible.
pub fn solve_list3col(
    g: &Graph,
    active: &VertexSet,
    lists: &ListAssignment,
    t: usize,
) -> Result<(Option<ColoringSolution>, BranchStats)> {
    let t = validate_t(t)?;
    let (out, stats) = with_big_stack(|| {
        let mut ctx = Ctx {
            g,
            t,
            costs: None,
            stats: BranchStats::default(),
        };
        let out = decide(&mut ctx, active.clone(), lists.clone(), 0)?;
        Ok((out, ctx.stats))
    })?;
    if let Some(map) = &out {
        verify_coloring(g, active, lists, map)?;
    }
    Ok((
        out.map(|assignment| ColoringSolution {
            assignment,
            cost: None,
        }),
        stats,
    ))
}

fn decide(
    ctx: &mut Ctx<'_>,
    active: VertexSet,
    lists: ListAssignment,
    depth: u64,
) -> Result<Option<BTreeMap<u32, u8>>> {
    ctx.stats.calls += 1;
    ctx.stats.max_depth = ctx.stats.max_depth.max(depth);
    let pre = preprocess(ctx.g, ColoringInstance::new(active, lists), ctx.t)?;
    let Some(ColoringInstance {
        active,
        lists,
        fixed,
    }) = pre
    else {
        return Ok(None);
    };
    if active.is_empty() {
        ctx.stats.leaves += 1;
        return Ok(Some(fixed));
    }
    if active.len() == 1 {
        // An isolated active vertex is unconstrained; take its smallest color.
        ctx.stats.leaves += 1;
        let v = active.first().unwrap();
        let c = lists.colors(v).next().unwrap();
        let mut out = fixed;
        out.insert(v, c);
        return Ok(Some(out));
    }
    let comps = components(ctx.g, &active);
    if comps.len() > 1 {
        ctx.stats.component_splits += 1;
        let mut acc = fixed;
        for comp in comps {
            match decide(ctx, comp, lists.clone(), depth + 1)? {
                None => return Ok(None),
                Some(m) => acc.extend(m),
            }
        }
        return Ok(Some(acc));
    }

    let cidx = enumerate_colored_paths(ctx.g, &active, ctx.t, &lists)?;
    let rep = find_heavy_vertex_color(ctx.g, &active, &cidx, ctx.t, &lists)?;
    drop(cidx);

    // Assign branch first: it is the one with guaranteed bucket shrinkage.
    let mut assign = lists.clone();
    assign.set_only(rep.w, rep.color);
    if let Some(mut m) = decide(ctx, active.clone(), assign, depth + 1)? {
        ctx.stats.success_branches += 1;
        m.extend(fixed);
        return Ok(Some(m));
    }
    let mut removed = lists;
    removed.remove(rep.w, rep.color);
    match decide(ctx, active, removed, depth + 1)? {
        Some(mut m) => {
            ctx.stats.failure_branches += 1;
            m.extend(fixed);
            Ok(Some(m))
        }
        None => Ok(None),
    }
}

/// Minimum total cost proper list coloring. Unlike the decision solver,
/// both branches are always explored.
pub fn solve_min_cost_3col(
    g: &Graph,
    active: &VertexSet,
    lists: &ListAssignment,
    costs: &CostMap,
    t: usize,
) -> Result<(Option<ColoringSolution>, BranchStats)> {
    let t = validate_t(t)?;
    if costs.len() < g.vertex_count() {
        return Err(Error::InvalidInput(
            "cost map does not cover the vertex set".into(),
        ));
    }
    let (out, stats) = with_big_stack(|| {
        let mut ctx = Ctx {
            g,
            t,
            costs: Some(costs),
            stats: BranchStats::default(),
        };
        let out = cheapest(&mut ctx, active.clone(), lists.clone(), 0)?;
        Ok((out, ctx.stats))
    })?;
    let solution = match out {
        None => None,
        Some((map, cost)) => {
            verify_coloring(g, active, lists, &map)?;
            let mut check: i64 = 0;
            for (&v, &c) in &map {
                check = check.checked_add(costs.get(v, c)).ok_or(Error::Overflow)?;
            }
            if check != cost {
                return Err(Error::InvariantViolation(
                    "reported cost does not match the assignment".into(),
                ));
            }
            Some(ColoringSolution {
                assignment: map,
                cost: Some(cost),
            })
        }
    };
    Ok((solution, stats))
}

fn cheapest(
    ctx: &mut Ctx<'_>,
    active: VertexSet,
    lists: ListAssignment,
    depth: u64,
) -> Result<Option<(BTreeMap<u32, u8>, i64)>> {
    ctx.stats.calls += 1;
    ctx.stats.max_depth = ctx.stats.max_depth.max(depth);
    let costs = ctx.costs.expect("min-cost context");
    let pre = preprocess(ctx.g, ColoringInstance::new(active, lists), ctx.t)?;
    let Some(ColoringInstance {
        active,
        lists,
        fixed,
    }) = pre
    else {
        return Ok(None);
    };
    let mut fixed_cost: i64 = 0;
    for (&v, &c) in &fixed {
        fixed_cost = fixed_cost
            .checked_add(costs.get(v, c))
            .ok_or(Error::Overflow)?;
    }
    if active.is_empty() {
        ctx.stats.leaves += 1;
        return Ok(Some((fixed, fixed_cost)));
    }
    if active.len() == 1 {
        ctx.stats.leaves += 1;
        let v = active.first().unwrap();
        let c = lists
            .colors(v)
            .min_by_key(|&c| (costs.get(v, c), c))
            .unwrap();
        let mut out = fixed;
        out.insert(v, c);
        let total = fixed_cost
            .checked_add(costs.get(v, c))
            .ok_or(Error::Overflow)?;
        return Ok(Some((out, total)));
    }
    let comps = components(ctx.g, &active);
    if comps.len() > 1 {
        ctx.stats.component_splits += 1;
        let mut acc = fixed;
        let mut total = fixed_cost;
        for comp in comps {
            match cheapest(ctx, comp, lists.clone(), depth + 1)? {
                None => return Ok(None),
                Some((m, c)) => {
                    acc.extend(m);
                    total = total.checked_add(c).ok_or(Error::Overflow)?;
                }
            }
        }
        return Ok(Some((acc, total)));
    }

    let cidx = enumerate_colored_paths(ctx.g, &active, ctx.t, &lists)?;
    let rep = find_heavy_vertex_color(ctx.g, &active, &cidx, ctx.t, &lists)?;
    drop(cidx);

    let mut assign = lists.clone();
    assign.set_only(rep.w, rep.color);
    let take = cheapest(ctx, active.clone(), assign, depth + 1)?;
    let mut removed = lists;
    removed.remove(rep.w, rep.color);
    let leave = cheapest(ctx, active, removed, depth + 1)?;

    let best = match (take, leave) {
        (None, None) => return Ok(None),
        (Some(a), None) => {
            ctx.stats.success_branches += 1;
            a
        }
        (None, Some(b)) => {
            ctx.stats.failure_branches += 1;
            b
        }
        (Some(a), Some(b)) => {
            if a.1 <= b.1 {
                ctx.stats.success_branches += 1;
                a
            } else {
                ctx.stats.failure_branches += 1;
                b
            }
        }
    };
    let (mut map, cost) = best;
    map.extend(fixed);
    Ok(Some((
        map,
        cost.checked_add(fixed_cost).ok_or(Error::Overflow)?,
    )))
}

/// Minimum-weight independent set whose removal leaves the graph bipartite,
/// as the color-3 class of a min-cost 3-coloring where color 3 charges the
/// vertex weight. `None` when the graph is not 3-colorable.
pub fn solve_independent_oct(
    g: &Graph,
    active: &VertexSet,
    weights: &WeightMap,
    t: usize,
) -> Result<(Option<OctSolution>, BranchStats)> {
    for v in active.iter() {
        if weights.get(v) < 0 {
            return Err(Error::InvalidInput(
                "independent OCT requires nonnegative vertex weights".into(),
            ));
        }
    }
    let costs = CostMap::new(
        (0..g.vertex_count())
            .map(|v| [0, 0, weights.get(v as u32)])
            .collect(),
    )?;
    let lists = ListAssignment::full(g.vertex_count());
    let (solution, stats) = solve_min_cost_3col(g, active, &lists, &costs, t)?;
    let out = match solution {
        None => None,
        Some(sol) => {
            let mut x = VertexSet::empty(g.vertex_count());
            for (&v, &c) in &sol.assignment {
                if c == 3 {
                    x.insert(v);
                }
            }
            let weight = sol.cost.unwrap();
            for v in x.iter() {
                if g.neighbors(v).intersects(&x) {
                    return Err(Error::InvariantViolation(
                        "OCT class is not independent".into(),
                    ));
                }
            }
            if !is_bipartite(g, &active.minus(&x)) {
                return Err(Error::InvariantViolation(
                    "OCT removal does not leave a bipartite graph".into(),
                ));
            }
            Some(OctSolution {
                vertices: x,
                weight,
            })
        }
    };
    Ok((out, stats))
}

/// Two-colorability of the induced subgraph, by BFS per component.
pub fn is_bipartite(g: &Graph, active: &VertexSet) -> bool {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    let mut queue = Vec::new();
    let mut unseen = active.clone();
    while let Some(start) = unseen.first() {
        side[start as usize] = 0;
        unseen.remove(start);
        queue.push(start);
        while let Some(v) = queue.pop() {
            for u in g.neighbors(v).and(active).iter() {
                if side[u as usize] == u8::MAX {
                    side[u as usize] = 1 - side[v as usize];
                    unseen.remove(u);
                    queue.push(u);
                } else if side[u as usize] == side[v as usize] {
                    return false;
                }
            }
        }
    }
    true
}

fn verify_coloring(
    g: &Graph,
    active: &VertexSet,
    original_lists: &ListAssignment,
    map: &BTreeMap<u32, u8>,
) -> Result<()> {
    for v in active.iter() {
        let Some(&c) = map.get(&v) else {
            return Err(Error::InvariantViolation(format!(
                "vertex {v} left uncolored"
            )));
        };
        if !original_lists.contains(v, c) {
            return Err(Error::InvariantViolation(format!(
                "vertex {v} colored {c} outside its original list"
            )));
        }
        for u in g.neighbors(v).and(active).iter() {
            if map.get(&u) == Some(&c) {
                return Err(Error::InvariantViolation(format!(
                    "adjacent vertices {v} and {u} share color {c}"
                )));
            }
        }
    }
    if map.keys().any(|v| !active.contains(*v)) {
        return Err(Error::InvariantViolation(
            "assignment colors inactive vertices".into(),
        ));
    }
    Ok(())
}

/// Backtracking oracle for the decision problem: vertices in ascending id
/// order, colors ascending, so the first full assignment found is the
/// lexicographically smallest feasible one. Guarded to 18 active vertices.
pub fn brute_force_list3col(
    g: &Graph,
    active: &VertexSet,
    lists: &ListAssignment,
) -> Result<Option<ColoringSolution>> {
    guard_brute(active)?;
    let mut acc = BTreeMap::new();
    for comp in components(g, active) {
        let verts = comp.to_vec();
        let mut colors = vec![0u8; verts.len()];
        if !bf_decide(g, lists, &verts, 0, &mut colors) {
            return Ok(None);
        }
        for (i, &v) in verts.iter().enumerate() {
            acc.insert(v, colors[i]);
        }
    }
    Ok(Some(ColoringSolution {
        assignment: acc,
        cost: None,
    }))
}

fn bf_decide(
    g: &Graph,
    lists: &ListAssignment,
    verts: &[u32],
    i: usize,
    colors: &mut [u8],
) -> bool {
    if i == verts.len() {
        return true;
    }
    for c in lists.colors(verts[i]) {
        let ok = (0..i).all(|j| !(g.has_edge(verts[i], verts[j]) && colors[j] == c));
        if ok {
            colors[i] = c;
            if bf_decide(g, lists, verts, i + 1, colors) {
                return true;
            }
        }
    }
    false
}

/// Min-cost twin of [`brute_force_list3col`]: exhausts proper list
/// colorings per component and keeps the cheapest, ties broken toward the
/// lexicographically smaller assignment.
pub fn brute_force_min_cost_3col(
    g: &Graph,
    active: &VertexSet,
    lists: &ListAssignment,
    costs: &CostMap,
) -> Result<Option<ColoringSolution>> {
    guard_brute(active)?;
    let mut acc = BTreeMap::new();
    let mut total: i64 = 0;
    for comp in components(g, active) {
        let verts = comp.to_vec();
        let mut colors = vec![0u8; verts.len()];
        let mut best: Option<(i64, Vec<u8>)> = None;
        bf_cost(g, lists, costs, &verts, 0, 0, &mut colors, &mut best);
        match best {
            None => return Ok(None),
            Some((cost, assignment)) => {
                total = total.checked_add(cost).ok_or(Error::Overflow)?;
                for (i, &v) in verts.iter().enumerate() {
                    acc.insert(v, assignment[i]);
                }
            }
        }
    }
    Ok(Some(ColoringSolution {
        assignment: acc,
        cost: Some(total),
    }))
}

#[allow(clippy::too_many_arguments)]
fn bf_cost(
    g: &Graph,
    lists: &ListAssignment,
    costs: &CostMap,
    verts: &[u32],
    i: usize,
    cost_so_far: i64,
    colors: &mut [u8],
    best: &mut Option<(i64, Vec<u8>)>,
) {
    if let Some((b, _)) = best {
        // Costs are nonnegative; equal-cost completions found later are
        // lexicographically larger, so pruning at >= is exact.
        if cost_so_far >= *b {
            return;
        }
    }
    if i == verts.len() {
        *best = Some((cost_so_far, colors.to_vec()));
        return;
    }
    for c in lists.colors(verts[i]) {
        let ok = (0..i).all(|j| !(g.has_edge(verts[i], verts[j]) && colors[j] == c));
        if ok {
            colors[i] = c;
            bf_cost(
                g,
                lists,
                costs,
                verts,
                i + 1,
                cost_so_far + costs.get(verts[i], c),
                colors,
                best,
            );
        }
    }
}

/// Subset-enumeration oracle for independent OCT. Guarded to 20 vertices.
pub fn brute_force_independent_oct(
    g: &Graph,
    active: &VertexSet,
    weights: &WeightMap,
) -> Result<Option<OctSolution>> {
    if active.len() > 20 {
        return Err(Error::InvalidInput(format!(
            "brute force OCT capped at 20 active vertices, got {}",
            active.len()
        )));
    }
    let verts = active.to_vec();
    let k = verts.len();
    let mut best: Option<(i64, VertexSet)> = None;
    for mask in 0u32..(1 << k) {
        let mut x = VertexSet::empty(g.vertex_count());
        for (i, &v) in verts.iter().enumerate() {
            if mask >> i & 1 != 0 {
                x.insert(v);
            }
        }
        if x.iter().any(|v| g.neighbors(v).intersects(&x)) {
            continue;
        }
        if !is_bipartite(g, &active.minus(&x)) {
            continue;
        }
        let w = weights.sum_over(&x)?;
        let better = match &best {
            None => true,
            Some((bw, bx)) => w < *bw || (w == *bw && crate::mwis::set_lex_le(&x, bx) && x != *bx),
        };
        if better {
            best = Some((w, x));
        }
    }
    Ok(best.map(|(weight, vertices)| OctSolution { vertices, weight }))
}

fn guard_brute(active: &VertexSet) -> Result<()> {
    if active.len() > 18 {
        return Err(Error::InvalidInput(format!(
            "brute force coloring capped at 18 active vertices, got {}",
            active.len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn preprocess_rejects_two_colorable_triangle() {
        let g = complete(3);
        let inst = ColoringInstance::new(g.full_set(), ListAssignment::from_masks(vec![0b011; 3]));
        assert!(preprocess(&g, inst, 5).unwrap().is_none());
    }

    #[test]
    fn preprocess_propagates_singletons() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let lists = ListAssignment::from_masks(vec![0b001, 0b011]);
        let out = preprocess(&g, ColoringInstance::new(g.full_set(), lists), 5)
            .unwrap()
            .unwrap();
        assert!(out.active.is_empty());
        assert_eq!(out.fixed[&0], 1);
        assert_eq!(out.fixed[&1], 2);
    }

    #[test]
    fn preprocess_rejects_k4() {
        let g = complete(4);
        let inst = ColoringInstance::new(g.full_set(), ListAssignment::full(4));
        assert!(preprocess(&g, inst, 5).unwrap().is_none());
    }

    #[test]
    fn preprocess_output_satisfies_properties() {
        let g = cycle(5);
        let inst = ColoringInstance::new(g.full_set(), ListAssignment::full(5));
        let out = preprocess(&g, inst, 5).unwrap().unwrap();
        assert!(preprocessed_properties_hold(&g, &out.active, &out.lists, 5));
    }

    #[test]
    fn solves_c5_with_full_lists() {
        let g = cycle(5);
        let (sol, _) = solve_list3col(&g, &g.full_set(), &ListAssignment::full(5), 5).unwrap();
        let sol = sol.expect("C5 is 3-colorable");
        assert_eq!(sol.assignment.len(), 5);
    }

    #[test]
    fn c5_is_not_two_colorable() {
        let g = cycle(5);
        let lists = ListAssignment::from_masks(vec![0b011; 5]);
        let (sol, _) = solve_list3col(&g, &g.full_set(), &lists, 5).unwrap();
        assert!(sol.is_none());
    }

    #[test]
    fn k4_minus_edge_is_colorable() {
        let g = Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let (sol, _) = solve_list3col(&g, &g.full_set(), &ListAssignment::full(4), 5).unwrap();
        assert!(sol.is_some());
        let oracle = brute_force_list3col(&g, &g.full_set(), &ListAssignment::full(4)).unwrap();
        assert!(oracle.is_some());
    }

    #[test]
    fn min_cost_single_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        let lists = ListAssignment::from_masks(vec![0b011]);
        let costs = CostMap::new(vec![[5, 3, 0]]).unwrap();
        let (sol, _) = solve_min_cost_3col(&g, &g.full_set(), &lists, &costs, 5).unwrap();
        let sol = sol.unwrap();
        assert_eq!(sol.cost, Some(3));
        assert_eq!(sol.assignment[&0], 2);
    }

    #[test]
    fn min_cost_edge_example() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let costs = CostMap::new(vec![[0, 0, 0], [7, 1, 2]]).unwrap();
        let (sol, _) =
            solve_min_cost_3col(&g, &g.full_set(), &ListAssignment::full(2), &costs, 5).unwrap();
        let sol = sol.unwrap();
        assert_eq!(sol.cost, Some(1));
        assert_eq!(sol.assignment[&1], 2);
    }

    #[test]
    fn min_cost_k4_infeasible_regardless_of_costs() {
        let g = complete(4);
        let costs = CostMap::zero(4);
        let (sol, _) =
            solve_min_cost_3col(&g, &g.full_set(), &ListAssignment::full(4), &costs, 5).unwrap();
        assert!(sol.is_none());
    }

    #[test]
    fn oct_on_c5_removes_one_vertex() {
        let g = cycle(5);
        let (sol, _) = solve_independent_oct(&g, &g.full_set(), &WeightMap::unit(5), 5).unwrap();
        let sol = sol.unwrap();
        assert_eq!(sol.weight, 1);
        assert_eq!(sol.vertices.len(), 1);
    }

    #[test]
    fn oct_on_bipartite_graph_is_empty() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (sol, _) = solve_independent_oct(&g, &g.full_set(), &WeightMap::unit(4), 5).unwrap();
        let sol = sol.unwrap();
        assert_eq!(sol.weight, 0);
        assert!(sol.vertices.is_empty());
    }

    #[test]
    fn oct_on_k4_is_infeasible() {
        let g = complete(4);
        let (sol, _) = solve_independent_oct(&g, &g.full_set(), &WeightMap::unit(4), 5).unwrap();
        assert!(sol.is_none());
    }

    #[test]
    fn brute_force_examples() {
        let g = cycle(5);
        assert!(
            brute_force_list3col(&g, &g.full_set(), &ListAssignment::full(5))
                .unwrap()
                .is_some()
        );

        let tri = complete(3);
        let two = ListAssignment::from_masks(vec![0b011; 3]);
        assert!(brute_force_list3col(&tri, &tri.full_set(), &two)
            .unwrap()
            .is_none());

        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let lists = ListAssignment::from_masks(vec![0b001, 0b011, 0b001]);
        let sol = brute_force_list3col(&path, &path.full_set(), &lists)
            .unwrap()
            .unwrap();
        assert_eq!(sol.assignment[&0], 1);
        assert_eq!(sol.assignment[&1], 2);
        assert_eq!(sol.assignment[&2], 1);
    }

    #[test]
    fn solver_matches_oracle_on_random_instances() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let mut tested = 0;
        while tested < 40 {
            let n = rng.random_range(2..=8usize);
            let p = rng.random_range(0.2..0.7);
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in (u + 1)..n as u32 {
                    if rng.random_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            if !crate::paths::is_pt_free(&g, &g.full_set(), 5).unwrap() {
                continue;
            }
            let masks: Vec<u8> = (0..n).map(|_| rng.random_range(1..=7) as u8).collect();
            let lists = ListAssignment::from_masks(masks);
            let (sol, _) = solve_list3col(&g, &g.full_set(), &lists, 5).unwrap();
            let oracle = brute_force_list3col(&g, &g.full_set(), &lists).unwrap();
            assert_eq!(sol.is_some(), oracle.is_some());

            let costs = CostMap::new(
                (0..n)
                    .map(|_| [0, 1, 2].map(|_| rng.random_range(0..=9)))
                    .collect(),
            )
            .unwrap();
            let (cheap, _) = solve_min_cost_3col(&g, &g.full_set(), &lists, &costs, 5).unwrap();
            let cheap_oracle =
                brute_force_min_cost_3col(&g, &g.full_set(), &lists, &costs).unwrap();
            assert_eq!(
                cheap.as_ref().and_then(|s| s.cost),
                cheap_oracle.as_ref().and_then(|s| s.cost)
            );
            tested += 1;
        }
    }

    #[test]
    fn colored_bucket_completeness_after_preprocess() {
        // Under the preprocessing guarantees, every induced path shows up as
        // a colored path with every listed color at every position.
        let g = cycle(5);
        let inst = ColoringInstance::new(g.full_set(), ListAssignment::full(5));
        let out = preprocess(&g, inst, 5).unwrap().unwrap();
        let cidx = enumerate_colored_paths(&g, &out.active, 5, &out.lists).unwrap();
        let plain = crate::paths::enumerate_induced_paths(&g, &out.active, 5).unwrap();
        for (&(u, v), paths) in plain.buckets() {
            let colored = cidx.bucket(u, v).expect("bucket must survive");
            for p in paths {
                for (i, &x) in p.vertices().iter().enumerate() {
                    for c in out.lists.colors(x) {
                        assert!(
                            colored
                                .iter()
                                .any(|cp| cp.vertices() == p.vertices() && cp.colors()[i] == c),
                            "path {:?} missing color {c} at {x}",
                            p.vertices()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_unsupported_t() {
        let g = cycle(5);
        assert!(matches!(
            solve_list3col(&g, &g.full_set(), &ListAssignment::full(5), 9),
            Err(Error::InvalidInput(_))
        ));
    }
}

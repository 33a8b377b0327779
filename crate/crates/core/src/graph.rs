//! Immutable simple graphs with bit-set adjacency, vertex weights, and the
//! set operations every solver is built on.
//!
//! Solvers never materialize subgraphs: they carry a [`VertexSet`] of active
//! vertices over the immutable root graph, so "delete w" and "delete N\[w\]"
//! are plain set subtractions.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Simple undirected graph on dense vertex ids `0..n`.
///
/// Invariants (enforced at construction): adjacency is symmetric, there are
/// no self-loops, and all neighbor ids lie in `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are idempotent.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            adj[u as usize].insert(v);
            adj[v as usize].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Neighbor set of `v` (open neighborhood).
    #[inline]
    pub fn neighbors(&self, v: u32) -> &VertexSet {
        &self.adj[v as usize]
    }

    #[inline]
    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].contains(v)
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    /// `N[v]` as a fresh set.
    pub fn closed_neighbors(&self, v: u32) -> VertexSet {
        let mut s = self.adj[v as usize].clone();
        s.insert(v);
        s
    }

    /// The set of all vertex ids.
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges in canonical order: `u < v`, sorted ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n as u32 {
            for v in self.adj[u as usize].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// `N[s]`: the members of `s` together with all their neighbors.
pub fn closed_neighborhood(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut out = s.clone();
    for v in s.iter() {
        out.union_with(g.neighbors(v));
    }
    out
}

/// Connected components of the subgraph induced by `active`, returned in
/// increasing order of smallest member.
pub fn components(g: &Graph, active: &VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut unseen = active.clone();
    let mut queue: Vec<u32> = Vec::new();
    while let Some(start) = unseen.first() {
        let mut comp = VertexSet::empty(g.vertex_count());
        comp.insert(start);
        unseen.remove(start);
        queue.clear();
        queue.push(start);
        while let Some(v) = queue.pop() {
            for u in g.neighbors(v).and(&unseen).iter() {
                comp.insert(u);
                unseen.remove(u);
                queue.push(u);
            }
        }
        out.push(comp);
    }
    out
}

/// True when the subgraph induced by `active` has at most one component.
pub fn is_connected(g: &Graph, active: &VertexSet) -> bool {
    components(g, active).len() <= 1
}

/// Per-vertex 64-bit signed weights. The map covers every vertex of the root
/// graph, so it stays valid as solvers shrink the active set.
#[derive(Clone, Debug)]
pub struct WeightMap {
    weights: Vec<i64>,
}

impl WeightMap {
    /// All weights 1.
    pub fn unit(n: usize) -> WeightMap {
        WeightMap {
            weights: vec![1; n],
        }
    }

    pub fn from_vec(weights: Vec<i64>) -> WeightMap {
        WeightMap { weights }
    }

    #[inline]
    pub fn get(&self, v: u32) -> i64 {
        self.weights[v as usize]
    }

    pub fn set(&mut self, v: u32, w: i64) {
        self.weights[v as usize] = w;
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Overflow-checked sum over a vertex set.
    pub fn sum_over(&self, s: &VertexSet) -> Result<i64> {
        let mut acc: i64 = 0;
        for v in s.iter() {
            acc = acc.checked_add(self.get(v)).ok_or(Error::Overflow)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle(n: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, ((i + 1) % n as u32))).collect();
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, &[(0, 3)]).is_err());
        assert!(Graph::new(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn duplicate_edges_idempotent() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn components_of_c5() {
        let g = cycle(5);
        let comps = components(&g, &g.full_set());
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 5);
    }

    #[test]
    fn components_of_two_disjoint_edges() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let comps = components(&g, &g.full_set());
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![2, 3]);
    }

    #[test]
    fn components_respect_active_set() {
        // C5 restricted to {0, 1, 3}: edge (0,1) survives, 3 is isolated.
        let g = cycle(5);
        let active = VertexSet::from_slice(5, &[0, 1, 3]);
        let comps = components(&g, &active);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);
        assert_eq!(comps[1].to_vec(), vec![3]);
    }

    #[test]
    fn closed_neighborhood_on_c5() {
        let g = cycle(5);
        let s = VertexSet::singleton(5, 0);
        assert_eq!(closed_neighborhood(&g, &s).to_vec(), vec![0, 1, 4]);
    }

    #[test]
    fn closed_neighborhood_of_empty_is_empty() {
        let g = cycle(5);
        assert!(closed_neighborhood(&g, &VertexSet::empty(5)).is_empty());
    }

    #[test]
    fn closed_neighborhood_of_star_center() {
        let g = Graph::new(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let s = VertexSet::singleton(6, 0);
        assert_eq!(closed_neighborhood(&g, &s).len(), 6);
    }

    #[test]
    fn weight_sum_checks_overflow() {
        let w = WeightMap::from_vec(vec![i64::MAX, 1]);
        let s = VertexSet::full(2);
        assert_eq!(w.sum_over(&s), Err(Error::Overflow));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1usize..=max_n).prop_flat_map(|n| {
                let pairs: Vec<(u32, u32)> = (0..n as u32)
                    .flat_map(|u| ((u + 1)..n as u32).map(move |v| (u, v)))
                    .collect();
                proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |flags| {
                    let edges: Vec<(u32, u32)> = pairs
                        .iter()
                        .zip(&flags)
                        .filter(|(_, &f)| f)
                        .map(|(&e, _)| e)
                        .collect();
                    Graph::new(n, &edges).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn components_partition_the_active_set(
                g in arb_graph(11),
                mask in proptest::collection::vec(any::<bool>(), 11),
            ) {
                let mut active = VertexSet::empty(g.vertex_count());
                for (v, &keep) in mask.iter().enumerate().take(g.vertex_count()) {
                    if keep {
                        active.insert(v as u32);
                    }
                }
                let comps = components(&g, &active);
                // Disjoint pieces whose union is the active set.
                let mut seen = VertexSet::empty(g.vertex_count());
                for c in &comps {
                    prop_assert!(c.is_disjoint(&seen));
                    prop_assert!(!c.is_empty());
                    seen.union_with(c);
                }
                prop_assert_eq!(&seen, &active);
                // Each piece is internally connected and sends no edge to
                // the rest of the active set.
                for c in &comps {
                    prop_assert_eq!(components(&g, c).len(), 1);
                    let outside = active.minus(c);
                    for v in c.iter() {
                        prop_assert!(!g.neighbors(v).intersects(&outside));
                    }
                }
                // Deterministic order by smallest member.
                let heads: Vec<u32> = comps.iter().map(|c| c.first().unwrap()).collect();
                prop_assert!(heads.windows(2).all(|w| w[0] < w[1]));
            }

            #[test]
            fn closed_neighborhood_contains_seed_and_neighbors(
                g in arb_graph(11),
                mask in proptest::collection::vec(any::<bool>(), 11),
            ) {
                let mut s = VertexSet::empty(g.vertex_count());
                for (v, &keep) in mask.iter().enumerate().take(g.vertex_count()) {
                    if keep {
                        s.insert(v as u32);
                    }
                }
                let closed = closed_neighborhood(&g, &s);
                prop_assert!(s.is_subset_of(&closed));
                for v in s.iter() {
                    prop_assert!(g.neighbors(v).is_subset_of(&closed));
                }
                for v in closed.minus(&s).iter() {
                    prop_assert!(g.neighbors(v).intersects(&s));
                }
            }
        }
    }
}

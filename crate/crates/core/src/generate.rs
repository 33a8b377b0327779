//! Seeded generators for Pt-free test corpora.
//!
//! Family kinds (cograph, split, complete multipartite, cycle) are Pt-free
//! by construction; the random kinds either reject non-Pt-free samples or
//! repair them by adding chords. All randomness comes from ChaCha8 seeded
//! with the spec's 64-bit seed, so corpora reproduce bit-for-bit.

use std::fmt;
use std::str::FromStr;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::paths::pt_free_certificate;

const GNP_MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenKind {
    /// Binomial random graph, resampled until Pt-free.
    GnpRejection,
    /// Binomial random graph; every induced Pt found gets a chord between
    /// the witness endpoints until none remains. Biases the distribution
    /// toward denser graphs, but always succeeds.
    ChordRepair,
    /// Random cotree (union/join recursion); P4-free.
    Cograph,
    /// Clique plus independent set with random cross edges; P5-free.
    Split,
    /// Complete multipartite; P4-free.
    CompleteMultipartite,
    /// The cycle C_n; Pt-free for t >= n.
    Cycle,
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GenKind::GnpRejection => "gnp-rejection",
            GenKind::ChordRepair => "chord-repair",
            GenKind::Cograph => "cograph",
            GenKind::Split => "split",
            GenKind::CompleteMultipartite => "complete-multipartite",
            GenKind::Cycle => "cycle",
        };
        f.write_str(s)
    }
}

impl FromStr for GenKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenKind> {
        match s {
            "gnp-rejection" => Ok(GenKind::GnpRejection),
            "chord-repair" => Ok(GenKind::ChordRepair),
            "cograph" => Ok(GenKind::Cograph),
            "split" => Ok(GenKind::Split),
            "complete-multipartite" => Ok(GenKind::CompleteMultipartite),
            "cycle" => Ok(GenKind::Cycle),
            other => Err(Error::InvalidInput(format!(
                "unknown generator kind '{other}'"
            ))),
        }
    }
}

/// Parameters of one generated graph; equal specs produce equal graphs.
#[derive(Clone, Debug)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    /// Edge probability, used by the random kinds.
    pub p: f64,
    pub t: usize,
    /// Part sizes for complete-multipartite.
    pub parts: Vec<usize>,
    pub seed: u64,
}

/// Generates the graph described by `spec`.
pub fn gen(spec: &GenSpec) -> Result<Graph> {
    if spec.n == 0 {
        return Err(Error::InvalidInput("generator needs n >= 1".into()));
    }
    if spec.n > 10_000 {
        return Err(Error::InvalidInput(format!(
            "generator capped at 10^4 vertices like the instance format, got n = {}",
            spec.n
        )));
    }
    if spec.t < 2 {
        return Err(Error::InvalidInput(format!(
            "t must be at least 2, got {}",
            spec.t
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        GenKind::GnpRejection => {
            check_p(spec.p)?;
            for _ in 0..GNP_MAX_ATTEMPTS {
                let g = gnp(spec.n, spec.p, &mut rng)?;
                if pt_free_certificate(&g, &g.full_set(), spec.t)?.is_none() {
                    return Ok(g);
                }
            }
            Err(Error::GeneratorGaveUp {
                attempts: GNP_MAX_ATTEMPTS,
            })
        }
        GenKind::ChordRepair => {
            check_p(spec.p)?;
            if spec.t < 3 {
                return Err(Error::InvalidInput(
                    "chord-repair needs t >= 3: a 2-vertex witness has no chord to add".into(),
                ));
            }
            let mut edges: Vec<(u32, u32)> = gnp_edges(spec.n, spec.p, &mut rng);
            loop {
                let g = Graph::new(spec.n, &edges)?;
                match pt_free_certificate(&g, &g.full_set(), spec.t)? {
                    None => return Ok(g),
                    Some(path) => {
                        let (u, v) = path.endpoints();
                        edges.push((u, v));
                    }
                }
            }
        }
        GenKind::Cograph => {
            require_t(spec, 4, "cographs are P4-free")?;
            let mut edges = Vec::new();
            cotree(0, spec.n, &mut rng, &mut edges);
            Graph::new(spec.n, &edges)
        }
        GenKind::Split => {
            check_p(spec.p)?;
            require_t(spec, 5, "split graphs are P5-free")?;
            let clique = spec.n.div_ceil(2);
            let mut edges = Vec::new();
            for u in 0..clique as u32 {
                for v in (u + 1)..clique as u32 {
                    edges.push((u, v));
                }
            }
            for u in 0..clique as u32 {
                for v in clique as u32..spec.n as u32 {
                    if rng.random_bool(spec.p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(spec.n, &edges)
        }
        GenKind::CompleteMultipartite => {
            require_t(spec, 4, "complete multipartite graphs are P4-free")?;
            if spec.parts.is_empty() || spec.parts.contains(&0) {
                return Err(Error::InvalidInput(
                    "complete-multipartite needs nonempty part sizes".into(),
                ));
            }
            if spec.parts.iter().sum::<usize>() != spec.n {
                return Err(Error::InvalidInput(format!(
                    "part sizes sum to {}, but n = {}",
                    spec.parts.iter().sum::<usize>(),
                    spec.n
                )));
            }
            let mut block = vec![0usize; spec.n];
            let mut next = 0usize;
            for (b, &size) in spec.parts.iter().enumerate() {
                for _ in 0..size {
                    block[next] = b;
                    next += 1;
                }
            }
            let mut edges = Vec::new();
            for u in 0..spec.n as u32 {
                for v in (u + 1)..spec.n as u32 {
                    if block[u as usize] != block[v as usize] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(spec.n, &edges)
        }
        GenKind::Cycle => {
            if spec.n < 3 {
                return Err(Error::InvalidInput("cycle needs n >= 3".into()));
            }
            if spec.t < spec.n {
                return Err(Error::InvalidInput(format!(
                    "C_{} contains an induced path on {} vertices; it is Pt-free only for t >= {}",
                    spec.n,
                    spec.n - 1,
                    spec.n
                )));
            }
            let edges: Vec<(u32, u32)> = (0..spec.n as u32)
                .map(|i| (i, (i + 1) % spec.n as u32))
                .collect();
            Graph::new(spec.n, &edges)
        }
    }
}

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidInput(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}

fn require_t(spec: &GenSpec, min_t: usize, why: &str) -> Result<()> {
    if spec.t < min_t {
        return Err(Error::InvalidInput(format!(
            "{} kind guarantees Pt-freeness only for t >= {min_t} ({why}), got t = {}",
            spec.kind, spec.t
        )));
    }
    Ok(())
}

fn gnp_edges(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(u32, u32)> {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges
}

fn gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Result<Graph> {
    Graph::new(n, &gnp_edges(n, p, rng))
}

/// Random cotree over the vertex range `[lo, lo + size)`: split, recurse,
/// and either join (all cross edges) or union (none).
fn cotree(lo: usize, size: usize, rng: &mut ChaCha8Rng, edges: &mut Vec<(u32, u32)>) {
    if size <= 1 {
        return;
    }
    let left = rng.random_range(1..size);
    let join = rng.random_bool(0.5);
    cotree(lo, left, rng, edges);
    cotree(lo + left, size - left, rng, edges);
    if join {
        for u in lo..lo + left {
            for v in lo + left..lo + size {
                edges.push((u as u32, v as u32));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::is_pt_free;
    use crate::write_graph;

    fn spec(kind: GenKind, n: usize, p: f64, t: usize, seed: u64) -> GenSpec {
        GenSpec {
            kind,
            n,
            p,
            t,
            parts: Vec::new(),
            seed,
        }
    }

    #[test]
    fn cycle_is_c5() {
        let g = gen(&spec(GenKind::Cycle, 5, 0.0, 5, 0)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(is_pt_free(&g, &g.full_set(), 5).unwrap());
        assert!(gen(&spec(GenKind::Cycle, 6, 0.0, 5, 0)).is_err());
    }

    #[test]
    fn complete_multipartite_2_2_2() {
        let mut s = spec(GenKind::CompleteMultipartite, 6, 0.0, 5, 0);
        s.parts = vec![2, 2, 2];
        let g = gen(&s).unwrap();
        assert_eq!(g.edge_count(), 12);
        assert!(is_pt_free(&g, &g.full_set(), 4).unwrap());
    }

    #[test]
    fn chord_repair_output_is_certified() {
        let g = gen(&spec(GenKind::ChordRepair, 10, 0.3, 5, 1)).unwrap();
        assert!(is_pt_free(&g, &g.full_set(), 5).unwrap());
    }

    #[test]
    fn generators_are_deterministic() {
        for kind in [
            GenKind::GnpRejection,
            GenKind::ChordRepair,
            GenKind::Cograph,
            GenKind::Split,
        ] {
            let s = spec(kind, 9, 0.25, 5, 42);
            let a = gen(&s).unwrap();
            let b = gen(&s).unwrap();
            assert_eq!(write_graph(&a), write_graph(&b), "{kind}");
        }
    }

    #[test]
    fn every_kind_is_pt_free_at_its_t() {
        for seed in 0..5u64 {
            let g = gen(&spec(GenKind::Cograph, 8, 0.0, 4, seed)).unwrap();
            assert!(is_pt_free(&g, &g.full_set(), 4).unwrap());
            let g = gen(&spec(GenKind::Split, 9, 0.4, 5, seed)).unwrap();
            assert!(is_pt_free(&g, &g.full_set(), 5).unwrap());
            let g = gen(&spec(GenKind::GnpRejection, 8, 0.2, 5, seed)).unwrap();
            assert!(is_pt_free(&g, &g.full_set(), 5).unwrap());
            let g = gen(&spec(GenKind::ChordRepair, 12, 0.3, 5, seed)).unwrap();
            assert!(is_pt_free(&g, &g.full_set(), 5).unwrap());
        }
    }

    #[test]
    fn rejection_gives_up_when_the_class_is_unreachable() {
        // Dense 20-vertex samples essentially never avoid an induced P4.
        let err = gen(&spec(GenKind::GnpRejection, 20, 0.5, 4, 7)).unwrap_err();
        assert!(matches!(
            err,
            Error::GeneratorGaveUp {
                attempts: GNP_MAX_ATTEMPTS
            }
        ));
    }

    #[test]
    fn kind_round_trips_through_strings() {
        for kind in [
            GenKind::GnpRejection,
            GenKind::ChordRepair,
            GenKind::Cograph,
            GenKind::Split,
            GenKind::CompleteMultipartite,
            GenKind::Cycle,
        ] {
            assert_eq!(kind.to_string().parse::<GenKind>().unwrap(), kind);
        }
    }

    #[test]
    fn family_kinds_validate_t() {
        assert!(gen(&spec(GenKind::Split, 6, 0.5, 4, 0)).is_err());
        assert!(gen(&spec(GenKind::Cograph, 6, 0.0, 3, 0)).is_err());
        assert!(gen(&spec(GenKind::ChordRepair, 6, 0.5, 2, 0)).is_err());
    }
}

//! Machine-readable run reports and the benchmark harness.
//!
//! Every CLI command emits exactly one JSON document describing the command,
//! the instance fingerprint, the answer, and solver telemetry. The schema is
//! frozen by a golden-file test; `wall_ms` is the only field allowed to vary
//! between identical runs. Vertex ids in reports are 1-based, matching the
//! instance file format.

use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mwis::{find_mis, BranchStats, SolveOptions};

/// Instance fingerprint echoed in every report.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct InstanceInfo {
    pub n: usize,
    pub m: usize,
    pub t: usize,
}

/// The answer part of a report, tagged by kind.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Answer {
    PtFree {
        ptfree: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        certificate: Option<Vec<u32>>,
    },
    Paths {
        total: u64,
        buckets: usize,
        max_bucket: usize,
        /// `(u, v, size)` per bucket.
        per_bucket: Vec<(u32, u32, usize)>,
    },
    Separator {
        x: Vec<u32>,
        halo: Vec<u32>,
        component_sizes: Vec<usize>,
    },
    HeavyVertex {
        w: u32,
        hit_buckets: u64,
        total_buckets: u64,
        /// `(u, v, hits)` per bucket.
        per_bucket_hits: Vec<(u32, u32, u64)>,
    },
    Weight {
        weight: i64,
        vertices: Vec<u32>,
    },
    Matching {
        weight: i64,
        edges: Vec<(u32, u32)>,
    },
    Coloring {
        feasible: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        assignment: Option<Vec<(u32, u8)>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        cost: Option<i64>,
    },
    Oct {
        feasible: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        vertices: Option<Vec<u32>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        weight: Option<i64>,
    },
    Generated {
        out: String,
        n: usize,
        m: usize,
    },
    Bench {
        rows: Vec<BenchRow>,
        instances: usize,
        solved: usize,
        failed: usize,
        total_calls: u64,
    },
    Failure {
        error: String,
        exit: i32,
        #[serde(skip_serializing_if = "Option::is_none")]
        certificate: Option<Vec<u32>>,
    },
}

/// One self-describing report per command invocation.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceInfo>,
    pub answer: Answer,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<BranchStats>,
    pub wall_ms: u128,
}

impl RunReport {
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

/// Converts 0-based ids to the 1-based ids used in files and reports.
pub fn external_ids(verts: impl IntoIterator<Item = u32>) -> Vec<u32> {
    verts.into_iter().map(|v| v + 1).collect()
}

pub fn external_edges(edges: impl IntoIterator<Item = (u32, u32)>) -> Vec<(u32, u32)> {
    edges.into_iter().map(|(u, v)| (u + 1, v + 1)).collect()
}

/// One bench row per corpus instance.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    /// "ok", or the failure class ("parse-error", "not-ptfree", "error").
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<i64>,
    pub calls: u64,
    pub leaves: u64,
    pub max_depth: u64,
    pub wall_ms: u128,
}

/// Solves MWIS on every `.col` file in a corpus directory, `reps` times
/// each, and reports per-instance rows sorted by file name. Failures are
/// recorded in their row; the harness keeps going. Instances run on up to
/// `threads` workers; the output does not depend on the schedule.
pub fn bench_dir(dir: &Path, t: usize, reps: usize, threads: usize) -> Result<Vec<BenchRow>> {
    if reps == 0 {
        return Err(Error::InvalidInput(
            "bench needs at least one repetition".into(),
        ));
    }
    let mut files: Vec<std::path::PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::InvalidInput(format!("cannot read corpus dir {}: {e}", dir.display())))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();

    let rows: Mutex<Vec<Option<BenchRow>>> = Mutex::new(vec![None; files.len()]);
    let next = AtomicUsize::new(0);
    let workers = threads.max(1).min(files.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= files.len() {
                    break;
                }
                let row = bench_one(&files[i], t, reps);
                rows.lock().unwrap()[i] = Some(row);
            });
        }
    });
    Ok(rows
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.unwrap())
        .collect())
}

fn bench_one(path: &Path, t: usize, reps: usize) -> BenchRow {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => return failed_row(name, 0, 0, format!("io-error: {e}")),
    };
    let inst = match crate::io::parse_instance(&text) {
        Ok(inst) => inst,
        Err(_) => return failed_row(name, 0, 0, "parse-error".into()),
    };
    let g = &inst.graph;
    let (n, m) = (g.vertex_count(), g.edge_count());
    let mut best: Option<(i64, BranchStats, u128)> = None;
    for _ in 0..reps {
        let start = Instant::now();
        match find_mis(g, &g.full_set(), &inst.weights, t, SolveOptions::default()) {
            Ok((sol, stats)) => {
                let ms = start.elapsed().as_millis();
                match &best {
                    None => best = Some((sol.weight, stats, ms)),
                    Some((w, s, best_ms)) => {
                        if *w != sol.weight || s.calls != stats.calls {
                            return failed_row(name, n, m, "nondeterministic".into());
                        }
                        if ms < *best_ms {
                            best = Some((sol.weight, stats, ms));
                        }
                    }
                }
            }
            Err(Error::NotPtFree { .. }) => return failed_row(name, n, m, "not-ptfree".into()),
            Err(e) => return failed_row(name, n, m, format!("error: {e}")),
        }
    }
    let (weight, stats, wall_ms) = best.unwrap();
    BenchRow {
        name,
        n,
        m,
        status: "ok".into(),
        weight: Some(weight),
        calls: stats.calls,
        leaves: stats.leaves,
        max_depth: stats.max_depth,
        wall_ms,
    }
}

fn failed_row(name: String, n: usize, m: usize, status: String) -> BenchRow {
    BenchRow {
        name,
        n,
        m,
        status,
        weight: None,
        calls: 0,
        leaves: 0,
        max_depth: 0,
        wall_ms: 0,
    }
}

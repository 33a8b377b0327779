//! Command-line entry point.
//!
//! Exit statuses: 0 success (an INFEASIBLE answer is a valid result),
//! 1 usage or parse error, 2 not-Pt-free input, 3 invariant violation.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ptfree::coloring::{
    brute_force_independent_oct, brute_force_list3col, brute_force_min_cost_3col,
    solve_independent_oct, solve_list3col, solve_min_cost_3col,
};
use ptfree::decompose::{find_heavy_vertex, gyarfas_separator};
use ptfree::error::Error;
use ptfree::generate::{gen, GenKind, GenSpec};
use ptfree::matching::{brute_force_induced_matching, solve_induced_matching};
use ptfree::mwis::{brute_force_mis, find_mis, SolveOptions};
use ptfree::paths::bucket_report;
use ptfree::report::{external_edges, external_ids, Answer, BenchRow, InstanceInfo, RunReport};
use ptfree::{enumerate_induced_paths, parse_instance, pt_free_certificate, write_graph, Instance};

#[derive(Parser)]
#[command(name = "ptfree", version, about = "Exact solvers for Pt-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide Pt-freeness; prints a witness path when the answer is no.
    CheckPtfree(InstanceArgs),
    /// Enumerate induced-path buckets and print per-bucket counts.
    EnumPaths(InstanceArgs),
    /// Compute the balanced separator X and its halo.
    Separator(InstanceArgs),
    /// Pick the heavy vertex and print its hit report.
    HeavyVertex(InstanceArgs),
    /// Run an exact solver.
    Solve(SolveArgs),
    /// Run the brute-force oracle twin of a solver.
    Oracle(OracleArgs),
    /// Generate a seeded Pt-free instance file.
    Gen(GenArgs),
    /// Solve MWIS over a corpus directory and print per-instance rows.
    Bench(BenchArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Forbidden induced path order t.
    #[arg(long, default_value_t = 5)]
    t: usize,
    /// Instance file.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveTarget {
    Mwis,
    List3col,
    Cost3col,
    Oct,
    InducedMatching,
}

impl SolveTarget {
    fn name(self) -> &'static str {
        match self {
            SolveTarget::Mwis => "mwis",
            SolveTarget::List3col => "list3col",
            SolveTarget::Cost3col => "cost3col",
            SolveTarget::Oct => "oct",
            SolveTarget::InducedMatching => "induced-matching",
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(value_enum)]
    target: SolveTarget,
    #[arg(long, default_value_t = 5)]
    t: usize,
    #[arg(long)]
    input: PathBuf,
    /// Write the report here instead of standard output.
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Memoize MWIS subproblems by active set.
    #[arg(long)]
    cache: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(value_enum)]
    target: SolveTarget,
    /// Echoed in the report; oracles do not depend on t.
    #[arg(long, default_value_t = 5)]
    t: usize,
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct GenArgs {
    /// gnp-rejection | chord-repair | cograph | split | complete-multipartite | cycle
    #[arg(long)]
    kind: String,
    /// Vertex count; defaults to the part-size sum for complete-multipartite.
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability for the random kinds.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 5)]
    t: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated part sizes for complete-multipartite.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    /// Output file.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 5)]
    t: usize,
    /// Directory of instance files.
    #[arg(long)]
    corpus: PathBuf,
    /// Repetitions per instance; answers must agree across runs.
    #[arg(long, default_value_t = 1)]
    reps: usize,
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli.command, start) {
        Ok((report, extra_lines)) => {
            for line in extra_lines {
                println!("{line}");
            }
            if let Some(report) = report {
                print!("{}", report.render());
            }
        }
        Err(failure) => {
            let (error, certificate) = match &failure.error {
                Error::NotPtFree { t, path } => (
                    format!("graph is not P{t}-free"),
                    Some(external_ids(path.iter().copied())),
                ),
                other => (other.to_string(), None),
            };
            let report = RunReport {
                command: failure.command,
                instance: failure.instance,
                answer: Answer::Failure {
                    error,
                    exit: failure.error.exit_code(),
                    certificate,
                },
                stats: None,
                wall_ms: start.elapsed().as_millis(),
            };
            print!("{}", report.render());
            std::process::exit(failure.error.exit_code());
        }
    }
}

struct Failure {
    command: String,
    instance: Option<InstanceInfo>,
    error: Error,
}

type RunOutcome = Result<(Option<RunReport>, Vec<String>), Failure>;

fn fail(command: &str, instance: Option<InstanceInfo>, error: Error) -> Failure {
    Failure {
        command: command.into(),
        instance,
        error,
    }
}

fn load(command: &str, path: &PathBuf, t: usize) -> Result<(Instance, InstanceInfo), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        fail(
            command,
            None,
            Error::InvalidInput(format!("cannot read {}: {e}", path.display())),
        )
    })?;
    let inst = parse_instance(&text).map_err(|e| fail(command, None, e))?;
    let info = InstanceInfo {
        n: inst.graph.vertex_count(),
        m: inst.graph.edge_count(),
        t,
    };
    Ok((inst, info))
}

fn run(command: Command, start: Instant) -> RunOutcome {
    match command {
        Command::CheckPtfree(args) => {
            let name = "check-ptfree";
            let (inst, info) = load(name, &args.input, args.t)?;
            let g = &inst.graph;
            let cert = pt_free_certificate(g, &g.full_set(), args.t)
                .map_err(|e| fail(name, Some(info), e))?;
            let answer = Answer::PtFree {
                ptfree: cert.is_none(),
                certificate: cert.map(|p| external_ids(p.vertices().iter().copied())),
            };
            done(name, info, answer, None, start)
        }
        Command::EnumPaths(args) => {
            let name = "enum-paths";
            let (inst, info) = load(name, &args.input, args.t)?;
            let g = &inst.graph;
            let idx = enumerate_induced_paths(g, &g.full_set(), args.t)
                .map_err(|e| fail(name, Some(info), e))?;
            let rep = bucket_report(&idx);
            let answer = Answer::Paths {
                total: rep.total,
                buckets: rep.buckets.len(),
                max_bucket: rep.max,
                per_bucket: rep
                    .buckets
                    .into_iter()
                    .map(|(u, v, s)| (u + 1, v + 1, s))
                    .collect(),
            };
            done(name, info, answer, None, start)
        }
        Command::Separator(args) => {
            let name = "separator";
            let (inst, info) = load(name, &args.input, args.t)?;
            let g = &inst.graph;
            let sep = gyarfas_separator(g, &g.full_set(), args.t)
                .map_err(|e| fail(name, Some(info), e))?;
            let answer = Answer::Separator {
                x: external_ids(sep.x.iter()),
                halo: external_ids(sep.halo.iter()),
                component_sizes: sep.component_sizes,
            };
            done(name, info, answer, None, start)
        }
        Command::HeavyVertex(args) => {
            let name = "heavy-vertex";
            let (inst, info) = load(name, &args.input, args.t)?;
            let g = &inst.graph;
            let idx = enumerate_induced_paths(g, &g.full_set(), args.t)
                .map_err(|e| fail(name, Some(info), e))?;
            let rep = find_heavy_vertex(g, &g.full_set(), &idx, args.t)
                .map_err(|e| fail(name, Some(info), e))?;
            let answer = Answer::HeavyVertex {
                w: rep.w + 1,
                hit_buckets: rep.hit_buckets,
                total_buckets: rep.total_buckets,
                per_bucket_hits: rep
                    .per_bucket_hits
                    .into_iter()
                    .map(|((u, v), h)| (u + 1, v + 1, h))
                    .collect(),
            };
            done(name, info, answer, None, start)
        }
        Command::Solve(args) => solve(args, start),
        Command::Oracle(args) => oracle(args, start),
        Command::Gen(args) => {
            let name = "gen";
            let kind: GenKind = args.kind.parse().map_err(|e| fail(name, None, e))?;
            let n = match (args.n, kind) {
                (Some(n), _) => n,
                (None, GenKind::CompleteMultipartite) => args.parts.iter().sum(),
                (None, _) => {
                    return Err(fail(
                        name,
                        None,
                        Error::InvalidInput("--n is required".into()),
                    ))
                }
            };
            let spec = GenSpec {
                kind,
                n,
                p: args.p,
                t: args.t,
                parts: args.parts.clone(),
                seed: args.seed,
            };
            let g = gen(&spec).map_err(|e| fail(name, None, e))?;
            std::fs::write(&args.out, write_graph(&g)).map_err(|e| {
                fail(
                    name,
                    None,
                    Error::InvalidInput(format!("cannot write {}: {e}", args.out.display())),
                )
            })?;
            let info = InstanceInfo {
                n: g.vertex_count(),
                m: g.edge_count(),
                t: args.t,
            };
            let answer = Answer::Generated {
                out: args.out.display().to_string(),
                n: g.vertex_count(),
                m: g.edge_count(),
            };
            done(name, info, answer, None, start)
        }
        Command::Bench(args) => {
            let name = "bench";
            let threads = bench_threads();
            let rows: Vec<BenchRow> =
                ptfree::report::bench_dir(&args.corpus, args.t, args.reps, threads)
                    .map_err(|e| fail(name, None, e))?;
            let solved = rows.iter().filter(|r| r.status == "ok").count();
            let answer = Answer::Bench {
                instances: rows.len(),
                solved,
                failed: rows.len() - solved,
                total_calls: rows.iter().map(|r| r.calls).sum(),
                rows,
            };
            let info = InstanceInfo {
                n: 0,
                m: 0,
                t: args.t,
            };
            done(name, info, answer, None, start)
        }
    }
}

fn bench_threads() -> usize {
    match std::env::var("PTFREE_THREADS") {
        Ok(v) => v.parse().unwrap_or(1).max(1),
        Err(_) => std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1),
    }
}

fn done(
    command: &str,
    info: InstanceInfo,
    answer: Answer,
    stats: Option<ptfree::mwis::BranchStats>,
    start: Instant,
) -> RunOutcome {
    Ok((
        Some(RunReport {
            command: command.into(),
            instance: Some(info),
            answer,
            stats,
            wall_ms: start.elapsed().as_millis(),
        }),
        Vec::new(),
    ))
}

fn solve(args: SolveArgs, start: Instant) -> RunOutcome {
    let command = format!("solve {}", args.target.name());
    let (inst, info) = load(&command, &args.input, args.t)?;
    let g = &inst.graph;
    let active = g.full_set();
    let opts = SolveOptions {
        use_cache: args.cache,
        ..Default::default()
    };
    let mut extra = Vec::new();

    let (answer, stats) = match args.target {
        SolveTarget::Mwis => {
            let (sol, stats) = find_mis(g, &active, &inst.weights, args.t, opts)
                .map_err(|e| fail(&command, Some(info), e))?;
            (
                Answer::Weight {
                    weight: sol.weight,
                    vertices: external_ids(sol.chosen.iter()),
                },
                Some(stats),
            )
        }
        SolveTarget::List3col => {
            let (sol, stats) = solve_list3col(g, &active, &inst.lists, args.t)
                .map_err(|e| fail(&command, Some(info), e))?;
            (coloring_answer(sol, &mut extra), Some(stats))
        }
        SolveTarget::Cost3col => {
            let (sol, stats) = solve_min_cost_3col(g, &active, &inst.lists, &inst.costs, args.t)
                .map_err(|e| fail(&command, Some(info), e))?;
            (coloring_answer(sol, &mut extra), Some(stats))
        }
        SolveTarget::Oct => {
            let (sol, stats) = solve_independent_oct(g, &active, &inst.weights, args.t)
                .map_err(|e| fail(&command, Some(info), e))?;
            (oct_answer(sol, &mut extra), Some(stats))
        }
        SolveTarget::InducedMatching => {
            let (sol, stats) = solve_induced_matching(g, &active, &inst.edge_weights, args.t)
                .map_err(|e| fail(&command, Some(info), e))?;
            (
                Answer::Matching {
                    weight: sol.weight,
                    edges: external_edges(sol.edges),
                },
                Some(stats),
            )
        }
    };

    let report = RunReport {
        command: command.clone(),
        instance: Some(info),
        answer,
        stats,
        wall_ms: start.elapsed().as_millis(),
    };
    if let Some(path) = &args.stats {
        // Answer lines stay on standard output; the report goes to the file.
        std::fs::write(path, report.render()).map_err(|e| {
            fail(
                &command,
                Some(info),
                Error::InvalidInput(format!("cannot write {}: {e}", path.display())),
            )
        })?;
        return Ok((None, extra));
    }
    Ok((Some(report), extra))
}

fn coloring_answer(
    sol: Option<ptfree::coloring::ColoringSolution>,
    extra: &mut Vec<String>,
) -> Answer {
    match sol {
        None => {
            extra.push("INFEASIBLE".to_string());
            Answer::Coloring {
                feasible: false,
                assignment: None,
                cost: None,
            }
        }
        Some(sol) => {
            let assignment: Vec<(u32, u8)> =
                sol.assignment.iter().map(|(&v, &c)| (v + 1, c)).collect();
            for &(v, c) in &assignment {
                extra.push(format!("v {v} {c}"));
            }
            Answer::Coloring {
                feasible: true,
                assignment: Some(assignment),
                cost: sol.cost,
            }
        }
    }
}

fn oct_answer(sol: Option<ptfree::coloring::OctSolution>, extra: &mut Vec<String>) -> Answer {
    match sol {
        None => {
            extra.push("INFEASIBLE".to_string());
            Answer::Oct {
                feasible: false,
                vertices: None,
                weight: None,
            }
        }
        Some(oct) => Answer::Oct {
            feasible: true,
            vertices: Some(external_ids(oct.vertices.iter())),
            weight: Some(oct.weight),
        },
    }
}

fn oracle(args: OracleArgs, start: Instant) -> RunOutcome {
    let command = format!("oracle {}", args.target.name());
    let (inst, info) = load(&command, &args.input, args.t)?;
    let g = &inst.graph;
    let active = g.full_set();
    let mut extra = Vec::new();

    let answer = match args.target {
        SolveTarget::Mwis => {
            let sol = brute_force_mis(g, &active, &inst.weights)
                .map_err(|e| fail(&command, Some(info), e))?;
            Answer::Weight {
                weight: sol.weight,
                vertices: external_ids(sol.chosen.iter()),
            }
        }
        SolveTarget::List3col => {
            let sol = brute_force_list3col(g, &active, &inst.lists)
                .map_err(|e| fail(&command, Some(info), e))?;
            coloring_answer(sol, &mut extra)
        }
        SolveTarget::Cost3col => {
            let sol = brute_force_min_cost_3col(g, &active, &inst.lists, &inst.costs)
                .map_err(|e| fail(&command, Some(info), e))?;
            coloring_answer(sol, &mut extra)
        }
        SolveTarget::Oct => {
            let sol = brute_force_independent_oct(g, &active, &inst.weights)
                .map_err(|e| fail(&command, Some(info), e))?;
            oct_answer(sol, &mut extra)
        }
        SolveTarget::InducedMatching => {
            let sol = brute_force_induced_matching(g, &active, &inst.edge_weights)
                .map_err(|e| fail(&command, Some(info), e))?;
            Answer::Matching {
                weight: sol.weight,
                edges: external_edges(sol.edges),
            }
        }
    };
    Ok((
        Some(RunReport {
            command,
            instance: Some(info),
            answer,
            stats: None,
            wall_ms: start.elapsed().as_millis(),
        }),
        extra,
    ))
}

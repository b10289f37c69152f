use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use ubrp::bench::{parse_class, run_bench, BenchConfig, Heuristic};
use ubrp::instances::{generate, parse_instance, write_instance, GeneratorParams, HeightPolicy};
use ubrp::localsearch::{build_reduced, ls, optimize, LsOptions, Speedups};
use ubrp::model::{global_lower_bound, validate, Container, Instance};
use ubrp::oracle::{exact_solve, explicit_graph_opt, ExactOutcome};
use ubrp::solution_file::{parse_solution, write_solution};

#[derive(Parser)]
#[command(name = "brp", version, about = "Block relocation toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Toggles {
    #[arg(long)]
    no_upper_bound: bool,
    #[arg(long)]
    no_useless_eval: bool,
    #[arg(long)]
    no_aspiration: bool,
    /// Wall-clock limit in seconds per local-search run.
    #[arg(long)]
    timeout: Option<f64>,
}

impl Toggles {
    fn speedups(self) -> Speedups {
        Speedups {
            upper_bound: !self.no_upper_bound,
            useless_evaluations: !self.no_useless_eval,
            aspiration: !self.no_aspiration,
        }
    }

    fn timeout(self) -> Option<Duration> {
        self.timeout.map(Duration::from_secs_f64)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a class of random instances to a directory.
    Generate {
        #[arg(long)]
        height: usize,
        #[arg(long)]
        width: usize,
        #[arg(long, default_value = "unlimited")]
        policy: HeightPolicy,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Build a starting solution.
    Solve {
        instance: PathBuf,
        #[arg(long, default_value = "greedy")]
        heuristic: Heuristic,
        /// Seed of the random walk.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run the local search on a solution.
    Improve {
        instance: PathBuf,
        solution: PathBuf,
        #[command(flatten)]
        toggles: Toggles,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Replay a solution and report the first violation.
    Validate { instance: PathBuf, solution: PathBuf },
    /// Benchmark campaign over generated classes.
    Bench {
        /// Class as HxW; repeatable.
        #[arg(long = "class", required = true)]
        classes: Vec<String>,
        #[arg(long, default_value = "unlimited")]
        policy: HeightPolicy,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Comma separated: greedy, random1, random2, ...
        #[arg(long, value_delimiter = ',', default_value = "greedy")]
        heuristics: Vec<Heuristic>,
        #[command(flatten)]
        toggles: Toggles,
        #[arg(long, env = "UBRP_JOBS", default_value_t = 1)]
        jobs: usize,
        /// Write cpu_s as 0.00 for byte-stable output.
        #[arg(long)]
        no_timing: bool,
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Per-instance BB/WA table.
        #[arg(long)]
        extremes: Option<PathBuf>,
    },
    /// Exact optimum of a small instance, or the explicit-graph and DP
    /// optimum for one container of a solution.
    Oracle {
        instance: PathBuf,
        solution: Option<PathBuf>,
        #[arg(long, requires = "solution")]
        container: Option<Container>,
        /// Give up above this many relocations.
        #[arg(long, default_value_t = 30)]
        limit: u32,
    },
}

type AnyResult<T> = Result<T, Box<dyn std::error::Error>>;

fn read(path: &Path) -> AnyResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn load_instance(path: &Path) -> AnyResult<Arc<Instance>> {
    let text = read(path)?;
    Ok(Arc::new(parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))?))
}

fn load_solution(inst: &Arc<Instance>, path: &Path) -> AnyResult<ubrp::model::Solution> {
    let text = read(path)?;
    Ok(parse_solution(inst.clone(), &text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn emit(out: Option<&Path>, text: &str) -> AnyResult<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()).into()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> AnyResult<ExitCode> {
    match cli.command {
        Command::Generate {
            height,
            width,
            policy,
            seed,
            count,
            out,
        } => {
            fs::create_dir_all(&out)?;
            let params = GeneratorParams::new(height, width, policy, seed, count);
            let tag = match policy {
                HeightPolicy::Unlimited => "unl",
                HeightPolicy::PlusTwo => "hp2",
            };
            for i in 1..=count {
                let path = out.join(format!("h{height}_w{width}_{tag}_s{seed}_{i:03}.txt"));
                fs::write(&path, write_instance(&generate(&params, i)))?;
            }
            eprintln!("wrote {count} instances to {}", out.display());
        }
        Command::Solve {
            instance,
            heuristic,
            seed,
            out,
        } => {
            let inst = load_instance(&instance)?;
            let sol = match heuristic {
                Heuristic::Greedy => {
                    ubrp::construct::greedy_solve(&inst, ubrp::construct::GreedyPolicy::default())?
                }
                Heuristic::Random(k) => ubrp::construct::random_solve(
                    &inst,
                    ubrp::construct::RandomWalk::new(seed.wrapping_add(k as u64 - 1)),
                )?,
            };
            eprintln!("R = {} (lower bound {})", sol.relocations(), global_lower_bound(&inst));
            emit(out.as_deref(), &write_solution(&sol))?;
        }
        Command::Improve {
            instance,
            solution,
            toggles,
            out,
        } => {
            let inst = load_instance(&instance)?;
            let sol = load_solution(&inst, &solution)?;
            let report = validate(&sol);
            if !report.is_ok() {
                return Err(format!("input solution is invalid: {}", report.description()).into());
            }
            let started = Instant::now();
            let outcome = ls(
                &sol,
                LsOptions {
                    speedups: toggles.speedups(),
                    deadline: toggles.timeout().map(|d| started + d),
                },
            )?;
            for imp in &outcome.log {
                eprintln!(
                    "sweep {} container {}: {} -> {}{}",
                    imp.sweep,
                    imp.container,
                    imp.before,
                    imp.after,
                    if imp.aspirated { " (aspiration)" } else { "" }
                );
            }
            eprintln!(
                "R {} -> {} in {} sweeps, {} calls, {:.3}s{}",
                sol.relocations(),
                outcome.solution.relocations(),
                outcome.sweeps,
                outcome.opt_calls,
                started.elapsed().as_secs_f64(),
                if outcome.timed_out { ", timed out" } else { "" }
            );
            emit(out.as_deref(), &write_solution(&outcome.solution))?;
        }
        Command::Validate { instance, solution } => {
            let inst = load_instance(&instance)?;
            let sol = load_solution(&inst, &solution)?;
            let report = validate(&sol);
            if !report.is_ok() {
                println!("invalid: {}", report.description());
                return Ok(ExitCode::from(1));
            }
            println!(
                "valid: {} moves, R = {}, lower bound {}",
                sol.moves().len(),
                sol.relocations(),
                global_lower_bound(&inst)
            );
        }
        Command::Bench {
            classes,
            policy,
            seed,
            count,
            heuristics,
            toggles,
            jobs,
            no_timing,
            out,
            extremes,
        } => {
            let mut params = Vec::new();
            for c in &classes {
                let (h, w) = parse_class(c)?;
                params.push(GeneratorParams::new(h, w, policy, seed, count));
            }
            let config = BenchConfig {
                classes: params,
                heuristics,
                speedups: toggles.speedups(),
                timeout: toggles.timeout(),
                jobs,
                record_time: !no_timing,
            };
            let report = run_bench(&config)?;
            emit(out.as_deref(), &report.to_csv())?;
            if let Some(p) = extremes {
                emit(Some(&p), &report.extremes_csv())?;
            }
        }
        Command::Oracle {
            instance,
            solution,
            container,
            limit,
        } => {
            let inst = load_instance(&instance)?;
            match (solution, container) {
                (Some(path), Some(n)) => {
                    let sol = load_solution(&inst, &path)?;
                    let graph = explicit_graph_opt(&sol, n)?;
                    let red = build_reduced(&sol, n)?;
                    let dp = optimize(&red, Speedups::NONE);
                    println!(
                        "container {n}: f_n = {}, explicit graph = {}, dp = {}",
                        red.relocations(),
                        graph.map_or("none".into(), |c| c.to_string()),
                        dp.best_cost.map_or("none".into(), |c| c.to_string()),
                    );
                    if graph != dp.best_cost {
                        return Ok(ExitCode::from(2));
                    }
                }
                (Some(path), None) => {
                    let sol = load_solution(&inst, &path)?;
                    let report = validate(&sol);
                    if !report.is_ok() {
                        return Err(report.description().into());
                    }
                    let mut mismatches = 0;
                    for n in 1..=inst.n_containers() as Container {
                        let graph = explicit_graph_opt(&sol, n)?;
                        let dp = optimize(&build_reduced(&sol, n)?, Speedups::NONE).best_cost;
                        let mark = if graph == dp { "" } else { "  MISMATCH" };
                        mismatches += usize::from(graph != dp);
                        println!("container {n}: explicit graph = {graph:?}, dp = {dp:?}{mark}");
                    }
                    if mismatches > 0 {
                        return Ok(ExitCode::from(2));
                    }
                }
                _ => match exact_solve(&inst, limit)? {
                    ExactOutcome::Optimal(r) => println!("optimum R = {r}"),
                    ExactOutcome::ExceedsLimit => println!("optimum R > {limit}"),
                },
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! Benchmark campaigns: generate classes, build starting solutions, run the
//! local search and report per-run rows, per-class averages and per-instance
//! extremes as CSV.
//!
//! Main CSV header:
//!
//! ```text
//! H,W,policy,seed,instance,heuristic,R_before,R_after,gap_pct,improved,cpu_s,timeout
//! ```
//!
//! One row per (instance, start), then one `instance=AVG` row per class and
//! heuristic. Runs whose constructor hit a dead end keep their row with empty
//! numeric fields and are left out of the averages. The extremes CSV holds
//! `BB` (best relocation count before the search over all starts) and `WA`
//! (worst count after the search) per instance.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::construct::{greedy_solve, random_solve, GreedyPolicy, RandomWalk};
use crate::error::{Error, Result};
use crate::instances::{generate, GeneratorParams, HeightPolicy};
use crate::localsearch::{ls, LsOptions, Speedups};
use crate::model::Instance;
use crate::rng::SplitMix64;

pub const CSV_HEADER: &str = "H,W,policy,seed,instance,heuristic,R_before,R_after,gap_pct,improved,cpu_s,timeout";
pub const EXTREMES_HEADER: &str = "H,W,policy,seed,instance,BB,WA";

/// A starting-solution constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Heuristic {
    Greedy,
    /// The `k`-th random walk (1-based), seeded from the class seed.
    Random(u32),
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Heuristic::Greedy => f.write_str("greedy"),
            Heuristic::Random(k) => write!(f, "random{k}"),
        }
    }
}

impl FromStr for Heuristic {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().to_ascii_lowercase();
        if s == "greedy" {
            return Ok(Heuristic::Greedy);
        }
        if s == "random" {
            return Ok(Heuristic::Random(1));
        }
        match s.strip_prefix("random").map(str::parse::<u32>) {
            Some(Ok(k)) if k >= 1 => Ok(Heuristic::Random(k)),
            _ => Err(format!("unknown heuristic `{s}` (use `greedy`, `random` or `randomK`)")),
        }
    }
}

impl Heuristic {
    /// Builds the starting solution for instance `index` of `params`.
    pub fn start(self, inst: &Arc<Instance>, params: &GeneratorParams, index: usize) -> Result<crate::model::Solution> {
        match self {
            Heuristic::Greedy => greedy_solve(inst, GreedyPolicy::default()),
            Heuristic::Random(k) => {
                let seed = SplitMix64::derive(
                    params.seed,
                    &[params.height as u64, params.width as u64, index as u64, 0x5eed_0000 + k as u64],
                )
                .next_u64();
                random_solve(inst, RandomWalk::new(seed))
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub classes: Vec<GeneratorParams>,
    pub heuristics: Vec<Heuristic>,
    pub speedups: Speedups,
    /// Wall-clock limit per (instance, start).
    pub timeout: Option<Duration>,
    pub jobs: usize,
    /// When false, `cpu_s` is written as zero so output is byte-stable.
    pub record_time: bool,
}

impl BenchConfig {
    pub fn new(classes: Vec<GeneratorParams>) -> Self {
        Self {
            classes,
            heuristics: vec![Heuristic::Greedy],
            speedups: Speedups::ALL,
            timeout: None,
            jobs: 1,
            record_time: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub class: GeneratorParams,
    pub instance: usize,
    pub heuristic: Heuristic,
    /// `None` when the constructor hit a dead end.
    pub r_before: Option<u32>,
    pub r_after: Option<u32>,
    pub cpu_s: f64,
    pub timeout: bool,
}

impl BenchRow {
    pub fn solved(&self) -> bool {
        self.r_before.is_some()
    }

    pub fn improved(&self) -> bool {
        matches!((self.r_before, self.r_after), (Some(b), Some(a)) if a < b)
    }

    pub fn gap_pct(&self) -> Option<f64> {
        Some(gap_pct(self.r_before?, self.r_after?))
    }
}

/// `100 (b - a) / b`, and 0 when `b = 0`.
pub fn gap_pct(before: u32, after: u32) -> f64 {
    if before == 0 {
        0.0
    } else {
        100.0 * (before as f64 - after as f64) / before as f64
    }
}

/// Averages over the solved runs of one class and heuristic.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassSummary {
    pub class: GeneratorParams,
    pub heuristic: Heuristic,
    pub count: usize,
    pub avg_before: f64,
    pub avg_after: f64,
    pub avg_gap: f64,
    pub improved: usize,
    pub avg_cpu_s: f64,
    pub timeouts: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InstanceExtremes {
    pub class: GeneratorParams,
    pub instance: usize,
    pub best_before: Option<u32>,
    pub worst_after: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub summaries: Vec<ClassSummary>,
    pub extremes: Vec<InstanceExtremes>,
}

fn run_one(
    config: &BenchConfig,
    class: &GeneratorParams,
    inst: &Arc<Instance>,
    index: usize,
    heuristic: Heuristic,
) -> Result<BenchRow> {
    let mut row = BenchRow {
        class: *class,
        instance: index,
        heuristic,
        r_before: None,
        r_after: None,
        cpu_s: 0.0,
        timeout: false,
    };
    let start = match heuristic.start(inst, class, index) {
        Ok(sol) => sol,
        Err(Error::DeadEnd { .. }) => return Ok(row),
        Err(e) => return Err(e),
    };
    let clock = Instant::now();
    let out = ls(
        &start,
        LsOptions {
            speedups: config.speedups,
            deadline: config.timeout.map(|d| clock + d),
        },
    )?;
    if config.record_time {
        row.cpu_s = clock.elapsed().as_secs_f64();
    }
    row.r_before = Some(start.relocations() as u32);
    row.r_after = Some(out.solution.relocations() as u32);
    row.timeout = out.timed_out;
    Ok(row)
}

/// Runs every (instance, start) pair on a pool of `config.jobs` threads.
/// Rows come back in class, instance, heuristic order whatever the schedule.
pub fn run_bench(config: &BenchConfig) -> Result<BenchReport> {
    let mut jobs = Vec::new();
    for class in &config.classes {
        for index in 1..=class.count {
            let inst = Arc::new(generate(class, index));
            for &h in &config.heuristics {
                jobs.push((class, inst.clone(), index, h));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    let rows = pool.install(|| {
        jobs.par_iter()
            .map(|(class, inst, index, h)| run_one(config, class, inst, *index, *h))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(BenchReport {
        summaries: summarize(config, &rows),
        extremes: extremes(config, &rows),
        rows,
    })
}

fn mean(xs: impl Iterator<Item = f64>) -> f64 {
    let (sum, n) = xs.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    if n == 0 {
        0.0
    } else {
        sum / n as f64
    }
}

fn summarize(config: &BenchConfig, rows: &[BenchRow]) -> Vec<ClassSummary> {
    let mut out = Vec::new();
    for class in &config.classes {
        for &h in &config.heuristics {
            let runs: Vec<&BenchRow> = rows
                .iter()
                .filter(|r| r.class == *class && r.heuristic == h && r.solved())
                .collect();
            out.push(ClassSummary {
                class: *class,
                heuristic: h,
                count: runs.len(),
                avg_before: mean(runs.iter().map(|r| r.r_before.unwrap() as f64)),
                avg_after: mean(runs.iter().map(|r| r.r_after.unwrap() as f64)),
                avg_gap: mean(runs.iter().map(|r| r.gap_pct().unwrap())),
                improved: runs.iter().filter(|r| r.improved()).count(),
                avg_cpu_s: mean(runs.iter().map(|r| r.cpu_s)),
                timeouts: runs.iter().filter(|r| r.timeout).count(),
            });
        }
    }
    out
}

fn extremes(config: &BenchConfig, rows: &[BenchRow]) -> Vec<InstanceExtremes> {
    let mut out = Vec::new();
    for class in &config.classes {
        for index in 1..=class.count {
            let runs = rows.iter().filter(|r| r.class == *class && r.instance == index);
            let (mut bb, mut wa) = (None::<u32>, None::<u32>);
            for r in runs {
                if let Some(b) = r.r_before {
                    bb = Some(bb.map_or(b, |x| x.min(b)));
                }
                if let Some(a) = r.r_after {
                    wa = Some(wa.map_or(a, |x| x.max(a)));
                }
            }
            out.push(InstanceExtremes {
                class: *class,
                instance: index,
                best_before: bb,
                worst_after: wa,
            });
        }
    }
    out
}

fn opt<T: fmt::Display>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn class_prefix(c: &GeneratorParams) -> String {
    format!("{},{},{},{}", c.height, c.width, c.policy, c.seed)
}

impl BenchReport {
    /// Main CSV: per-run rows grouped by class, each group followed by its
    /// `AVG` rows.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        s.push_str(CSV_HEADER);
        s.push('\n');
        let mut classes: Vec<GeneratorParams> = Vec::new();
        for r in &self.rows {
            if !classes.contains(&r.class) {
                classes.push(r.class);
            }
        }
        for class in classes {
            for r in self.rows.iter().filter(|r| r.class == class) {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{:.2},{}",
                    class_prefix(&r.class),
                    r.instance,
                    r.heuristic,
                    opt(r.r_before),
                    opt(r.r_after),
                    r.gap_pct().map(|g| format!("{g:.2}")).unwrap_or_default(),
                    u8::from(r.improved()),
                    r.cpu_s,
                    u8::from(r.timeout),
                );
            }
            for m in self.summaries.iter().filter(|m| m.class == class) {
                let _ = writeln!(
                    s,
                    "{},AVG,{},{:.2},{:.2},{:.2},{},{:.2},{}",
                    class_prefix(&m.class),
                    m.heuristic,
                    m.avg_before,
                    m.avg_after,
                    m.avg_gap,
                    m.improved,
                    m.avg_cpu_s,
                    m.timeouts,
                );
            }
        }
        s
    }

    pub fn extremes_csv(&self) -> String {
        let mut s = String::new();
        s.push_str(EXTREMES_HEADER);
        s.push('\n');
        for e in &self.extremes {
            let _ = writeln!(
                s,
                "{},{},{},{}",
                class_prefix(&e.class),
                e.instance,
                opt(e.best_before),
                opt(e.worst_after)
            );
        }
        s
    }
}

/// Parses a class like `3x4` (height x width).
pub fn parse_class(text: &str) -> std::result::Result<(usize, usize), String> {
    let (h, w) = text
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("class `{text}` must look like HxW"))?;
    let h: usize = h.trim().parse().map_err(|_| format!("bad height in `{text}`"))?;
    let w: usize = w.trim().parse().map_err(|_| format!("bad width in `{text}`"))?;
    if h == 0 || w == 0 {
        return Err(format!("class `{text}` needs positive H and W"));
    }
    Ok((h, w))
}

/// Convenience for the common single-policy campaign.
pub fn classes(specs: &[(usize, usize)], policy: HeightPolicy, seed: u64, count: usize) -> Vec<GeneratorParams> {
    specs
        .iter()
        .map(|&(h, w)| GeneratorParams::new(h, w, policy, seed, count))
        .collect()
}

use std::time::Instant;

use super::dp::{optimize, Speedups};
use super::rebuild::rebuild_from;
use super::reduced::build_reduced;
use crate::error::Result;
use crate::model::{container_stats, Container, Solution};

#[derive(Debug, Clone, Copy, Default)]
pub struct LsOptions {
    pub speedups: Speedups,
    /// Wall-clock limit, checked before each `OPT(n)` call. The best solution
    /// found so far is returned when it passes.
    pub deadline: Option<Instant>,
}

/// One accepted improvement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Improvement {
    pub sweep: usize,
    pub container: Container,
    pub before: u32,
    pub after: u32,
    pub aspirated: bool,
}

#[derive(Debug, Clone)]
pub struct LsOutcome {
    pub solution: Solution,
    pub log: Vec<Improvement>,
    pub sweeps: usize,
    pub opt_calls: usize,
    pub timed_out: bool,
}

/// Local search: sweep `n = 1..N`, apply `OPT(n)` to every container whose
/// relocation count exceeds its lower bound, and splice in each improvement
/// immediately. Sweeps repeat until one finds nothing.
pub fn ls(sol: &Solution, options: LsOptions) -> Result<LsOutcome> {
    let mut current = sol.clone();
    let mut stats = container_stats(&current)?;
    let n_max = current.instance().n_containers() as Container;
    let mut log = Vec::new();
    let mut sweeps = 0;
    let mut opt_calls = 0;
    let mut timed_out = false;

    'outer: loop {
        sweeps += 1;
        let mut improvement = false;
        for n in 1..=n_max {
            let stat = *stats.get(n);
            if stat.relocations <= stat.lower_bound {
                continue;
            }
            if options.deadline.is_some_and(|d| Instant::now() >= d) {
                timed_out = true;
                break 'outer;
            }
            let red = build_reduced(&current, n)?;
            let res = optimize(&red, options.speedups);
            opt_calls += 1;
            if !res.improved {
                continue;
            }
            current = rebuild_from(&red, &current, &res)?;
            stats = container_stats(&current)?;
            log.push(Improvement {
                sweep: sweeps,
                container: n,
                before: stat.relocations,
                after: stats.relocations(n),
                aspirated: res.aspirated,
            });
            improvement = true;
        }
        if !improvement {
            break;
        }
    }

    Ok(LsOutcome {
        solution: current,
        log,
        sweeps,
        opt_calls,
        timed_out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{global_lower_bound, validate};
    use crate::samples::running_example_solution;

    #[test]
    fn running_example_reaches_the_bound() {
        let sol = running_example_solution();
        let out = ls(&sol, LsOptions::default()).unwrap();
        assert!(validate(&out.solution).is_ok());
        assert_eq!(out.solution.relocations(), 2);
        assert_eq!(
            out.solution.relocations() as u32,
            global_lower_bound(sol.instance())
        );
        assert_eq!(out.log.len(), 1);
        assert_eq!(out.log[0].container, 3);
        assert_eq!((out.log[0].before, out.log[0].after), (2, 1));
        assert_eq!(out.sweeps, 2);
        assert!(!out.timed_out);
    }

    #[test]
    fn optimal_input_is_untouched() {
        let sol = running_example_solution();
        let best = ls(&sol, LsOptions::default()).unwrap().solution;
        let again = ls(&best, LsOptions::default()).unwrap();
        assert_eq!(again.solution, best);
        assert_eq!(again.opt_calls, 0);
        assert!(again.log.is_empty());
    }

    #[test]
    fn expired_deadline_returns_input() {
        let sol = running_example_solution();
        let out = ls(
            &sol,
            LsOptions {
                deadline: Some(Instant::now()),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(out.timed_out);
        assert_eq!(out.solution, sol);
    }
}

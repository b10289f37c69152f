//! Local search on random-walk starts, with each speedup setting.

use std::sync::Arc;
use std::time::Instant;

use ubrp::construct::{random_solve, RandomWalk};
use ubrp::instances::{generate, GeneratorParams, HeightPolicy};
use ubrp::localsearch::{ls, LsOptions, Speedups};
use ubrp::model::validate;

fn main() -> ubrp::Result<()> {
    let params = GeneratorParams::new(6, 8, HeightPolicy::Unlimited, 5, 3);
    for i in 1..=params.count {
        let inst = Arc::new(generate(&params, i));
        let start = random_solve(&inst, RandomWalk::new(i as u64))?;
        for (name, speedups) in [("none", Speedups::NONE), ("exact", Speedups::EXACT), ("all", Speedups::ALL)] {
            let clock = Instant::now();
            let out = ls(&start, LsOptions { speedups, deadline: None })?;
            assert!(validate(&out.solution).is_ok());
            println!(
                "instance {i} [{name:>5}]: R {} -> {} ({} calls, {} sweeps, {:.1} ms)",
                start.relocations(),
                out.solution.relocations(),
                out.opt_calls,
                out.sweeps,
                clock.elapsed().as_secs_f64() * 1e3
            );
        }
    }
    Ok(())
}

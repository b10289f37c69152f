#![allow(dead_code)]

use std::sync::Arc;

use ubrp::construct::{greedy_solve, random_solve, GreedyPolicy, RandomWalk};
use ubrp::instances::{generate, GeneratorParams, HeightPolicy};
use ubrp::model::{Instance, Solution};

/// Small randomized starting solutions: every `(H, W)` in `2..=4 x 2..=4`,
/// both height policies, a greedy start and two random-walk starts per
/// instance. Starts that hit a dead end (infeasible tight bays) are skipped.
pub fn small_cases(instances_per_class: usize) -> Vec<Solution> {
    let mut out = Vec::new();
    for policy in [HeightPolicy::Unlimited, HeightPolicy::PlusTwo] {
        for h in 2..=4 {
            for w in 2..=4 {
                let params = GeneratorParams::new(h, w, policy, 2024, instances_per_class);
                for i in 1..=instances_per_class {
                    let inst = Arc::new(generate(&params, i));
                    out.extend(starts(&inst, i as u64));
                }
            }
        }
    }
    out
}

pub fn starts(inst: &Arc<Instance>, salt: u64) -> Vec<Solution> {
    let mut out = Vec::new();
    if let Ok(sol) = greedy_solve(inst, GreedyPolicy::default()) {
        out.push(sol);
    }
    for (k, detour) in [(1u64, 0.15), (2, 0.35)] {
        let walk = RandomWalk {
            detour,
            ..RandomWalk::new(salt * 7919 + k)
        };
        if let Ok(sol) = random_solve(inst, walk) {
            out.push(sol);
        }
    }
    out
}

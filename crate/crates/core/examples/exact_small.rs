//! Compares the local search against the exact optimum on tiny bays.

use std::sync::Arc;

use ubrp::construct::{greedy_solve, GreedyPolicy};
use ubrp::instances::{generate, GeneratorParams, HeightPolicy};
use ubrp::localsearch::{ls, LsOptions};
use ubrp::oracle::{exact_solve, ExactOutcome};

fn main() -> ubrp::Result<()> {
    let params = GeneratorParams::new(2, 4, HeightPolicy::PlusTwo, 3, 20);
    let (mut solved, mut optimal) = (0, 0);
    for i in 1..=params.count {
        let inst = Arc::new(generate(&params, i));
        let Ok(start) = greedy_solve(&inst, GreedyPolicy::default()) else {
            continue;
        };
        let after = ls(&start, LsOptions::default())?.solution.relocations() as u32;
        let ExactOutcome::Optimal(best) = exact_solve(&inst, 20)? else {
            continue;
        };
        solved += 1;
        optimal += usize::from(after == best);
        println!("instance {i:2}: greedy {} ls {after} optimum {best}", start.relocations());
    }
    println!("{optimal}/{solved} reach the optimum");
    Ok(())
}

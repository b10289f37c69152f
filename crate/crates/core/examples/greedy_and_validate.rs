//! Builds greedy and random-walk solutions, validates them, and shows what a
//! tampered move list reports.

use std::sync::Arc;

use ubrp::construct::{greedy_solve, random_solve, GreedyPolicy, RandomWalk};
use ubrp::instances::{generate, GeneratorParams, HeightPolicy};
use ubrp::model::{global_lower_bound, validate, Solution};
use ubrp::solution_file::write_solution;

fn main() -> ubrp::Result<()> {
    let params = GeneratorParams::new(4, 5, HeightPolicy::PlusTwo, 42, 1);
    let inst = Arc::new(generate(&params, 1));
    println!("bay {}  lower bound {}", inst.bay(), global_lower_bound(&inst));

    let greedy = greedy_solve(&inst, GreedyPolicy::default())?;
    println!("greedy: R = {}, valid = {}", greedy.relocations(), validate(&greedy).is_ok());
    let walk = random_solve(&inst, RandomWalk { detour: 0.2, ..RandomWalk::new(9) })?;
    println!("random walk: R = {}, valid = {}", walk.relocations(), validate(&walk).is_ok());

    print!("{}", write_solution(&greedy));

    let mut moves = greedy.into_moves();
    let last = moves.len() - 1;
    moves.swap(0, last);
    moves.pop();
    let broken = Solution::new(inst, moves);
    println!("tampered: {}", validate(&broken).description());
    Ok(())
}

//! The five-container running example: re-plan container 3, then run the
//! full local search.

use ubrp::localsearch::{ls, opt_n, rebuild, LsOptions, Speedups};
use ubrp::model::{container_stats, global_lower_bound};
use ubrp::samples::running_example_solution;

fn main() -> ubrp::Result<()> {
    let sol = running_example_solution();
    let inst = sol.instance();
    println!("bay: {}  H_max = {}", inst.bay(), inst.h_max());
    let moves: Vec<String> = sol.moves().iter().map(|m| m.to_string()).collect();
    println!("start: {}  R = {}", moves.join(" "), sol.relocations());

    let stats = container_stats(&sol)?;
    for (n, s) in stats.iter() {
        println!("  container {n}: f = {}, LB = {}", s.relocations, s.lower_bound);
    }

    let res = opt_n(&sol, 3, Speedups::EXACT)?;
    println!("OPT(3): cost {:?}, schedule {:?}", res.best_cost, res.schedule);
    let better = rebuild(&sol, 3, &res)?;
    println!("after OPT(3): R = {}", better.relocations());

    let out = ls(&sol, LsOptions::default())?;
    println!(
        "LS: R = {} (lower bound {}), {} improvement(s)",
        out.solution.relocations(),
        global_lower_bound(inst),
        out.log.len()
    );
    Ok(())
}

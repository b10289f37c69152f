//! Materializes the state graph of container 3 in the running example and
//! compares its shortest path with the DP.

use ubrp::localsearch::{opt_n, Speedups};
use ubrp::oracle::{build_state_graph, DEFAULT_STATE_GUARD};
use ubrp::samples::running_example_solution;

fn main() -> ubrp::Result<()> {
    let sol = running_example_solution();
    let graph = build_state_graph(&sol, 3, DEFAULT_STATE_GUARD)?.reachable();
    println!("{} reachable states, {} edges", graph.nodes.len(), graph.edges.len());
    for &(a, b, cost) in &graph.edges {
        println!("  {} -> {}  cost {cost}", graph.nodes[a], graph.nodes[b]);
    }
    let dp = opt_n(&sol, 3, Speedups::NONE)?;
    println!("graph shortest path {:?}, DP {:?}", graph.shortest(), dp.best_cost);
    Ok(())
}

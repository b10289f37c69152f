//! Independent checks: the `OPT(n)` state space built explicitly and solved
//! as a plain shortest-path problem, and an exhaustive solver for tiny bays.

mod exact;
mod graph;

pub use exact::{exact_solve, exact_solve_guarded, ExactOutcome, DEFAULT_MAX_CONTAINERS};
pub use graph::{build_state_graph, explicit_graph_opt, StateGraph, DEFAULT_STATE_GUARD};

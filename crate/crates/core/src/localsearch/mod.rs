//! Single-container reoptimization `OPT(n)` and the local search built on it.
//!
//! `OPT(n)` erases container `n` from the part of a solution before its
//! retrieval ([`build_reduced`]), searches the layered state space of
//! positions `n` can take through the remaining moves ([`space`]) with a
//! forward DP ([`optimize`]), and splices the cheapest path back in
//! ([`rebuild`]). [`ls`] repeats this over all containers until no container
//! improves.

mod dp;
mod driver;
mod rebuild;
mod reduced;
pub mod space;

pub use dp::{opt_n, optimize, OptResult, ScheduledRelocation, Speedups};
pub use driver::{ls, Improvement, LsOptions, LsOutcome};
pub use rebuild::rebuild;
pub use reduced::{build_reduced, ReducedSolution};
pub use space::{state_feasible, transitions, State};

//! Bays, moves and solutions of the unrestricted block relocation problem,
//! with exact replay validation and relocation lower bounds.

mod bay;
mod bounds;
mod solution;

pub use bay::{Bay, Container, HeightLimit, Instance};
pub use bounds::{
    container_stats, global_lower_bound, lb_container, lower_bounds, ContainerStat,
    ContainerStats,
};
pub use solution::{validate, Move, Replay, Solution, ValidationReport, Violation, ViolationKind};

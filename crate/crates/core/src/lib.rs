//! Solver toolkit for the unrestricted block relocation problem.
//!
//! A bay holds containers numbered `1..=N` in `W` stacks; they must leave in
//! increasing order and only top containers can be moved. The goal is to
//! minimize relocations. The centerpiece is [`localsearch::ls`], a local
//! search whose move re-plans all relocations of a single container with a
//! dynamic program over the rest of the solution.
//!
//! ```
//! use ubrp::construct::{greedy_solve, GreedyPolicy};
//! use ubrp::localsearch::{ls, LsOptions};
//! use ubrp::samples::running_example_instance;
//!
//! let inst = running_example_instance();
//! let start = greedy_solve(&inst, GreedyPolicy::default()).unwrap();
//! let out = ls(&start, LsOptions::default()).unwrap();
//! assert_eq!(out.solution.relocations(), 2);
//! ```

pub mod bench;
pub mod construct;
pub mod error;
pub mod instances;
pub mod localsearch;
pub mod model;
pub mod oracle;
pub mod rng;
pub mod samples;
pub mod solution_file;

pub use error::{Error, Result};

//! The five-container running example used throughout the docs and tests.
//!
//! Initial bay (H_max = 3), stacks drawn bottom to top:
//!
//! ```text
//!  3  4
//!  1  2  5
//! ```
//!
//! The accompanying solution relocates container 3 twice and container 4
//! once (R = 3); the optimum is R = 2.

use std::sync::Arc;

use crate::model::{Bay, HeightLimit, Instance, Move, Solution};

pub fn running_example_instance() -> Arc<Instance> {
    let bay = Bay::new(vec![vec![1, 3], vec![2, 4], vec![5]]);
    Arc::new(Instance::new(HeightLimit::Bounded(3), bay).expect("well-formed"))
}

/// Eight moves: relocate 3 (1,2), retrieve 1, relocate 3 (2,3),
/// relocate 4 (2,1), then retrieve 2, 3, 4, 5.
pub fn running_example_solution() -> Solution {
    use Move::*;
    Solution::new(
        running_example_instance(),
        vec![
            Relocate { from: 1, to: 2 },
            Retrieve { from: 1 },
            Relocate { from: 2, to: 3 },
            Relocate { from: 2, to: 1 },
            Retrieve { from: 2 },
            Retrieve { from: 3 },
            Retrieve { from: 1 },
            Retrieve { from: 3 },
        ],
    )
}

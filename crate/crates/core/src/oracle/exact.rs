use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{Container, HeightLimit, Instance};

/// Largest instance [`exact_solve`] accepts by default.
pub const DEFAULT_MAX_CONTAINERS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExactOutcome {
    Optimal(u32),
    ExceedsLimit,
}

/// Minimum number of relocations, or `ExceedsLimit` if it is larger than
/// `limit`. Instances above [`DEFAULT_MAX_CONTAINERS`] are refused.
pub fn exact_solve(inst: &Instance, limit: u32) -> Result<ExactOutcome> {
    exact_solve_guarded(inst, limit, DEFAULT_MAX_CONTAINERS)
}

/// Iterative deepening over all unrestricted move sequences.
///
/// The due container is retrieved as soon as it is on top (never worse than
/// waiting). The bound is the number of containers sitting above a smaller
/// one, each of which must move at least once. A container is not relocated
/// twice in a row without a retrieval in between, since the two moves collapse
/// into one. Stacks are interchangeable, so bays are compared up to stack
/// order in the transposition table.
pub fn exact_solve_guarded(inst: &Instance, limit: u32, max_containers: usize) -> Result<ExactOutcome> {
    let n = inst.n_containers();
    if n > max_containers {
        return Err(Error::Guard {
            what: "exact solver instance",
            size: n,
            limit: max_containers,
        });
    }
    let mut search = Ida {
        h_max: inst.h_max(),
        stacks: inst.bay().stacks().to_vec(),
        next: 1,
        table: HashMap::new(),
    };
    search.retrieve_all();
    let mut bound = search.lower_bound();
    while bound <= limit {
        search.table.clear();
        if search.dfs(bound, 0) {
            return Ok(ExactOutcome::Optimal(bound));
        }
        bound += 1;
    }
    Ok(ExactOutcome::ExceedsLimit)
}

struct Ida {
    h_max: HeightLimit,
    stacks: Vec<Vec<Container>>,
    next: Container,
    table: HashMap<(Vec<Vec<Container>>, Container), u32>,
}

impl Ida {
    /// Retrieves due containers while they are on top; returns how many.
    fn retrieve_all(&mut self) -> Vec<usize> {
        let mut from = Vec::new();
        while let Some(s) = self.stacks.iter().position(|st| st.last() == Some(&self.next)) {
            self.stacks[s].pop();
            self.next += 1;
            from.push(s);
        }
        from
    }

    fn undo_retrievals(&mut self, from: Vec<usize>) {
        for s in from.into_iter().rev() {
            self.next -= 1;
            self.stacks[s].push(self.next);
        }
    }

    fn lower_bound(&self) -> u32 {
        let mut lb = 0;
        for stack in &self.stacks {
            let mut lowest = Container::MAX;
            for &c in stack {
                if c > lowest {
                    lb += 1;
                }
                lowest = lowest.min(c);
            }
        }
        lb
    }

    fn key(&self, last: Container) -> (Vec<Vec<Container>>, Container) {
        let mut stacks = self.stacks.clone();
        stacks.sort_unstable();
        (stacks, last)
    }

    /// `true` if the bay can be emptied with at most `budget` relocations.
    fn dfs(&mut self, budget: u32, last: Container) -> bool {
        if self.stacks.iter().all(Vec::is_empty) {
            return true;
        }
        if self.lower_bound() > budget || budget == 0 {
            return false;
        }
        let key = self.key(last);
        if self.table.get(&key).is_some_and(|&b| b >= budget) {
            return false;
        }
        let w = self.stacks.len();
        for src in 0..w {
            let Some(&c) = self.stacks[src].last() else {
                continue;
            };
            if c == last {
                continue;
            }
            let mut tried_empty = false;
            for dst in 0..w {
                if dst == src || !self.h_max.has_room(self.stacks[dst].len()) {
                    continue;
                }
                if self.stacks[dst].is_empty() {
                    if tried_empty {
                        continue;
                    }
                    tried_empty = true;
                }
                self.stacks[src].pop();
                self.stacks[dst].push(c);
                let retrieved = self.retrieve_all();
                let next_last = if retrieved.is_empty() { c } else { 0 };
                let found = self.dfs(budget - 1, next_last);
                self.undo_retrievals(retrieved);
                self.stacks[dst].pop();
                self.stacks[src].push(c);
                if found {
                    return true;
                }
            }
        }
        self.table.insert(key, budget);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Bay;
    use crate::samples::running_example_instance;

    #[test]
    fn running_example_optimum() {
        assert_eq!(
            exact_solve(&running_example_instance(), 10).unwrap(),
            ExactOutcome::Optimal(2)
        );
        assert_eq!(
            exact_solve(&running_example_instance(), 1).unwrap(),
            ExactOutcome::ExceedsLimit
        );
    }

    #[test]
    fn small_cases() {
        let sorted = Instance::new(HeightLimit::Unlimited, Bay::new(vec![vec![3, 2, 1], vec![4]])).unwrap();
        assert_eq!(exact_solve(&sorted, 5).unwrap(), ExactOutcome::Optimal(0));
        let pair = Instance::new(HeightLimit::Unlimited, Bay::new(vec![vec![1, 2], vec![]])).unwrap();
        assert_eq!(exact_solve(&pair, 5).unwrap(), ExactOutcome::Optimal(1));
        let stuck = Instance::new(HeightLimit::Unlimited, Bay::new(vec![vec![1, 2]])).unwrap();
        assert_eq!(exact_solve(&stuck, 5).unwrap(), ExactOutcome::ExceedsLimit);
    }

    #[test]
    fn guard() {
        let stacks = vec![(1..=11).collect::<Vec<Container>>()];
        let inst = Instance::new(HeightLimit::Unlimited, Bay::new(stacks)).unwrap();
        assert!(matches!(exact_solve(&inst, 3), Err(Error::Guard { .. })));
    }
}

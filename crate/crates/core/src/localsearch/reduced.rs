use crate::error::{Error, Result};
use crate::model::{Container, HeightLimit, Move, Replay, Solution};

/// The part of a solution before container `n` is retrieved, with `n` and its
/// relocations erased.
///
/// Configurations are numbered `1..=M`; step `t` (for `1 <= t < M`) turns
/// configuration `t` into `t + 1`. Configuration 1 is the initial bay minus
/// `n`, configuration `M` is the bay just before `n` leaves, minus `n`.
///
/// Height tables are stored configuration-major, `W` entries per row.
#[derive(Debug, Clone)]
pub struct ReducedSolution {
    container: Container,
    width: usize,
    h_max: HeightLimit,
    steps: Vec<Move>,
    origin: Vec<usize>,
    retrieval_index: usize,
    relocations: u32,
    start: (usize, usize),
    heights: Vec<u32>,
    suffix_min: Vec<u32>,
    suffix_max: Vec<u32>,
    max_height: usize,
}

impl ReducedSolution {
    #[inline]
    pub fn container(&self) -> Container {
        self.container
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn h_max(&self) -> HeightLimit {
        self.h_max
    }

    /// `M`, the number of configurations.
    #[inline]
    pub fn config_count(&self) -> usize {
        self.steps.len() + 1
    }

    /// Step `t`, `1 <= t < M`.
    #[inline]
    pub fn step(&self, t: usize) -> Move {
        self.steps[t - 1]
    }

    pub fn steps(&self) -> &[Move] {
        &self.steps
    }

    /// Index (0-based) in the original move list of each step.
    pub fn origin(&self) -> &[usize] {
        &self.origin
    }

    /// Index (0-based) in the original move list of the retrieval of `n`.
    pub fn retrieval_index(&self) -> usize {
        self.retrieval_index
    }

    /// `f_n` in the original solution.
    pub fn relocations(&self) -> u32 {
        self.relocations
    }

    /// Initial `(stack, tier)` of `n`.
    pub fn start(&self) -> (usize, usize) {
        self.start
    }

    /// `h(s, t)`: height of stack `s` in configuration `t`, without `n`.
    #[inline]
    pub fn height(&self, s: usize, t: usize) -> usize {
        self.heights[(t - 1) * self.width + (s - 1)] as usize
    }

    /// `min over t' >= t of h(s, t')`.
    #[inline]
    pub fn min_height_from(&self, s: usize, t: usize) -> usize {
        self.suffix_min[(t - 1) * self.width + (s - 1)] as usize
    }

    /// `max over t' >= t of h(s, t')`.
    #[inline]
    pub fn max_height_from(&self, s: usize, t: usize) -> usize {
        self.suffix_max[(t - 1) * self.width + (s - 1)] as usize
    }

    /// Highest stack over all configurations.
    pub fn max_height(&self) -> usize {
        self.max_height
    }

    /// Highest tier `n` can occupy in any state: one above the tallest stack,
    /// capped by `H_max`.
    pub fn tier_cap(&self) -> usize {
        let cap = self.max_height + 1;
        match self.h_max {
            HeightLimit::Unlimited => cap,
            HeightLimit::Bounded(h) => cap.min(h),
        }
    }
}

/// Builds `S^-n` from a valid solution.
///
/// The solution is replayed up to the retrieval of `n`. Moves that relocate
/// `n` are dropped together with the configurations they produce; every other
/// move becomes a step. Heights are taken from the replayed bays with one
/// container removed from the stack currently holding `n`.
pub fn build_reduced(sol: &Solution, n: Container) -> Result<ReducedSolution> {
    let inst = sol.instance();
    let w = inst.width();
    if n == 0 || n as usize > inst.n_containers() {
        return Err(Error::ContainerOutOfRange {
            container: n,
            n: inst.n_containers(),
        });
    }
    let mut replay = Replay::new(inst);
    let start = inst.bay().position(n).expect("container is in the bay");
    let mut where_n = start.0;

    let mut heights: Vec<u32> = Vec::with_capacity(w * 16);
    let push_config = |heights: &mut Vec<u32>, replay: &Replay<'_>, where_n: usize| {
        let bay = replay.bay();
        for s in 1..=w {
            let h = bay.height(s) - usize::from(s == where_n);
            heights.push(h as u32);
        }
    };
    push_config(&mut heights, &replay, where_n);

    let mut steps = Vec::new();
    let mut origin = Vec::new();
    let mut relocations = 0;
    let mut retrieval_index = None;
    for (k, &mv) in sol.moves().iter().enumerate() {
        let moved = replay
            .apply(mv)
            .map_err(|kind| Error::InvalidSolution(format!("move {}: {kind}", k + 1)))?;
        if moved == n {
            match mv {
                Move::Retrieve { .. } => {
                    retrieval_index = Some(k);
                    break;
                }
                Move::Relocate { to, .. } => {
                    relocations += 1;
                    where_n = to;
                }
            }
            continue;
        }
        steps.push(mv);
        origin.push(k);
        push_config(&mut heights, &replay, where_n);
    }
    let retrieval_index = retrieval_index
        .ok_or_else(|| Error::InvalidSolution(format!("container {n} is never retrieved")))?;

    let m = steps.len() + 1;
    let mut suffix_min = heights.clone();
    let mut suffix_max = heights.clone();
    for t in (0..m - 1).rev() {
        for s in 0..w {
            let here = t * w + s;
            let next = here + w;
            suffix_min[here] = suffix_min[here].min(suffix_min[next]);
            suffix_max[here] = suffix_max[here].max(suffix_max[next]);
        }
    }
    let max_height = heights.iter().copied().max().unwrap_or(0) as usize;

    Ok(ReducedSolution {
        container: n,
        width: w,
        h_max: inst.h_max(),
        steps,
        origin,
        retrieval_index,
        relocations,
        start,
        heights,
        suffix_min,
        suffix_max,
        max_height,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::running_example_solution;
    use Move::*;

    #[test]
    fn reduced_for_container_3() {
        let red = build_reduced(&running_example_solution(), 3).unwrap();
        assert_eq!(red.config_count(), 4);
        assert_eq!(
            red.steps(),
            &[Retrieve { from: 1 }, Relocate { from: 2, to: 1 }, Retrieve { from: 2 }]
        );
        assert_eq!(red.origin(), &[1, 3, 4]);
        assert_eq!(red.retrieval_index(), 5);
        assert_eq!(red.relocations(), 2);
        assert_eq!(red.start(), (1, 2));
        assert_eq!(red.height(2, 1), 2);
        assert_eq!(red.height(2, 2), 2);
        assert_eq!(red.height(2, 3), 1);
        assert_eq!(red.height(2, 4), 0);
        // Configurations of S^-3, stacks 1..3.
        let table: Vec<Vec<usize>> = (1..=4)
            .map(|t| (1..=3).map(|s| red.height(s, t)).collect())
            .collect();
        assert_eq!(table, vec![vec![1, 2, 1], vec![0, 2, 1], vec![1, 1, 1], vec![1, 0, 1]]);
        assert_eq!(red.min_height_from(1, 1), 0);
        assert_eq!(red.min_height_from(1, 3), 1);
        assert_eq!(red.max_height_from(2, 2), 2);
        assert_eq!(red.max_height_from(2, 3), 1);
        assert_eq!(red.max_height(), 2);
        assert_eq!(red.tier_cap(), 3);
    }

    #[test]
    fn reduced_for_container_4() {
        let red = build_reduced(&running_example_solution(), 4).unwrap();
        // Six moves precede the retrieval of 4 and one of them relocates 4.
        assert_eq!(red.config_count(), 6);
        assert_eq!(
            red.steps(),
            &[
                Relocate { from: 1, to: 2 },
                Retrieve { from: 1 },
                Relocate { from: 2, to: 3 },
                Retrieve { from: 2 },
                Retrieve { from: 3 },
            ]
        );
        assert_eq!(red.relocations(), 1);
    }

    #[test]
    fn first_retrieval_has_single_configuration() {
        let red = build_reduced(&running_example_solution(), 1).unwrap();
        // Container 1 leaves at move 2, after one move of another container.
        assert_eq!(red.config_count(), 2);

        let inst = std::sync::Arc::new(
            crate::model::Instance::new(
                HeightLimit::Unlimited,
                crate::model::Bay::new(vec![vec![2, 1]]),
            )
            .unwrap(),
        );
        let sol = Solution::new(inst, vec![Retrieve { from: 1 }, Retrieve { from: 1 }]);
        let red = build_reduced(&sol, 1).unwrap();
        assert_eq!(red.config_count(), 1);
        assert!(red.steps().is_empty());
        assert_eq!(red.height(1, 1), 1);
    }

    #[test]
    fn heights_change_only_at_moved_stacks() {
        let sol = running_example_solution();
        for n in 1..=5 {
            let red = build_reduced(&sol, n).unwrap();
            for t in 1..red.config_count() {
                let mv = red.step(t);
                for s in 1..=red.width() {
                    let before = red.height(s, t) as i64;
                    let after = red.height(s, t + 1) as i64;
                    let expected = if s == mv.src() {
                        -1
                    } else if Some(s) == mv.dst() {
                        1
                    } else {
                        0
                    };
                    assert_eq!(after - before, expected, "n={n} t={t} s={s}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_container() {
        assert!(build_reduced(&running_example_solution(), 6).is_err());
    }
}

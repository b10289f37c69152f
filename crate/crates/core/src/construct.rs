//! Constructive heuristics producing starting solutions for the local search.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::model::{Container, Instance, Move, Replay, Solution};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GreedyRule {
    /// Put the blocker on the stack whose smallest container is the smallest
    /// one still larger than the blocker; if no stack qualifies, on the stack
    /// whose smallest container is largest. Empty stacks count as infinity.
    #[default]
    MinMax,
}

/// Greedy relocation policy. Ties always go to the lowest stack index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GreedyPolicy {
    pub rule: GreedyRule,
}

fn stack_min(stack: &[Container]) -> Container {
    stack.iter().copied().min().unwrap_or(Container::MAX)
}

/// Retrieves containers in order, relocating only the containers above the
/// next one due, each to the stack picked by `policy`.
pub fn greedy_solve(inst: &Arc<Instance>, policy: GreedyPolicy) -> Result<Solution> {
    let GreedyRule::MinMax = policy.rule;
    let mut replay = Replay::new(inst);
    let mut moves = Vec::with_capacity(inst.n_containers() * 2);
    while !replay.is_done() {
        let due = replay.next_due();
        let (src, _) = replay.bay().position(due).expect("due container is in the bay");
        let top = replay.bay().top(src).expect("non-empty");
        let mv = if top == due {
            Move::Retrieve { from: src }
        } else {
            let bay = replay.bay();
            let mut above: Option<(Container, usize)> = None;
            let mut below: Option<(Container, usize)> = None;
            for s in (1..=bay.width()).filter(|&s| s != src) {
                if !inst.h_max().has_room(bay.height(s)) {
                    continue;
                }
                let m = stack_min(bay.stack(s));
                if m > top {
                    if above.is_none_or(|(best, _)| m < best) {
                        above = Some((m, s));
                    }
                } else if below.is_none_or(|(best, _)| m > best) {
                    below = Some((m, s));
                }
            }
            let Some((_, to)) = above.or(below) else {
                return Err(Error::DeadEnd {
                    container: top,
                    bay: bay.clone(),
                });
            };
            Move::Relocate { from: src, to }
        };
        replay.apply(mv).expect("greedy moves are legal");
        moves.push(mv);
    }
    Ok(Solution::new(inst.clone(), moves))
}

/// Randomized constructor used to produce deliberately imperfect starting
/// solutions.
///
/// Blockers of the due container go to a uniformly chosen legal stack. With
/// probability `detour` (while `max_detours` lasts) the step is replaced by a
/// relocation of a random top container to a random legal stack, which may
/// move containers that never needed to move.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomWalk {
    pub seed: u64,
    pub detour: f64,
    pub max_detours: usize,
}

impl RandomWalk {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            detour: 0.1,
            max_detours: usize::MAX,
        }
    }
}

pub fn random_solve(inst: &Arc<Instance>, walk: RandomWalk) -> Result<Solution> {
    let mut rng = SplitMix64::new(walk.seed);
    let mut replay = Replay::new(inst);
    let mut moves = Vec::new();
    let mut detours_left = if walk.max_detours == usize::MAX {
        inst.n_containers()
    } else {
        walk.max_detours
    };
    let w = inst.width();
    let legal_targets = |replay: &Replay<'_>, from: usize| -> Vec<usize> {
        (1..=w)
            .filter(|&s| s != from && inst.h_max().has_room(replay.bay().height(s)))
            .collect()
    };
    while !replay.is_done() {
        if detours_left > 0 && rng.unit() < walk.detour {
            let sources: Vec<usize> = (1..=w).filter(|&s| replay.bay().height(s) > 0).collect();
            let from = sources[rng.index(sources.len())];
            let targets = legal_targets(&replay, from);
            if !targets.is_empty() {
                let mv = Move::Relocate {
                    from,
                    to: targets[rng.index(targets.len())],
                };
                replay.apply(mv).expect("detour is legal");
                moves.push(mv);
                detours_left -= 1;
                continue;
            }
        }
        let due = replay.next_due();
        let (src, _) = replay.bay().position(due).expect("due container is in the bay");
        let top = replay.bay().top(src).expect("non-empty");
        let mv = if top == due {
            Move::Retrieve { from: src }
        } else {
            let targets = legal_targets(&replay, src);
            if targets.is_empty() {
                return Err(Error::DeadEnd {
                    container: top,
                    bay: replay.bay().clone(),
                });
            }
            Move::Relocate {
                from: src,
                to: targets[rng.index(targets.len())],
            }
        };
        replay.apply(mv).expect("random walk moves are legal");
        moves.push(mv);
    }
    Ok(Solution::new(inst.clone(), moves))
}

use super::reduced::{build_reduced, ReducedSolution};
use super::space::{can_stay, landing_tier, on_top, state_feasible, State};
use crate::error::Result;
use crate::model::{Container, Solution};

/// Pruning layers of the forward DP; each can be switched off on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Speedups {
    /// Drop labels that already cost `f_n`, or `f_n - 1` when `n` could not
    /// be retrieved from where it sits without another relocation.
    pub upper_bound: bool,
    /// After the first step, only stacks touched by the previous step are
    /// tried as relocation targets unless `n` sits in the stack that step
    /// emptied from.
    pub useless_evaluations: bool,
    /// Stop at the first label that provably rides to retrieval without
    /// further relocations at an improving cost. The result is improving
    /// but not necessarily optimal.
    pub aspiration: bool,
}

impl Speedups {
    pub const ALL: Speedups = Speedups {
        upper_bound: true,
        useless_evaluations: true,
        aspiration: true,
    };
    pub const NONE: Speedups = Speedups {
        upper_bound: false,
        useless_evaluations: false,
        aspiration: false,
    };
    /// The two speedups that never change the optimal cost.
    pub const EXACT: Speedups = Speedups {
        upper_bound: true,
        useless_evaluations: true,
        aspiration: false,
    };
}

impl Default for Speedups {
    fn default() -> Self {
        Speedups::ALL
    }
}

/// Relocate `n` to stack `to` right before step `before_step` of `S^-n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScheduledRelocation {
    pub before_step: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptResult {
    pub container: Container,
    /// `f_n` in the input solution.
    pub reference: u32,
    /// Cheapest final cost found; `None` when pruning discarded every final
    /// state (so nothing beats `f_n`).
    pub best_cost: Option<u32>,
    pub improved: bool,
    pub aspirated: bool,
    pub schedule: Vec<ScheduledRelocation>,
    /// Final state of the returned path.
    pub final_state: Option<State>,
    /// Successor candidates evaluated: one per popped label for staying put,
    /// plus one per relocation target tried.
    pub expansions: u64,
    pub config_count: usize,
    pub tier_cap: usize,
}

impl OptResult {
    /// `M * W * H` with `H` the tier cap of the state space, the order of the
    /// work done with all speedups on.
    pub fn work_bound(&self, width: usize) -> u64 {
        (self.config_count * width * self.tier_cap) as u64
    }
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy)]
struct Label {
    t: u32,
    stack: u32,
    tier: u32,
    cost: u32,
    pred: u32,
    queued: bool,
}

enum Relax {
    Continue,
    Aspirated(u32),
}

/// Labels of one configuration layer, indexed by `(stack, tier)`.
struct Layer {
    cap: usize,
    slots: Vec<u32>,
    touched: Vec<usize>,
}

impl Layer {
    fn new(width: usize, cap: usize) -> Self {
        Self {
            cap,
            slots: vec![NONE; width * cap],
            touched: Vec::new(),
        }
    }

    #[inline]
    fn key(&self, stack: usize, tier: usize) -> usize {
        (stack - 1) * self.cap + (tier - 1)
    }

    fn reset(&mut self) {
        for k in self.touched.drain(..) {
            self.slots[k] = NONE;
        }
    }
}

struct Search<'a> {
    red: &'a ReducedSolution,
    speedups: Speedups,
    reference: u32,
    labels: Vec<Label>,
    next: Layer,
    next_queue: Vec<u32>,
    expansions: u64,
}

impl Search<'_> {
    fn relax(&mut self, target: State, cost: u32, pred: u32) -> Relax {
        let key = self.next.key(target.stack, target.tier);
        let existing = self.next.slots[key];
        let idx = if existing == NONE {
            let idx = self.labels.len() as u32;
            self.labels.push(Label {
                t: target.t as u32,
                stack: target.stack as u32,
                tier: target.tier as u32,
                cost,
                pred,
                queued: false,
            });
            self.next.slots[key] = idx;
            self.next.touched.push(key);
            idx
        } else if cost < self.labels[existing as usize].cost {
            let label = &mut self.labels[existing as usize];
            label.cost = cost;
            label.pred = pred;
            existing
        } else {
            return Relax::Continue;
        };

        if self.speedups.aspiration && self.aspiration_holds(target, cost) {
            return Relax::Aspirated(idx);
        }
        if self.speedups.upper_bound && self.beyond_bound(target, cost) {
            return Relax::Continue;
        }
        let label = &mut self.labels[idx as usize];
        if !label.queued {
            label.queued = true;
            self.next_queue.push(idx);
        }
        Relax::Continue
    }

    fn beyond_bound(&self, st: State, cost: u32) -> bool {
        let m = self.red.config_count();
        cost >= self.reference
            || (cost + 1 >= self.reference
                && !state_feasible(self.red, State::new(m, st.stack, st.tier)))
    }

    /// `n` can stay at `(s, h)` from `st.t` up to its retrieval: the stack
    /// never fills, never drops below `n`, and `n` ends up on top.
    fn aspiration_holds(&self, st: State, cost: u32) -> bool {
        let red = self.red;
        let m = red.config_count();
        cost < self.reference
            && red.h_max().has_room(red.max_height_from(st.stack, st.t))
            && red.min_height_from(st.stack, st.t) + 1 >= st.tier
            && state_feasible(red, State::new(m, st.stack, st.tier))
    }

    fn schedule(&self, last: u32) -> Vec<ScheduledRelocation> {
        let mut out = Vec::new();
        let mut idx = last;
        while idx != NONE {
            let label = self.labels[idx as usize];
            if label.pred != NONE {
                let parent = self.labels[label.pred as usize];
                if parent.stack != label.stack {
                    out.push(ScheduledRelocation {
                        before_step: parent.t as usize,
                        to: label.stack as usize,
                    });
                }
            }
            idx = label.pred;
        }
        out.reverse();
        out
    }
}

/// Runs the forward DP of the single-container operator on a prepared
/// `S^-n`.
///
/// Layers are processed for `t = 1..M-1`: every label queued for
/// configuration `t` tries to stay put through step `t` (cost 0) and, when
/// `n` is on top, to be relocated first (cost 1). Labels for `t + 1` keep the
/// cheapest cost and the first predecessor that reached it. The answer is the
/// cheapest label left in layer `M`.
pub fn optimize(red: &ReducedSolution, speedups: Speedups) -> OptResult {
    let reference = red.relocations();
    let m = red.config_count();
    let w = red.width();
    let cap = red.tier_cap();
    let (s0, h0) = red.start();

    let mut result = OptResult {
        container: red.container(),
        reference,
        best_cost: Some(0),
        improved: false,
        aspirated: false,
        schedule: Vec::new(),
        final_state: Some(State::new(m, s0, h0)),
        expansions: 0,
        config_count: m,
        tier_cap: cap,
    };
    if reference == 0 {
        // Nothing beats zero relocations.
        return result;
    }
    if m == 1 {
        result.improved = true;
        return result;
    }

    let mut search = Search {
        red,
        speedups,
        reference,
        labels: vec![Label {
            t: 1,
            stack: s0 as u32,
            tier: h0 as u32,
            cost: 0,
            pred: NONE,
            queued: true,
        }],
        next: Layer::new(w, cap),
        next_queue: Vec::new(),
        expansions: 0,
    };
    let mut queue: Vec<u32> = vec![0];
    let mut dests: Vec<usize> = Vec::with_capacity(w);

    for t in 1..m {
        for &li in &queue {
            let label = search.labels[li as usize];
            let from = State::new(t, label.stack as usize, label.tier as usize);

            search.expansions += 1;
            let stay = State::new(t + 1, from.stack, from.tier);
            if can_stay(red, from) && state_feasible(red, stay) {
                if let Relax::Aspirated(idx) = search.relax(stay, label.cost, li) {
                    return finish_aspirated(search, idx, result);
                }
            }

            if !on_top(red, from) {
                continue;
            }
            dests.clear();
            let prev = (t > 1).then(|| red.step(t - 1));
            match prev {
                Some(prev) if speedups.useless_evaluations && prev.src() != from.stack => {
                    dests.push(prev.src());
                    dests.extend(prev.dst());
                    dests.sort_unstable();
                    dests.retain(|&d| d != from.stack);
                }
                _ => dests.extend((1..=w).filter(|&d| d != from.stack)),
            }
            for &dest in &dests {
                search.expansions += 1;
                let Some(tier) = landing_tier(red, t, dest) else {
                    continue;
                };
                let target = State::new(t + 1, dest, tier);
                if !state_feasible(red, target) {
                    continue;
                }
                if let Relax::Aspirated(idx) = search.relax(target, label.cost + 1, li) {
                    return finish_aspirated(search, idx, result);
                }
            }
        }
        search.next.reset();
        queue.clear();
        std::mem::swap(&mut queue, &mut search.next_queue);
    }

    let best = queue
        .iter()
        .copied()
        .min_by_key(|&i| search.labels[i as usize].cost);
    result.expansions = search.expansions;
    match best {
        Some(idx) => {
            let label = search.labels[idx as usize];
            result.best_cost = Some(label.cost);
            result.improved = label.cost < reference;
            result.final_state = Some(State::new(m, label.stack as usize, label.tier as usize));
            result.schedule = search.schedule(idx);
        }
        None => {
            result.best_cost = None;
            result.final_state = None;
        }
    }
    result
}

fn finish_aspirated(search: Search<'_>, idx: u32, mut result: OptResult) -> OptResult {
    let label = search.labels[idx as usize];
    result.best_cost = Some(label.cost);
    result.improved = true;
    result.aspirated = true;
    result.final_state = Some(State::new(
        result.config_count,
        label.stack as usize,
        label.tier as usize,
    ));
    result.schedule = search.schedule(idx);
    result.expansions = search.expansions;
    result
}

/// `OPT(n)`: the cheapest way to carry container `n` to its retrieval while
/// every other move of `sol` stays as it is.
pub fn opt_n(sol: &Solution, n: Container, speedups: Speedups) -> Result<OptResult> {
    let red = build_reduced(sol, n)?;
    Ok(optimize(&red, speedups))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::running_example_solution;

    #[test]
    fn container_3_of_running_example() {
        let sol = running_example_solution();
        for sp in [Speedups::NONE, Speedups::EXACT, Speedups::ALL] {
            let res = opt_n(&sol, 3, sp).unwrap();
            assert!(res.improved, "{sp:?}");
            assert_eq!(res.best_cost, Some(1));
            assert_eq!(
                res.schedule,
                vec![ScheduledRelocation {
                    before_step: 1,
                    to: 3
                }]
            );
            assert_eq!(res.final_state, Some(State::new(4, 3, 2)));
        }
    }

    #[test]
    fn container_4_cannot_improve() {
        let sol = running_example_solution();
        let res = opt_n(&sol, 4, Speedups::NONE).unwrap();
        assert!(!res.improved);
        assert_eq!(res.best_cost, Some(1));
        let res = opt_n(&sol, 4, Speedups::ALL).unwrap();
        assert!(!res.improved);
        assert_eq!(res.best_cost, None);
    }

    #[test]
    fn unrelocated_containers_are_left_alone() {
        let sol = running_example_solution();
        for n in [1, 2, 5] {
            let res = opt_n(&sol, n, Speedups::ALL).unwrap();
            assert!(!res.improved);
            assert_eq!(res.best_cost, Some(0));
            assert!(res.schedule.is_empty());
        }
    }

    #[test]
    fn single_configuration() {
        use crate::model::{Bay, HeightLimit, Instance, Move};
        use std::sync::Arc;
        // Container 1 is relocated twice for nothing, then retrieved.
        let inst = Arc::new(
            Instance::new(HeightLimit::Unlimited, Bay::new(vec![vec![2, 1], vec![]])).unwrap(),
        );
        let sol = Solution::new(
            inst,
            vec![
                Move::Relocate { from: 1, to: 2 },
                Move::Relocate { from: 2, to: 1 },
                Move::Retrieve { from: 1 },
                Move::Retrieve { from: 1 },
            ],
        );
        let res = opt_n(&sol, 1, Speedups::ALL).unwrap();
        assert_eq!(res.config_count, 1);
        assert!(res.improved);
        assert_eq!(res.best_cost, Some(0));
        assert!(res.schedule.is_empty());
    }
}

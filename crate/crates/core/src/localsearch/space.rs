//! State space of the single-container reoptimization.
//!
//! `STATE(t, s, h)` is configuration `t` of `S^-n` with container `n`
//! inserted at tier `h` of stack `s` (containers from that tier up shift by
//! one). A path from the initial state to a final state at `t = M` is a way of
//! carrying `n` through the other containers' moves; its cost is the number of
//! relocations of `n`.

use std::fmt;

use super::reduced::ReducedSolution;

/// A node of the state space; all three coordinates are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    pub t: usize,
    pub stack: usize,
    pub tier: usize,
}

impl State {
    pub const fn new(t: usize, stack: usize, tier: usize) -> Self {
        Self { t, stack, tier }
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.t, self.stack, self.tier)
    }
}

/// Whether `st` is a feasible state.
///
/// * `t = 1`: only the initial position of `n`.
/// * `1 < t < M`: `n` is not floating (`h <= h(s,t) + 1`) and its stack has a
///   free slot (`h(s,t) < H_max`).
/// * `t = M`: `n` is exactly on top (`h = h(s,t) + 1`) with `h(s,t) < H_max`.
///
/// When `M = 1` the initial state is also the only final state. The rules
/// tying a state to the next step (`n` must not cover the container moved
/// by step `t`, and must leave room for a container arriving at its stack)
/// are checked by [`can_stay`], since a state that breaks them is still
/// reachable and can be left by relocating `n`.
pub fn state_feasible(red: &ReducedSolution, st: State) -> bool {
    let m = red.config_count();
    let State { t, stack: s, tier: h } = st;
    if t == 0 || t > m || s == 0 || s > red.width() || h == 0 {
        return false;
    }
    if t == 1 {
        return (s, h) == red.start();
    }
    let below = red.height(s, t);
    if !red.h_max().has_room(below) {
        return false;
    }
    if t == m {
        h == below + 1
    } else {
        h <= below + 1
    }
}

/// Whether `n` may stay where it is while step `t` is applied: it does not
/// sit on the container that step `t` moves, and if step `t` stacks a
/// container onto its stack there is still room for both.
#[inline]
pub fn can_stay(red: &ReducedSolution, st: State) -> bool {
    let State { t, stack: s, tier: h } = st;
    let mv = red.step(t);
    let below = red.height(s, t);
    if mv.src() == s && h > below {
        return false;
    }
    if mv.dst() == Some(s) && !red.h_max().has_room(below + 1) {
        return false;
    }
    true
}

/// Tier at which `n` lands when relocated to `dest` just before step `t`,
/// or `None` if that relocation is illegal: `dest` is the source of step
/// `t` (n would cover the container about to move), `dest` is full, or step
/// `t` also stacks onto `dest` and there is no room left for it.
#[inline]
pub fn landing_tier(red: &ReducedSolution, t: usize, dest: usize) -> Option<usize> {
    let mv = red.step(t);
    let below = red.height(dest, t);
    if mv.src() == dest || !red.h_max().has_room(below) {
        return None;
    }
    if mv.dst() == Some(dest) && !red.h_max().has_room(below + 1) {
        return None;
    }
    Some(below + 1)
}

/// `true` if `n` is the top container of its stack in `st`.
#[inline]
pub fn on_top(red: &ReducedSolution, st: State) -> bool {
    st.tier == red.height(st.stack, st.t) + 1
}

/// All transitions out of a feasible state with `t < M`, as
/// `(target, cost)`. Destination stacks are listed in increasing order after
/// the cost-0 edge.
pub fn transitions(red: &ReducedSolution, from: State) -> Vec<(State, u32)> {
    let mut out = Vec::new();
    let t = from.t;
    if t >= red.config_count() {
        return out;
    }
    let stay = State::new(t + 1, from.stack, from.tier);
    if can_stay(red, from) && state_feasible(red, stay) {
        out.push((stay, 0));
    }
    if on_top(red, from) {
        for dest in (1..=red.width()).filter(|&d| d != from.stack) {
            if let Some(tier) = landing_tier(red, t, dest) {
                let target = State::new(t + 1, dest, tier);
                if state_feasible(red, target) {
                    out.push((target, 1));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localsearch::build_reduced;
    use crate::samples::running_example_solution;

    fn red3() -> ReducedSolution {
        build_reduced(&running_example_solution(), 3).unwrap()
    }

    #[test]
    fn feasibility_of_example_states() {
        let red = red3();
        assert!(state_feasible(&red, State::new(1, 1, 2)));
        assert!(!state_feasible(&red, State::new(1, 2, 3)));
        // Floating over an empty stack.
        assert!(!state_feasible(&red, State::new(2, 1, 2)));
        assert!(state_feasible(&red, State::new(2, 2, 2)));
        assert!(state_feasible(&red, State::new(2, 3, 2)));
        assert!(state_feasible(&red, State::new(4, 3, 2)));
        assert!(state_feasible(&red, State::new(4, 1, 2)));
        // Final states must have n on top.
        assert!(!state_feasible(&red, State::new(4, 1, 1)));
        assert!(!state_feasible(&red, State::new(5, 1, 1)));
    }

    #[test]
    fn staying_rules() {
        let red = red3();
        // Step 2 moves the top of stack 2; n on top of it must move first.
        assert!(!can_stay(&red, State::new(2, 2, 3)));
        assert!(can_stay(&red, State::new(2, 2, 2)));
        assert!(can_stay(&red, State::new(2, 3, 2)));
        // Step 1 retrieves container 1, which n initially covers.
        assert!(!can_stay(&red, State::new(1, 1, 2)));
    }

    #[test]
    fn example_transitions() {
        let red = red3();
        let s = State::new;
        assert_eq!(
            transitions(&red, s(1, 1, 2)),
            vec![(s(2, 2, 3), 1), (s(2, 3, 2), 1)]
        );
        assert_eq!(
            transitions(&red, s(2, 2, 3)),
            vec![(s(3, 1, 1), 1), (s(3, 3, 2), 1)]
        );
        assert_eq!(
            transitions(&red, s(2, 3, 2)),
            vec![(s(3, 3, 2), 0), (s(3, 1, 1), 1)]
        );
        assert_eq!(
            transitions(&red, s(3, 3, 2)),
            vec![(s(4, 3, 2), 0), (s(4, 1, 2), 1)]
        );
        assert!(transitions(&red, s(3, 1, 1)).is_empty());
    }
}

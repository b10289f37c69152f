use std::fmt;
use std::sync::Arc;

use super::bay::{Bay, Container, Instance};

/// One crane move. Stack indices are 1-based.
///
/// A relocation always takes the current top of `from`; the moved container
/// is implied by the configuration the move is applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    Relocate { from: usize, to: usize },
    Retrieve { from: usize },
}

impl Move {
    #[inline]
    pub fn src(self) -> usize {
        match self {
            Move::Relocate { from, .. } | Move::Retrieve { from } => from,
        }
    }

    /// Destination stack, `None` for a retrieval.
    #[inline]
    pub fn dst(self) -> Option<usize> {
        match self {
            Move::Relocate { to, .. } => Some(to),
            Move::Retrieve { .. } => None,
        }
    }

    #[inline]
    pub fn is_relocation(self) -> bool {
        matches!(self, Move::Relocate { .. })
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Relocate { from, to } => write!(f, "({from},{to})"),
            Move::Retrieve { from } => write!(f, "({from},-)"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    StackOutOfRange { stack: usize },
    SameStack { stack: usize },
    EmptyStack { stack: usize },
    StackFull { stack: usize },
    OutOfOrder { expected: Container, found: Container },
    Unfinished { remaining: usize },
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationKind::StackOutOfRange { stack } => write!(f, "stack {stack} does not exist"),
            ViolationKind::SameStack { stack } => {
                write!(f, "relocation from stack {stack} onto itself")
            }
            ViolationKind::EmptyStack { stack } => write!(f, "stack {stack} is empty"),
            ViolationKind::StackFull { stack } => write!(f, "stack {stack} is full"),
            ViolationKind::OutOfOrder { expected, found } => write!(
                f,
                "retrieval of container {found} while container {expected} is due"
            ),
            ViolationKind::Unfinished { remaining } => {
                write!(f, "{remaining} containers remain after the last move")
            }
        }
    }
}

/// First rule broken while replaying a move sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// 1-based index of the offending move; `None` when every move was
    /// legal but the bay is not empty at the end.
    pub step: Option<usize>,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(k) => write!(f, "move {k}: {}", self.kind),
            None => write!(f, "end of solution: {}", self.kind),
        }
    }
}

impl std::error::Error for Violation {}

/// Outcome of [`validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violation: Option<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }

    pub fn description(&self) -> String {
        match &self.violation {
            None => "ok".to_string(),
            Some(v) => v.to_string(),
        }
    }
}

/// Step-by-step replay of moves on a bay.
///
/// Tracks the next container due for retrieval and checks each move against
/// the U-BRP rules: only top containers move, heights stay within `H_max`,
/// and retrievals follow `1, 2, ..., N`.
#[derive(Debug, Clone)]
pub struct Replay<'a> {
    instance: &'a Instance,
    bay: Bay,
    next: Container,
}

impl<'a> Replay<'a> {
    pub fn new(instance: &'a Instance) -> Self {
        Self {
            instance,
            bay: instance.bay().clone(),
            next: 1,
        }
    }

    pub fn bay(&self) -> &Bay {
        &self.bay
    }

    /// Next container due for retrieval (`N + 1` once the bay is empty).
    pub fn next_due(&self) -> Container {
        self.next
    }

    pub fn is_done(&self) -> bool {
        self.next as usize > self.instance.n_containers()
    }

    /// Checks `mv` without applying it and returns the container it would move.
    pub fn check(&self, mv: Move) -> Result<Container, ViolationKind> {
        let w = self.bay.width();
        let from = mv.src();
        if from == 0 || from > w {
            return Err(ViolationKind::StackOutOfRange { stack: from });
        }
        let Some(top) = self.bay.top(from) else {
            return Err(ViolationKind::EmptyStack { stack: from });
        };
        match mv {
            Move::Relocate { to, .. } => {
                if to == 0 || to > w {
                    return Err(ViolationKind::StackOutOfRange { stack: to });
                }
                if to == from {
                    return Err(ViolationKind::SameStack { stack: to });
                }
                if !self.instance.h_max().has_room(self.bay.height(to)) {
                    return Err(ViolationKind::StackFull { stack: to });
                }
            }
            Move::Retrieve { .. } => {
                if top != self.next {
                    return Err(ViolationKind::OutOfOrder {
                        expected: self.next,
                        found: top,
                    });
                }
            }
        }
        Ok(top)
    }

    /// Applies `mv` and returns the moved container. On error the replay is
    /// left unchanged.
    pub fn apply(&mut self, mv: Move) -> Result<Container, ViolationKind> {
        let c = self.check(mv)?;
        self.bay.pop(mv.src());
        match mv {
            Move::Relocate { to, .. } => self.bay.push(to, c),
            Move::Retrieve { .. } => self.next += 1,
        }
        Ok(c)
    }
}

/// A complete solution: the move sequence taking the initial bay of
/// `instance` to the empty bay. With `R` relocations it has `N + R` moves and
/// visits `N + R + 1` configurations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    instance: Arc<Instance>,
    moves: Vec<Move>,
}

impl Solution {
    pub fn new(instance: Arc<Instance>, moves: Vec<Move>) -> Self {
        Self { instance, moves }
    }

    pub fn instance(&self) -> &Arc<Instance> {
        &self.instance
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn into_moves(self) -> Vec<Move> {
        self.moves
    }

    /// Number of relocations `R`.
    pub fn relocations(&self) -> usize {
        self.moves.iter().filter(|m| m.is_relocation()).count()
    }

    pub fn configurations(&self) -> usize {
        self.moves.len() + 1
    }

    /// Replays the whole solution and returns the container moved by each
    /// step, or the first violation.
    pub fn trace(&self) -> Result<Vec<Container>, Violation> {
        let mut replay = Replay::new(&self.instance);
        let mut moved = Vec::with_capacity(self.moves.len());
        for (k, &mv) in self.moves.iter().enumerate() {
            let c = replay.apply(mv).map_err(|kind| Violation {
                step: Some(k + 1),
                kind,
            })?;
            moved.push(c);
        }
        let remaining = replay.bay().len();
        if remaining > 0 {
            return Err(Violation {
                step: None,
                kind: ViolationKind::Unfinished { remaining },
            });
        }
        Ok(moved)
    }
}

/// Validates `sol` by exact replay. Violations are reported, never raised.
pub fn validate(sol: &Solution) -> ValidationReport {
    ValidationReport {
        violation: sol.trace().err(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::HeightLimit;

    fn running_example() -> Arc<Instance> {
        let bay = Bay::new(vec![vec![1, 3], vec![2, 4], vec![5]]);
        Arc::new(Instance::new(HeightLimit::Bounded(3), bay).unwrap())
    }

    fn start_moves() -> Vec<Move> {
        use Move::*;
        vec![
            Relocate { from: 1, to: 2 },
            Retrieve { from: 1 },
            Relocate { from: 2, to: 3 },
            Relocate { from: 2, to: 1 },
            Retrieve { from: 2 },
            Retrieve { from: 3 },
            Retrieve { from: 1 },
            Retrieve { from: 3 },
        ]
    }

    #[test]
    fn start_moves_solution_is_valid() {
        let sol = Solution::new(running_example(), start_moves());
        let report = validate(&sol);
        assert!(report.is_ok(), "{}", report.description());
        assert_eq!(sol.relocations(), 3);
        assert_eq!(sol.configurations(), 5 + 3 + 1);
        assert_eq!(sol.trace().unwrap(), vec![3, 1, 3, 4, 2, 3, 4, 5]);
    }

    #[test]
    fn empty_instance_empty_solution() {
        let inst = Arc::new(Instance::new(HeightLimit::Unlimited, Bay::empty(3)).unwrap());
        assert!(validate(&Solution::new(inst, vec![])).is_ok());
    }

    #[test]
    fn tampered_step_two() {
        let mut moves = start_moves();
        moves[1] = Move::Retrieve { from: 2 };
        let report = validate(&Solution::new(running_example(), moves));
        assert_eq!(
            report.violation,
            Some(Violation {
                step: Some(2),
                kind: ViolationKind::OutOfOrder {
                    expected: 1,
                    found: 3
                }
            })
        );
    }

    #[test]
    fn height_limit_is_enforced() {
        use Move::*;
        // Stack 2 already holds 2 and 4; with H_max = 3 a second relocation onto it overflows.
        let moves = vec![Relocate { from: 1, to: 2 }, Relocate { from: 3, to: 2 }];
        let report = validate(&Solution::new(running_example(), moves));
        assert_eq!(
            report.violation.unwrap(),
            Violation {
                step: Some(2),
                kind: ViolationKind::StackFull { stack: 2 }
            }
        );
    }

    #[test]
    fn unfinished_and_malformed_moves() {
        use Move::*;
        let inst = running_example();
        let report = validate(&Solution::new(inst.clone(), start_moves()[..7].to_vec()));
        assert_eq!(report.violation.unwrap().step, None);

        let report = validate(&Solution::new(inst.clone(), vec![Relocate { from: 1, to: 1 }]));
        assert_eq!(report.violation.unwrap().kind, ViolationKind::SameStack { stack: 1 });

        let report = validate(&Solution::new(inst, vec![Relocate { from: 4, to: 1 }]));
        assert_eq!(report.violation.unwrap().kind, ViolationKind::StackOutOfRange { stack: 4 });
    }
}

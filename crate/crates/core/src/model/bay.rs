use std::fmt;

use crate::error::{Error, Result};

/// Retrieval number of a container. Container 1 leaves the bay first.
pub type Container = u32;

/// Maximum stack height of a bay.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeightLimit {
    Unlimited,
    Bounded(usize),
}

impl HeightLimit {
    /// `true` if a stack of `height` containers still has a free slot,
    /// i.e. `height < H_max`.
    #[inline]
    pub fn has_room(self, height: usize) -> bool {
        match self {
            HeightLimit::Unlimited => true,
            HeightLimit::Bounded(limit) => height < limit,
        }
    }

    /// `true` if a stack may hold `height` containers.
    #[inline]
    pub fn admits(self, height: usize) -> bool {
        match self {
            HeightLimit::Unlimited => true,
            HeightLimit::Bounded(limit) => height <= limit,
        }
    }

    /// Numeric bound for an instance with `n` containers; no stack can ever
    /// exceed `n`, so that is the effective bound of an unlimited bay.
    pub fn effective(self, n: usize) -> usize {
        match self {
            HeightLimit::Unlimited => n,
            HeightLimit::Bounded(limit) => limit,
        }
    }

    /// Encoding used by the instance file header, `0` for unlimited.
    pub fn as_file_value(self) -> usize {
        match self {
            HeightLimit::Unlimited => 0,
            HeightLimit::Bounded(limit) => limit,
        }
    }

    pub fn from_file_value(value: usize) -> Self {
        if value == 0 {
            HeightLimit::Unlimited
        } else {
            HeightLimit::Bounded(value)
        }
    }
}

impl fmt::Display for HeightLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeightLimit::Unlimited => f.write_str("unlimited"),
            HeightLimit::Bounded(h) => write!(f, "{h}"),
        }
    }
}

/// A configuration of the bay: one vector per stack, bottom to top.
///
/// Stacks and tiers are 1-based in every public accessor, matching the
/// usual drawings of a bay (stack 1 on the left, tier 1 at the bottom).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bay {
    stacks: Vec<Vec<Container>>,
}

impl Bay {
    pub fn new(stacks: Vec<Vec<Container>>) -> Self {
        Self { stacks }
    }

    pub fn empty(width: usize) -> Self {
        Self {
            stacks: vec![Vec::new(); width],
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.stacks.len()
    }

    /// Height of stack `s` (1-based).
    #[inline]
    pub fn height(&self, s: usize) -> usize {
        self.stacks[s - 1].len()
    }

    /// Top container of stack `s` (1-based).
    #[inline]
    pub fn top(&self, s: usize) -> Option<Container> {
        self.stacks[s - 1].last().copied()
    }

    /// Container at tier `h` of stack `s` (both 1-based).
    pub fn at(&self, s: usize, h: usize) -> Option<Container> {
        self.stacks.get(s - 1)?.get(h.checked_sub(1)?).copied()
    }

    pub fn stack(&self, s: usize) -> &[Container] {
        &self.stacks[s - 1]
    }

    pub fn stacks(&self) -> &[Vec<Container>] {
        &self.stacks
    }

    pub fn into_stacks(self) -> Vec<Vec<Container>> {
        self.stacks
    }

    pub fn len(&self) -> usize {
        self.stacks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.stacks.iter().all(Vec::is_empty)
    }

    pub fn max_height(&self) -> usize {
        self.stacks.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `(stack, tier)` of container `c`, both 1-based.
    pub fn position(&self, c: Container) -> Option<(usize, usize)> {
        self.stacks.iter().enumerate().find_map(|(i, stack)| {
            stack
                .iter()
                .position(|&x| x == c)
                .map(|j| (i + 1, j + 1))
        })
    }

    /// Positions of all containers `1..=n`, indexed by `c - 1`.
    pub fn positions(&self, n: usize) -> Vec<Option<(usize, usize)>> {
        let mut out = vec![None; n];
        for (i, stack) in self.stacks.iter().enumerate() {
            for (j, &c) in stack.iter().enumerate() {
                if let Some(slot) = (c as usize).checked_sub(1).and_then(|k| out.get_mut(k)) {
                    *slot = Some((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub(crate) fn pop(&mut self, s: usize) -> Option<Container> {
        self.stacks[s - 1].pop()
    }

    pub(crate) fn push(&mut self, s: usize, c: Container) {
        self.stacks[s - 1].push(c);
    }
}

impl fmt::Display for Bay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, stack) in self.stacks.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("[")?;
            for (j, c) in stack.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// A U-BRP instance: `N` containers stored in `W` stacks of bounded height.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    h_max: HeightLimit,
    bay: Bay,
    n: usize,
}

impl Instance {
    /// Checks that the bay holds each container of `1..=N` exactly once and
    /// respects `h_max`.
    pub fn new(h_max: HeightLimit, bay: Bay) -> Result<Self> {
        if bay.width() == 0 {
            return Err(Error::InvalidInstance("a bay needs at least one stack".into()));
        }
        if h_max == HeightLimit::Bounded(0) {
            return Err(Error::InvalidInstance("H_max must be positive".into()));
        }
        let n = bay.len();
        let mut seen = vec![false; n];
        for (i, stack) in bay.stacks().iter().enumerate() {
            if !h_max.admits(stack.len()) {
                return Err(Error::InvalidInstance(format!(
                    "stack {} holds {} containers, H_max is {h_max}",
                    i + 1,
                    stack.len()
                )));
            }
            for &c in stack {
                let k = c as usize;
                if k == 0 || k > n {
                    return Err(Error::InvalidInstance(format!(
                        "unknown container {c} (expected 1..={n})"
                    )));
                }
                if std::mem::replace(&mut seen[k - 1], true) {
                    return Err(Error::InvalidInstance(format!("container {c} appears twice")));
                }
            }
        }
        Ok(Self { h_max, bay, n })
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.bay.width()
    }

    #[inline]
    pub fn n_containers(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn h_max(&self) -> HeightLimit {
        self.h_max
    }

    #[inline]
    pub fn bay(&self) -> &Bay {
        &self.bay
    }
}

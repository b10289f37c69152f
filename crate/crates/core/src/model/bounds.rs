use super::bay::{Container, Instance};
use super::solution::Solution;
use crate::error::{Error, Result};

/// Per-container lower bound: 1 if `n` initially sits above a container
/// that must leave before it, 0 otherwise.
pub fn lb_container(inst: &Instance, n: Container) -> Result<u32> {
    let (s, h) = inst
        .bay()
        .position(n)
        .ok_or(Error::ContainerOutOfRange {
            container: n,
            n: inst.n_containers(),
        })?;
    let below = &inst.bay().stack(s)[..h - 1];
    Ok(u32::from(below.iter().any(|&m| m < n)))
}

/// Lower bounds of every container, indexed by `n - 1`.
pub fn lower_bounds(inst: &Instance) -> Vec<u32> {
    let mut lb = vec![0; inst.n_containers()];
    for stack in inst.bay().stacks() {
        let mut lowest = Container::MAX;
        for &c in stack {
            if lowest < c {
                lb[c as usize - 1] = 1;
            }
            lowest = lowest.min(c);
        }
    }
    lb
}

/// Number of blocking containers in the initial bay; a lower bound on `R`.
pub fn global_lower_bound(inst: &Instance) -> u32 {
    lower_bounds(inst).iter().sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContainerStat {
    /// `f_n`: how often the container is relocated in the solution.
    pub relocations: u32,
    pub lower_bound: u32,
    /// Initial `(stack, tier)`, 1-based.
    pub initial: (usize, usize),
}

/// Relocation counts and bounds for every container of a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainerStats {
    entries: Vec<ContainerStat>,
}

impl ContainerStats {
    pub fn get(&self, n: Container) -> &ContainerStat {
        &self.entries[n as usize - 1]
    }

    pub fn relocations(&self, n: Container) -> u32 {
        self.get(n).relocations
    }

    pub fn lower_bound(&self, n: Container) -> u32 {
        self.get(n).lower_bound
    }

    /// Stats in container order, `1..=N`.
    pub fn iter(&self) -> impl Iterator<Item = (Container, &ContainerStat)> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, s)| (i as Container + 1, s))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn container_stats(sol: &Solution) -> Result<ContainerStats> {
    let moved = sol
        .trace()
        .map_err(|v| Error::InvalidSolution(v.to_string()))?;
    let inst = sol.instance();
    let n = inst.n_containers();
    let lbs = lower_bounds(inst);
    let positions = inst.bay().positions(n);
    let mut entries: Vec<ContainerStat> = (0..n)
        .map(|i| ContainerStat {
            relocations: 0,
            lower_bound: lbs[i],
            initial: positions[i].expect("instance holds every container"),
        })
        .collect();
    for (mv, c) in sol.moves().iter().zip(moved) {
        if mv.is_relocation() {
            entries[c as usize - 1].relocations += 1;
        }
    }
    Ok(ContainerStats { entries })
}

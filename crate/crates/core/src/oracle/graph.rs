use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::localsearch::State;
use crate::model::{validate, Container, HeightLimit, Move, Solution};

/// Default cap on `M * W * (tallest stack + 1)` for the explicit graph.
pub const DEFAULT_STATE_GUARD: usize = 2_000_000;

type Stacks = Vec<Vec<Container>>;

/// The state space of `OPT(n)`, materialized node by node.
///
/// Nothing here is shared with the DP: configurations of `S^-n` come from a
/// plain replay of the solution, and edges are found by literally moving
/// containers around on concrete bays.
#[derive(Debug, Clone)]
pub struct StateGraph {
    pub config_count: usize,
    pub nodes: Vec<State>,
    /// `(from, to, cost)` as node indices.
    pub edges: Vec<(usize, usize, u32)>,
    pub initial: usize,
    pub finals: Vec<usize>,
}

impl StateGraph {
    /// 0-1 BFS from the initial node to the nearest final node.
    pub fn shortest(&self) -> Option<u32> {
        let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); self.nodes.len()];
        for &(a, b, c) in &self.edges {
            adj[a].push((b, c));
        }
        let mut dist = vec![u32::MAX; self.nodes.len()];
        let mut deque = VecDeque::new();
        dist[self.initial] = 0;
        deque.push_back(self.initial);
        while let Some(u) = deque.pop_front() {
            for &(v, c) in &adj[u] {
                let d = dist[u] + c;
                if d < dist[v] {
                    dist[v] = d;
                    if c == 0 {
                        deque.push_front(v);
                    } else {
                        deque.push_back(v);
                    }
                }
            }
        }
        self.finals.iter().map(|&f| dist[f]).filter(|&d| d != u32::MAX).min()
    }

    /// Subgraph of the nodes reachable from the initial node.
    pub fn reachable(&self) -> StateGraph {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
        }
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        let mut remap = vec![usize::MAX; self.nodes.len()];
        let mut nodes = Vec::new();
        for (i, &st) in self.nodes.iter().enumerate() {
            if seen[i] {
                remap[i] = nodes.len();
                nodes.push(st);
            }
        }
        StateGraph {
            config_count: self.config_count,
            edges: self
                .edges
                .iter()
                .filter(|(a, _, _)| seen[*a])
                .map(|&(a, b, c)| (remap[a], remap[b], c))
                .collect(),
            initial: remap[self.initial],
            finals: self
                .finals
                .iter()
                .filter(|&&f| seen[f])
                .map(|&f| remap[f])
                .collect(),
            nodes,
        }
    }
}

/// Configurations of `S^-n` (with `n` removed) and the steps between them.
fn reduced_configs(sol: &Solution, n: Container) -> (Vec<Stacks>, Vec<Move>, (usize, usize)) {
    let inst = sol.instance();
    let mut bay: Stacks = inst.bay().stacks().to_vec();
    let start = inst.bay().position(n).expect("container present");
    let without_n = |bay: &Stacks| -> Stacks {
        bay.iter()
            .map(|s| s.iter().copied().filter(|&c| c != n).collect())
            .collect()
    };
    let mut configs = vec![without_n(&bay)];
    let mut steps = Vec::new();
    for &mv in sol.moves() {
        let c = bay[mv.src() - 1].pop().expect("valid solution");
        if let Some(to) = mv.dst() {
            bay[to - 1].push(c);
        }
        if c == n {
            if mv.dst().is_none() {
                break;
            }
            continue;
        }
        steps.push(mv);
        configs.push(without_n(&bay));
    }
    (configs, steps, start)
}

fn insert(config: &Stacks, n: Container, s: usize, h: usize) -> Stacks {
    let mut bay = config.clone();
    bay[s - 1].insert(h - 1, n);
    bay
}

fn locate(bay: &Stacks, n: Container) -> (usize, usize) {
    for (i, stack) in bay.iter().enumerate() {
        if let Some(j) = stack.iter().position(|&c| c == n) {
            return (i + 1, j + 1);
        }
    }
    unreachable!("container {n} vanished")
}

/// Applies a step of `S^-n` to a bay that also holds `n`. Fails if the step
/// would move `n` or overfill a stack.
fn apply_step(bay: &mut Stacks, mv: Move, n: Container, h_max: HeightLimit) -> bool {
    let Some(&top) = bay[mv.src() - 1].last() else {
        return false;
    };
    if top == n {
        return false;
    }
    bay[mv.src() - 1].pop();
    if let Some(to) = mv.dst() {
        bay[to - 1].push(top);
        if !h_max.admits(bay[to - 1].len()) {
            return false;
        }
    }
    true
}

/// Materializes every state and transition for container `n` of `sol`.
pub fn build_state_graph(sol: &Solution, n: Container, guard: usize) -> Result<StateGraph> {
    let inst = sol.instance();
    if n == 0 || n as usize > inst.n_containers() {
        return Err(Error::ContainerOutOfRange {
            container: n,
            n: inst.n_containers(),
        });
    }
    let report = validate(sol);
    if !report.is_ok() {
        return Err(Error::InvalidSolution(report.description()));
    }
    let h_max = inst.h_max();
    let w = inst.width();
    let (configs, steps, start) = reduced_configs(sol, n);
    let m = configs.len();
    let tallest = configs
        .iter()
        .flat_map(|c| c.iter().map(Vec::len))
        .max()
        .unwrap_or(0);
    let size = m * w * (tallest + 1);
    if size > guard {
        return Err(Error::Guard {
            what: "explicit state graph",
            size,
            limit: guard,
        });
    }

    let mut nodes = Vec::new();
    let mut index = HashMap::new();
    let mut finals = Vec::new();
    for (ti, config) in configs.iter().enumerate() {
        let t = ti + 1;
        for s in 1..=w {
            let len = config[s - 1].len();
            if !h_max.admits(len + 1) {
                continue;
            }
            for h in 1..=len + 1 {
                let keep = if t == 1 {
                    (s, h) == start
                } else if t == m {
                    h == len + 1
                } else {
                    true
                };
                if !keep {
                    continue;
                }
                let st = State::new(t, s, h);
                index.insert(st, nodes.len());
                if t == m {
                    finals.push(nodes.len());
                }
                nodes.push(st);
            }
        }
    }

    let mut edges = Vec::new();
    for (i, &st) in nodes.iter().enumerate() {
        let t = st.t;
        if t == m {
            continue;
        }
        let bay = insert(&configs[t - 1], n, st.stack, st.tier);
        let mv = steps[t - 1];

        let mut stay = bay.clone();
        if apply_step(&mut stay, mv, n, h_max) {
            let (s, h) = locate(&stay, n);
            if let Some(&j) = index.get(&State::new(t + 1, s, h)) {
                edges.push((i, j, 0));
            }
        }

        if bay[st.stack - 1].last() != Some(&n) {
            continue;
        }
        for dest in (1..=w).filter(|&d| d != st.stack) {
            let mut moved = bay.clone();
            moved[st.stack - 1].pop();
            if !h_max.has_room(moved[dest - 1].len()) {
                continue;
            }
            moved[dest - 1].push(n);
            if !apply_step(&mut moved, mv, n, h_max) {
                continue;
            }
            let (s, h) = locate(&moved, n);
            if let Some(&j) = index.get(&State::new(t + 1, s, h)) {
                edges.push((i, j, 1));
            }
        }
    }

    let initial = index[&State::new(1, start.0, start.1)];
    Ok(StateGraph {
        config_count: m,
        nodes,
        edges,
        initial,
        finals,
    })
}

/// Minimum relocation count of `n` over the explicit graph; `None` if no
/// final state is reachable.
pub fn explicit_graph_opt(sol: &Solution, n: Container) -> Result<Option<u32>> {
    Ok(build_state_graph(sol, n, DEFAULT_STATE_GUARD)?.shortest())
}

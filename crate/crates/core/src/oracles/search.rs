//! Exact k-coloring of a conflict graph by backtracking.
//!
//! Items are picked by smallest remaining domain (ties: larger conflict
//! degree, then lower index). Assigning an item removes its color from every
//! neighbor's domain; a neighbor left without colors fails the branch. Items
//! may be grouped into cliques of exactly `k` members, each of which has to
//! use every color; a group whose members can no longer cover all colors also
//! fails the branch. A color index above the largest one used so far is only
//! tried once, since unused colors are interchangeable. When some group
//! has fewer members able to take a used color it still lacks than the
//! picked item has colors, the search branches over those members instead.
//!
//! The tree is cut at a fixed depth into subtrees that are searched in DFS
//! order, sequentially or in parallel, with identical results.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use super::{Limit, SearchBudget};
use crate::exec::Exec;

const UNSET: u8 = u8::MAX;
const FRONTIER_TARGET: usize = 64;
const FRONTIER_DEPTH: usize = 12;
pub(crate) const MAX_COLORS: usize = 64;

pub(crate) struct ConflictGraph {
    adj: Vec<Vec<u32>>,
    groups: Vec<Vec<u32>>,
    item_groups: Vec<Vec<u32>>,
}

impl ConflictGraph {
    /// `adj` must be symmetric and loop-free.
    pub(crate) fn new(adj: Vec<Vec<u32>>) -> Self {
        let n = adj.len();
        ConflictGraph {
            adj,
            groups: Vec::new(),
            item_groups: vec![Vec::new(); n],
        }
    }

    /// Registers a clique whose members must use all `k` colors when its
    /// size equals `k`; other sizes are ignored at search time.
    pub(crate) fn add_group(&mut self, members: Vec<u32>) {
        let id = self.groups.len() as u32;
        for &m in &members {
            self.item_groups[m as usize].push(id);
        }
        self.groups.push(members);
    }

    pub(crate) fn len(&self) -> usize {
        self.adj.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// Color index `0..k` per item.
    Found(Vec<u8>),
    Infeasible,
    Inconclusive(Limit),
}

#[derive(Clone, Debug)]
pub(crate) struct SearchResult {
    pub outcome: Outcome,
    pub nodes: u64,
}

enum Step {
    Found,
    Exhausted,
    Stopped(Limit),
    Cancelled,
}

struct Solver<'a> {
    cg: &'a ConflictGraph,
    k: usize,
    full: u64,
    active_groups: Vec<bool>,
    color: Vec<u8>,
    domain: Vec<u64>,
    banned: Vec<u16>,
    used: usize,
    nodes: u64,
    node_limit: u64,
    deadline: Instant,
    cancel: Option<(&'a AtomicUsize, usize)>,
    changed: Vec<u32>,
}

impl<'a> Solver<'a> {
    fn new(cg: &'a ConflictGraph, k: usize, node_limit: u64, deadline: Instant) -> Self {
        let n = cg.len();
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        Solver {
            cg,
            k,
            full,
            active_groups: cg.groups.iter().map(|g| g.len() == k).collect(),
            color: vec![UNSET; n],
            domain: vec![full; n],
            banned: vec![0; n * k],
            used: 0,
            nodes: 0,
            node_limit,
            deadline,
            cancel: None,
            changed: Vec::new(),
        }
    }

    /// Sets `i` to `c` and propagates. Must be undone with [`unassign`]
    /// whatever the return value.
    fn assign(&mut self, i: usize, c: usize) -> bool {
        self.color[i] = c as u8;
        let bit = 1u64 << c;
        let mut ok = true;
        self.changed.clear();
        self.changed.push(i as u32);
        for &j in &self.cg.adj[i] {
            let j = j as usize;
            let slot = &mut self.banned[j * self.k + c];
            if *slot == 0 {
                self.domain[j] &= !bit;
                if self.color[j] == UNSET {
                    if self.domain[j] == 0 {
                        ok = false;
                    }
                    self.changed.push(j as u32);
                }
            }
            *slot += 1;
        }
        ok && self.groups_coverable()
    }

    fn unassign(&mut self, i: usize, c: usize) {
        self.color[i] = UNSET;
        let bit = 1u64 << c;
        for &j in &self.cg.adj[i] {
            let j = j as usize;
            let slot = &mut self.banned[j * self.k + c];
            *slot -= 1;
            if *slot == 0 {
                self.domain[j] |= bit;
            }
        }
    }

    fn groups_coverable(&self) -> bool {
        for &item in &self.changed {
            for &gid in &self.cg.item_groups[item as usize] {
                if !self.active_groups[gid as usize] {
                    continue;
                }
                let mut covered = 0u64;
                for &m in &self.cg.groups[gid as usize] {
                    let m = m as usize;
                    covered |= if self.color[m] == UNSET {
                        self.domain[m]
                    } else {
                        1u64 << self.color[m]
                    };
                }
                if covered != self.full {
                    return false;
                }
            }
        }
        true
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for i in 0..self.color.len() {
            if self.color[i] != UNSET {
                continue;
            }
            let size = self.domain[i].count_ones();
            let deg = self.cg.adj[i].len();
            let better = match best {
                None => true,
                Some((bs, bd, _)) => size < bs || (size == bs && deg > bd),
            };
            if better {
                best = Some((size, deg, i));
            }
        }
        best.map(|b| b.2)
    }

    fn choices(&self, i: usize) -> u64 {
        let allowed = if self.used + 1 >= self.k {
            self.full
        } else {
            (1u64 << (self.used + 1)) - 1
        };
        self.domain[i] & allowed
    }

    fn try_color(&mut self, i: usize, c: usize) -> (bool, usize) {
        let prev = self.used;
        if c >= self.used {
            self.used = c + 1;
        }
        (self.assign(i, c), prev)
    }

    fn untry_color(&mut self, i: usize, c: usize, prev: usize) {
        self.unassign(i, c);
        self.used = prev;
    }

    fn replay(&mut self, prefix: &[(u32, u8)]) {
        for &(i, c) in prefix {
            let (ok, _) = self.try_color(i as usize, c as usize);
            debug_assert!(ok);
        }
    }

    fn limits(&self) -> Option<Step> {
        if self.nodes > self.node_limit {
            return Some(Step::Stopped(Limit::Nodes));
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some((best, me)) = self.cancel {
                if best.load(Ordering::Relaxed) < me {
                    return Some(Step::Cancelled);
                }
            }
            if Instant::now() >= self.deadline {
                return Some(Step::Stopped(Limit::Time));
            }
        }
        None
    }

    /// The (group, color) with the fewest candidate members, over colors
    /// already in use that the group still lacks. Every color must appear
    /// once in a full group, so branching over these members is exhaustive.
    fn scarcest_color(&self) -> Option<(usize, usize, u32)> {
        let used_mask = if self.used >= 64 { u64::MAX } else { (1u64 << self.used) - 1 };
        let mut best: Option<(usize, usize, u32)> = None;
        for (gid, members) in self.cg.groups.iter().enumerate() {
            if !self.active_groups[gid] {
                continue;
            }
            let mut present = 0u64;
            for &m in members {
                let c = self.color[m as usize];
                if c != UNSET {
                    present |= 1u64 << c;
                }
            }
            let mut missing = used_mask & !present;
            while missing != 0 {
                let c = missing.trailing_zeros() as usize;
                missing &= missing - 1;
                let count = members
                    .iter()
                    .filter(|&&m| {
                        let m = m as usize;
                        self.color[m] == UNSET && self.domain[m] >> c & 1 == 1
                    })
                    .count() as u32;
                if best.is_none_or(|b| count < b.2) {
                    best = Some((gid, c, count));
                    if count <= 1 {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn dfs(&mut self) -> Step {
        self.nodes += 1;
        if let Some(stop) = self.limits() {
            return stop;
        }
        let Some(i) = self.pick() else {
            return Step::Found;
        };
        let mut choices = self.choices(i);
        if let Some((gid, c, count)) = self.scarcest_color() {
            if count < choices.count_ones() {
                return self.branch_on_group(gid, c);
            }
        }
        while choices != 0 {
            let c = choices.trailing_zeros() as usize;
            choices &= choices - 1;
            let (ok, prev) = self.try_color(i, c);
            if ok {
                match self.dfs() {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.untry_color(i, c, prev);
        }
        Step::Exhausted
    }

    /// Tries color `c` on each member of group `gid` that can take it.
    fn branch_on_group(&mut self, gid: usize, c: usize) -> Step {
        let cg = self.cg;
        for &m in &cg.groups[gid] {
            let m = m as usize;
            if self.color[m] != UNSET || self.domain[m] >> c & 1 == 0 {
                continue;
            }
            let (ok, prev) = self.try_color(m, c);
            if ok {
                match self.dfs() {
                    Step::Exhausted => {}
                    other => return other,
                }
            }
            self.untry_color(m, c, prev);
        }
        Step::Exhausted
    }
}

fn frontier(cg: &ConflictGraph, k: usize, deadline: Instant) -> (Vec<Vec<(u32, u8)>>, u64) {
    let mut front: Vec<Vec<(u32, u8)>> = vec![Vec::new()];
    let mut nodes = 0;
    for _ in 0..FRONTIER_DEPTH {
        if front.len() >= FRONTIER_TARGET {
            break;
        }
        let mut next = Vec::new();
        let mut grew = false;
        for prefix in &front {
            let mut s = Solver::new(cg, k, u64::MAX, deadline);
            s.replay(prefix);
            nodes += 1;
            let Some(i) = s.pick() else {
                next.push(prefix.clone());
                continue;
            };
            grew = true;
            let mut choices = s.choices(i);
            while choices != 0 {
                let c = choices.trailing_zeros() as usize;
                choices &= choices - 1;
                let (ok, prev) = s.try_color(i, c);
                if ok {
                    let mut child = prefix.clone();
                    child.push((i as u32, c as u8));
                    next.push(child);
                }
                s.untry_color(i, c, prev);
            }
        }
        front = next;
        if !grew {
            break;
        }
    }
    (front, nodes)
}

/// Decides whether the items admit a proper coloring from `k` colors.
pub(crate) fn color_search(cg: &ConflictGraph, k: usize, budget: &SearchBudget, exec: Exec) -> SearchResult {
    assert!((1..=MAX_COLORS).contains(&k));
    let deadline = Instant::now() + budget.time_limit;
    if cg.len() == 0 {
        return SearchResult {
            outcome: Outcome::Found(Vec::new()),
            nodes: 0,
        };
    }
    let (front, mut nodes) = frontier(cg, k, deadline);
    if front.is_empty() {
        return SearchResult {
            outcome: Outcome::Infeasible,
            nodes,
        };
    }
    let per_subtree = (budget.node_limit.saturating_sub(nodes) / front.len() as u64).max(1);
    let best = AtomicUsize::new(usize::MAX);
    let indices: Vec<usize> = (0..front.len()).collect();
    let results = exec.map(&indices, |&idx| {
        if best.load(Ordering::Relaxed) < idx {
            return (Step::Cancelled, 0, Vec::new());
        }
        let mut s = Solver::new(cg, k, per_subtree, deadline);
        s.cancel = Some((&best, idx));
        s.replay(&front[idx]);
        let step = s.dfs();
        if matches!(step, Step::Found) {
            best.fetch_min(idx, Ordering::Relaxed);
            let colors = s.color.clone();
            return (step, s.nodes, colors);
        }
        (step, s.nodes, Vec::new())
    });
    let mut limit = None;
    for (step, n, colors) in results {
        nodes += n;
        match step {
            Step::Found => {
                return SearchResult {
                    outcome: Outcome::Found(colors),
                    nodes,
                }
            }
            Step::Stopped(l) => {
                limit.get_or_insert(l);
            }
            Step::Exhausted | Step::Cancelled => {}
        }
    }
    let outcome = match limit {
        Some(l) => Outcome::Inconclusive(l),
        None => Outcome::Infeasible,
    };
    SearchResult { outcome, nodes }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> ConflictGraph {
        let adj = (0..n)
            .map(|i| vec![((i + 1) % n) as u32, ((i + n - 1) % n) as u32])
            .collect();
        ConflictGraph::new(adj)
    }

    fn complete(n: usize) -> ConflictGraph {
        let adj = (0..n)
            .map(|i| (0..n).filter(|&j| j != i).map(|j| j as u32).collect())
            .collect();
        ConflictGraph::new(adj)
    }

    fn run(cg: &ConflictGraph, k: usize) -> Outcome {
        color_search(cg, k, &SearchBudget::default(), Exec::Sequential).outcome
    }

    #[test]
    fn cycles_and_cliques() {
        assert_eq!(run(&cycle(5), 2), Outcome::Infeasible);
        assert!(matches!(run(&cycle(5), 3), Outcome::Found(_)));
        assert!(matches!(run(&cycle(6), 2), Outcome::Found(_)));
        assert_eq!(run(&complete(6), 5), Outcome::Infeasible);
        let Outcome::Found(c) = run(&complete(6), 6) else { panic!() };
        let mut sorted = c.clone();
        sorted.sort();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn groups_prune_without_changing_answers() {
        let mut cg = complete(4);
        cg.add_group(vec![0, 1, 2, 3]);
        assert!(matches!(run(&cg, 4), Outcome::Found(_)));
        assert_eq!(run(&cg, 3), Outcome::Infeasible);
    }

    #[test]
    fn node_limit_is_inconclusive() {
        let budget = SearchBudget {
            node_limit: 1,
            ..SearchBudget::default()
        };
        let r = color_search(&cycle(51), 2, &budget, Exec::Sequential);
        assert_eq!(r.outcome, Outcome::Inconclusive(Limit::Nodes));
    }

    #[test]
    fn modes_agree() {
        for k in 2..5 {
            let a = color_search(&cycle(9), k, &SearchBudget::default(), Exec::Sequential);
            let b = color_search(&cycle(9), k, &SearchBudget::default(), Exec::Parallel);
            assert_eq!(a.outcome, b.outcome);
        }
    }
}

//! Depth-first branch and bound for minimum hitting set.
//!
//! Vertices are decided in increasing id order. A node is pruned when the
//! number of chosen vertices plus a lower bound on what the unhit sets still
//! need reaches the best known size.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use super::constraints::HittingSet;
use crate::bitset::VertexSet;
use crate::graph::VertexId;

/// Disjoint vertex groups each of which must contribute at least
/// `at_least` members to any solution.
#[derive(Clone, Debug)]
pub(crate) struct GroupBound {
    pub members: Vec<VertexId>,
    pub at_least: usize,
}

/// State shared by all workers.
pub(crate) struct Shared {
    pub best: AtomicUsize,
    /// Best solution found by search, tagged with the index of the
    /// subproblem that produced it.
    pub found: Mutex<Option<(usize, usize, VertexSet)>>,
    pub nodes: AtomicU64,
    pub stop: AtomicBool,
    pub exhausted: AtomicBool,
    pub node_budget: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Shared {
    pub fn new(best: usize, node_budget: Option<u64>, deadline: Option<Instant>) -> Self {
        Self {
            best: AtomicUsize::new(best),
            found: Mutex::new(None),
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            exhausted: AtomicBool::new(false),
            node_budget,
            deadline,
        }
    }

    fn offer(&self, tag: usize, solution: &VertexSet) {
        let size = solution.len();
        let mut found = self.found.lock().unwrap();
        let better = match &*found {
            None => true,
            Some((s, t, _)) => size < *s || (size == *s && tag < *t),
        };
        if better {
            *found = Some((size, tag, solution.clone()));
        }
        self.best.fetch_min(size, Ordering::SeqCst);
    }

    fn out_of_budget(&self) {
        self.exhausted.store(true, Ordering::SeqCst);
        self.stop.store(true, Ordering::SeqCst);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Decision {
    Open,
    In,
    Out,
}

pub(crate) struct Search<'a> {
    problem: &'a HittingSet,
    groups: &'a [GroupBound],
    /// Constraint indices containing each vertex.
    occ: Vec<Vec<u32>>,
    group_of: Vec<Option<u32>>,
    state: Vec<Decision>,
    undecided: VertexSet,
    chosen: VertexSet,
    hits: Vec<u32>,
    open: Vec<u32>,
    unhit: usize,
    dead: usize,
    /// Number of unhit constraints containing each vertex.
    unhit_deg: Vec<u32>,
    group_in: Vec<u32>,
    group_out: Vec<u32>,
    global_lb: usize,
    local_nodes: u64,
    scratch: Vec<u32>,
}

const FLUSH_EVERY: u64 = 1024;

impl<'a> Search<'a> {
    pub fn new(problem: &'a HittingSet, groups: &'a [GroupBound], global_lb: usize) -> Self {
        let v = problem.universe;
        let mut occ = vec![Vec::new(); v];
        let mut unhit_deg = vec![0u32; v];
        for (c, s) in problem.sets.iter().enumerate() {
            for u in s.iter() {
                occ[u].push(c as u32);
                unhit_deg[u] += 1;
            }
        }
        let mut group_of = vec![None; v];
        for (i, grp) in groups.iter().enumerate() {
            for &u in &grp.members {
                group_of[u] = Some(i as u32);
            }
        }
        let dead = problem.sets.iter().filter(|s| s.is_empty()).count();
        Self {
            problem,
            groups,
            occ,
            group_of,
            state: vec![Decision::Open; v],
            undecided: VertexSet::full(v),
            chosen: VertexSet::new(v),
            hits: vec![0; problem.sets.len()],
            open: problem.sets.iter().map(|s| s.len() as u32).collect(),
            unhit: problem.sets.len(),
            dead,
            unhit_deg,
            group_in: vec![0; groups.len()],
            group_out: vec![0; groups.len()],
            global_lb,
            local_nodes: 0,
            scratch: Vec::new(),
        }
    }

    fn include(&mut self, v: VertexId) {
        self.state[v] = Decision::In;
        self.undecided.remove(v);
        self.chosen.insert(v);
        if let Some(g) = self.group_of[v] {
            self.group_in[g as usize] += 1;
        }
        for &c in &self.occ[v] {
            let c = c as usize;
            self.open[c] -= 1;
            self.hits[c] += 1;
            if self.hits[c] == 1 {
                self.unhit -= 1;
                for w in self.problem.sets[c].iter() {
                    self.unhit_deg[w] -= 1;
                }
            }
        }
    }

    fn uninclude(&mut self, v: VertexId) {
        for &c in &self.occ[v] {
            let c = c as usize;
            self.open[c] += 1;
            self.hits[c] -= 1;
            if self.hits[c] == 0 {
                self.unhit += 1;
                for w in self.problem.sets[c].iter() {
                    self.unhit_deg[w] += 1;
                }
            }
        }
        if let Some(g) = self.group_of[v] {
            self.group_in[g as usize] -= 1;
        }
        self.chosen.remove(v);
        self.undecided.insert(v);
        self.state[v] = Decision::Open;
    }

    fn exclude(&mut self, v: VertexId) {
        self.state[v] = Decision::Out;
        self.undecided.remove(v);
        if let Some(g) = self.group_of[v] {
            self.group_out[g as usize] += 1;
        }
        for &c in &self.occ[v] {
            let c = c as usize;
            self.open[c] -= 1;
            if self.open[c] == 0 && self.hits[c] == 0 {
                self.dead += 1;
            }
        }
    }

    fn unexclude(&mut self, v: VertexId) {
        for &c in &self.occ[v] {
            let c = c as usize;
            if self.open[c] == 0 && self.hits[c] == 0 {
                self.dead -= 1;
            }
            self.open[c] += 1;
        }
        if let Some(g) = self.group_of[v] {
            self.group_out[g as usize] -= 1;
        }
        self.undecided.insert(v);
        self.state[v] = Decision::Open;
    }

    /// Applies a fixed prefix of decisions. Returns `false` if the prefix is
    /// already infeasible.
    pub fn apply_prefix(&mut self, prefix: &[bool]) -> bool {
        for (v, &take) in prefix.iter().enumerate() {
            if take {
                self.include(v);
            } else {
                self.exclude(v);
            }
        }
        self.dead == 0
    }

    /// Fewest undecided vertices whose unhit-degrees can add up to the
    /// number of unhit constraints.
    fn degree_bound(&mut self) -> usize {
        if self.unhit == 0 {
            return 0;
        }
        self.scratch.clear();
        for v in self.undecided.iter() {
            let d = self.unhit_deg[v];
            if d > 0 {
                self.scratch.push(d);
            }
        }
        self.scratch.sort_unstable_by(|a, b| b.cmp(a));
        let mut covered = 0usize;
        for (i, &d) in self.scratch.iter().enumerate() {
            covered += d as usize;
            if covered >= self.unhit {
                return i + 1;
            }
        }
        usize::MAX
    }

    /// Size of a greedy family of unhit constraints that are pairwise
    /// disjoint on undecided vertices.
    fn packing_bound(&self) -> usize {
        let mut used = VertexSet::new(self.problem.universe);
        let mut count = 0;
        for (c, s) in self.problem.sets.iter().enumerate() {
            if self.hits[c] > 0 {
                continue;
            }
            let mut avail = s.clone();
            avail.intersect_with(&self.undecided);
            if !avail.intersects(&used) {
                used.union_with(&avail);
                count += 1;
            }
        }
        count
    }

    /// Extra members the structural groups still require, or `None` if a
    /// group can no longer be satisfied.
    fn group_bound(&self) -> Option<usize> {
        let mut need = 0;
        for (i, g) in self.groups.iter().enumerate() {
            let (have, out) = (self.group_in[i] as usize, self.group_out[i] as usize);
            if g.members.len() - out < g.at_least {
                return None;
            }
            need += g.at_least.saturating_sub(have);
        }
        Some(need)
    }

    /// Lower bound on the number of further vertices needed, or `None` when
    /// the node cannot reach `budget`.
    fn remaining_bound(&mut self, budget: usize) -> Option<usize> {
        let mut lb = self.degree_bound();
        if lb >= budget {
            return None;
        }
        if !self.groups.is_empty() {
            lb = lb.max(self.group_bound()?);
            if lb >= budget {
                return None;
            }
        }
        lb = lb.max(self.packing_bound());
        (lb < budget).then_some(lb)
    }

    /// Lower bound for the root node, for reporting.
    pub fn root_bound(&mut self) -> usize {
        if self.dead > 0 {
            return usize::MAX;
        }
        let generic = self.degree_bound().max(self.packing_bound());
        let grouped = if self.groups.is_empty() {
            0
        } else {
            self.group_bound().unwrap_or(usize::MAX)
        };
        (self.chosen.len() + generic.max(grouped)).max(self.global_lb)
    }

    fn tick(&mut self, shared: &Shared) -> bool {
        self.local_nodes += 1;
        if self.local_nodes.is_multiple_of(FLUSH_EVERY) {
            let total = shared.nodes.fetch_add(FLUSH_EVERY, Ordering::Relaxed) + FLUSH_EVERY;
            if shared.node_budget.is_some_and(|b| total >= b) || shared.deadline.is_some_and(|d| Instant::now() >= d) {
                shared.out_of_budget();
            }
        }
        !shared.stop.load(Ordering::Relaxed)
    }

    pub fn finish(&mut self, shared: &Shared) {
        shared
            .nodes
            .fetch_add(self.local_nodes % FLUSH_EVERY, Ordering::Relaxed);
        self.local_nodes = 0;
    }

    pub fn run(&mut self, depth: usize, tag: usize, shared: &Shared) {
        if !self.tick(shared) || self.dead > 0 {
            return;
        }
        let best = shared.best.load(Ordering::Relaxed);
        let chosen = self.chosen.len();
        if self.unhit == 0 {
            if chosen < best {
                shared.offer(tag, &self.chosen);
            }
            return;
        }
        if chosen >= best || self.global_lb >= best {
            return;
        }
        let Some(rest) = self.remaining_bound(best - chosen) else {
            return;
        };
        if rest == 0 || depth >= self.state.len() {
            return;
        }
        let v = depth;
        debug_assert_eq!(self.state[v], Decision::Open);

        // a vertex in no unhit constraint is never worth taking
        if self.unhit_deg[v] == 0 {
            self.exclude(v);
            self.run(depth + 1, tag, shared);
            self.unexclude(v);
            return;
        }

        let tight = chosen + rest + 1 >= best;
        for take in if tight { [false, true] } else { [true, false] } {
            if take {
                self.include(v);
                self.run(depth + 1, tag, shared);
                self.uninclude(v);
            } else {
                self.exclude(v);
                self.run(depth + 1, tag, shared);
                self.unexclude(v);
            }
            if shared.stop.load(Ordering::Relaxed) {
                return;
            }
        }
    }
}

/// Picks the vertex meeting the most unhit constraints (lowest id on ties)
/// until every constraint is hit.
pub(crate) fn greedy(problem: &HittingSet) -> VertexSet {
    let mut search = Search::new(problem, &[], 0);
    while search.unhit > 0 {
        let v = search
            .undecided
            .iter()
            .max_by(|&a, &b| search.unhit_deg[a].cmp(&search.unhit_deg[b]).then(b.cmp(&a)))
            .expect("feasible instance has an undecided vertex");
        search.include(v);
    }
    search.chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::CodeKind;
    use crate::graph::SierpinskiGraph;
    use crate::solver::constraints::build;

    #[test]
    fn greedy_hits_everything() {
        let g = SierpinskiGraph::new(3, 3).unwrap();
        for kind in CodeKind::ALL {
            let hs = build(&g, kind).unwrap();
            assert!(hs.is_hit_by(&greedy(&hs)));
        }
    }

    #[test]
    fn include_exclude_undo_restores_state() {
        let g = SierpinskiGraph::new(2, 4).unwrap();
        let hs = build(&g, CodeKind::Identifying).unwrap();
        let mut s = Search::new(&hs, &[], 0);
        let before = (s.hits.clone(), s.open.clone(), s.unhit, s.dead, s.unhit_deg.clone());
        for v in 0..8 {
            if v % 3 == 0 {
                s.exclude(v)
            } else {
                s.include(v)
            }
        }
        for v in (0..8).rev() {
            if v % 3 == 0 {
                s.unexclude(v)
            } else {
                s.uninclude(v)
            }
        }
        assert_eq!(
            before,
            (s.hits.clone(), s.open.clone(), s.unhit, s.dead, s.unhit_deg.clone())
        );
        assert_eq!(s.undecided, VertexSet::full(16));
    }
}

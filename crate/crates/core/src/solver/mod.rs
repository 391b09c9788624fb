//! Exact minimum codes by branch and bound.
//!
//! [`min_code`] accepts any graph and uses only generic bounds.
//! [`min_code_sierpinski`] additionally seeds the search with the explicit
//! construction and, unless disabled, the structural lower bounds.

mod brute;
mod certify;
mod constraints;
mod search;
mod structural;

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

pub use brute::{brute_force_min, BRUTE_FORCE_LIMIT};
pub use certify::{certify_closed_form, CertifyMethod, CertifyReport};
pub use structural::structural_lower_bound;

use crate::bitset::VertexSet;
use crate::code::CodeKind;
use crate::constructions::construct;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, SierpinskiGraph};
use crate::verify::verify;
use search::{GroupBound, Search, Shared};

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub kind: CodeKind,
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Single worker, reproducible witness.
    pub deterministic: bool,
    /// Known code used as the starting incumbent; ignored if it is not a
    /// valid code of `kind`.
    pub initial_upper_bound: Option<VertexSet>,
    /// Sierpiński-only: prune with the structural lower bounds.
    pub use_structural_bound: bool,
    pub jobs: usize,
}

impl SolveOptions {
    pub fn new(kind: CodeKind) -> Self {
        Self {
            kind,
            node_budget: None,
            time_budget: None,
            deterministic: true,
            initial_upper_bound: None,
            use_structural_bound: true,
            jobs: 1,
        }
    }

    pub fn node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = Some(nodes);
        self
    }

    pub fn time_budget(mut self, limit: Duration) -> Self {
        self.time_budget = Some(limit);
        self
    }

    pub fn structural(mut self, enabled: bool) -> Self {
        self.use_structural_bound = enabled;
        self
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self.deterministic = jobs <= 1;
        self
    }

    pub fn initial(mut self, code: VertexSet) -> Self {
        self.initial_upper_bound = Some(code);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.node_budget == Some(0) {
            return Err(Error::OutOfRange("node budget must be positive".into()));
        }
        if self.time_budget.is_some_and(|t| t.is_zero()) {
            return Err(Error::OutOfRange("time budget must be positive".into()));
        }
        if self.jobs == 0 {
            return Err(Error::OutOfRange("need at least one worker".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SolveStatus {
    ProvedOptimal,
    BudgetExhausted,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub kind: CodeKind,
    pub status: SolveStatus,
    /// Optimum when proved; the incumbent size when the budget ran out.
    pub min_size: Option<usize>,
    pub witness: Option<VertexSet>,
    pub nodes_explored: u64,
    pub lower_bound_used: usize,
}

impl SolveResult {
    fn infeasible(kind: CodeKind) -> Self {
        Self {
            kind,
            status: SolveStatus::Infeasible,
            min_size: None,
            witness: None,
            nodes_explored: 0,
            lower_bound_used: 0,
        }
    }

    /// JSON record `{kind, n, k, min_size, status, nodes_explored, witness}`
    /// with witness vertices rendered by `name`.
    pub fn to_json(&self, n: usize, k: usize, name: impl Fn(usize) -> String) -> Value {
        json!({
            "kind": self.kind,
            "n": n,
            "k": k,
            "min_size": self.min_size,
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "witness": self.witness.as_ref().map(|w| w.iter().map(&name).collect::<Vec<_>>()),
        })
    }
}

struct Hints {
    groups: Vec<GroupBound>,
    global_lb: usize,
}

/// Minimum `opts.kind` code of an arbitrary graph.
pub fn min_code<G: Adjacency>(g: &G, opts: &SolveOptions) -> Result<SolveResult> {
    opts.validate()?;
    solve(g, opts, None)
}

/// Minimum code of S(n,k), seeded with the explicit construction when one
/// exists and no incumbent was supplied.
pub fn min_code_sierpinski(g: &SierpinskiGraph, opts: &SolveOptions) -> Result<SolveResult> {
    opts.validate()?;
    let mut opts = opts.clone();
    if opts.initial_upper_bound.is_none() && g.n() >= 2 {
        if let Ok(code) = construct(g, opts.kind) {
            opts.initial_upper_bound = Some(code.into_members());
        }
    }
    let hints = (opts.use_structural_bound && g.n() >= 2).then(|| Hints {
        groups: structural::structural_groups(g, opts.kind),
        global_lb: structural_lower_bound(g, opts.kind).expect("n >= 2 checked"),
    });
    solve(g, &opts, hints)
}

fn solve<G: Adjacency>(g: &G, opts: &SolveOptions, hints: Option<Hints>) -> Result<SolveResult> {
    let kind = opts.kind;
    let started = Instant::now();
    let problem = match constraints::build(g, kind) {
        Ok(p) => p,
        Err(_) => return Ok(SolveResult::infeasible(kind)),
    };
    let (groups, global_lb) = match &hints {
        Some(h) => (h.groups.as_slice(), h.global_lb),
        None => (&[][..], 0),
    };

    let incumbent = opts
        .initial_upper_bound
        .as_ref()
        .filter(|c| c.universe() == g.vertex_count() && verify(g, c, kind).valid)
        .cloned()
        .unwrap_or_else(|| search::greedy(&problem));
    debug_assert!(problem.is_hit_by(&incumbent));

    let lower_bound_used = Search::new(&problem, groups, global_lb).root_bound();
    let deadline = opts.time_budget.map(|t| started + t);
    let shared = Shared::new(incumbent.len(), opts.node_budget, deadline);

    let jobs = if opts.deterministic { 1 } else { opts.jobs.max(1) };
    if lower_bound_used < incumbent.len() {
        if jobs == 1 {
            let mut s = Search::new(&problem, groups, global_lb);
            s.run(0, 0, &shared);
            s.finish(&shared);
        } else {
            run_parallel(&problem, groups, global_lb, jobs, &shared);
        }
    } else {
        shared.nodes.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
    }

    let found = shared.found.into_inner().unwrap();
    let witness = match found {
        Some((size, _, set)) if size < incumbent.len() => set,
        _ => incumbent,
    };
    let status = if shared.exhausted.into_inner() {
        SolveStatus::BudgetExhausted
    } else {
        SolveStatus::ProvedOptimal
    };
    Ok(SolveResult {
        kind,
        status,
        min_size: Some(witness.len()),
        witness: Some(witness),
        nodes_explored: shared.nodes.into_inner(),
        lower_bound_used,
    })
}

/// Splits the tree on the first few vertices and hands the subtrees to
/// `jobs` threads that share the incumbent size.
fn run_parallel(
    problem: &constraints::HittingSet,
    groups: &[GroupBound],
    global_lb: usize,
    jobs: usize,
    shared: &Shared,
) {
    use std::sync::atomic::{AtomicUsize, Ordering};

    let mut depth = 0;
    while (1usize << depth) < 8 * jobs && depth < problem.universe.min(16) {
        depth += 1;
    }
    // prefix i takes vertex b iff bit (depth-1-b) of i is clear, so lower
    // indices explore "include" first like the serial search
    let prefixes: Vec<Vec<bool>> = (0..1usize << depth)
        .map(|m| (0..depth).map(|b| m >> (depth - 1 - b) & 1 == 0).collect())
        .collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= prefixes.len() || shared.stop.load(Ordering::Relaxed) {
                    break;
                }
                let mut s = Search::new(problem, groups, global_lb);
                if s.apply_prefix(&prefixes[i]) {
                    s.run(depth, i, shared);
                }
                s.finish(shared);
            });
        }
    });
}

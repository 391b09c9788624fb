//! Reduction of every code kind to minimum hitting set.
//!
//! A vertex set is a code of the given kind exactly when it meets every
//! constraint set:
//!
//! * dominating: `N[v]` for each `v`;
//! * total-dominating: `N(v)` for each `v`;
//! * identifying: `N[v]`, plus `N[u] Δ N[v]` for each pair at distance <= 2;
//! * locating-dominating: `N[v]`, plus `(N[u] Δ N[v]) ∪ {u, v}` for each pair
//!   at distance <= 2.
//!
//! Pairs further apart have disjoint closed neighbourhoods and need no set.

use crate::bitset::VertexSet;
use crate::code::CodeKind;
use crate::graph::{Adjacency, VertexId};

/// Superset elimination is quadratic; skip it above this many sets.
const DOMINANCE_LIMIT: usize = 20_000;

#[derive(Clone, Debug)]
pub(crate) struct HittingSet {
    pub universe: usize,
    /// Sorted by size, then contents; no set contains another.
    pub sets: Vec<VertexSet>,
}

/// Why no code of the kind exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Obstruction {
    Twins(VertexId, VertexId),
    Isolated(VertexId),
}

pub(crate) fn build<G: Adjacency>(g: &G, kind: CodeKind) -> Result<HittingSet, Obstruction> {
    let v = g.vertex_count();
    let closed: Vec<VertexSet> = (0..v).map(|u| g.closed_neighborhood(u)).collect();
    let mut sets = Vec::new();

    match kind {
        CodeKind::TotalDominating => {
            for u in 0..v {
                let open = g.open_neighborhood(u);
                if open.is_empty() {
                    return Err(Obstruction::Isolated(u));
                }
                sets.push(open);
            }
        }
        _ => sets.extend(closed.iter().cloned()),
    }

    if matches!(kind, CodeKind::Identifying | CodeKind::LocatingDominating) {
        for u in 0..v {
            let mut reach = VertexSet::new(v);
            for w in closed[u].iter() {
                reach.union_with(&closed[w]);
            }
            for w in reach.iter().filter(|&w| w > u) {
                let mut sep = closed[u].clone();
                sep.symmetric_difference_with(&closed[w]);
                if kind == CodeKind::LocatingDominating {
                    sep.insert(u);
                    sep.insert(w);
                } else if sep.is_empty() {
                    return Err(Obstruction::Twins(u, w));
                }
                sets.push(sep);
            }
        }
    }

    Ok(HittingSet {
        universe: v,
        sets: minimise(sets),
    })
}

/// Drops duplicates and sets that contain another set.
fn minimise(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    sets.dedup();
    if sets.len() > DOMINANCE_LIMIT {
        return sets;
    }
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

impl HittingSet {
    pub fn is_hit_by(&self, code: &VertexSet) -> bool {
        self.sets.iter().all(|s| s.intersects(code))
    }
}

//! Decision procedures for the four code kinds, with failure witnesses.
//!
//! Everything here works on any [`Adjacency`] graph and a [`VertexSet`] over
//! its vertices. `I(u, C)` is written [`ball`].

use std::collections::hash_map::Entry;
use std::collections::{BTreeSet, HashMap};

use serde_json::{json, Value};

use crate::bitset::VertexSet;
use crate::code::CodeKind;
use crate::graph::{Adjacency, VertexId};

/// Why a code failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `I(u, C)` is empty.
    Uncovered(VertexId),
    /// No neighbour of `u` is in the code.
    NotTotallyCovered(VertexId),
    /// `I(u, C) = I(v, C) = ball`.
    Unseparated {
        u: VertexId,
        v: VertexId,
        ball: Vec<VertexId>,
    },
}

impl Witness {
    /// Re-checks the failure against the definitions, independently of the
    /// verifier that produced it.
    pub fn confirms_failure<G: Adjacency>(&self, g: &G, code: &VertexSet, kind: CodeKind) -> bool {
        let closed = |u: VertexId| -> BTreeSet<VertexId> {
            g.neighbors(u)
                .iter()
                .copied()
                .chain([u])
                .filter(|&v| code.contains(v))
                .collect()
        };
        match *self {
            Witness::Uncovered(u) => closed(u).is_empty(),
            Witness::NotTotallyCovered(u) => {
                kind == CodeKind::TotalDominating && !g.neighbors(u).iter().any(|&v| code.contains(v))
            }
            Witness::Unseparated { u, v, ref ball } => {
                let both_outside = !code.contains(u) && !code.contains(v);
                let pair_counts = match kind {
                    CodeKind::Identifying => true,
                    CodeKind::LocatingDominating => both_outside,
                    _ => false,
                };
                u != v && pair_counts && closed(u) == closed(v) && closed(u).into_iter().eq(ball.iter().copied())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub kind: CodeKind,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    fn ok(kind: CodeKind) -> Self {
        Self {
            valid: true,
            kind,
            witness: None,
        }
    }

    fn fail(kind: CodeKind, witness: Witness) -> Self {
        Self {
            valid: false,
            kind,
            witness: Some(witness),
        }
    }

    /// JSON form with vertices rendered by `name`.
    pub fn to_json(&self, name: impl Fn(VertexId) -> String) -> Value {
        let witness = match &self.witness {
            None => Value::Null,
            Some(Witness::Uncovered(u)) => json!({"type": "uncovered", "vertex": name(*u)}),
            Some(Witness::NotTotallyCovered(u)) => json!({"type": "not-totally-covered", "vertex": name(*u)}),
            Some(Witness::Unseparated { u, v, ball }) => json!({
                "type": "unseparated",
                "u": name(*u),
                "v": name(*v),
                "ball": ball.iter().map(|&w| name(w)).collect::<Vec<_>>(),
            }),
        };
        json!({"valid": self.valid, "kind": self.kind, "witness": witness})
    }
}

/// `I(u, C)`: code members at distance at most one from `u`.
pub fn ball<G: Adjacency>(g: &G, u: VertexId, code: &VertexSet) -> VertexSet {
    let mut b = g.closed_neighborhood(u);
    b.intersect_with(code);
    b
}

fn first_uncovered<G: Adjacency>(g: &G, code: &VertexSet) -> Option<VertexId> {
    (0..g.vertex_count()).find(|&u| !code.contains(u) && !g.neighbors(u).iter().any(|&v| code.contains(v)))
}

pub fn is_dominating<G: Adjacency>(g: &G, code: &VertexSet) -> VerificationReport {
    match first_uncovered(g, code) {
        Some(u) => VerificationReport::fail(CodeKind::Dominating, Witness::Uncovered(u)),
        None => VerificationReport::ok(CodeKind::Dominating),
    }
}

pub fn is_total_dominating<G: Adjacency>(g: &G, code: &VertexSet) -> VerificationReport {
    let kind = CodeKind::TotalDominating;
    match (0..g.vertex_count()).find(|&u| !g.neighbors(u).iter().any(|&v| code.contains(v))) {
        Some(u) => VerificationReport::fail(kind, Witness::NotTotallyCovered(u)),
        None => VerificationReport::ok(kind),
    }
}

/// Buckets the candidate vertices by their ball; the first collision is the
/// witness.
fn first_unseparated<G: Adjacency>(
    g: &G,
    code: &VertexSet,
    candidates: impl Iterator<Item = VertexId>,
) -> Option<Witness> {
    let mut seen: HashMap<VertexSet, VertexId> = HashMap::new();
    for v in candidates {
        match seen.entry(ball(g, v, code)) {
            Entry::Occupied(e) => {
                return Some(Witness::Unseparated {
                    u: *e.get(),
                    v,
                    ball: e.key().to_vec(),
                })
            }
            Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }
    None
}

pub fn is_identifying<G: Adjacency>(g: &G, code: &VertexSet) -> VerificationReport {
    let kind = CodeKind::Identifying;
    if let Some(u) = first_uncovered(g, code) {
        return VerificationReport::fail(kind, Witness::Uncovered(u));
    }
    match first_unseparated(g, code, 0..g.vertex_count()) {
        Some(w) => VerificationReport::fail(kind, w),
        None => VerificationReport::ok(kind),
    }
}

pub fn is_locating_dominating<G: Adjacency>(g: &G, code: &VertexSet) -> VerificationReport {
    let kind = CodeKind::LocatingDominating;
    if let Some(u) = first_uncovered(g, code) {
        return VerificationReport::fail(kind, Witness::Uncovered(u));
    }
    match first_unseparated(g, code, (0..g.vertex_count()).filter(|&u| !code.contains(u))) {
        Some(w) => VerificationReport::fail(kind, w),
        None => VerificationReport::ok(kind),
    }
}

pub fn verify<G: Adjacency>(g: &G, code: &VertexSet, kind: CodeKind) -> VerificationReport {
    match kind {
        CodeKind::Dominating => is_dominating(g, code),
        CodeKind::TotalDominating => is_total_dominating(g, code),
        CodeKind::Identifying => is_identifying(g, code),
        CodeKind::LocatingDominating => is_locating_dominating(g, code),
    }
}

/// No two distinct vertices share a closed neighbourhood.
pub fn is_twin_free<G: Adjacency>(g: &G) -> bool {
    is_identifying(g, &VertexSet::full(g.vertex_count())).valid
}

/// Closed twins `(u, v)` with `u < v`, if any.
pub fn find_twins<G: Adjacency>(g: &G) -> Option<(VertexId, VertexId)> {
    match first_unseparated(g, &VertexSet::full(g.vertex_count()), 0..g.vertex_count()) {
        Some(Witness::Unseparated { u, v, .. }) => Some((u, v)),
        _ => None,
    }
}

/// The kinds `code` satisfies.
pub fn classify<G: Adjacency>(g: &G, code: &VertexSet) -> BTreeSet<CodeKind> {
    CodeKind::ALL
        .into_iter()
        .filter(|&kind| verify(g, code, kind).valid)
        .collect()
}

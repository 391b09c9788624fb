//! Shared fixtures for the benchmarks in `benches/`.

use sierpinski_codes::constructions::construct;
use sierpinski_codes::{Code, CodeKind, SierpinskiGraph};

/// `(n, k)` pairs used for generation and verification timings.
pub const GRAPH_SIZES: &[(usize, usize)] = &[(4, 3), (6, 3), (4, 5), (3, 10), (8, 4)];

/// `(n, k, kind)` instances the exact solver closes quickly.
pub const SOLVE_CASES: &[(usize, usize, CodeKind)] = &[
    (3, 3, CodeKind::Dominating),
    (3, 3, CodeKind::Identifying),
    (2, 5, CodeKind::TotalDominating),
    (2, 6, CodeKind::LocatingDominating),
    (3, 4, CodeKind::Dominating),
];

pub fn graph(n: usize, k: usize) -> SierpinskiGraph {
    SierpinskiGraph::new(n, k).expect("benchmark sizes are valid")
}

/// The explicit code of `kind` on `g`; panics for kinds without a construction.
pub fn built_code(g: &SierpinskiGraph, kind: CodeKind) -> Code {
    construct(g, kind).expect("construction exists for benchmark kinds")
}

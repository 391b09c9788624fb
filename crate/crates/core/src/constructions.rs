//! Explicit optimal codes for S(n,k) and the closed-form minimum sizes.
//!
//! All constructions work block by block. A *block* is the set of vertices
//! sharing their first `n-2` coordinates; it induces a copy of S(2,k), and
//! inside a block a vertex is addressed by its last two coordinates `(a, c)`.
//! Block `b` owns ids `b*k^2 .. (b+1)*k^2`.

use serde::Serialize;

use crate::code::{Code, CodeKind};
use crate::error::{Error, Result};
use crate::graph::{SierpinskiGraph, VertexId};
use crate::verify::verify;

fn require_construction_range(n: usize, k: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Unsupported(format!(
            "constructions need n >= 2 (S({n},{k}) is a complete graph)"
        )));
    }
    if k < 3 {
        return Err(Error::OutOfRange(format!("k must be at least 3, got {k}")));
    }
    Ok(())
}

fn pow(k: usize, e: usize) -> Result<usize> {
    u32::try_from(e)
        .ok()
        .and_then(|e| k.checked_pow(e))
        .ok_or_else(|| Error::OutOfRange(format!("{k}^{e} overflows")))
}

fn block_code<F>(g: &SierpinskiGraph, mut pick: F) -> Code
where
    F: FnMut(usize, usize, usize) -> bool,
{
    let k = g.k();
    let blocks = pow(k, g.n() - 2).expect("graph exists, so k^n fits");
    let mut ids = Vec::new();
    for b in 0..blocks {
        for a in 0..k {
            for c in 0..k {
                if pick(b, a, c) {
                    ids.push(b * k * k + a * k + c);
                }
            }
        }
    }
    Code::from_ids(g, ids)
}

/// Inner vertices of every block: last two coordinates differ.
pub fn identifying_code(g: &SierpinskiGraph) -> Result<Code> {
    require_construction_range(g.n(), g.k())?;
    Ok(block_code(g, |_, a, c| a != c))
}

/// One endpoint of each block-internal crossing edge `{(i,j), (j,i)}`.
/// Edges on the cycle `0-1-..-(k-1)-0` take `(i, i+1 mod k)`; chords take
/// `(min, max)`. Every clique `a` then holds `(a, a+1 mod k)`.
pub fn locating_dominating_code(g: &SierpinskiGraph) -> Result<Code> {
    require_construction_range(g.n(), g.k())?;
    let k = g.k();
    Ok(block_code(g, |_, a, c| c == (a + 1) % k || (a < c && a != (c + 1) % k)))
}

/// Pairs consecutive entries of `symbols`; an odd leftover is dropped.
fn consecutive_pairs(symbols: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    symbols.chunks_exact(2).map(|p| (p[0], p[1]))
}

/// For odd `k`: a matching of S(m,k) covering every vertex except the
/// extreme vertex `(missing, .., missing)`. Instead of the edges it records,
/// for each matched vertex `p` paired with `q`, the symbol of `q` at the
/// first coordinate where they differ. The vertex at `offset` is S(m,k)'s
/// vertex 0.
fn assign_ports(m: usize, k: usize, missing: usize, offset: usize, ports: &mut [Option<usize>]) {
    if m == 0 {
        return;
    }
    let copy = k.pow((m - 1) as u32);
    let ones = (copy - 1) / (k - 1);
    let others: Vec<usize> = (0..k).filter(|&s| s != missing).collect();
    for (i, j) in consecutive_pairs(&others) {
        // (i, j, .., j) -- (j, i, .., i)
        ports[offset + i * copy + j * ones] = Some(j);
        ports[offset + j * copy + i * ones] = Some(i);
        assign_ports(m - 1, k, j, offset + i * copy, ports);
        assign_ports(m - 1, k, i, offset + j * copy, ports);
    }
    assign_ports(m - 1, k, missing, offset + missing * copy, ports);
}

/// Total-dominating code of size `k^(n-1)` (even `k`) or `k^(n-1) + 1`
/// (odd `k`).
///
/// Even `k`: in every block take both ends of the crossing edges given by the
/// matching `{0,1}, {2,3}, ..`. Every clique is hit once and the code is a
/// perfect matching.
///
/// Odd `k`: each block gets a designated symbol `u`. The matching pattern is
/// laid on the other `k-1` symbols and the block's extreme vertex
/// `(.., u, u)` is added, which dominates clique `u`. The designations come
/// from a near-perfect matching of the block graph (a copy of S(n-2,k)), so
/// added extreme vertices are crossing partners of each other. The single
/// unmatched block is the last one with `u = k-1`; it gets one extra vertex,
/// or for `n = 2` two non-extreme vertices of clique `u` instead of the
/// extreme vertex.
pub fn total_dominating_code(g: &SierpinskiGraph) -> Result<Code> {
    require_construction_range(g.n(), g.k())?;
    let (n, k) = (g.n(), g.k());
    if k % 2 == 0 {
        return Ok(block_code(g, |_, a, c| c == a ^ 1));
    }

    let blocks = pow(k, n - 2)?;
    let mut ports = vec![None; blocks];
    assign_ports(n - 2, k, k - 1, 0, &mut ports);
    debug_assert_eq!(ports.iter().filter(|p| p.is_none()).count(), 1);
    debug_assert!(ports[blocks - 1].is_none());

    let mut ids: Vec<VertexId> = Vec::with_capacity(blocks * k + 1);
    for (b, port) in ports.iter().enumerate() {
        let u = port.unwrap_or(k - 1);
        let at = |a: usize, c: usize| b * k * k + a * k + c;
        let others: Vec<usize> = (0..k).filter(|&s| s != u).collect();
        for (x, y) in consecutive_pairs(&others) {
            ids.push(at(x, y));
            ids.push(at(y, x));
        }
        match port {
            Some(_) => ids.push(at(u, u)),
            None if n == 2 => {
                ids.push(at(u, others[0]));
                ids.push(at(u, others[1]));
            }
            None => {
                ids.push(at(u, u));
                ids.push(at(u, (u + 1) % k));
            }
        }
    }
    Ok(Code::from_ids(g, ids))
}

/// The construction for `kind`. Dominating codes are not constructed here.
pub fn construct(g: &SierpinskiGraph, kind: CodeKind) -> Result<Code> {
    match kind {
        CodeKind::Identifying => identifying_code(g),
        CodeKind::LocatingDominating => locating_dominating_code(g),
        CodeKind::TotalDominating => total_dominating_code(g),
        CodeKind::Dominating => Err(Error::Unsupported(
            "no explicit construction for dominating codes; use the solver".into(),
        )),
    }
}

/// Closed-form minimum size of a `kind` code in S(n,k).
pub fn predicted_size(kind: CodeKind, n: usize, k: usize) -> Result<usize> {
    require_construction_range(n, k)?;
    let base = pow(k, n - 1)?;
    let value = match kind {
        CodeKind::Identifying => base * (k - 1),
        CodeKind::LocatingDominating => base * (k - 1) / 2,
        CodeKind::TotalDominating if k.is_multiple_of(2) => base,
        CodeKind::TotalDominating => base + 1,
        CodeKind::Dominating => {
            let numerator = if n.is_multiple_of(2) {
                k * (base + 1)
            } else {
                base * k + 1
            };
            if numerator % (k + 1) != 0 {
                return Err(Error::Internal(format!(
                    "domination formula not integral for S({n},{k})"
                )));
            }
            numerator / (k + 1)
        }
    };
    Ok(value)
}

/// `ceil(|V| - |V| / max_degree)` for S(n,k), where the maximum degree is `k`.
pub fn conjecture_bound(n: usize, k: usize) -> Result<usize> {
    require_construction_range(n, k)?;
    let vertices = pow(k, n)?;
    Ok(vertices - vertices / k)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionSummary {
    pub kind: CodeKind,
    pub n: usize,
    pub k: usize,
    pub size: usize,
    pub predicted: usize,
    pub verified: bool,
}

/// Builds the code for `kind` and checks it.
pub fn construct_and_check(g: &SierpinskiGraph, kind: CodeKind) -> Result<(Code, ConstructionSummary)> {
    let code = construct(g, kind)?;
    let summary = ConstructionSummary {
        kind,
        n: g.n(),
        k: g.k(),
        size: code.len(),
        predicted: predicted_size(kind, g.n(), g.k())?,
        verified: verify(g, code.members(), kind).valid,
    };
    Ok((code, summary))
}

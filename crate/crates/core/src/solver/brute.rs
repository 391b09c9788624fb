use crate::bitset::VertexSet;
use crate::code::CodeKind;
use crate::error::{Error, Result};
use crate::graph::Adjacency;
use crate::verify::verify;

pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Smallest `kind` code found by trying every subset in order of size,
/// checked with the plain verifiers. `Ok(None)` means no subset qualifies.
pub fn brute_force_min<G: Adjacency>(g: &G, kind: CodeKind) -> Result<Option<usize>> {
    let v = g.vertex_count();
    if v > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            vertices: v,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let to_set = |mask: u32| VertexSet::from_ids(v, (0..v).filter(|&b| mask >> b & 1 == 1));
    for size in 0..=v {
        let found = subsets_of_size(v, size).any(|mask| verify(g, &to_set(mask), kind).valid);
        if found {
            return Ok(Some(size));
        }
    }
    Ok(None)
}

/// All `size`-element subsets of `0..universe` as bit masks, in increasing
/// numeric order (Gosper's hack).
fn subsets_of_size(universe: usize, size: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << universe;
    let first = if size == 0 { 0u64 } else { (1u64 << size) - 1 };
    let mut next = (size <= universe).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let n = (((ripple ^ cur) >> 2) / low) | ripple;
            (n < limit).then_some(n)
        };
        Some(cur as u32)
    })
}

//! Lower bounds that only hold for Sierpiński graphs.

use super::search::GroupBound;
use crate::code::CodeKind;
use crate::constructions::predicted_size;
use crate::error::{Error, Result};
use crate::graph::{Adjacency, SierpinskiGraph};

fn require_n2(g: &SierpinskiGraph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Unsupported(format!(
            "structural bounds need n >= 2, got S({},{})",
            g.n(),
            g.k()
        )));
    }
    Ok(())
}

/// Minimum size any `kind` code of `g` must have:
///
/// * identifying: `k^(n-1) (k-1)`, at least `k-1` per clique;
/// * locating-dominating: `k^(n-1) (k-1) / 2`;
/// * total-dominating: `k^(n-1)`, plus one for odd `k`;
/// * dominating: `ceil(k^n / (k+1))`.
pub fn structural_lower_bound(g: &SierpinskiGraph, kind: CodeKind) -> Result<usize> {
    require_n2(g)?;
    let (n, k) = (g.n(), g.k());
    let cliques = g.vertex_count() / k;
    let value = match kind {
        CodeKind::Identifying => cliques * (k - 1),
        CodeKind::LocatingDominating => (cliques * (k - 1)).div_ceil(2),
        CodeKind::TotalDominating => cliques + k % 2,
        CodeKind::Dominating => g.vertex_count().div_ceil(g.max_degree() + 1),
    };
    debug_assert_eq!(Ok(value), predicted_size(kind, n, k));
    Ok(value)
}

/// Disjoint groups behind the identifying and total-dominating bounds, for
/// use inside the search.
pub(crate) fn structural_groups(g: &SierpinskiGraph, kind: CodeKind) -> Vec<GroupBound> {
    let k = g.k();
    match kind {
        CodeKind::Identifying => g
            .cliques()
            .into_iter()
            .map(|clique| GroupBound {
                members: clique.iter().filter_map(|&u| g.crossing_partner(u)).collect(),
                at_least: k - 1,
            })
            .collect(),
        CodeKind::TotalDominating => {
            let block = k * k;
            (0..g.vertex_count() / block)
                .map(|b| GroupBound {
                    members: (b * block..(b + 1) * block).collect(),
                    at_least: k,
                })
                .collect()
        }
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let s = |n, k| SierpinskiGraph::new(n, k).unwrap();
        assert_eq!(structural_lower_bound(&s(2, 3), CodeKind::Identifying).unwrap(), 6);
        assert_eq!(
            structural_lower_bound(&s(3, 3), CodeKind::LocatingDominating).unwrap(),
            9
        );
        assert_eq!(structural_lower_bound(&s(2, 5), CodeKind::TotalDominating).unwrap(), 6);
        assert_eq!(structural_lower_bound(&s(3, 3), CodeKind::Dominating).unwrap(), 7);
        assert!(structural_lower_bound(&s(1, 3), CodeKind::Dominating).is_err());
    }

    #[test]
    fn matches_formulas() {
        for (n, k) in [(2, 3), (2, 4), (3, 5), (4, 3), (2, 6), (3, 6)] {
            let g = SierpinskiGraph::new(n, k).unwrap();
            for kind in CodeKind::ALL {
                assert_eq!(
                    structural_lower_bound(&g, kind).unwrap(),
                    predicted_size(kind, n, k).unwrap()
                );
            }
        }
    }

    #[test]
    fn identifying_groups_are_disjoint() {
        let g = SierpinskiGraph::new(3, 4).unwrap();
        let groups = structural_groups(&g, CodeKind::Identifying);
        assert_eq!(groups.len(), 16);
        let mut seen = vec![false; g.vertex_count()];
        for grp in &groups {
            for &u in &grp.members {
                assert!(!seen[u]);
                seen[u] = true;
            }
        }
        // every inner vertex is some m(u)
        assert_eq!(seen.iter().filter(|&&s| s).count(), g.vertex_count() - 4);
    }
}

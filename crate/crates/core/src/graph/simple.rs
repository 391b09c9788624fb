use std::borrow::Cow;

use super::{Adjacency, VertexId};
use crate::error::{Error, Result};

/// An arbitrary simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<VertexId>>,
}

impl SimpleGraph {
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::OutOfRange(format!(
                    "edge ({u},{v}) outside {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::OutOfRange(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
            row.dedup();
        }
        Ok(Self { adj })
    }

    pub fn complete(vertex_count: usize) -> Self {
        let adj = (0..vertex_count)
            .map(|u| (0..vertex_count).filter(|&v| v != u).collect())
            .collect();
        Self { adj }
    }

    /// Copies any graph exposing [`Adjacency`].
    pub fn from_adjacency<G: Adjacency>(g: &G) -> Self {
        Self {
            adj: (0..g.vertex_count()).map(|u| g.neighbors(u).into_owned()).collect(),
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.adj.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl Adjacency for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn neighbors(&self, u: VertexId) -> Cow<'_, [VertexId]> {
        Cow::Borrowed(&self.adj[u])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_dedups() {
        let g = SimpleGraph::from_edges(4, [(0, 1), (1, 0), (2, 1)]).unwrap();
        assert_eq!(g.neighbors(1).as_ref(), &[0, 2]);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_connected());
        assert!(SimpleGraph::from_edges(2, [(0, 0)]).is_err());
        assert!(SimpleGraph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn complete_graph() {
        let g = SimpleGraph::complete(5);
        assert_eq!(g.edge_count(), 10);
        assert_eq!(g.max_degree(), 4);
        assert!(g.is_connected());
    }
}

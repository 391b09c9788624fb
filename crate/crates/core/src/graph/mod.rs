//! Graph representations: the Sierpiński graphs themselves, a plain
//! adjacency-list graph for arbitrary inputs, and the [`Adjacency`] trait the
//! verifiers and solver are written against.

mod export;
mod label;
mod sierpinski;
mod simple;

use std::borrow::Cow;

pub use export::{export, ExportFormat};
pub use label::{labels_adjacent, VertexLabel};
pub use sierpinski::{GraphConfig, SierpinskiGraph};
pub use simple::SimpleGraph;

use crate::bitset::VertexSet;

/// Dense vertex index. For S(n,k) this is the base-k value of the label,
/// first coordinate most significant.
pub type VertexId = usize;

/// Read-only adjacency access over vertices `0..vertex_count()`.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;

    /// Neighbours of `u` in increasing order.
    fn neighbors(&self, u: VertexId) -> Cow<'_, [VertexId]>;

    fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    fn degree(&self, u: VertexId) -> usize {
        self.neighbors(u).len()
    }

    fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// `N[u]` as a bit-vector.
    fn closed_neighborhood(&self, u: VertexId) -> VertexSet {
        let mut set = VertexSet::from_ids(self.vertex_count(), self.neighbors(u).iter().copied());
        set.insert(u);
        set
    }

    /// `N(u)` as a bit-vector.
    fn open_neighborhood(&self, u: VertexId) -> VertexSet {
        VertexSet::from_ids(self.vertex_count(), self.neighbors(u).iter().copied())
    }

    /// Every edge once as `(smaller, larger)`, sorted lexicographically.
    fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            out.extend(self.neighbors(u).iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }
}

impl<G: Adjacency + ?Sized> Adjacency for &G {
    fn vertex_count(&self) -> usize {
        (**self).vertex_count()
    }
    fn neighbors(&self, u: VertexId) -> Cow<'_, [VertexId]> {
        (**self).neighbors(u)
    }
    fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        (**self).is_adjacent(u, v)
    }
}

use std::borrow::Cow;

use super::label::{labels_adjacent, partner_coords, VertexLabel};
use super::{Adjacency, VertexId};
use crate::error::{Error, Result};

/// Size limits applied when building a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GraphConfig {
    /// Largest accepted `k^n`.
    pub max_vertices: usize,
    /// Neighbour lists are precomputed up to this many vertices; larger
    /// graphs derive neighbourhoods from labels on every query.
    pub adjacency_threshold: usize,
}

impl Default for GraphConfig {
    fn default() -> Self {
        Self {
            max_vertices: 1 << 24,
            adjacency_threshold: 1 << 20,
        }
    }
}

/// Compressed neighbour lists, sorted per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl Csr {
    fn from_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut degree = vec![0usize; vertex_count];
        for &(u, v) in edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(vertex_count + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..vertex_count].to_vec();
        let mut targets = vec![0; offsets[vertex_count]];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for u in 0..vertex_count {
            targets[offsets[u]..offsets[u + 1]].sort_unstable();
        }
        Self { offsets, targets }
    }

    fn row(&self, u: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }
}

/// The Sierpiński graph S(n,k). Immutable once built.
#[derive(Clone, Debug)]
pub struct SierpinskiGraph {
    n: usize,
    k: usize,
    vertex_count: usize,
    adjacency: Option<Csr>,
}

fn check_params(n: usize, k: usize, config: &GraphConfig) -> Result<usize> {
    if k < 3 {
        return Err(Error::OutOfRange(format!("k must be at least 3, got {k}")));
    }
    if n < 1 {
        return Err(Error::OutOfRange("n must be at least 1".into()));
    }
    let budget = config.max_vertices;
    match u32::try_from(n).ok().and_then(|e| k.checked_pow(e)) {
        Some(count) if count <= budget => Ok(count),
        _ => Err(Error::Capacity { n, k, budget }),
    }
}

impl SierpinskiGraph {
    /// Builds S(n,k) directly from the label adjacency rule.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        Self::with_config(n, k, &GraphConfig::default())
    }

    pub fn with_config(n: usize, k: usize, config: &GraphConfig) -> Result<Self> {
        let vertex_count = check_params(n, k, config)?;
        let mut g = Self {
            n,
            k,
            vertex_count,
            adjacency: None,
        };
        if vertex_count <= config.adjacency_threshold {
            let mut edges = Vec::with_capacity(k * (vertex_count - 1) / 2);
            for u in 0..vertex_count {
                edges.extend(g.neighbors_from_label(u).into_iter().filter(|&v| v > u).map(|v| (u, v)));
            }
            g.adjacency = Some(Csr::from_edges(vertex_count, &edges));
        }
        Ok(g)
    }

    /// Builds S(n,k) by joining `k` copies of S(n-1,k): copy `i` and copy
    /// `j` are linked by the edge `(i, j, .., j)`–`(j, i, .., i)`. The
    /// result always carries precomputed neighbour lists.
    pub fn new_recursive(n: usize, k: usize) -> Result<Self> {
        Self::recursive_with_config(n, k, &GraphConfig::default())
    }

    pub fn recursive_with_config(n: usize, k: usize, config: &GraphConfig) -> Result<Self> {
        let vertex_count = check_params(n, k, config)?;
        let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                edges.push((i, j));
            }
        }
        // size of the current copy and id of the all-ones label (1,..,1) in it
        let mut copy_size = k;
        let mut ones = 1;
        for _ in 1..n {
            let base = edges.clone();
            edges.clear();
            for i in 0..k {
                let off = i * copy_size;
                edges.extend(base.iter().map(|&(u, v)| (u + off, v + off)));
            }
            for i in 0..k {
                for j in i + 1..k {
                    let a = i * copy_size + j * ones;
                    let b = j * copy_size + i * ones;
                    edges.push((a.min(b), a.max(b)));
                }
            }
            ones += copy_size;
            copy_size *= k;
        }
        Ok(Self {
            n,
            k,
            vertex_count,
            adjacency: Some(Csr::from_edges(vertex_count, &edges)),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn has_precomputed_adjacency(&self) -> bool {
        self.adjacency.is_some()
    }

    /// Writes the coordinates of `id` into `buf`.
    pub fn coords_into(&self, id: VertexId, buf: &mut Vec<usize>) {
        buf.clear();
        buf.resize(self.n, 0);
        let mut rest = id;
        for slot in buf.iter_mut().rev() {
            *slot = rest % self.k;
            rest /= self.k;
        }
    }

    pub fn label(&self, id: VertexId) -> VertexLabel {
        assert!(id < self.vertex_count, "vertex {id} out of range");
        let mut coords = Vec::with_capacity(self.n);
        self.coords_into(id, &mut coords);
        VertexLabel::from_raw(coords)
    }

    pub fn id_from_coords(&self, coords: &[usize]) -> Result<VertexId> {
        if coords.len() != self.n {
            return Err(Error::OutOfRange(format!(
                "label has {} coordinates, S({},{}) needs {}",
                coords.len(),
                self.n,
                self.k,
                self.n
            )));
        }
        coords.iter().try_fold(0, |acc, &c| {
            if c >= self.k {
                Err(Error::OutOfRange(format!("coordinate {c} not below k = {}", self.k)))
            } else {
                Ok(acc * self.k + c)
            }
        })
    }

    pub fn id_of(&self, label: &VertexLabel) -> Result<VertexId> {
        self.id_from_coords(label.coords())
    }

    /// Evaluates the label rule; O(n).
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        let (mut a, mut b) = (Vec::new(), Vec::new());
        self.coords_into(u, &mut a);
        self.coords_into(v, &mut b);
        labels_adjacent(&a, &b)
    }

    pub fn is_extreme(&self, u: VertexId) -> bool {
        // ids of extreme vertices are multiples of (1, 1, .., 1) in base k
        u.is_multiple_of(self.extreme_step())
    }

    fn extreme_step(&self) -> usize {
        (self.vertex_count - 1) / (self.k - 1)
    }

    /// The `k` extreme vertices, ordered by their repeated symbol.
    pub fn extreme_vertices(&self) -> Vec<VertexId> {
        (0..self.k).map(|i| i * self.extreme_step()).collect()
    }

    /// `K(u)`: the vertices sharing `u`'s first `n-1` coordinates.
    pub fn clique_of(&self, u: VertexId) -> Vec<VertexId> {
        let base = u - u % self.k;
        (base..base + self.k).collect()
    }

    /// Index of `K(u)` among the cliques returned by [`Self::cliques`].
    #[inline]
    pub fn clique_index(&self, u: VertexId) -> usize {
        u / self.k
    }

    /// The `k^(n-1)` cliques `K(·)`, which partition the vertex set.
    pub fn cliques(&self) -> Vec<Vec<VertexId>> {
        (0..self.vertex_count / self.k)
            .map(|c| (c * self.k..(c + 1) * self.k).collect())
            .collect()
    }

    /// `m(u)`: the only neighbour of an inner vertex outside `K(u)`.
    pub fn crossing_partner(&self, u: VertexId) -> Option<VertexId> {
        let mut coords = Vec::with_capacity(self.n);
        self.coords_into(u, &mut coords);
        let partner = partner_coords(&coords)?;
        Some(partner.iter().fold(0, |acc, &c| acc * self.k + c))
    }

    /// Edges joining different cliques, as `(smaller, larger)` sorted.
    pub fn crossing_edges(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.vertex_count)
            .filter_map(|u| self.crossing_partner(u).filter(|&v| v > u).map(|v| (u, v)))
            .collect()
    }

    fn neighbors_from_label(&self, u: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self.clique_of(u).into_iter().filter(|&v| v != u).collect();
        if let Some(p) = self.crossing_partner(u) {
            let pos = out.partition_point(|&v| v < p);
            out.insert(pos, p);
        }
        out
    }
}

impl Adjacency for SierpinskiGraph {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn neighbors(&self, u: VertexId) -> Cow<'_, [VertexId]> {
        match &self.adjacency {
            Some(csr) => Cow::Borrowed(csr.row(u)),
            None => Cow::Owned(self.neighbors_from_label(u)),
        }
    }

    fn is_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        match &self.adjacency {
            Some(csr) => csr.row(u).binary_search(&v).is_ok(),
            None => self.adjacent(u, v),
        }
    }

    fn degree(&self, u: VertexId) -> usize {
        match &self.adjacency {
            Some(csr) => csr.row(u).len(),
            None if self.n >= 2 && !self.is_extreme(u) => self.k,
            None => self.k - 1,
        }
    }

    fn max_degree(&self) -> usize {
        if self.n == 1 {
            self.k - 1
        } else {
            self.k
        }
    }

    fn edge_count(&self) -> usize {
        self.k * (self.vertex_count - 1) / 2
    }
}

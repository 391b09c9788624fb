#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use sierpinski_codes::{SimpleGraph, VertexSet};

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, vertices: usize, p: f64) -> SimpleGraph {
    let mut order: Vec<usize> = (0..vertices).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..vertices {
        let parent = order[rng.gen_range(0..i)];
        edges.push((order[i], parent));
    }
    for u in 0..vertices {
        for v in u + 1..vertices {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = SimpleGraph::from_edges(vertices, edges).expect("valid edges");
    assert!(g.is_connected());
    g
}

pub fn random_subset<R: Rng>(rng: &mut R, universe: usize, p: f64) -> VertexSet {
    VertexSet::from_ids(universe, (0..universe).filter(|_| rng.gen_bool(p)))
}

use proptest::prelude::*;
use sierpinski_codes::graph::labels_adjacent;
use sierpinski_codes::{Adjacency, SierpinskiGraph};

/// All (n, k) with 3 <= k <= 7 and k^n <= 2500.
fn small_params() -> impl Strategy<Value = (usize, usize)> {
    (3usize..=7, 1usize..=7)
        .prop_filter("size", |&(k, n)| k.pow(n as u32) <= 2500)
        .prop_map(|(k, n)| (n, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adjacency_symmetric_and_irreflexive((n, k) in small_params(), seed in any::<u64>()) {
        let g = SierpinskiGraph::new(n, k).unwrap();
        let v = g.vertex_count();
        let u = (seed as usize) % v;
        prop_assert!(!g.is_adjacent(u, u));
        for w in 0..v {
            prop_assert_eq!(g.is_adjacent(u, w), g.is_adjacent(w, u));
            prop_assert_eq!(g.is_adjacent(u, w), labels_adjacent(g.label(u).coords(), g.label(w).coords()));
        }
    }

    #[test]
    fn partner_is_an_involution((n, k) in small_params()) {
        let g = SierpinskiGraph::new(n, k).unwrap();
        for u in 0..g.vertex_count() {
            match g.crossing_partner(u) {
                None => prop_assert!(g.is_extreme(u)),
                Some(p) => {
                    prop_assert!(!g.is_extreme(u));
                    prop_assert_eq!(g.crossing_partner(p), Some(u));
                    prop_assert!(g.is_adjacent(u, p));
                    prop_assert_ne!(g.clique_index(u), g.clique_index(p));
                }
            }
        }
    }

    #[test]
    fn extreme_neighbourhood_is_its_clique((n, k) in small_params()) {
        let g = SierpinskiGraph::new(n, k).unwrap();
        for e in g.extreme_vertices() {
            let mut clique = g.clique_of(e);
            clique.retain(|&u| u != e);
            prop_assert_eq!(g.neighbors(e).into_owned(), clique);
        }
    }

    #[test]
    fn label_id_round_trip((n, k) in small_params(), seed in any::<u64>()) {
        let g = SierpinskiGraph::new(n, k).unwrap();
        let u = (seed as usize) % g.vertex_count();
        let label = g.label(u);
        prop_assert_eq!(g.id_of(&label).unwrap(), u);
        prop_assert_eq!(g.id_of(&label.to_string().parse().unwrap()).unwrap(), u);
    }
}

#[test]
fn recursive_and_direct_constructions_agree() {
    for k in 3..=10usize {
        for n in 1..=8u32 {
            if k.pow(n) > 10_000 {
                break;
            }
            let n = n as usize;
            let direct = SierpinskiGraph::new(n, k).unwrap();
            let recursive = SierpinskiGraph::new_recursive(n, k).unwrap();
            assert_eq!(direct.edges(), recursive.edges(), "S({n},{k})");
            assert_eq!(direct.edges().len(), k * (k.pow(n as u32) - 1) / 2);
            assert_eq!(direct.crossing_edges().len(), (k.pow(n as u32) - k) / 2);
        }
    }
}

use sierpinski_codes::constructions::{construct, predicted_size};
use sierpinski_codes::verify::verify;
use sierpinski_codes::{Adjacency, CodeKind, SierpinskiGraph};

const KINDS: [CodeKind; 3] = [
    CodeKind::Identifying,
    CodeKind::LocatingDominating,
    CodeKind::TotalDominating,
];

fn instances() -> Vec<SierpinskiGraph> {
    let mut out = Vec::new();
    for k in 3..=10usize {
        for n in 2..=8u32 {
            if k.pow(n) > 10_000 {
                break;
            }
            out.push(SierpinskiGraph::new(n as usize, k).unwrap());
        }
    }
    out
}

#[test]
fn every_construction_verifies_with_predicted_size() {
    for g in instances() {
        for kind in KINDS {
            let code = construct(&g, kind).unwrap();
            assert_eq!(
                code.len(),
                predicted_size(kind, g.n(), g.k()).unwrap(),
                "S({},{}) {kind}",
                g.n(),
                g.k()
            );
            let report = verify(&g, code.members(), kind);
            assert!(report.valid, "S({},{}) {kind}: {:?}", g.n(), g.k(), report.witness);
        }
    }
}

#[test]
fn identifying_codes_also_locate_and_totally_dominate() {
    for g in instances().into_iter().filter(|g| g.vertex_count() <= 3000) {
        let code = construct(&g, CodeKind::Identifying).unwrap();
        assert!(verify(&g, code.members(), CodeKind::LocatingDominating).valid);
        assert!(verify(&g, code.members(), CodeKind::TotalDominating).valid);
    }
}

#[test]
fn locating_dominating_shape() {
    for g in instances() {
        let code = construct(&g, CodeKind::LocatingDominating).unwrap();
        let k = g.k();
        for (a, b) in g.crossing_edges() {
            // edges inside a copy of S(2,k) join vertices in the same block
            if a / (k * k) == b / (k * k) {
                assert!(code.contains(a) ^ code.contains(b), "S({},{}) edge ({a},{b})", g.n(), k);
            } else {
                assert!(!code.contains(a) && !code.contains(b));
            }
        }
        for clique in g.cliques() {
            assert!(clique.iter().any(|&u| code.contains(u)));
        }
    }
}

#[test]
fn even_total_dominating_codes_are_perfect_matchings() {
    for g in instances().into_iter().filter(|g| g.k() % 2 == 0) {
        let code = construct(&g, CodeKind::TotalDominating).unwrap();
        for clique in g.cliques() {
            assert_eq!(clique.iter().filter(|&&u| code.contains(u)).count(), 1);
        }
        for u in code.members().iter() {
            let inside = g.neighbors(u).iter().filter(|&&v| code.contains(v)).count();
            assert_eq!(inside, 1, "S({},{}) vertex {u}", g.n(), g.k());
        }
    }
}

#[test]
fn odd_total_dominating_codes_have_one_extra_vertex() {
    for g in instances().into_iter().filter(|g| g.k() % 2 == 1) {
        let code = construct(&g, CodeKind::TotalDominating).unwrap();
        assert_eq!(code.len(), g.vertex_count() / g.k() + 1);
    }
}

#[test]
fn code_file_round_trip() {
    let g = SierpinskiGraph::new(3, 5).unwrap();
    for kind in KINDS {
        let code = construct(&g, kind).unwrap();
        let text = code.to_file_string(&g);
        assert_eq!(sierpinski_codes::Code::parse(&g, &text).unwrap(), code);
    }
}

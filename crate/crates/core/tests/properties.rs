mod common;

use proptest::prelude::*;
use surftri::canon::isomorphism;
use surftri::moves::{all_split_moves, classify_all, contract_edge};
use surftri::{automorphisms, canonical_code, isomorphic, shrink_edge, Impediment, Move, Triangulation};

use common::*;

fn new_vertex_edge(t: &Triangulation, m: Move) -> (u32, u32) {
    match m {
        Move::Split { v, .. } | Move::SplitTruncated { v, .. } => (v, t.order() as u32),
        Move::Shrink { .. } => unreachable!(),
    }
}

fn grown() -> impl Strategy<Value = Triangulation> {
    (0..4usize, prop::collection::vec(any::<usize>(), 0..5)).prop_map(|(s, choices)| grow(&seeds()[s], &choices))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn split_then_shrink_is_identity(t in grown(), pick in any::<usize>()) {
        let moves = all_split_moves(&t);
        let m = moves[pick % moves.len()];
        let split = m.apply(&t).unwrap();
        prop_assert_eq!(split.order(), t.order() + 1);
        let back = shrink_edge(&split, new_vertex_edge(&t, m)).unwrap();
        prop_assert!(isomorphic(&back, &t), "{} not undone", m);
    }

    #[test]
    fn splits_and_cable_shrinks_keep_the_surface(t in grown(), pick in any::<usize>()) {
        let kind = t.surface_kind();
        let moves = all_split_moves(&t);
        let split = moves[pick % moves.len()].apply(&t).unwrap();
        prop_assert_eq!(split.surface_kind(), kind);
        for c in classify_all(&t).into_iter().filter(|c| c.is_cable()) {
            let s = shrink_edge(&t, c.edge).unwrap();
            prop_assert_eq!(s.surface_kind(), kind);
            prop_assert_eq!(s.order(), t.order() - 1);
        }
    }

    #[test]
    fn codes_ignore_labels(t in grown(), swaps in prop::collection::vec(any::<usize>(), 0..20)) {
        let perm = permutation(t.order(), &swaps);
        let r = t.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_code(&r), canonical_code(&t));
        let phi = isomorphism(&t, &r).unwrap();
        for f in t.faces() {
            prop_assert!(r.has_face(f.map(|v| phi[v as usize])));
        }
    }

    #[test]
    fn cable_iff_contraction_is_a_surface_of_the_same_kind(t in grown()) {
        for c in classify_all(&t) {
            let oracle = contract_edge(&t, c.edge)
                .map(|s| s.surface_kind() == t.surface_kind() && s.order() + 1 == t.order())
                .unwrap_or(false);
            prop_assert_eq!(c.is_cable(), oracle, "edge {:?}", c.edge);
        }
    }
}

#[test]
fn link_condition_matches_nonfacial_triangles_on_closed_members() {
    let mut edges = 0;
    for t in all_small().into_iter().filter(|t| t.is_closed()) {
        for c in classify_all(t) {
            let nonfacial = c.impediments.contains(&Impediment::NonfacialTriangle);
            assert_eq!(nonfacial, !link_condition(t, c.edge.0, c.edge.1), "{t:?} {:?}", c.edge);
            edges += 1;
        }
    }
    assert!(edges > 500);
}

#[test]
fn cable_oracle_on_every_small_member() {
    for t in all_small() {
        for c in classify_all(t) {
            let oracle = contract_edge(t, c.edge)
                .map(|s| s.surface_kind() == t.surface_kind() && s.order() + 1 == t.order())
                .unwrap_or(false);
            assert_eq!(c.is_cable(), oracle, "{t:?} {:?}", c.edge);
        }
    }
}

#[test]
fn split_round_trip_on_every_small_member() {
    let mut count = 0;
    for t in all_small().into_iter().filter(|t| t.order() <= 7) {
        for m in all_split_moves(t) {
            let s = m.apply(t).unwrap();
            assert_eq!(s.surface_kind(), t.surface_kind());
            let back = shrink_edge(&s, new_vertex_edge(t, m)).unwrap();
            assert!(isomorphic(&back, t));
            count += 1;
        }
    }
    assert!(count >= 200);
}

#[test]
fn codes_agree_with_brute_force_on_equal_degree_pairs() {
    let mut pairs = 0;
    for catalog in [
        sphere_catalog(),
        projective_catalog(),
        disk_catalog(),
        moebius_catalog(),
    ] {
        let entries = &catalog.entries;
        for (i, a) in entries.iter().enumerate() {
            for b in &entries[i..] {
                let (ta, tb) = (&a.triangulation, &b.triangulation);
                if ta.order() != tb.order() || ta.degree_sequence() != tb.degree_sequence() {
                    continue;
                }
                assert_eq!(a.code == b.code, brute_force_isomorphic(ta, tb));
                // A relabeled copy is always isomorphic.
                let perm = permutation(ta.order(), &[3, 1, 4, 1, 5, 9, 2, 6]);
                assert!(brute_force_isomorphic(ta, &ta.relabel(&perm).unwrap()));
                pairs += 1;
            }
        }
    }
    assert!(pairs > 100, "{pairs}");
}

#[test]
fn hundred_relabelings_per_projective_member() {
    for e in &projective_catalog().entries {
        let n = e.order();
        for k in 0..100usize {
            let swaps: Vec<usize> = (0..2 * n).map(|i| (k * 7919 + i * 104729) ^ (k >> 1)).collect();
            let r = e.triangulation.relabel(&permutation(n, &swaps)).unwrap();
            assert_eq!(canonical_code(&r), e.code);
        }
    }
}

#[test]
fn automorphism_groups_are_consistent() {
    for t in all_small() {
        let g = automorphisms(t);
        assert_eq!((6 * t.faces().len()) % g.order(), 0);
        for p in &g.permutations {
            for f in t.faces() {
                assert!(t.has_face(f.map(|v| p[v as usize])));
            }
        }
        let covered: usize = g.orbits.iter().map(Vec::len).sum();
        assert_eq!(covered, t.order());
    }
}

#[test]
fn cables_are_exactly_link_condition_edges_beyond_the_tetrahedron() {
    for t in all_small().into_iter().filter(|t| t.is_closed()) {
        for c in classify_all(t) {
            let link = link_condition(t, c.edge.0, c.edge.1);
            assert_eq!(c.is_cable(), link && t.order() > 4, "{t:?} {:?}", c.edge);
        }
    }
}

#[test]
fn boundary_triangles_become_nonfacial_after_coning() {
    let mut checked = 0;
    for t in all_small().into_iter().filter(|t| t.boundary_cycles().len() == 1) {
        if t.boundary_cycles()[0].len() != 3 {
            continue;
        }
        let apex = t.order() as u32;
        let cone = t.cone_boundary(apex).unwrap();
        if cone.surface_kind() == surftri::SurfaceKind::SPHERE {
            continue;
        }
        for (a, b) in t.boundary_edges() {
            assert!(classify_all(t)
                .iter()
                .any(|c| c.edge == (a, b) && c.impediments.contains(&Impediment::BoundaryTriangle)));
            assert!(cone
                .nonfacial_triangles()
                .iter()
                .any(|f| f.contains(&a) && f.contains(&b)));
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn equal_codes_have_equal_invariants() {
    for t in all_small() {
        let r = t.relabel(&permutation(t.order(), &[2, 7, 1, 8, 2, 8])).unwrap();
        assert_eq!(canonical_code(&r), canonical_code(t));
        assert_eq!(r.degree_sequence(), t.degree_sequence());
        assert_eq!(r.boundary_degree_sequence(), t.boundary_degree_sequence());
        assert_eq!(r.surface_kind(), t.surface_kind());
    }
}

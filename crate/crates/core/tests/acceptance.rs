//! One pass/fail line per acceptance criterion.
//!
//! ```text
//! cargo test --test acceptance -- --nocapture
//! ```

mod common;

use std::collections::{BTreeMap, HashSet};

use surftri::enumerate::{compare_catalogs, enumerate_exhaustive_range, Catalog, DEFAULT_CEILING};
use surftri::moebius::{
    check_no_pylonic_creation, check_pylonicity_destroyed, derive_irreducible_moebius, pylonic_vertices,
    verify_cone_structure, DerivedMember,
};
use surftri::moves::{all_split_moves, classify_all};
use surftri::{automorphisms, is_irreducible, shrink_edge, CanonicalCode, Impediment, Move, SurfaceKind};

use common::*;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn projective_exhaustive() -> Catalog {
    enumerate_exhaustive_range(SurfaceKind::PROJECTIVE_PLANE, 6, 8, DEFAULT_CEILING).unwrap()
}

fn irreducible_members(c: &Catalog) -> Vec<(usize, &surftri::Triangulation)> {
    c.entries
        .iter()
        .filter(|e| is_irreducible(&e.triangulation))
        .map(|e| (e.order(), &e.triangulation))
        .collect()
}

fn counts(exhaustive: &Catalog) -> Outcome {
    let got = exhaustive.count_by_order();
    let want: BTreeMap<usize, usize> = [(6, 1), (7, 3), (8, 16)].into();
    outcome(got == want, format!("{got:?}"))
}

fn engine_agreement(exhaustive: &Catalog) -> Outcome {
    let split = projective_catalog();
    let diff = compare_catalogs(split, exhaustive).unwrap();
    outcome(
        diff.is_empty() && split.len() == 20,
        format!("{} codes, {} differences", split.len(), diff.len()),
    )
}

fn basis() -> Outcome {
    let orders: Vec<usize> = irreducible_members(projective_catalog()).iter().map(|m| m.0).collect();
    outcome(orders == [6, 7], format!("irreducible orders {orders:?}"))
}

fn orbits() -> Outcome {
    let sizes: Vec<Vec<usize>> = irreducible_members(projective_catalog())
        .iter()
        .map(|(_, t)| {
            let mut s: Vec<usize> = automorphisms(t).orbits.iter().map(Vec::len).collect();
            s.sort_unstable_by(|a, b| b.cmp(a));
            s
        })
        .collect();
    outcome(sizes == vec![vec![6], vec![4, 3]], format!("orbit sizes {sizes:?}"))
}

fn pylonic_scan() -> Outcome {
    let c = projective_catalog();
    let reducible: Vec<_> = c.entries.iter().filter(|e| !is_irreducible(&e.triangulation)).collect();
    let pylonic: Vec<(usize, usize)> = reducible
        .iter()
        .filter_map(|e| {
            let a = pylonic_vertices(&e.triangulation).unwrap();
            a.is_pylonic.then(|| (e.order(), a.pylonic_vertices.len()))
        })
        .collect();
    outcome(
        reducible.len() == 18 && pylonic == [(7, 1), (7, 1), (8, 1)],
        format!("{} reducible, pylonic (order, vertices) {pylonic:?}", reducible.len()),
    )
}

fn six_members(members: &[DerivedMember]) -> Outcome {
    let mut orders: Vec<usize> = members.iter().map(|m| m.triangulation.order()).collect();
    orders.sort_unstable();
    let distinct: HashSet<&CanonicalCode> = members.iter().map(|m| &m.code).collect();
    let ok = members
        .iter()
        .all(|m| is_irreducible(&m.triangulation) && m.triangulation.surface_kind() == SurfaceKind::MOEBIUS_BAND);
    outcome(
        ok && distinct.len() == 6 && orders == [5, 6, 6, 6, 6, 7],
        format!("{} classes, orders {orders:?}", distinct.len()),
    )
}

fn degree_evidence(members: &[DerivedMember]) -> Outcome {
    let mut pairs = Vec::new();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            if a.triangulation.degree_sequence() == b.triangulation.degree_sequence() {
                pairs.push((a, b));
            }
        }
    }
    let all5 = |m: &DerivedMember| m.triangulation.boundary_degree_sequence().iter().all(|&d| d == 5);
    match pairs.as_slice() {
        [(a, b)] => outcome(
            a.triangulation.boundary_degree_sequence() != b.triangulation.boundary_degree_sequence()
                && all5(a) != all5(b),
            format!(
                "{} and {} share {:?}; boundary degrees {:?} vs {:?}",
                a.name,
                b.name,
                a.triangulation.degree_sequence(),
                a.triangulation.boundary_degree_sequence(),
                b.triangulation.boundary_degree_sequence()
            ),
        ),
        _ => outcome(false, format!("{} pairs share a degree sequence", pairs.len())),
    }
}

fn cross_check(members: &[DerivedMember]) -> Outcome {
    let c = enumerate_exhaustive_range(SurfaceKind::MOEBIUS_BAND, 5, 8, DEFAULT_CEILING).unwrap();
    let irreducible: Vec<_> = c.entries.iter().filter(|e| is_irreducible(&e.triangulation)).collect();
    let found: HashSet<&CanonicalCode> = irreducible.iter().map(|e| &e.code).collect();
    let derived: HashSet<&CanonicalCode> = members.iter().map(|m| &m.code).collect();
    let at8 = irreducible.iter().filter(|e| e.order() == 8).count();
    outcome(
        found == derived && at8 == 0,
        format!(
            "classes {:?}, {} irreducible, {} at order 8",
            c.count_by_order(),
            found.len(),
            at8
        ),
    )
}

fn property_suites() -> Outcome {
    let members = all_small();
    let (mut round_trips, mut kinds, mut links, mut pairs) = (0, 0, 0, 0);
    let mut failures = Vec::new();

    for t in &members {
        if t.order() <= 7 {
            for m in all_split_moves(t) {
                let s = m.apply(t).unwrap();
                let v = match m {
                    Move::Split { v, .. } | Move::SplitTruncated { v, .. } => v,
                    Move::Shrink { .. } => unreachable!(),
                };
                let back = shrink_edge(&s, (v, t.order() as u32)).unwrap();
                round_trips += 1;
                if !surftri::isomorphic(&back, t) {
                    failures.push(format!("round trip {m}"));
                }
                kinds += 1;
                if s.surface_kind() != t.surface_kind() {
                    failures.push(format!("split {m} changes the surface"));
                }
            }
        }
        for c in classify_all(t) {
            if c.is_cable() {
                kinds += 1;
                if shrink_edge(t, c.edge).unwrap().surface_kind() != t.surface_kind() {
                    failures.push(format!("shrink {:?} changes the surface", c.edge));
                }
            }
            if t.is_closed() {
                links += 1;
                let nonfacial = c.impediments.contains(&Impediment::NonfacialTriangle);
                if nonfacial == link_condition(t, c.edge.0, c.edge.1) {
                    failures.push(format!("link condition on {:?}", c.edge));
                }
            }
        }
    }
    for catalog in [
        sphere_catalog(),
        projective_catalog(),
        disk_catalog(),
        moebius_catalog(),
    ] {
        for (i, a) in catalog.entries.iter().enumerate() {
            for b in &catalog.entries[i + 1..] {
                let (ta, tb) = (&a.triangulation, &b.triangulation);
                if ta.order() == tb.order() && ta.degree_sequence() == tb.degree_sequence() {
                    pairs += 1;
                    if (a.code == b.code) != brute_force_isomorphic(ta, tb) {
                        failures.push(format!("canon disagrees on {} / {}", a.code, b.code));
                    }
                }
            }
        }
    }
    let enough = round_trips >= 200 && kinds >= 200 && links >= 200 && pairs >= 1;
    outcome(
        enough && failures.is_empty(),
        format!(
            "round trips {round_trips}, surface checks {kinds}, link checks {links}, oracle pairs {pairs}, failures {}",
            failures.len()
        ),
    )
}

fn proof_steps(members: &[DerivedMember]) -> Outcome {
    let c = projective_catalog();
    let destroyed = check_pylonicity_destroyed(c);
    let created = check_no_pylonic_creation(c);
    let coned = members
        .iter()
        .filter(|m| {
            verify_cone_structure(&m.triangulation)
                .map(|r| r.holds())
                .unwrap_or(false)
        })
        .count();
    outcome(
        destroyed.passed() && destroyed.checked.len() == 3 && created.passed() && coned == 6,
        format!(
            "{} pylonic members / {} splits, {} non-pylonic members / {} splits, cone structure holds on {coned} of 6",
            destroyed.checked.len(),
            destroyed.total_splits(),
            created.checked.len(),
            created.total_splits()
        ),
    )
}

#[test]
fn acceptance_criteria() {
    let exhaustive = projective_exhaustive();
    let members = derive_irreducible_moebius(projective_catalog()).unwrap();
    let results = [
        ("projective-plane counts 1/3/16 at orders 6/7/8", counts(&exhaustive)),
        (
            "splitting and exhaustive engines agree on 20 codes",
            engine_agreement(&exhaustive),
        ),
        ("two irreducible members, orders 6 and 7", basis()),
        ("orbit sizes 6 and 4+3", orbits()),
        ("three pylonic members among eighteen reducible", pylonic_scan()),
        ("six irreducible Möbius band triangulations", six_members(&members)),
        ("degree sequences separate the six", degree_evidence(&members)),
        ("exhaustive Möbius band cross-check", cross_check(&members)),
        ("property suites", property_suites()),
        ("proof-step checks", proof_steps(&members)),
    ];
    let mut all = true;
    for (i, (name, o)) in results.iter().enumerate() {
        println!(
            "{} criterion {:>2}: {name} ({})",
            if o.passed { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
        all &= o.passed;
    }
    assert!(all, "some acceptance criteria failed");
}

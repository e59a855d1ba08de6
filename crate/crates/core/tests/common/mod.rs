//! Shared fixtures and independent oracles for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use surftri::enumerate::{enumerate_exhaustive_range, generate_by_splitting, Catalog, Seed, DEFAULT_CEILING};
use surftri::moebius::projective_seeds;
use surftri::moves::all_split_moves;
use surftri::{named, SurfaceKind, Triangulation, Vertex};

pub fn projective_catalog() -> &'static Catalog {
    static C: OnceLock<Catalog> = OnceLock::new();
    C.get_or_init(|| generate_by_splitting(&projective_seeds(), 8).unwrap())
}

pub fn sphere_catalog() -> &'static Catalog {
    static C: OnceLock<Catalog> = OnceLock::new();
    C.get_or_init(|| generate_by_splitting(&[Seed::new("tetrahedron", named::tetrahedron())], 8).unwrap())
}

pub fn disk_catalog() -> &'static Catalog {
    static C: OnceLock<Catalog> = OnceLock::new();
    C.get_or_init(|| enumerate_exhaustive_range(SurfaceKind::DISK, 3, 6, DEFAULT_CEILING).unwrap())
}

pub fn moebius_catalog() -> &'static Catalog {
    static C: OnceLock<Catalog> = OnceLock::new();
    C.get_or_init(|| enumerate_exhaustive_range(SurfaceKind::MOEBIUS_BAND, 5, 7, DEFAULT_CEILING).unwrap())
}

/// Every member of the small catalogs above.
pub fn all_small() -> Vec<&'static Triangulation> {
    [
        sphere_catalog(),
        projective_catalog(),
        disk_catalog(),
        moebius_catalog(),
    ]
    .into_iter()
    .flat_map(|c| c.entries.iter().map(|e| &e.triangulation))
    .collect()
}

/// Applies a sequence of split choices, each taken modulo the number of
/// available splits.
pub fn grow(seed: &Triangulation, choices: &[usize]) -> Triangulation {
    let mut t = seed.clone();
    for &c in choices {
        let moves = all_split_moves(&t);
        t = moves[c % moves.len()].apply(&t).unwrap();
    }
    t
}

pub fn seeds() -> Vec<Triangulation> {
    vec![
        named::tetrahedron(),
        named::triangle(),
        named::hemi_icosahedron(),
        named::projective_seven(),
    ]
}

fn face_set(t: &Triangulation) -> BTreeSet<[Vertex; 3]> {
    t.faces().iter().copied().collect()
}

/// Brute-force isomorphism test: tries vertex bijections one vertex at a
/// time, abandoning a partial map as soon as it sends a face to a
/// non-face.
pub fn brute_force_isomorphic(a: &Triangulation, b: &Triangulation) -> bool {
    if a.order() != b.order() || a.faces().len() != b.faces().len() {
        return false;
    }
    let target = face_set(b);
    let n = a.order();
    let mut map = vec![None; n];
    let mut used = vec![false; n];

    fn consistent(a: &Triangulation, target: &BTreeSet<[Vertex; 3]>, map: &[Option<Vertex>]) -> bool {
        a.faces()
            .iter()
            .all(|f| match (map[f[0] as usize], map[f[1] as usize], map[f[2] as usize]) {
                (Some(x), Some(y), Some(z)) => {
                    let mut g = [x, y, z];
                    g.sort_unstable();
                    target.contains(&g)
                }
                _ => true,
            })
    }

    fn extend(
        v: usize,
        a: &Triangulation,
        target: &BTreeSet<[Vertex; 3]>,
        map: &mut Vec<Option<Vertex>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == map.len() {
            return true;
        }
        for w in 0..map.len() {
            if used[w] {
                continue;
            }
            map[v] = Some(w as Vertex);
            used[w] = true;
            if consistent(a, target, map) && extend(v + 1, a, target, map, used) {
                return true;
            }
            map[v] = None;
            used[w] = false;
        }
        false
    }
    extend(0, a, &target, &mut map, &mut used)
}

/// Simplicial link condition for an edge `ab`: the common neighbours of
/// `a` and `b` are exactly the apexes of the faces on `ab`.
pub fn link_condition(t: &Triangulation, a: Vertex, b: Vertex) -> bool {
    let common: BTreeSet<Vertex> = t.neighbors(a).filter(|&x| t.has_edge(b, x)).collect();
    let apexes: BTreeSet<Vertex> = t
        .faces()
        .iter()
        .filter(|f| f.contains(&a) && f.contains(&b))
        .map(|f| f.iter().copied().find(|&x| x != a && x != b).unwrap())
        .collect();
    common == apexes
}

/// A permutation of `0..n` from a sequence of swap choices.
pub fn permutation(n: usize, swaps: &[usize]) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n as Vertex).collect();
    for (i, &s) in swaps.iter().enumerate() {
        p.swap(i % n, s % n);
    }
    p
}

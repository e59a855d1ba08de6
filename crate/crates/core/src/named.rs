//! Small triangulations that serve as seeds and reference complexes.

use crate::complex::{face, Face, Triangulation, Vertex};

pub fn triangle() -> Triangulation {
    Triangulation::build([[0, 1, 2]]).expect("valid")
}

/// Boundary of the tetrahedron, the smallest sphere triangulation.
pub fn tetrahedron() -> Triangulation {
    Triangulation::build([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).expect("valid")
}

pub fn octahedron() -> Triangulation {
    // Poles 0 and 5 around the equator 1-2-3-4.
    let mut faces = Vec::new();
    for i in 0..4 {
        let (a, b) = (1 + i, 1 + (i + 1) % 4);
        faces.push([0, a, b]);
        faces.push([5, a, b]);
    }
    Triangulation::build(faces).expect("valid")
}

/// Face list of the icosahedron: north pole 0, upper ring 1..=5, lower
/// ring 6..=10 (each lower vertex sits between two upper ones), south
/// pole 11.
pub fn icosahedron_faces() -> Vec<Face> {
    let up = |i: u32| 1 + i % 5;
    let low = |i: u32| 6 + i % 5;
    let mut faces = Vec::new();
    for i in 0..5 {
        faces.push(face(0, up(i), up(i + 1)));
        faces.push(face(up(i), up(i + 1), low(i)));
        faces.push(face(low(i), low(i + 1), up(i + 1)));
        faces.push(face(11, low(i), low(i + 1)));
    }
    faces
}

pub fn icosahedron() -> Triangulation {
    Triangulation::build(icosahedron_faces()).expect("valid")
}

/// Antipodal vertex of the icosahedron in the numbering of
/// [`icosahedron_faces`].
pub fn icosahedron_antipode(v: Vertex) -> Vertex {
    match v {
        0 => 11,
        11 => 0,
        1..=5 => 6 + (v - 1 + 2) % 5,
        _ => 1 + (v - 6 + 3) % 5,
    }
}

/// The antipodal quotient of the icosahedron: the projective plane
/// triangulated by K6 with 10 faces, the unique 6-vertex one.
pub fn hemi_icosahedron() -> Triangulation {
    let class = |v: Vertex| v.min(icosahedron_antipode(v));
    let mut faces: Vec<Face> = icosahedron_faces()
        .into_iter()
        .map(|f| face(class(f[0]), class(f[1]), class(f[2])))
        .collect();
    faces.sort_unstable();
    faces.dedup();
    Triangulation::build(faces).expect("valid")
}

/// The irreducible triangulation of the projective plane on 7 vertices,
/// in canonical labeling.
pub fn projective_seven() -> Triangulation {
    Triangulation::build(PROJECTIVE_SEVEN).expect("valid")
}

const PROJECTIVE_SEVEN: [Face; 12] = [
    [0, 1, 2],
    [0, 1, 3],
    [0, 2, 4],
    [0, 3, 4],
    [1, 2, 5],
    [1, 3, 6],
    [1, 4, 5],
    [1, 4, 6],
    [2, 3, 5],
    [2, 3, 6],
    [2, 4, 6],
    [3, 4, 5],
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SurfaceKind;

    #[test]
    fn antipode_is_an_involution_without_fixed_points() {
        for v in 0..12 {
            let a = icosahedron_antipode(v);
            assert_ne!(a, v);
            assert_eq!(icosahedron_antipode(a), v);
        }
        // Antipodal map sends faces to faces.
        let ico = icosahedron();
        for f in ico.faces() {
            assert!(ico.has_face(f.map(icosahedron_antipode)));
        }
    }

    #[test]
    fn reference_kinds() {
        assert_eq!(icosahedron().surface_kind(), SurfaceKind::SPHERE);
        assert_eq!(octahedron().surface_kind(), SurfaceKind::SPHERE);
        let p1 = hemi_icosahedron();
        assert_eq!((p1.order(), p1.edges().len(), p1.faces().len()), (6, 15, 10));
        assert_eq!(p1.surface_kind(), SurfaceKind::PROJECTIVE_PLANE);
    }
}

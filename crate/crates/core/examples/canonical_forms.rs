//! Canonical codes, isomorphism and automorphism orbits.

use surftri::canon::isomorphism;
use surftri::{automorphisms, canonical_code, isomorphic, named, Triangulation};

fn main() {
    let p1 = named::hemi_icosahedron();
    let code = canonical_code(&p1);
    println!("hemi-icosahedron code {code}");

    // Reversing the labels gives the same class.
    let n = p1.order() as u32;
    let perm: Vec<u32> = (0..n).map(|v| n - 1 - v).collect();
    let shuffled = p1.relabel(&perm).unwrap();
    println!("relabeled copy isomorphic: {}", isomorphic(&p1, &shuffled));
    let phi = isomorphism(&p1, &shuffled).unwrap();
    println!("one isomorphism: {phi:?}");

    for (name, t) in [
        ("hemi-icosahedron", p1),
        ("projective seven", named::projective_seven()),
    ] {
        let g = automorphisms(&t);
        println!("{name}: |Aut| = {}, orbits {:?}", g.order(), g.orbits);
    }

    // The canonical form decodes back to a face list.
    let t: Triangulation = canonical_code(&named::octahedron()).to_triangulation();
    print!("canonical octahedron:\n{}", t.to_face_list());
}

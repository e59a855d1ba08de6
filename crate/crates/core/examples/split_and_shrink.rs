//! Every split of a small complex is undone by shrinking the new edge.

use surftri::moves::{all_split_moves, Move};
use surftri::{isomorphic, named, shrink_edge};

fn main() {
    for (name, t) in [
        ("tetrahedron", named::tetrahedron()),
        ("triangle", named::triangle()),
        ("hemi-icosahedron", named::hemi_icosahedron()),
    ] {
        let moves = all_split_moves(&t);
        let mut restored = 0;
        for op in &moves {
            let split = op.apply(&t).expect("listed splits apply");
            let v = match *op {
                Move::Split { v, .. } | Move::SplitTruncated { v, .. } => v,
                Move::Shrink { .. } => unreachable!(),
            };
            // The new vertex always receives the next free id.
            let fresh = t.order() as u32;
            let back = shrink_edge(&split, (v, fresh)).expect("the new edge is a cable");
            restored += isomorphic(&back, &t) as usize;
        }
        println!("{name}: {} splits, {restored} restored by shrinking", moves.len());
    }

    let op: Move = "sp 0 1 2 1".parse().unwrap();
    let t = op.apply(&named::tetrahedron()).unwrap();
    print!("tetrahedron after {op}:\n{}", t.to_face_list());
}

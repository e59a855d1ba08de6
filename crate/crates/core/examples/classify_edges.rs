//! Cable/rod classification before and after a split.

use surftri::moves::{all_split_moves, classify_all};
use surftri::{is_irreducible, named};

fn main() {
    let p1 = named::hemi_icosahedron();
    println!("hemi-icosahedron, irreducible: {}", is_irreducible(&p1));
    for c in classify_all(&p1).iter().take(4) {
        println!("  {c}");
    }
    println!("  ...");

    let op = all_split_moves(&p1)[0];
    let t = op.apply(&p1).expect("listed splits apply");
    println!("after {op}: order {}, irreducible: {}", t.order(), is_irreducible(&t));
    for c in classify_all(&t) {
        if c.is_cable() {
            println!("  {c}");
        }
    }

    println!("triangle:");
    for c in classify_all(&named::triangle()) {
        println!("  {c}");
    }
}

//! Lists the cables and pylonic vertices of every projective-plane
//! triangulation up to order 8, and what removing a pylonic vertex leaves.

use surftri::enumerate::generate_by_splitting;
use surftri::is_irreducible;
use surftri::moebius::{projective_seeds, pylonic_vertices};

fn main() {
    let catalog = generate_by_splitting(&projective_seeds(), 8).unwrap();
    for e in &catalog.entries {
        let a = pylonic_vertices(&e.triangulation).unwrap();
        print!("order {} cables {:<2}", e.order(), a.cables.len());
        if a.is_pylonic {
            let v = a.pylonic_vertices[0];
            let band = e.triangulation.remove_vertex_star(v).unwrap();
            print!(
                " pylonic vertex {v}: removal gives a band of order {}, irreducible {}",
                band.order(),
                is_irreducible(&band)
            );
        }
        println!();
    }
}

//! Enumerates projective-plane triangulations with both engines and
//! compares the results.
//!
//! ```text
//! cargo run --release --example enumerate_projective
//! ```

use surftri::enumerate::{compare_catalogs, enumerate_exhaustive_range, generate_by_splitting, DEFAULT_CEILING};
use surftri::moebius::projective_seeds;
use surftri::{is_irreducible, SurfaceKind};

fn main() {
    let split = generate_by_splitting(&projective_seeds(), 8).unwrap();
    let exhaustive = enumerate_exhaustive_range(SurfaceKind::PROJECTIVE_PLANE, 6, 8, DEFAULT_CEILING).unwrap();
    println!("splitting:  {:?}", split.count_by_order());
    println!("exhaustive: {:?}", exhaustive.count_by_order());
    let diff = compare_catalogs(&split, &exhaustive).unwrap();
    println!("differences: {}", diff.len());

    for e in &split.entries {
        println!(
            "{} order {} {:<11} {}",
            e.code,
            e.order(),
            if is_irreducible(&e.triangulation) {
                "irreducible"
            } else {
                ""
            },
            e.provenance
        );
    }
}

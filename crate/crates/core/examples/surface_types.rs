//! Builds a few complexes from face lists and reports their surface type.
//!
//! ```text
//! cargo run --example surface_types
//! ```

use surftri::{named, SurfaceKind, Triangulation};

fn describe(name: &str, t: &Triangulation) {
    let kind = t.surface_kind();
    println!(
        "{name:<18} V={:<2} E={:<2} F={:<2} {kind}  ({})",
        t.order(),
        t.edges().len(),
        t.faces().len(),
        kind.name().unwrap_or("other")
    );
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    describe("triangle", &named::triangle());
    describe("tetrahedron", &named::tetrahedron());
    describe("icosahedron", &named::icosahedron());
    describe("hemi-icosahedron", &named::hemi_icosahedron());

    // Removing a vertex star from the projective plane leaves a Möbius band.
    let band = named::hemi_icosahedron().remove_vertex_star(0)?;
    describe("band", &band);
    assert_eq!(band.surface_kind(), SurfaceKind::MOEBIUS_BAND);
    println!("  boundary cycle {:?}", band.boundary_cycles()[0]);

    // Face lists parse with line-numbered errors.
    let text = "# a square cut along a diagonal\n0 1 2\n0 2 3\n";
    describe("square", &Triangulation::from_face_list(text)?);
    match Triangulation::from_face_list("0 1 2\n0 1 3\n0 1 4\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("three faces on one edge: {e}"),
    }
    Ok(())
}

//! Combinatorial triangulations of surfaces with and without boundary.
//!
//! The crate provides a validated face-set model ([`complex`]), the
//! splitting and shrinking moves with the cable/rod classification of
//! edges ([`moves`]), canonical codes and automorphism groups ([`canon`]),
//! two independent enumeration engines ([`enumerate`]) and the pipeline
//! that derives and certifies the irreducible triangulations of the
//! Möbius band from the small triangulations of the projective plane
//! ([`moebius`]).

pub mod canon;
pub mod catalog;
pub mod cli;
pub mod complex;
pub mod enumerate;
pub mod facelist;
pub mod moebius;
pub mod moves;
pub mod named;

pub use canon::{automorphisms, canonical_code, isomorphic, vertex_orbits, AutomorphismGroup, CanonicalCode};
pub use complex::{BuildError, ComplexError, Edge, Face, SurfaceKind, Triangulation, Vertex, VertexLink};
pub use moves::{
    all_splits, cable_subgraph, classify_edge, is_irreducible, shrink_edge, split_corner, split_truncated, Corner,
    EdgeClassification, Impediment, Move, MoveError, TruncatedCorner, Verdict,
};

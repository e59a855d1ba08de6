//! Vertex splitting, edge shrinking, and the cable/rod classification of
//! edges.
//!
//! An edge is a rod when at least one impediment holds:
//!
//! * it lies in a 3-cycle of the graph that is not a face,
//! * both ends are boundary vertices but the edge is not a boundary edge
//!   (a chord of the missing disk),
//! * it is a boundary edge of a boundary cycle of length 3,
//! * shrinking it would fold two faces onto each other, which happens
//!   only on the boundary complex of the tetrahedron.
//!
//! Every other edge is a cable and can be shrunk without leaving the class
//! of triangulations of the same surface.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::complex::{edge, face, BuildError, Edge, Face, Triangulation, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Impediment {
    NonfacialTriangle,
    Chord,
    BoundaryTriangle,
    DoubledFace,
}

impl fmt::Display for Impediment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Impediment::NonfacialTriangle => "NonfacialTriangle",
            Impediment::Chord => "Chord",
            Impediment::BoundaryTriangle => "BoundaryTriangle",
            Impediment::DoubledFace => "DoubledFace",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Cable,
    Rod,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClassification {
    pub edge: Edge,
    pub verdict: Verdict,
    /// Sorted, without repetition. Empty iff the verdict is `Cable`.
    pub impediments: Vec<Impediment>,
}

impl EdgeClassification {
    pub fn is_cable(&self) -> bool {
        self.verdict == Verdict::Cable
    }
}

impl fmt::Display for EdgeClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ", self.edge.0, self.edge.1)?;
        match self.verdict {
            Verdict::Cable => f.write_str("Cable"),
            Verdict::Rod => {
                let names: Vec<String> = self.impediments.iter().map(ToString::to_string).collect();
                write!(f, "Rod{{{}}}", names.join(","))
            }
        }
    }
}

/// Two distinct edges `vu`, `vw` at a common vertex `v`; `u < w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Corner {
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
}

impl Corner {
    pub fn new(u: Vertex, v: Vertex, w: Vertex) -> Self {
        Corner {
            u: u.min(w),
            v,
            w: u.max(w),
        }
    }
}

/// An edge `uv` at a boundary vertex `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncatedCorner {
    pub u: Vertex,
    pub v: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("{}-{} is not an edge", .0.0, .0.1)]
    UnknownEdge(Edge),
    #[error("<{u},{v},{w}> is not a corner")]
    NotACorner { u: Vertex, v: Vertex, w: Vertex },
    #[error("vertex {0} is not on the boundary")]
    NotBoundaryVertex(Vertex),
    #[error("edge {}-{} is a rod: {impediments:?}", .edge.0, .edge.1)]
    RodEdge { edge: Edge, impediments: Vec<Impediment> },
    #[error("arc selector must be 0 or 1, got {0}")]
    BadArc(u8),
    #[error("result is not a triangulation: {0}")]
    InvalidResult(#[source] BuildError),
}

/// Provenance record of a single move, serialized as `sp v u w arc`,
/// `spt v u` or `sh a b`.
///
/// For a corner split, `arc = 0` leaves the label `v` on the default side:
/// for an interior `v` the run of faces that follows `vu` in the stored
/// link order, for a boundary `v` the runs that reach the boundary. With
/// `arc = 1` the two sides swap names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    Split { v: Vertex, u: Vertex, w: Vertex, arc: u8 },
    SplitTruncated { v: Vertex, u: Vertex },
    Shrink { a: Vertex, b: Vertex },
}

impl Move {
    pub fn apply(&self, t: &Triangulation) -> Result<Triangulation, MoveError> {
        match *self {
            Move::Split { v, u, w, arc } => split_corner_arc(t, Corner::new(u, v, w), arc),
            Move::SplitTruncated { v, u } => split_truncated(t, TruncatedCorner { u, v }),
            Move::Shrink { a, b } => shrink_edge(t, edge(a, b)),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Split { v, u, w, arc } => write!(f, "sp {v} {u} {w} {arc}"),
            Move::SplitTruncated { v, u } => write!(f, "spt {v} {u}"),
            Move::Shrink { a, b } => write!(f, "sh {a} {b}"),
        }
    }
}

impl FromStr for Move {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        let nums = |rest: &[&str]| -> Result<Vec<u32>, String> {
            rest.iter()
                .map(|t| t.parse::<u32>().map_err(|_| format!("invalid number {t:?}")))
                .collect()
        };
        match tokens.split_first() {
            Some((&"sp", rest)) if rest.len() == 4 => {
                let n = nums(rest)?;
                let arc = u8::try_from(n[3]).map_err(|_| "arc out of range".to_string())?;
                Ok(Move::Split {
                    v: n[0],
                    u: n[1],
                    w: n[2],
                    arc,
                })
            }
            Some((&"spt", rest)) if rest.len() == 2 => {
                let n = nums(rest)?;
                Ok(Move::SplitTruncated { v: n[0], u: n[1] })
            }
            Some((&"sh", rest)) if rest.len() == 2 => {
                let n = nums(rest)?;
                Ok(Move::Shrink { a: n[0], b: n[1] })
            }
            _ => Err(format!("unrecognized move {s:?}")),
        }
    }
}

/// All 3-cliques of the graph of `t` that are not faces.
pub fn nonfacial_triangles(t: &Triangulation) -> &[Face] {
    t.nonfacial_triangles()
}

pub fn classify_edge(t: &Triangulation, e: Edge) -> Result<EdgeClassification, MoveError> {
    let (a, b) = edge(e.0, e.1);
    if !t.has_edge(a, b) {
        return Err(MoveError::UnknownEdge((a, b)));
    }
    let mut impediments = Vec::new();
    let common = (t.neighbor_mask(a) & t.neighbor_mask(b)).count_ones() as usize;
    if common > t.faces_on_edge(a, b).count() {
        impediments.push(Impediment::NonfacialTriangle);
    }
    let boundary_edge = t.is_boundary_edge(a, b);
    if !boundary_edge && t.is_boundary_vertex(a) && t.is_boundary_vertex(b) {
        impediments.push(Impediment::Chord);
    }
    if boundary_edge && t.boundary_cycle_len(a) == Some(3) {
        impediments.push(Impediment::BoundaryTriangle);
    }
    if !boundary_edge {
        let apexes: Vec<Vertex> = t
            .faces_on_edge(a, b)
            .map(|fi| crate::complex::third(&t.faces()[fi], a, b))
            .collect();
        if t.has_face([a, apexes[0], apexes[1]]) && t.has_face([b, apexes[0], apexes[1]]) {
            impediments.push(Impediment::DoubledFace);
        }
    }
    let verdict = if impediments.is_empty() {
        Verdict::Cable
    } else {
        Verdict::Rod
    };
    Ok(EdgeClassification {
        edge: (a, b),
        verdict,
        impediments,
    })
}

pub fn classify_all(t: &Triangulation) -> Vec<EdgeClassification> {
    t.edges()
        .iter()
        .map(|&e| classify_edge(t, e).expect("edge of t"))
        .collect()
}

/// The edges that are cables, in increasing order.
pub fn cable_subgraph(t: &Triangulation) -> Vec<Edge> {
    classify_all(t)
        .into_iter()
        .filter(EdgeClassification::is_cable)
        .map(|c| c.edge)
        .collect()
}

pub fn is_irreducible(t: &Triangulation) -> bool {
    t.edges()
        .iter()
        .all(|&e| !classify_edge(t, e).expect("edge of t").is_cable())
}

pub fn split_corner(t: &Triangulation, c: Corner) -> Result<Triangulation, MoveError> {
    split_corner_arc(t, c, 0)
}

fn split_corner_arc(t: &Triangulation, c: Corner, arc: u8) -> Result<Triangulation, MoveError> {
    let Corner { u, v, w } = c;
    if arc > 1 {
        return Err(MoveError::BadArc(arc));
    }
    if !t.contains_vertex(v) {
        return Err(MoveError::UnknownVertex(v));
    }
    if u == w || !t.has_edge(v, u) || !t.has_edge(v, w) {
        return Err(MoveError::NotACorner { u, v, w });
    }
    let link = t.link(v);
    let k = link.neighbors.len();
    let iu = link.position(u).expect("u is a neighbor");
    let iw = link.position(w).expect("w is a neighbor");
    // Indices j of the link faces {v, n[j], n[j+1]} that move to the new vertex.
    let moved: Vec<usize> = if link.is_cycle {
        let (from, to) = if arc == 0 { (iw, iu) } else { (iu, iw) };
        let len = (to + k - from) % k;
        (0..len).map(|s| (from + s) % k).collect()
    } else {
        let (lo, hi) = (iu.min(iw), iu.max(iw));
        if arc == 0 {
            (lo..hi).collect()
        } else {
            (0..lo).chain(hi..k - 1).collect()
        }
    };
    let fresh = t.order() as Vertex;
    let moved_faces: Vec<Face> = moved
        .iter()
        .map(|&j| face(v, link.neighbors[j], link.neighbors[(j + 1) % k]))
        .collect();
    let faces = t
        .faces()
        .iter()
        .map(|&f| {
            if moved_faces.contains(&f) {
                replace(f, v, fresh)
            } else {
                f
            }
        })
        .chain([[v, fresh, u], [v, fresh, w]]);
    Triangulation::build(faces).map_err(MoveError::InvalidResult)
}

pub fn split_truncated(t: &Triangulation, tc: TruncatedCorner) -> Result<Triangulation, MoveError> {
    let TruncatedCorner { u, v } = tc;
    if !t.contains_vertex(v) {
        return Err(MoveError::UnknownVertex(v));
    }
    if !t.is_boundary_vertex(v) {
        return Err(MoveError::NotBoundaryVertex(v));
    }
    if !t.has_edge(u, v) {
        return Err(MoveError::UnknownEdge(edge(u, v)));
    }
    let link = t.link(v);
    let iu = link.position(u).expect("u is a neighbor");
    let fresh = t.order() as Vertex;
    let moved_faces: Vec<Face> = (iu..link.neighbors.len() - 1)
        .map(|j| face(v, link.neighbors[j], link.neighbors[j + 1]))
        .collect();
    let faces = t
        .faces()
        .iter()
        .map(|&f| {
            if moved_faces.contains(&f) {
                replace(f, v, fresh)
            } else {
                f
            }
        })
        .chain([[u, v, fresh]]);
    Triangulation::build(faces).map_err(MoveError::InvalidResult)
}

/// Shrinks a cable, keeping the smaller endpoint id.
pub fn shrink_edge(t: &Triangulation, e: Edge) -> Result<Triangulation, MoveError> {
    let class = classify_edge(t, e)?;
    if !class.is_cable() {
        return Err(MoveError::RodEdge {
            edge: class.edge,
            impediments: class.impediments,
        });
    }
    contract_edge(t, class.edge).map_err(MoveError::InvalidResult)
}

/// Identifies the endpoints of `e` and drops the faces containing both,
/// without checking shrinkability first.
pub fn contract_edge(t: &Triangulation, e: Edge) -> Result<Triangulation, BuildError> {
    let (a, b) = edge(e.0, e.1);
    Triangulation::build(
        t.faces()
            .iter()
            .filter(|f| !(f.contains(&a) && f.contains(&b)))
            .map(|&f| replace(f, b, a)),
    )
}

/// Every corner split (default arc) followed by every truncated-corner
/// split, by increasing vertex.
pub fn all_splits(t: &Triangulation) -> Vec<(Move, Triangulation)> {
    all_split_moves(t)
        .into_iter()
        .map(|m| {
            let r = m.apply(t).expect("enumerated splits are legal");
            (m, r)
        })
        .collect()
}

pub fn all_split_moves(t: &Triangulation) -> Vec<Move> {
    let mut out = Vec::new();
    for v in t.vertices() {
        let nbrs: Vec<Vertex> = t.neighbors(v).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                out.push(Move::Split { v, u, w, arc: 0 });
            }
        }
    }
    for v in t.boundary_vertices() {
        for u in t.neighbors(v) {
            out.push(Move::SplitTruncated { v, u });
        }
    }
    out
}

fn replace(f: Face, from: Vertex, to: Vertex) -> Face {
    let g = f.map(|x| if x == from { to } else { x });
    face(g[0], g[1], g[2])
}

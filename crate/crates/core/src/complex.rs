//! Face-set model of triangulated surfaces, closed or with boundary.
//!
//! A [`Triangulation`] is built from a list of vertex triples and is
//! immutable afterwards. Construction validates the surface conditions
//! (every edge in one or two faces, every vertex link a single path or
//! cycle, connectedness) and derives edges, ordered vertex links and the
//! boundary cycles. Input labels are remapped to dense ids `0..n` in
//! increasing label order; the original labels stay available through
//! [`Triangulation::label`].

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

/// Vertex identifier. After [`Triangulation::build`] ids are dense.
pub type Vertex = u32;

/// Unordered vertex pair, always stored with the smaller id first.
pub type Edge = (Vertex, Vertex);

/// Unordered vertex triple, always stored sorted.
pub type Face = [Vertex; 3];

/// Vertex adjacency is kept in 64-bit masks.
pub const MAX_VERTICES: usize = 64;

const NO_FACE: u16 = u16::MAX;

pub fn edge(a: Vertex, b: Vertex) -> Edge {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn face(a: Vertex, b: Vertex, c: Vertex) -> Face {
    let mut f = [a, b, c];
    f.sort_unstable();
    f
}

/// Reasons a face set is not a triangulation of a surface.
///
/// Vertices are reported with their input labels and faces by their
/// position in the input sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("empty face set")]
    Empty,
    #[error("face #{index} repeats a vertex")]
    DegenerateFace { index: usize },
    #[error("face #{index} duplicates face #{first}")]
    DuplicateFace { index: usize, first: usize },
    #[error("edge {}-{} lies in {count} faces", .edge.0, .edge.1)]
    NonSurfaceEdge { edge: Edge, count: usize },
    #[error("link of vertex {0} is not a single path or cycle")]
    PinchedVertex(Vertex),
    #[error("complex is disconnected")]
    Disconnected,
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

/// Errors of the patch operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("expected exactly one boundary cycle, found {0}")]
    NotBordered(usize),
    #[error("vertex {0} already belongs to the complex")]
    VertexClash(Vertex),
    #[error("complex has a boundary")]
    NotClosed,
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("result is not a surface: {0}")]
    ResultNotSurface(#[source] BuildError),
}

/// Topological type of a connected compact surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceKind {
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub boundary_components: usize,
}

impl SurfaceKind {
    pub const SPHERE: SurfaceKind = SurfaceKind::new(2, true, 0);
    pub const PROJECTIVE_PLANE: SurfaceKind = SurfaceKind::new(1, false, 0);
    pub const DISK: SurfaceKind = SurfaceKind::new(1, true, 1);
    pub const MOEBIUS_BAND: SurfaceKind = SurfaceKind::new(0, false, 1);

    pub const fn new(euler_characteristic: i64, orientable: bool, boundary_components: usize) -> Self {
        SurfaceKind {
            euler_characteristic,
            orientable,
            boundary_components,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_components == 0
    }

    /// Short name used on the command line and in catalog headers.
    pub fn name(&self) -> Option<&'static str> {
        match *self {
            SurfaceKind::SPHERE => Some("sphere"),
            SurfaceKind::PROJECTIVE_PLANE => Some("projective"),
            SurfaceKind::DISK => Some("disk"),
            SurfaceKind::MOEBIUS_BAND => Some("moebius"),
            _ => None,
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "sphere" => Some(SurfaceKind::SPHERE),
            "projective" => Some(SurfaceKind::PROJECTIVE_PLANE),
            "disk" => Some(SurfaceKind::DISK),
            "moebius" => Some(SurfaceKind::MOEBIUS_BAND),
            _ => None,
        }
    }
}

impl fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "χ={} {} boundary={}",
            self.euler_characteristic,
            if self.orientable {
                "orientable"
            } else {
                "non-orientable"
            },
            self.boundary_components
        )
    }
}

/// Neighbors of a vertex in the order they appear around it.
///
/// For an interior vertex the sequence is cyclic and starts at the smallest
/// neighbor, continuing towards the smaller of its two link neighbors. For
/// a boundary vertex it is a path starting at the smaller endpoint; both
/// endpoints are joined to the center by boundary edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLink {
    pub center: Vertex,
    pub neighbors: Vec<Vertex>,
    pub is_cycle: bool,
}

impl VertexLink {
    pub fn degree(&self) -> usize {
        self.neighbors.len()
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.neighbors.iter().position(|&x| x == v)
    }

    /// Faces around the center, in link order.
    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        let k = self.neighbors.len();
        let steps = if self.is_cycle { k } else { k - 1 };
        (0..steps).map(move |i| face(self.center, self.neighbors[i], self.neighbors[(i + 1) % k]))
    }
}

/// A validated triangulation of a connected surface, possibly with boundary.
#[derive(Clone)]
pub struct Triangulation {
    labels: Vec<Vertex>,
    faces: Vec<Face>,
    edges: Vec<Edge>,
    edge_faces: Vec<[u16; 2]>,
    adjacency: Vec<u64>,
    links: Vec<VertexLink>,
    boundary: Vec<Vec<Vertex>>,
    on_boundary: u64,
    nonfacial: OnceLock<Vec<Face>>,
}

impl PartialEq for Triangulation {
    fn eq(&self, other: &Self) -> bool {
        self.faces == other.faces
    }
}

impl Eq for Triangulation {}

impl std::hash::Hash for Triangulation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.faces.hash(state);
    }
}

impl fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Triangulation")
            .field("order", &self.order())
            .field("faces", &self.faces)
            .finish()
    }
}

impl Triangulation {
    /// Validates a face set and derives the combinatorial structure.
    pub fn build<I>(faces: I) -> Result<Triangulation, BuildError>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let raw: Vec<[Vertex; 3]> = faces.into_iter().collect();
        if raw.is_empty() {
            return Err(BuildError::Empty);
        }
        for (index, f) in raw.iter().enumerate() {
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(BuildError::DegenerateFace { index });
            }
        }

        let mut labels: Vec<Vertex> = raw.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(BuildError::TooManyVertices(n));
        }
        let dense: HashMap<Vertex, Vertex> = labels.iter().enumerate().map(|(i, &l)| (l, i as Vertex)).collect();

        let mut seen: HashMap<Face, usize> = HashMap::with_capacity(raw.len());
        let mut faces = Vec::with_capacity(raw.len());
        for (index, f) in raw.iter().enumerate() {
            let g = face(dense[&f[0]], dense[&f[1]], dense[&f[2]]);
            if let Some(&first) = seen.get(&g) {
                return Err(BuildError::DuplicateFace { index, first });
            }
            seen.insert(g, index);
            faces.push(g);
        }
        faces.sort_unstable();

        let mut edge_faces = vec![[NO_FACE; 2]; n * n];
        let mut counts = vec![0usize; n * n];
        for (fi, f) in faces.iter().enumerate() {
            for (a, b) in face_edges(f) {
                let slot = a as usize * n + b as usize;
                if counts[slot] < 2 {
                    edge_faces[slot][counts[slot]] = fi as u16;
                }
                counts[slot] += 1;
            }
        }
        let mut edges = Vec::new();
        let mut adjacency = vec![0u64; n];
        for a in 0..n {
            for b in a + 1..n {
                let count = counts[a * n + b];
                if count == 0 {
                    continue;
                }
                if count > 2 {
                    return Err(BuildError::NonSurfaceEdge {
                        edge: (labels[a], labels[b]),
                        count,
                    });
                }
                edges.push((a as Vertex, b as Vertex));
                adjacency[a] |= 1 << b;
                adjacency[b] |= 1 << a;
            }
        }

        let mut link_edges: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); n];
        for f in &faces {
            link_edges[f[0] as usize].push((f[1], f[2]));
            link_edges[f[1] as usize].push((f[0], f[2]));
            link_edges[f[2] as usize].push((f[0], f[1]));
        }
        let mut links = Vec::with_capacity(n);
        for (v, le) in link_edges.iter().enumerate() {
            let link = order_link(v as Vertex, le).ok_or(BuildError::PinchedVertex(labels[v]))?;
            links.push(link);
        }

        // Connectivity of the vertex graph.
        let mut reached = 1u64;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            let mut fresh = adjacency[v] & !reached;
            reached |= fresh;
            while fresh != 0 {
                let w = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                queue.push_back(w);
            }
        }
        if reached.count_ones() as usize != n {
            return Err(BuildError::Disconnected);
        }

        let mut on_boundary = 0u64;
        for link in &links {
            if !link.is_cycle {
                on_boundary |= 1 << link.center;
            }
        }
        let boundary = trace_boundary(&links, on_boundary);

        Ok(Triangulation {
            labels,
            faces,
            edges,
            edge_faces,
            adjacency,
            links,
            boundary,
            on_boundary,
            nonfacial: OnceLock::new(),
        })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + Clone {
        0..self.order() as Vertex
    }

    /// Input label of a dense vertex id.
    pub fn label(&self, v: Vertex) -> Vertex {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[Vertex] {
        &self.labels
    }

    /// Faces in increasing lexicographic order.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        (v as usize) < self.order()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.contains_vertex(a) && self.contains_vertex(b) && self.adjacency[a as usize] >> b & 1 == 1
    }

    pub fn has_face(&self, f: Face) -> bool {
        let f = face(f[0], f[1], f[2]);
        self.faces.binary_search(&f).is_ok()
    }

    /// Indices into [`faces`](Self::faces) of the one or two faces on an edge.
    pub fn faces_on_edge(&self, a: Vertex, b: Vertex) -> impl Iterator<Item = usize> + '_ {
        let slots = if self.has_edge(a, b) {
            let (a, b) = edge(a, b);
            self.edge_faces[a as usize * self.order() + b as usize]
        } else {
            [NO_FACE; 2]
        };
        slots.into_iter().filter(|&s| s != NO_FACE).map(usize::from)
    }

    /// Bitmask of the neighbors of `v`.
    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.adjacency[v as usize]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> {
        BitIter(self.adjacency[v as usize])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v as usize].count_ones() as usize
    }

    pub fn link(&self, v: Vertex) -> &VertexLink {
        &self.links[v as usize]
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }

    /// Boundary cycles as cyclic vertex sequences. Each starts at its
    /// smallest vertex and continues towards the smaller neighbor.
    pub fn boundary_cycles(&self) -> &[Vec<Vertex>] {
        &self.boundary
    }

    pub fn is_boundary_vertex(&self, v: Vertex) -> bool {
        self.on_boundary >> v & 1 == 1
    }

    pub fn boundary_vertices(&self) -> impl Iterator<Item = Vertex> {
        BitIter(self.on_boundary)
    }

    /// An edge lying in exactly one face.
    pub fn is_boundary_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.faces_on_edge(a, b).count() == 1
    }

    pub fn boundary_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied().filter(|&(a, b)| self.is_boundary_edge(a, b))
    }

    /// Length of the boundary cycle through `v`, if `v` is on the boundary.
    pub fn boundary_cycle_len(&self, v: Vertex) -> Option<usize> {
        self.boundary.iter().find(|c| c.contains(&v)).map(Vec::len)
    }

    /// Vertex degrees sorted in decreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Degrees of the boundary vertices, sorted in decreasing order.
    pub fn boundary_degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.boundary_vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// All 3-cliques of the graph that are not faces, sorted.
    pub fn nonfacial_triangles(&self) -> &[Face] {
        self.nonfacial.get_or_init(|| {
            let mut out = Vec::new();
            for &(a, b) in &self.edges {
                let mut common = self.adjacency[a as usize] & self.adjacency[b as usize] & !((2u64 << b) - 1);
                while common != 0 {
                    let c = common.trailing_zeros() as Vertex;
                    common &= common - 1;
                    if !self.has_face([a, b, c]) {
                        out.push([a, b, c]);
                    }
                }
            }
            out
        })
    }

    /// Euler characteristic, orientability and number of boundary cycles.
    pub fn surface_kind(&self) -> SurfaceKind {
        let chi = self.order() as i64 - self.edges.len() as i64 + self.faces.len() as i64;
        SurfaceKind::new(chi, self.is_orientable(), self.boundary.len())
    }

    /// Propagates a face orientation across interior edges; orientable iff
    /// no face is reached with two incompatible orientations.
    fn is_orientable(&self) -> bool {
        let mut oriented: Vec<Option<[Vertex; 3]>> = vec![None; self.faces.len()];
        oriented[0] = Some(self.faces[0]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(fi) = queue.pop_front() {
            let o = oriented[fi].expect("queued faces are oriented");
            for i in 0..3 {
                let (x, y) = (o[i], o[(i + 1) % 3]);
                for gi in self.faces_on_edge(x, y) {
                    if gi == fi {
                        continue;
                    }
                    let g = self.faces[gi];
                    let z = third(&g, x, y);
                    // The neighbor must traverse the shared edge as y -> x.
                    let want = [y, x, z];
                    match oriented[gi] {
                        None => {
                            oriented[gi] = Some(want);
                            queue.push_back(gi);
                        }
                        Some(have) => {
                            if !same_cyclic(&have, &want) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Closes the single boundary cycle with a cone from a new vertex `p`.
    ///
    /// `p` must not be a vertex of the complex. The result is relabeled to
    /// dense ids, so `p` becomes id `order()` when it exceeds every
    /// existing id.
    pub fn cone_boundary(&self, p: Vertex) -> Result<Triangulation, ComplexError> {
        if self.boundary.len() != 1 {
            return Err(ComplexError::NotBordered(self.boundary.len()));
        }
        if self.contains_vertex(p) {
            return Err(ComplexError::VertexClash(p));
        }
        let cycle = &self.boundary[0];
        let k = cycle.len();
        let cone = (0..k).map(|i| [p, cycle[i], cycle[(i + 1) % k]]);
        Triangulation::build(self.faces.iter().copied().chain(cone)).map_err(ComplexError::ResultNotSurface)
    }

    /// Deletes `v` with its incident edges and faces from a closed
    /// complex. The link cycle of `v` becomes the boundary. Ids above `v`
    /// shift down by one.
    pub fn remove_vertex_star(&self, v: Vertex) -> Result<Triangulation, ComplexError> {
        if !self.is_closed() {
            return Err(ComplexError::NotClosed);
        }
        if !self.contains_vertex(v) {
            return Err(ComplexError::UnknownVertex(v));
        }
        let rest = self.faces.iter().copied().filter(|f| !f.contains(&v));
        Triangulation::build(rest).map_err(ComplexError::ResultNotSurface)
    }

    /// Applies a vertex relabeling `v -> perm[v]` and rebuilds.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Triangulation, BuildError> {
        Triangulation::build(
            self.faces
                .iter()
                .map(|f| [perm[f[0] as usize], perm[f[1] as usize], perm[f[2] as usize]]),
        )
    }
}

/// The three edges of a sorted face.
pub fn face_edges(f: &Face) -> [Edge; 3] {
    [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])]
}

/// The vertex of `f` other than `a` and `b`.
pub fn third(f: &Face, a: Vertex, b: Vertex) -> Vertex {
    *f.iter().find(|&&x| x != a && x != b).expect("face has a third vertex")
}

fn same_cyclic(a: &[Vertex; 3], b: &[Vertex; 3]) -> bool {
    (0..3).any(|r| (0..3).all(|i| a[(i + r) % 3] == b[i]))
}

/// Iterator over the set bits of a mask, as vertex ids.
#[derive(Debug, Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Orders the link edges of `center` into a single path or cycle.
fn order_link(center: Vertex, link_edges: &[(Vertex, Vertex)]) -> Option<VertexLink> {
    let mut nbrs: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    for &(a, b) in link_edges {
        nbrs.entry(a).or_default().push(b);
        nbrs.entry(b).or_default().push(a);
    }
    if nbrs.values().any(|n| n.len() > 2) {
        return None;
    }
    let ends: Vec<Vertex> = {
        let mut e: Vec<Vertex> = nbrs.iter().filter(|(_, n)| n.len() == 1).map(|(&v, _)| v).collect();
        e.sort_unstable();
        e
    };
    let is_cycle = ends.is_empty();
    if !is_cycle && ends.len() != 2 {
        return None;
    }
    let start = if is_cycle { *nbrs.keys().min()? } else { ends[0] };
    let mut seq = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let options = &nbrs[&cur];
        let next = match prev {
            None => *options.iter().min()?,
            Some(p) => match options.iter().find(|&&x| x != p) {
                Some(&x) => x,
                None => break,
            },
        };
        if next == start {
            break;
        }
        prev = Some(cur);
        cur = next;
        seq.push(cur);
    }
    if seq.len() != nbrs.len() {
        return None;
    }
    Some(VertexLink {
        center,
        neighbors: seq,
        is_cycle,
    })
}

fn trace_boundary(links: &[VertexLink], on_boundary: u64) -> Vec<Vec<Vertex>> {
    let mut cycles = Vec::new();
    let mut left = on_boundary;
    while left != 0 {
        let start = left.trailing_zeros() as Vertex;
        let ends = |v: Vertex| {
            let n = &links[v as usize].neighbors;
            (n[0], n[n.len() - 1])
        };
        let mut cycle = vec![start];
        left &= !(1 << start);
        let (x, y) = ends(start);
        let mut prev = start;
        let mut cur = x.min(y);
        while cur != start {
            cycle.push(cur);
            left &= !(1 << cur);
            let (x, y) = ends(cur);
            let next = if x == prev { y } else { x };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    cycles
}

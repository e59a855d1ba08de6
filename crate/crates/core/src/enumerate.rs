//! Two independent ways of listing triangulations up to isomorphism.
//!
//! [`generate_by_splitting`] closes a seed set under vertex splitting,
//! layer by layer. [`enumerate_exhaustive`] knows nothing about moves: it
//! grows labeled face sets one face at a time and keeps every complete
//! complex of the requested surface type. Agreement of the two is the
//! completeness check used throughout the crate.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::complex::{face, Face, SurfaceKind, Triangulation, Vertex};
use crate::moves::{all_split_moves, Move};

/// Largest order the exhaustive engine accepts unless configured otherwise.
pub const DEFAULT_CEILING: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("no seeds given")]
    NoSeeds,
    #[error("seeds have different surface types: {0} and {1}")]
    MixedSurfaceKinds(SurfaceKind, SurfaceKind),
    #[error("maximum order {max_order} is below the seed order {seed_order}")]
    OrderBelowSeeds { max_order: usize, seed_order: usize },
    #[error("order {order} exceeds the exhaustive ceiling {ceiling}")]
    CeilingExceeded { order: usize, ceiling: usize },
    #[error("exhaustive enumeration supports at most one boundary component")]
    UnsupportedSurface(SurfaceKind),
    #[error("catalogs are not comparable: {0}")]
    IncomparableCatalogs(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    Splitting,
    Exhaustive,
}

impl Engine {
    pub fn name(&self) -> &'static str {
        match self {
            Engine::Splitting => "splitting",
            Engine::Exhaustive => "exhaustive",
        }
    }

    pub fn from_name(s: &str) -> Option<Engine> {
        match s {
            "splitting" => Some(Engine::Splitting),
            "exhaustive" => Some(Engine::Exhaustive),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    Seed(String),
    Split { parent: CanonicalCode, op: Move },
    Exhaustive,
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Seed(name) => write!(f, "seed {name}"),
            Provenance::Split { parent, op } => write!(f, "split {parent} {op}"),
            Provenance::Exhaustive => f.write_str("exhaustive"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub triangulation: Triangulation,
    pub code: CanonicalCode,
    pub provenance: Provenance,
}

impl CatalogEntry {
    pub fn order(&self) -> usize {
        self.triangulation.order()
    }
}

/// Triangulations of one surface type, one per isomorphism class, sorted
/// by `(order, code)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    pub surface: SurfaceKind,
    pub min_order: usize,
    pub max_order: usize,
    pub engine: Engine,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn of_order(&self, order: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.order() == order)
    }

    pub fn count_by_order(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for o in self.min_order..=self.max_order {
            m.insert(o, 0);
        }
        for e in &self.entries {
            *m.entry(e.order()).or_insert(0) += 1;
        }
        m
    }

    pub fn codes(&self) -> Vec<&CanonicalCode> {
        self.entries.iter().map(|e| &e.code).collect()
    }

    pub fn find(&self, code: &CanonicalCode) -> Option<&CatalogEntry> {
        self.entries
            .binary_search_by(|e| (e.order(), &e.code).cmp(&(code.order(), code)))
            .ok()
            .map(|i| &self.entries[i])
    }

    /// Restricts to the entries satisfying `keep`.
    pub fn filtered(&self, keep: impl Fn(&CatalogEntry) -> bool) -> Catalog {
        Catalog {
            entries: self.entries.iter().filter(|e| keep(e)).cloned().collect(),
            ..self.clone()
        }
    }

    pub(crate) fn sort(&mut self) {
        self.entries
            .sort_by(|a, b| (a.order(), &a.code).cmp(&(b.order(), &b.code)));
    }
}

/// A named starting triangulation for [`generate_by_splitting`].
#[derive(Debug, Clone)]
pub struct Seed {
    pub name: String,
    pub triangulation: Triangulation,
}

impl Seed {
    pub fn new(name: impl Into<String>, triangulation: Triangulation) -> Self {
        Seed {
            name: name.into(),
            triangulation,
        }
    }
}

/// Breadth-first closure of `seeds` under every corner and
/// truncated-corner split, up to `max_order` vertices.
pub fn generate_by_splitting(seeds: &[Seed], max_order: usize) -> Result<Catalog, EnumerateError> {
    let first = seeds.first().ok_or(EnumerateError::NoSeeds)?;
    let surface = first.triangulation.surface_kind();
    for s in seeds {
        let k = s.triangulation.surface_kind();
        if k != surface {
            return Err(EnumerateError::MixedSurfaceKinds(surface, k));
        }
    }
    let seed_order = seeds.iter().map(|s| s.triangulation.order()).max().unwrap_or(0);
    if max_order < seed_order {
        return Err(EnumerateError::OrderBelowSeeds { max_order, seed_order });
    }
    let min_order = seeds.iter().map(|s| s.triangulation.order()).min().unwrap_or(0);

    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut layers: BTreeMap<usize, Vec<CatalogEntry>> = BTreeMap::new();
    for s in seeds {
        let code = canonical_code(&s.triangulation);
        if seen.insert(code.clone()) {
            layers.entry(s.triangulation.order()).or_default().push(CatalogEntry {
                triangulation: s.triangulation.clone(),
                code,
                provenance: Provenance::Seed(s.name.clone()),
            });
        }
    }

    for order in min_order..=max_order {
        let mut layer = layers.remove(&order).unwrap_or_default();
        layer.sort_by(|a, b| a.code.cmp(&b.code));
        if order < max_order {
            let children: Vec<CatalogEntry> = layer
                .par_iter()
                .flat_map_iter(|parent| {
                    all_split_moves(&parent.triangulation).into_iter().map(move |op| {
                        let t = op.apply(&parent.triangulation).expect("enumerated splits are legal");
                        CatalogEntry {
                            code: canonical_code(&t),
                            triangulation: t,
                            provenance: Provenance::Split {
                                parent: parent.code.clone(),
                                op,
                            },
                        }
                    })
                })
                .collect();
            let next = layers.entry(order + 1).or_default();
            for child in children {
                if seen.insert(child.code.clone()) {
                    next.push(child);
                }
            }
        }
        entries.extend(layer);
    }

    let mut catalog = Catalog {
        surface,
        min_order,
        max_order,
        engine: Engine::Splitting,
        entries,
    };
    catalog.sort();
    Ok(catalog)
}

/// Every isomorphism class of triangulations of `target` with exactly
/// `order` vertices.
pub fn enumerate_exhaustive(target: SurfaceKind, order: usize) -> Result<Catalog, EnumerateError> {
    enumerate_exhaustive_range(target, order, order, DEFAULT_CEILING)
}

pub fn enumerate_exhaustive_range(
    target: SurfaceKind,
    min_order: usize,
    max_order: usize,
    ceiling: usize,
) -> Result<Catalog, EnumerateError> {
    if max_order > ceiling {
        return Err(EnumerateError::CeilingExceeded {
            order: max_order,
            ceiling,
        });
    }
    if target.boundary_components > 1 {
        return Err(EnumerateError::UnsupportedSurface(target));
    }
    let mut entries = Vec::new();
    for order in min_order.max(3)..=max_order {
        for code in exhaustive_codes(target, order) {
            entries.push(CatalogEntry {
                triangulation: code.to_triangulation(),
                code,
                provenance: Provenance::Exhaustive,
            });
        }
    }
    let mut catalog = Catalog {
        surface: target,
        min_order,
        max_order,
        engine: Engine::Exhaustive,
        entries,
    };
    catalog.sort();
    Ok(catalog)
}

/// Differences between two catalogs of the same surface and order range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogDiff {
    pub only_in_left: Vec<(CanonicalCode, Provenance)>,
    pub only_in_right: Vec<(CanonicalCode, Provenance)>,
}

impl CatalogDiff {
    pub fn is_empty(&self) -> bool {
        self.only_in_left.is_empty() && self.only_in_right.is_empty()
    }

    pub fn len(&self) -> usize {
        self.only_in_left.len() + self.only_in_right.len()
    }
}

pub fn compare_catalogs(left: &Catalog, right: &Catalog) -> Result<CatalogDiff, EnumerateError> {
    if left.surface != right.surface {
        return Err(EnumerateError::IncomparableCatalogs(format!(
            "surfaces differ ({} vs {})",
            left.surface, right.surface
        )));
    }
    if (left.min_order, left.max_order) != (right.min_order, right.max_order) {
        return Err(EnumerateError::IncomparableCatalogs(format!(
            "order ranges differ ({}..={} vs {}..={})",
            left.min_order, left.max_order, right.min_order, right.max_order
        )));
    }
    let l: HashSet<&CanonicalCode> = left.entries.iter().map(|e| &e.code).collect();
    let r: HashSet<&CanonicalCode> = right.entries.iter().map(|e| &e.code).collect();
    let only = |a: &Catalog, other: &HashSet<&CanonicalCode>| {
        a.entries
            .iter()
            .filter(|e| !other.contains(&e.code))
            .map(|e| (e.code.clone(), e.provenance.clone()))
            .collect::<Vec<_>>()
    };
    Ok(CatalogDiff {
        only_in_left: only(left, &r),
        only_in_right: only(right, &l),
    })
}

// ---------------------------------------------------------------------------
// Exhaustive backtracking.
//
// Faces are added around the lexicographically smallest edge that lies in
// exactly one face and is not yet declared a boundary edge. The third
// vertex is either an existing vertex or the next unused label, so every
// complete complex is reached once per ordered starting face (modulo its
// automorphisms) rather than once per labeling.

const NONE: u8 = u8::MAX;

#[derive(Clone)]
struct Search {
    n: usize,
    bordered: bool,
    max_faces: usize,
    mult: Vec<u8>,
    boundary: Vec<bool>,
    has_face: Vec<bool>,
    faces: Vec<Face>,
    // link[x * n + y]: the neighbors of y inside the link of x.
    link: Vec<[u8; 2]>,
    nbr_count: Vec<u8>,
    face_count: Vec<u8>,
    boundary_count: Vec<u8>,
    marks: usize,
    next: usize,
}

impl Search {
    fn new(n: usize, target: SurfaceKind) -> Search {
        let bordered = target.boundary_components == 1;
        // With b boundary edges, F + b = 2(n - χ).
        let max_faces = (2 * (n as i64 - target.euler_characteristic)).max(0) as usize;
        Search {
            n,
            bordered,
            max_faces,
            mult: vec![0; n * n],
            boundary: vec![false; n * n],
            has_face: vec![false; n * n * n],
            faces: Vec::new(),
            link: vec![[NONE; 2]; n * n],
            nbr_count: vec![0; n],
            face_count: vec![0; n],
            boundary_count: vec![0; n],
            marks: 0,
            next: 0,
        }
    }

    fn e(&self, a: usize, b: usize) -> usize {
        a.min(b) * self.n + a.max(b)
    }

    fn face_index(&self, f: &Face) -> usize {
        (f[0] as usize * self.n + f[1] as usize) * self.n + f[2] as usize
    }

    fn smallest_open_edge(&self) -> Option<(usize, usize)> {
        for a in 0..self.next {
            for b in a + 1..self.next {
                let i = a * self.n + b;
                if self.mult[i] == 1 && !self.boundary[i] {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Walks the link path of `x` from endpoint `y` and returns the other end.
    fn path_end(&self, x: usize, y: usize) -> usize {
        let mut prev = NONE as usize;
        let mut cur = y;
        loop {
            let [p, q] = self.link[x * self.n + cur];
            let next = if p as usize != prev && p != NONE {
                p
            } else if q as usize != prev && q != NONE {
                q
            } else {
                return cur;
            };
            prev = cur;
            cur = next as usize;
        }
    }

    fn can_add(&self, a: usize, b: usize, c: usize) -> bool {
        if self.faces.len() + self.boundary_marks() >= self.max_faces {
            return false;
        }
        let f = face(a as Vertex, b as Vertex, c as Vertex);
        if self.has_face[self.face_index(&f)] {
            return false;
        }
        for (x, y) in [(a, b), (a, c), (b, c)] {
            let i = self.e(x, y);
            if self.mult[i] >= 2 || self.boundary[i] {
                return false;
            }
        }
        for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
            // A boundary vertex whose link is one path between its two
            // boundary edges cannot take more faces.
            if self.boundary_count[x] == 2 && self.nbr_count[x] == self.face_count[x] + 1 {
                return false;
            }
            let (my, mz) = (self.mult[self.e(x, y)], self.mult[self.e(x, z)]);
            if my == 1 && mz == 1 && self.path_end(x, y) == z {
                // Closing the link of x into a cycle: only legal if that
                // path is the whole link.
                if self.nbr_count[x] as usize != self.face_count[x] as usize + 1 {
                    return false;
                }
            }
        }
        true
    }

    fn add(&mut self, a: usize, b: usize, c: usize) {
        let f = face(a as Vertex, b as Vertex, c as Vertex);
        let fi = self.face_index(&f);
        self.has_face[fi] = true;
        self.faces.push(f);
        for (x, y) in [(a, b), (a, c), (b, c)] {
            let i = self.e(x, y);
            if self.mult[i] == 0 {
                self.nbr_count[x] += 1;
                self.nbr_count[y] += 1;
            }
            self.mult[i] += 1;
        }
        for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
            self.face_count[x] += 1;
            push_link(&mut self.link[x * self.n + y], z as u8);
            push_link(&mut self.link[x * self.n + z], y as u8);
        }
    }

    fn remove(&mut self, a: usize, b: usize, c: usize) {
        let f = self.faces.pop().expect("face to remove");
        let fi = self.face_index(&f);
        self.has_face[fi] = false;
        for (x, y) in [(a, b), (a, c), (b, c)] {
            let i = self.e(x, y);
            self.mult[i] -= 1;
            if self.mult[i] == 0 {
                self.nbr_count[x] -= 1;
                self.nbr_count[y] -= 1;
            }
        }
        for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
            self.face_count[x] -= 1;
            pop_link(&mut self.link[x * self.n + y], z as u8);
            pop_link(&mut self.link[x * self.n + z], y as u8);
        }
    }

    fn complete(&self) -> Option<Triangulation> {
        if self.next != self.n || self.faces.len() + self.boundary_marks() != self.max_faces {
            return None;
        }
        for x in 0..self.n {
            let (nb, fc) = (self.nbr_count[x], self.face_count[x]);
            let closed = nb == fc;
            let path = nb == fc + 1;
            if !(closed || (path && self.bordered)) {
                return None;
            }
        }
        Triangulation::build(self.faces.iter().copied()).ok()
    }

    /// Pushes every branch point at the given depth into `tasks` instead of
    /// recursing, or recurses fully when `split_depth` is `None`.
    fn run(
        &mut self,
        target: SurfaceKind,
        split_depth: Option<usize>,
        tasks: &mut Vec<Search>,
        found: &mut HashMap<CanonicalCode, ()>,
    ) {
        if let Some(d) = split_depth {
            if self.faces.len() + self.boundary_marks() >= d {
                tasks.push(self.clone());
                return;
            }
        }
        let Some((a, b)) = self.smallest_open_edge() else {
            if let Some(t) = self.complete() {
                if t.surface_kind() == target {
                    found.insert(canonical_code(&t), ());
                }
            }
            return;
        };
        for c in 0..self.next {
            if c != a && c != b && self.can_add(a, b, c) {
                self.add(a, b, c);
                self.run(target, split_depth, tasks, found);
                self.remove(a, b, c);
            }
        }
        if self.next < self.n && self.can_add(a, b, self.next) {
            let c = self.next;
            self.next += 1;
            self.add(a, b, c);
            self.run(target, split_depth, tasks, found);
            self.remove(a, b, c);
            self.next -= 1;
        }
        if self.bordered
            && self.boundary_count[a] < 2
            && self.boundary_count[b] < 2
            && self.faces.len() + self.boundary_marks() < self.max_faces
        {
            let i = self.e(a, b);
            self.boundary[i] = true;
            self.boundary_count[a] += 1;
            self.boundary_count[b] += 1;
            self.marks += 1;
            self.run(target, split_depth, tasks, found);
            self.boundary[i] = false;
            self.boundary_count[a] -= 1;
            self.boundary_count[b] -= 1;
            self.marks -= 1;
        }
    }

    fn boundary_marks(&self) -> usize {
        self.marks
    }
}

fn push_link(slot: &mut [u8; 2], v: u8) {
    if slot[0] == NONE {
        slot[0] = v;
    } else {
        debug_assert_eq!(slot[1], NONE);
        slot[1] = v;
    }
}

fn pop_link(slot: &mut [u8; 2], v: u8) {
    if slot[1] == v {
        slot[1] = NONE;
    } else {
        debug_assert_eq!(slot[0], v);
        slot[0] = slot[1];
        slot[1] = NONE;
    }
}

/// Canonical codes of all triangulations of `target` on `n` vertices, sorted.
fn exhaustive_codes(target: SurfaceKind, n: usize) -> Vec<CanonicalCode> {
    let mut root = Search::new(n, target);
    if n < 3 || root.max_faces < 2 {
        return Vec::new();
    }
    root.next = 3;
    root.add(0, 1, 2);

    let mut tasks = Vec::new();
    let mut found = HashMap::new();
    root.run(target, Some(6), &mut tasks, &mut found);
    let parts: Vec<HashMap<CanonicalCode, ()>> = tasks
        .into_par_iter()
        .map(|mut task| {
            let mut local = HashMap::new();
            task.run(target, None, &mut Vec::new(), &mut local);
            local
        })
        .collect();
    for p in parts {
        found.extend(p);
    }
    let mut codes: Vec<CanonicalCode> = found.into_keys().collect();
    codes.sort();
    codes
}

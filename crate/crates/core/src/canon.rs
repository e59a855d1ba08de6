//! Canonical codes, isomorphism tests and automorphism groups.
//!
//! A traversal starts from an ordered face `(a, b, c)`, which receives the
//! new labels `0, 1, 2`. It then repeatedly takes the lexicographically
//! smallest labeled edge that still has an unvisited face, visits that face
//! and gives its third vertex the next free label if it has none. The
//! sequence of visited faces in new labels identifies the complex up to
//! the choice of start; the canonical code is the smallest such sequence
//! over all `6|F|` starts. Starts that realize the minimum differ by an
//! automorphism, so the same pass yields the automorphism group.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::complex::{face_edges, third, Face, Triangulation, Vertex};

const UNLABELED: u8 = u8::MAX;

/// Isomorphism-class key. Byte layout: order, face count (two bytes,
/// big-endian), then one `(x, y, z)` triple per face after the first, in
/// traversal order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    /// The relabeled face list the code describes, sorted.
    pub fn faces(&self) -> Vec<Face> {
        let mut faces = vec![[0, 1, 2]];
        for chunk in self.0[3..].chunks_exact(3) {
            let mut f = [chunk[0] as Vertex, chunk[1] as Vertex, chunk[2] as Vertex];
            f.sort_unstable();
            faces.push(f);
        }
        faces.sort_unstable();
        faces
    }

    pub fn to_triangulation(&self) -> Triangulation {
        Triangulation::build(self.faces()).expect("canonical codes describe valid complexes")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

impl FromStr for CanonicalCode {
    type Err = hex::FromHexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes = hex::decode(s)?;
        if bytes.len() < 3 || (bytes.len() - 3) % 3 != 0 {
            return Err(hex::FromHexError::InvalidStringLength);
        }
        Ok(CanonicalCode(bytes))
    }
}

/// Face-preserving vertex permutations, `perm[v]` being the image of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub permutations: Vec<Vec<Vertex>>,
    pub orbits: Vec<Vec<Vertex>>,
}

impl AutomorphismGroup {
    pub fn order(&self) -> usize {
        self.permutations.len()
    }

    pub fn orbit_of(&self, v: Vertex) -> &[Vertex] {
        self.orbits
            .iter()
            .find(|o| o.contains(&v))
            .expect("every vertex has an orbit")
    }
}

struct Traversal<'a> {
    t: &'a Triangulation,
    label: Vec<u8>,
    visited: Vec<bool>,
    frontier: Vec<u64>,
    code: Vec<u8>,
}

impl<'a> Traversal<'a> {
    fn new(t: &'a Triangulation) -> Self {
        Traversal {
            t,
            label: vec![UNLABELED; t.order()],
            visited: vec![false; t.faces().len()],
            frontier: vec![0; t.order()],
            code: Vec::with_capacity(3 * t.faces().len()),
        }
    }

    fn has_unvisited(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.t.faces_on_edge(a, b).find(|&fi| !self.visited[fi])
    }

    fn visit(&mut self, fi: usize) {
        self.visited[fi] = true;
        for (a, b) in face_edges(&self.t.faces()[fi]) {
            let (la, lb) = (self.label[a as usize], self.label[b as usize]);
            let (x, y) = (la.min(lb), la.max(lb));
            if self.has_unvisited(a, b).is_some() {
                self.frontier[x as usize] |= 1 << y;
            } else {
                self.frontier[x as usize] &= !(1 << y);
            }
        }
    }

    /// Runs from the ordered start face, comparing against `best` as the
    /// code is produced. Returns `None` as soon as the code exceeds `best`.
    fn run(&mut self, start: [Vertex; 3], best: Option<&[u8]>) -> Option<(Ordering, Vec<u8>)> {
        let t = self.t;
        let n = t.order();
        let nf = t.faces().len();
        self.label.fill(UNLABELED);
        self.visited.fill(false);
        self.frontier.fill(0);
        self.code.clear();
        self.code.extend_from_slice(&[n as u8, (nf >> 8) as u8, nf as u8]);
        let mut inv = vec![0 as Vertex; n];
        for (i, &v) in start.iter().enumerate() {
            self.label[v as usize] = i as u8;
            inv[i] = v;
        }
        let mut next = 3u8;
        let f0 = t
            .faces()
            .binary_search(&crate::complex::face(start[0], start[1], start[2]))
            .expect("start is a face");
        self.visit(f0);

        let mut state = match best {
            None => Ordering::Less,
            Some(b) => self.code.as_slice().cmp(&b[..3]),
        };
        if state == Ordering::Greater {
            return None;
        }
        for _ in 1..nf {
            let x = self
                .frontier
                .iter()
                .position(|&m| m != 0)
                .expect("complex is connected");
            let y = self.frontier[x].trailing_zeros() as usize;
            let (a, b) = (inv[x], inv[y]);
            let fi = self.has_unvisited(a, b).expect("frontier edge has an unvisited face");
            let w = third(&t.faces()[fi], a, b);
            if self.label[w as usize] == UNLABELED {
                self.label[w as usize] = next;
                inv[next as usize] = w;
                next += 1;
            }
            let triple = [x as u8, y as u8, self.label[w as usize]];
            if state == Ordering::Equal {
                let pos = self.code.len();
                state = triple
                    .as_slice()
                    .cmp(&best.expect("equal implies a best")[pos..pos + 3]);
                if state == Ordering::Greater {
                    return None;
                }
            }
            self.code.extend_from_slice(&triple);
            self.visit(fi);
        }
        Some((state, self.label.clone()))
    }
}

fn ordered_starts(t: &Triangulation) -> impl Iterator<Item = [Vertex; 3]> + '_ {
    t.faces()
        .iter()
        .flat_map(|&[a, b, c]| [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]])
}

/// The canonical code together with every labeling (old id to new id)
/// that produces it.
pub fn canonical_labelings(t: &Triangulation) -> (CanonicalCode, Vec<Vec<u8>>) {
    let mut tr = Traversal::new(t);
    let mut best: Option<Vec<u8>> = None;
    let mut labelings = Vec::new();
    for start in ordered_starts(t) {
        if let Some((ord, labeling)) = tr.run(start, best.as_deref()) {
            match (ord, &best) {
                (Ordering::Less, _) | (_, None) => {
                    best = Some(tr.code.clone());
                    labelings.clear();
                    labelings.push(labeling);
                }
                (Ordering::Equal, Some(_)) => labelings.push(labeling),
                (Ordering::Greater, Some(_)) => {}
            }
        }
    }
    (CanonicalCode(best.expect("at least one face")), labelings)
}

pub fn canonical_code(t: &Triangulation) -> CanonicalCode {
    canonical_labelings(t).0
}

pub fn isomorphic(a: &Triangulation, b: &Triangulation) -> bool {
    a.order() == b.order() && a.faces().len() == b.faces().len() && canonical_code(a) == canonical_code(b)
}

/// A vertex bijection `phi` with `phi[v]` in `b`, mapping faces of `a`
/// exactly onto faces of `b`, if one exists.
pub fn isomorphism(a: &Triangulation, b: &Triangulation) -> Option<Vec<Vertex>> {
    if a.order() != b.order() || a.faces().len() != b.faces().len() {
        return None;
    }
    let (ca, la) = canonical_labelings(a);
    let (cb, lb) = canonical_labelings(b);
    if ca != cb {
        return None;
    }
    let inv_b = invert(&lb[0]);
    Some(la[0].iter().map(|&x| inv_b[x as usize]).collect())
}

pub fn automorphisms(t: &Triangulation) -> AutomorphismGroup {
    let (_, labelings) = canonical_labelings(t);
    let inv0 = invert(&labelings[0]);
    let mut permutations: Vec<Vec<Vertex>> = labelings
        .iter()
        .map(|l| l.iter().map(|&x| inv0[x as usize]).collect())
        .collect();
    permutations.sort();
    let orbits = orbits_of(t.order(), &permutations);
    AutomorphismGroup { permutations, orbits }
}

/// Orbits of the automorphism group, each sorted, ordered by least element.
pub fn vertex_orbits(t: &Triangulation) -> Vec<Vec<Vertex>> {
    automorphisms(t).orbits
}

fn invert(labeling: &[u8]) -> Vec<Vertex> {
    let mut inv = vec![0; labeling.len()];
    for (old, &new) in labeling.iter().enumerate() {
        inv[new as usize] = old as Vertex;
    }
    inv
}

fn orbits_of(n: usize, perms: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for perm in perms {
        for (v, &img) in perm.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, img as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut orbits: Vec<Vec<Vertex>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[index[r]].push(v as Vertex);
    }
    orbits
}

//! Irreducible triangulations of the Möbius band.
//!
//! Closing the boundary of an irreducible Möbius band triangulation with a
//! cone gives a projective-plane triangulation in which the cone apex is
//! the only vertex touching every cable (or which has at most one cable).
//! So every irreducible Möbius triangulation arises by deleting a vertex
//! star from a projective-plane triangulation that is either irreducible
//! or pylonic. Splitting a pylonic triangulation of order 7 or 8 always
//! destroys pylonicity, and splitting a non-pylonic one with two or more
//! cables never creates it, so the catalog of orders 6 to 8 suffices.
//!
//! [`build_certificate`] runs that argument end to end, together with an
//! exhaustive search of Möbius band triangulations that does not depend on
//! it, and records every step as a pass/fail clause.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{automorphisms, canonical_code, isomorphic, CanonicalCode};
use crate::catalog::{read_catalog_raw, validate_entry, write_catalog};
use crate::complex::{Edge, SurfaceKind, Triangulation, Vertex};
use crate::enumerate::{
    compare_catalogs, enumerate_exhaustive_range, generate_by_splitting, Catalog, CatalogEntry, Engine, Provenance,
    Seed, DEFAULT_CEILING,
};
use crate::moves::{all_split_moves, cable_subgraph, classify_edge, is_irreducible, Move};
use crate::named;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PipelineError {
    #[error("triangulation has a boundary")]
    NotClosed,
    #[error("triangulation is not irreducible")]
    NotIrreducible,
    #[error("expected exactly one boundary cycle, found {0}")]
    NotBordered(usize),
    #[error("catalog does not cover the projective plane up to order 8: {0}")]
    IncompleteCatalog(String),
}

/// Cables of a closed triangulation and the vertices incident with all of
/// them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PylonicAnalysis {
    pub cables: Vec<Edge>,
    /// Empty when there are no cables.
    pub pylonic_vertices: Vec<Vertex>,
    pub is_pylonic: bool,
}

pub fn pylonic_vertices(t: &Triangulation) -> Result<PylonicAnalysis, PipelineError> {
    if !t.is_closed() {
        return Err(PipelineError::NotClosed);
    }
    let cables = cable_subgraph(t);
    let pylonic_vertices: Vec<Vertex> = if cables.is_empty() {
        Vec::new()
    } else {
        t.vertices()
            .filter(|&v| cables.iter().all(|&(a, b)| a == v || b == v))
            .collect()
    };
    let is_pylonic = !cables.is_empty() && !pylonic_vertices.is_empty();
    Ok(PylonicAnalysis {
        cables,
        pylonic_vertices,
        is_pylonic,
    })
}

/// Checks on the cone `T*` over the boundary of an irreducible bordered `T`.
#[derive(Debug, Clone)]
pub struct ConeReport {
    pub cone: Triangulation,
    /// Id of the cone apex in `cone`; all other ids are those of `T`.
    pub center: Vertex,
    pub analysis: PylonicAnalysis,
    /// With two or more cables, the apex is the unique pylonic vertex.
    pub center_is_unique_pylonic: bool,
    /// Every cable of `T*` is incident with the apex or joins two boundary
    /// vertices of `T`.
    pub cables_in_patch: bool,
    /// No boundary edge of `T` is a cable of `T*`.
    pub no_boundary_cable: bool,
    /// Every chord of `T` is a rod of `T*`.
    pub chords_are_rods: bool,
}

impl ConeReport {
    pub fn holds(&self) -> bool {
        self.center_is_unique_pylonic && self.cables_in_patch && self.no_boundary_cable && self.chords_are_rods
    }
}

pub fn verify_cone_structure(t: &Triangulation) -> Result<ConeReport, PipelineError> {
    if t.boundary_cycles().len() != 1 {
        return Err(PipelineError::NotBordered(t.boundary_cycles().len()));
    }
    if !is_irreducible(t) {
        return Err(PipelineError::NotIrreducible);
    }
    let center = t.order() as Vertex;
    let cone = t.cone_boundary(center).expect("one boundary cycle and a fresh apex");
    let analysis = pylonic_vertices(&cone).expect("cone is closed");
    let center_is_unique_pylonic = analysis.cables.len() < 2 || analysis.pylonic_vertices == [center];
    let cables_in_patch = analysis
        .cables
        .iter()
        .all(|&(a, b)| a == center || b == center || (t.is_boundary_vertex(a) && t.is_boundary_vertex(b)));
    let no_boundary_cable = analysis
        .cables
        .iter()
        .all(|&(a, b)| a == center || b == center || !t.is_boundary_edge(a, b));
    let chords_are_rods = t
        .edges()
        .iter()
        .filter(|&&(a, b)| t.is_boundary_vertex(a) && t.is_boundary_vertex(b) && !t.is_boundary_edge(a, b))
        .all(|&e| {
            !classify_edge(&cone, e)
                .expect("chord is an edge of the cone")
                .is_cable()
        });
    Ok(ConeReport {
        cone,
        center,
        analysis,
        center_is_unique_pylonic,
        cables_in_patch,
        no_boundary_cable,
        chords_are_rods,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SourceKind {
    Irreducible,
    Pylonic,
}

/// One irreducible Möbius band triangulation with the projective-plane
/// triangulation and vertex it was cut from.
#[derive(Debug, Clone)]
pub struct DerivedMember {
    pub name: String,
    pub triangulation: Triangulation,
    pub code: CanonicalCode,
    pub source_code: CanonicalCode,
    pub source_order: usize,
    pub source_kind: SourceKind,
    pub removed_vertex: Vertex,
    /// Size of the automorphism orbit of the removed vertex in the source.
    pub orbit_size: usize,
}

fn check_projective_catalog(catalog: &Catalog) -> Result<(), PipelineError> {
    if catalog.surface != SurfaceKind::PROJECTIVE_PLANE {
        return Err(PipelineError::IncompleteCatalog(format!(
            "surface is {}",
            catalog.surface
        )));
    }
    if catalog.min_order > 6 || catalog.max_order < 8 {
        return Err(PipelineError::IncompleteCatalog(format!(
            "orders {}..={}",
            catalog.min_order, catalog.max_order
        )));
    }
    Ok(())
}

/// Removes one vertex per automorphism orbit from each irreducible member
/// and the pylonic vertex from each pylonic member, keeps the irreducible
/// results and removes duplicates.
///
/// Members are named `M1`, `M2`, ... by source: order first, irreducible
/// sources before pylonic ones, larger orbits first, and among pylonic
/// sources of equal order those whose result shares its degree sequence
/// with an earlier member first.
pub fn derive_irreducible_moebius(catalog: &Catalog) -> Result<Vec<DerivedMember>, PipelineError> {
    check_projective_catalog(catalog)?;
    let relevant: Vec<&CatalogEntry> = catalog.entries.iter().filter(|e| e.order() <= 8).collect();
    let mut candidates: Vec<DerivedMember> = relevant
        .par_iter()
        .flat_map_iter(|entry| {
            let t = &entry.triangulation;
            let mut out = Vec::new();
            if is_irreducible(t) {
                let group = automorphisms(t);
                for orbit in &group.orbits {
                    out.push((SourceKind::Irreducible, orbit[0], orbit.len()));
                }
            } else {
                let analysis = pylonic_vertices(t).expect("catalog is closed");
                if analysis.is_pylonic {
                    let group = automorphisms(t);
                    for &v in &analysis.pylonic_vertices {
                        out.push((SourceKind::Pylonic, v, group.orbit_of(v).len()));
                    }
                }
            }
            out.into_iter().filter_map(move |(kind, v, orbit_size)| {
                let m = t.remove_vertex_star(v).ok()?;
                is_irreducible(&m).then(|| DerivedMember {
                    name: String::new(),
                    code: canonical_code(&m),
                    triangulation: m,
                    source_code: entry.code.clone(),
                    source_order: t.order(),
                    source_kind: kind,
                    removed_vertex: v,
                    orbit_size,
                })
            })
        })
        .collect();

    candidates.sort_by(|a, b| {
        (a.source_order, a.source_kind, std::cmp::Reverse(a.orbit_size), &a.code).cmp(&(
            b.source_order,
            b.source_kind,
            std::cmp::Reverse(b.orbit_size),
            &b.code,
        ))
    });
    let mut seen = HashSet::new();
    candidates.retain(|m| seen.insert(m.code.clone()));

    // Among pylonic sources of one order, put results that repeat an
    // earlier degree sequence first.
    let mut members: Vec<DerivedMember> = Vec::new();
    let mut i = 0;
    while i < candidates.len() {
        let key = (candidates[i].source_order, candidates[i].source_kind);
        let mut group: Vec<DerivedMember> = Vec::new();
        while i < candidates.len() && (candidates[i].source_order, candidates[i].source_kind) == key {
            group.push(candidates[i].clone());
            i += 1;
        }
        if key.1 == SourceKind::Pylonic {
            let earlier: Vec<Vec<usize>> = members.iter().map(|m| m.triangulation.degree_sequence()).collect();
            group.sort_by_key(|m| !earlier.contains(&m.triangulation.degree_sequence()));
        }
        members.extend(group);
    }
    for (k, m) in members.iter_mut().enumerate() {
        m.name = format!("M{}", k + 1);
    }
    Ok(members)
}

/// Outcome of a splitting check over a set of catalog members.
#[derive(Debug, Clone, Default)]
pub struct SplitCheckReport {
    pub checked: Vec<SplitCheckItem>,
    /// Members outside the scope of the check, with the reason.
    pub skipped: Vec<(CanonicalCode, String)>,
}

#[derive(Debug, Clone)]
pub struct SplitCheckItem {
    pub code: CanonicalCode,
    pub order: usize,
    pub cables: usize,
    pub splits: usize,
    /// Splits whose result is pylonic.
    pub violations: Vec<Move>,
}

impl SplitCheckReport {
    pub fn passed(&self) -> bool {
        self.checked.iter().all(|c| c.violations.is_empty())
    }

    pub fn total_splits(&self) -> usize {
        self.checked.iter().map(|c| c.splits).sum()
    }
}

fn split_check(entries: Vec<(&CatalogEntry, usize)>) -> Vec<SplitCheckItem> {
    entries
        .par_iter()
        .map(|&(entry, cables)| {
            let moves = all_split_moves(&entry.triangulation);
            let violations = moves
                .iter()
                .copied()
                .filter(|m| {
                    let r = m.apply(&entry.triangulation).expect("enumerated splits are legal");
                    pylonic_vertices(&r).expect("closed").is_pylonic
                })
                .collect();
            SplitCheckItem {
                code: entry.code.clone(),
                order: entry.order(),
                cables,
                splits: moves.len(),
                violations,
            }
        })
        .collect()
}

/// Every split of a non-pylonic member with at least two cables is again
/// non-pylonic.
pub fn check_no_pylonic_creation(catalog: &Catalog) -> SplitCheckReport {
    let mut report = SplitCheckReport::default();
    let mut scope = Vec::new();
    for e in &catalog.entries {
        let a = pylonic_vertices(&e.triangulation).expect("closed catalog");
        if a.cables.len() < 2 {
            report
                .skipped
                .push((e.code.clone(), format!("{} cables", a.cables.len())));
        } else if a.is_pylonic {
            report.skipped.push((e.code.clone(), "pylonic".into()));
        } else {
            scope.push((e, a.cables.len()));
        }
    }
    report.checked = split_check(scope);
    report
}

/// Every split of a pylonic member is non-pylonic.
pub fn check_pylonicity_destroyed(catalog: &Catalog) -> SplitCheckReport {
    let mut report = SplitCheckReport::default();
    let mut scope = Vec::new();
    for e in &catalog.entries {
        let a = pylonic_vertices(&e.triangulation).expect("closed catalog");
        if a.is_pylonic {
            scope.push((e, a.cables.len()));
        } else {
            report.skipped.push((e.code.clone(), "not pylonic".into()));
        }
    }
    report.checked = split_check(scope);
    report
}

// ---------------------------------------------------------------------------
// Certificate.

#[derive(Debug, Clone)]
pub struct CertificateConfig {
    /// Highest order of the direct exhaustive Möbius band search.
    pub max_cross_check_order: usize,
    pub ceiling: usize,
    /// Catalog file text to use instead of generating the projective-plane
    /// catalog by splitting.
    pub supplied_catalog: Option<String>,
}

impl Default for CertificateConfig {
    fn default() -> Self {
        CertificateConfig {
            max_cross_check_order: 8,
            ceiling: DEFAULT_CEILING,
            supplied_catalog: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub id: &'static str,
    pub name: &'static str,
    pub statement: String,
    pub evidence: Vec<String>,
    pub passed: bool,
}

#[derive(Debug, Clone)]
pub struct CompletenessCertificate {
    pub config: CertificateConfig,
    pub clauses: Vec<Clause>,
    /// Projective-plane catalog the derivation ran on (orders 6 to 8).
    pub catalog: Catalog,
    pub projective_exhaustive: Catalog,
    pub moebius_exhaustive: Catalog,
    pub members: Vec<DerivedMember>,
}

pub const PROJECTIVE_CATALOG_FILE: &str = "projective_6-8_splitting.catalog";
pub const PROJECTIVE_EXHAUSTIVE_FILE: &str = "projective_6-8_exhaustive.catalog";

pub fn moebius_exhaustive_file(max: usize) -> String {
    format!("moebius_5-{max}_exhaustive.catalog")
}

impl CompletenessCertificate {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    pub fn failed_clauses(&self) -> Vec<&Clause> {
        self.clauses.iter().filter(|c| !c.passed).collect()
    }

    pub fn clause(&self, id: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.id == id)
    }

    /// Machine-readable certificate with a stable clause schema.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "# surftri completeness certificate").unwrap();
        writeln!(s, "version {}", env!("CARGO_PKG_VERSION")).unwrap();
        writeln!(s, "surface moebius").unwrap();
        writeln!(s, "cross-check-max-order {}", self.config.max_cross_check_order).unwrap();
        writeln!(s, "result {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        writeln!(s, "clauses {}", self.clauses.len()).unwrap();
        for c in &self.clauses {
            writeln!(s).unwrap();
            writeln!(
                s,
                "clause {} {} {}",
                c.id,
                c.name,
                if c.passed { "PASS" } else { "FAIL" }
            )
            .unwrap();
            writeln!(s, "statement {}", c.statement).unwrap();
            for e in &c.evidence {
                writeln!(s, "evidence {e}").unwrap();
            }
            writeln!(s, "end").unwrap();
        }
        writeln!(s).unwrap();
        writeln!(s, "members {}", self.members.len()).unwrap();
        for m in &self.members {
            writeln!(s, "member {} order {} code {}", m.name, m.triangulation.order(), m.code).unwrap();
        }
        s
    }

    /// Human-readable summary of the six members.
    pub fn report(&self) -> String {
        let mut s = String::new();
        writeln!(s, "Irreducible triangulations of the Möbius band").unwrap();
        writeln!(s, "result: {}", if self.passed() { "PASS" } else { "FAIL" }).unwrap();
        for c in &self.clauses {
            writeln!(s, "  [{}] {} {}", if c.passed { "ok" } else { "FAILED" }, c.id, c.name).unwrap();
        }
        for m in &self.members {
            let t = &m.triangulation;
            writeln!(s).unwrap();
            writeln!(
                s,
                "{}: order {}, {} faces, boundary length {}",
                m.name,
                t.order(),
                t.faces().len(),
                t.boundary_cycles()[0].len()
            )
            .unwrap();
            writeln!(
                s,
                "  from the order-{} {} projective-plane triangulation by removing vertex {} (orbit of size {})",
                m.source_order,
                match m.source_kind {
                    SourceKind::Irreducible => "irreducible",
                    SourceKind::Pylonic => "pylonic",
                },
                m.removed_vertex,
                m.orbit_size
            )
            .unwrap();
            writeln!(s, "  degrees {}", join(&t.degree_sequence())).unwrap();
            writeln!(s, "  boundary degrees {}", join(&t.boundary_degree_sequence())).unwrap();
            writeln!(s, "  boundary cycle {}", join(&t.boundary_cycles()[0])).unwrap();
            writeln!(s, "  faces").unwrap();
            for f in t.faces() {
                writeln!(s, "    {} {} {}", f[0], f[1], f[2]).unwrap();
            }
        }
        s
    }

    /// File name and contents of every artifact the certificate refers to.
    pub fn files(&self) -> Vec<(String, String)> {
        vec![
            ("certificate.txt".into(), self.to_text()),
            ("report.txt".into(), self.report()),
            (PROJECTIVE_CATALOG_FILE.into(), write_catalog(&self.catalog)),
            (
                PROJECTIVE_EXHAUSTIVE_FILE.into(),
                write_catalog(&self.projective_exhaustive),
            ),
            (
                moebius_exhaustive_file(self.config.max_cross_check_order),
                write_catalog(&self.moebius_exhaustive),
            ),
        ]
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// The two irreducible projective-plane triangulations used as seeds.
pub fn projective_seeds() -> Vec<Seed> {
    vec![
        Seed::new("P1", named::hemi_icosahedron()),
        Seed::new("P2", named::projective_seven()),
    ]
}

struct Builder {
    clauses: Vec<Clause>,
}

impl Builder {
    fn push(&mut self, id: &'static str, name: &'static str, statement: &str, evidence: Vec<String>, passed: bool) {
        self.clauses.push(Clause {
            id,
            name,
            statement: statement.to_string(),
            evidence,
            passed,
        });
    }
}

fn counts_text(m: &BTreeMap<usize, usize>) -> String {
    m.iter().map(|(o, c)| format!("{o}:{c}")).collect::<Vec<_>>().join(" ")
}

/// Loads a supplied catalog, keeping the entries that validate.
fn load_supplied(text: &str) -> (Catalog, Vec<String>) {
    let mut problems = Vec::new();
    match read_catalog_raw(text) {
        Ok((header, raw)) => {
            let mut entries = Vec::new();
            for r in &raw {
                match validate_entry(r, SurfaceKind::PROJECTIVE_PLANE) {
                    Ok(e) => entries.push(e),
                    Err(e) => problems.push(e.to_string()),
                }
            }
            if header.surface != SurfaceKind::PROJECTIVE_PLANE {
                problems.push(format!("header surface is {}", header.surface));
            }
            entries.sort_by(|a, b| (a.order(), &a.code).cmp(&(b.order(), &b.code)));
            let catalog = Catalog {
                surface: SurfaceKind::PROJECTIVE_PLANE,
                min_order: header.min_order,
                max_order: header.max_order,
                engine: header.engine,
                entries,
            };
            (catalog, problems)
        }
        Err(e) => {
            problems.push(e.to_string());
            (
                Catalog {
                    surface: SurfaceKind::PROJECTIVE_PLANE,
                    min_order: 6,
                    max_order: 8,
                    engine: Engine::Splitting,
                    entries: Vec::new(),
                },
                problems,
            )
        }
    }
}

/// Parent links: the recorded move applied to the recorded parent gives
/// the entry's class.
fn provenance_problems(catalog: &Catalog) -> Vec<String> {
    let mut problems = Vec::new();
    let mut seen = HashSet::new();
    for e in &catalog.entries {
        if let Provenance::Split { parent, op } = &e.provenance {
            match catalog.find(parent) {
                None => problems.push(format!("{}: parent {parent} not in catalog", e.code)),
                Some(p) => match op.apply(&p.triangulation) {
                    Ok(t) if canonical_code(&t) == e.code => {}
                    _ => problems.push(format!("{}: replaying {op} on its parent gives another class", e.code)),
                },
            }
        }
        if !seen.insert(&e.code) {
            problems.push(format!("{}: duplicate", e.code));
        }
    }
    problems
}

/// Runs the full derivation and the independent cross-check.
pub fn build_certificate(config: &CertificateConfig) -> CompletenessCertificate {
    let mut b = Builder { clauses: Vec::new() };

    // C0: the projective-plane catalog the derivation uses.
    let (catalog, mut problems) = match &config.supplied_catalog {
        Some(text) => load_supplied(text),
        None => (
            generate_by_splitting(&projective_seeds(), 8).expect("seeds share a surface type"),
            Vec::new(),
        ),
    };
    problems.extend(provenance_problems(&catalog));
    let mut evidence = vec![
        format!("catalog {PROJECTIVE_CATALOG_FILE}"),
        format!("entries {}", catalog.len()),
    ];
    evidence.extend(problems.iter().map(|p| format!("problem {p}")));
    b.push(
        "C0",
        "catalog-integrity",
        "every catalog record is a projective-plane triangulation whose face list matches its code and whose parent link replays",
        evidence,
        problems.is_empty(),
    );

    // C1: counts by the exhaustive engine.
    let projective_exhaustive =
        enumerate_exhaustive_range(SurfaceKind::PROJECTIVE_PLANE, 6, 8, config.ceiling).expect("within ceiling");
    let counts = projective_exhaustive.count_by_order();
    let expected: BTreeMap<usize, usize> = [(6, 1), (7, 3), (8, 16)].into();
    b.push(
        "C1",
        "projective-counts",
        "exhaustive enumeration finds 1, 3 and 16 projective-plane triangulations of orders 6, 7 and 8",
        vec![
            format!("counts {}", counts_text(&counts)),
            format!("catalog {PROJECTIVE_EXHAUSTIVE_FILE}"),
        ],
        counts == expected,
    );

    // C2: splitting and exhaustive engines agree.
    let restricted = catalog.filtered(|e| (6..=8).contains(&e.order()));
    let restricted = Catalog {
        min_order: 6,
        max_order: 8,
        ..restricted
    };
    let (agree, mut evidence) = match compare_catalogs(&restricted, &projective_exhaustive) {
        Ok(diff) => {
            let mut ev = vec![format!("diff-size {}", diff.len())];
            ev.extend(
                diff.only_in_left
                    .iter()
                    .map(|(c, p)| format!("only-in-catalog {c} {p}")),
            );
            ev.extend(
                diff.only_in_right
                    .iter()
                    .map(|(c, _)| format!("only-in-exhaustive {c}")),
            );
            (diff.is_empty(), ev)
        }
        Err(e) => (false, vec![format!("problem {e}")]),
    };
    evidence.push(format!("codes {}", restricted.len()));
    b.push(
        "C2",
        "engine-agreement",
        "splitting closure of the two irreducible seeds and exhaustive enumeration give the same 20 classes",
        evidence,
        agree && restricted.len() == 20,
    );

    // C3: irreducible members.
    let irreducible: Vec<&CatalogEntry> = restricted
        .entries
        .iter()
        .filter(|e| is_irreducible(&e.triangulation))
        .collect();
    let irr_orders: Vec<usize> = irreducible.iter().map(|e| e.order()).collect();
    let seeds = projective_seeds();
    let seeds_match = irreducible.len() == seeds.len()
        && seeds.iter().all(|s| {
            irreducible
                .iter()
                .any(|e| isomorphic(&e.triangulation, &s.triangulation))
        });
    b.push(
        "C3",
        "projective-basis",
        "exactly two catalog members are irreducible, of orders 6 and 7, and they are the seeds",
        vec![
            format!("irreducible-orders {}", join(&irr_orders)),
            format!("seeds-match {seeds_match}"),
        ],
        irr_orders == [6, 7] && seeds_match,
    );

    // C4: orbit structure of the irreducible members.
    let orbit_sizes: Vec<Vec<usize>> = irreducible
        .iter()
        .map(|e| {
            let mut s: Vec<usize> = automorphisms(&e.triangulation).orbits.iter().map(Vec::len).collect();
            s.sort_unstable_by(|a, b| b.cmp(a));
            s
        })
        .collect();
    let group_orders: Vec<usize> = irreducible
        .iter()
        .map(|e| automorphisms(&e.triangulation).order())
        .collect();
    b.push(
        "C4",
        "orbits",
        "the automorphism group is vertex-transitive on the order-6 member and has orbits of sizes 4 and 3 on the order-7 member",
        vec![
            format!("orbit-sizes {orbit_sizes:?}"),
            format!("group-orders {}", join(&group_orders)),
        ],
        orbit_sizes == vec![vec![6], vec![4, 3]],
    );

    // C5: pylonic scan.
    let analyses: Vec<(&CatalogEntry, PylonicAnalysis)> = restricted
        .entries
        .par_iter()
        .map(|e| (e, pylonic_vertices(&e.triangulation).expect("closed")))
        .collect();
    let reducible = analyses.iter().filter(|(_, a)| !a.cables.is_empty()).count();
    let pylonic: Vec<&(&CatalogEntry, PylonicAnalysis)> = analyses.iter().filter(|(_, a)| a.is_pylonic).collect();
    let pylonic_orders: Vec<usize> = pylonic.iter().map(|(e, _)| e.order()).collect();
    let unique = pylonic.iter().all(|(_, a)| a.pylonic_vertices.len() == 1);
    let uniqueness_bound = analyses
        .iter()
        .all(|(_, a)| a.cables.len() < 2 || a.pylonic_vertices.len() <= 1);
    let one_cable: Vec<String> = analyses
        .iter()
        .filter(|(_, a)| a.cables.len() == 1)
        .map(|(e, a)| format!("one-cable {} pylonic-vertices {}", e.code, a.pylonic_vertices.len()))
        .collect();
    let mut evidence = vec![
        format!("reducible {reducible}"),
        format!("pylonic-orders {}", join(&pylonic_orders)),
    ];
    for (e, a) in &pylonic {
        evidence.push(format!(
            "pylonic {} order {} cables {} vertex {}",
            e.code,
            e.order(),
            a.cables.len(),
            join(&a.pylonic_vertices)
        ));
    }
    evidence.push(format!("at-most-one-pylonic-vertex-with-two-cables {uniqueness_bound}"));
    evidence.extend(one_cable);
    b.push(
        "C5",
        "pylonic-scan",
        "exactly 3 of the 18 reducible members are pylonic, two of order 7 and one of order 8, each with one pylonic vertex",
        evidence,
        reducible == 18 && pylonic_orders == [7, 7, 8] && unique && uniqueness_bound,
    );

    // C6 and C7: the two splitting arguments.
    let destroyed = check_pylonicity_destroyed(&restricted);
    b.push(
        "C6",
        "pylonicity-destroyed",
        "every split of each pylonic member is non-pylonic",
        split_evidence(&destroyed),
        destroyed.passed() && destroyed.checked.len() == 3,
    );
    let creation = check_no_pylonic_creation(&restricted);
    b.push(
        "C7",
        "no-pylonic-creation",
        "every split of each non-pylonic member with at least two cables is non-pylonic",
        split_evidence(&creation),
        creation.passed(),
    );

    // C8: the derivation.
    let members = match derive_irreducible_moebius(&restricted) {
        Ok(m) => m,
        Err(e) => {
            b.push(
                "C8",
                "derivation",
                "vertex removal yields six irreducible Möbius band triangulations",
                vec![format!("problem {e}")],
                false,
            );
            Vec::new()
        }
    };
    if b.clauses.last().map(|c| c.id) != Some("C8") {
        let mut orders: Vec<usize> = members.iter().map(|m| m.triangulation.order()).collect();
        orders.sort_unstable();
        let kinds_ok = members
            .iter()
            .all(|m| m.triangulation.surface_kind() == SurfaceKind::MOEBIUS_BAND && is_irreducible(&m.triangulation));
        let codes: HashSet<&CanonicalCode> = members.iter().map(|m| &m.code).collect();
        let orbit_sufficient = orbit_sufficiency(&restricted);
        let mut evidence = vec![format!("orders {}", join(&orders))];
        for m in &members {
            evidence.push(format!(
                "member {} order {} code {} source {} vertex {}",
                m.name,
                m.triangulation.order(),
                m.code,
                m.source_code,
                m.removed_vertex
            ));
        }
        evidence.push(format!("orbit-sufficiency {orbit_sufficient}"));
        b.push(
            "C8",
            "derivation",
            "vertex removal from the irreducible and pylonic members yields six pairwise non-isomorphic irreducible Möbius band triangulations of orders 5, 6, 6, 6, 6, 7",
            evidence,
            members.len() == 6 && codes.len() == 6 && orders == [5, 6, 6, 6, 6, 7] && kinds_ok && orbit_sufficient,
        );
    }

    // C9: cone round trip and the patch observations.
    let mut evidence = Vec::new();
    let mut ok = members.len() == 6;
    for m in &members {
        let source = restricted.find(&m.source_code).expect("source is in the catalog");
        match verify_cone_structure(&m.triangulation) {
            Ok(r) => {
                let round_trip = isomorphic(&r.cone, &source.triangulation);
                ok &= r.holds() && round_trip;
                evidence.push(format!(
                    "{} cone-cables {} apex-unique {} cables-in-patch {} no-boundary-cable {} chords-are-rods {} cone-is-source {}",
                    m.name,
                    r.analysis.cables.len(),
                    r.center_is_unique_pylonic,
                    r.cables_in_patch,
                    r.no_boundary_cable,
                    r.chords_are_rods,
                    round_trip
                ));
            }
            Err(e) => {
                ok = false;
                evidence.push(format!("{} problem {e}", m.name));
            }
        }
    }
    b.push(
        "C9",
        "patch-structure",
        "coning each member gives back its source, and the cone apex is the only pylonic vertex whenever the cone has two or more cables",
        evidence,
        ok,
    );

    // C10: degree sequences separate the six.
    let mut evidence = Vec::new();
    let mut shared = Vec::new();
    for (i, a) in members.iter().enumerate() {
        evidence.push(format!(
            "{} degrees {} boundary-degrees {}",
            a.name,
            join(&a.triangulation.degree_sequence()),
            join(&a.triangulation.boundary_degree_sequence())
        ));
        for b2 in &members[i + 1..] {
            if a.triangulation.degree_sequence() == b2.triangulation.degree_sequence() {
                shared.push((a, b2));
            }
        }
    }
    let separated = match shared.as_slice() {
        [(x, y)] => {
            let all5 = |m: &DerivedMember| m.triangulation.boundary_degree_sequence().iter().all(|&d| d == 5);
            evidence.push(format!("shared-degree-pair {} {}", x.name, y.name));
            x.triangulation.boundary_degree_sequence() != y.triangulation.boundary_degree_sequence()
                && (all5(x) != all5(y))
        }
        _ => {
            evidence.push(format!("shared-degree-pairs {}", shared.len()));
            false
        }
    };
    b.push(
        "C10",
        "degree-evidence",
        "exactly one pair of members shares a degree sequence, and in exactly one of the two every boundary vertex has degree 5",
        evidence,
        separated,
    );

    // C11: direct exhaustive search of the Möbius band.
    let max = config.max_cross_check_order;
    let (moebius_exhaustive, ok, evidence) =
        match enumerate_exhaustive_range(SurfaceKind::MOEBIUS_BAND, 5, max, config.ceiling) {
            Ok(c) => {
                let irreducible: Vec<&CatalogEntry> =
                    c.entries.iter().filter(|e| is_irreducible(&e.triangulation)).collect();
                let found: HashSet<&CanonicalCode> = irreducible.iter().map(|e| &e.code).collect();
                let derived: HashSet<&CanonicalCode> = members.iter().map(|m| &m.code).collect();
                let mut per_order: BTreeMap<usize, usize> = (5..=max).map(|o| (o, 0)).collect();
                for e in &irreducible {
                    *per_order.entry(e.order()).or_default() += 1;
                }
                let evidence = vec![
                    format!("classes {}", counts_text(&c.count_by_order())),
                    format!("irreducible {}", counts_text(&per_order)),
                    format!("matches-derivation {}", found == derived),
                    format!("catalog {}", moebius_exhaustive_file(max)),
                ];
                let ok = found == derived && found.len() == 6;
                (c, ok, evidence)
            }
            Err(e) => (
                Catalog {
                    surface: SurfaceKind::MOEBIUS_BAND,
                    min_order: 5,
                    max_order: max,
                    engine: Engine::Exhaustive,
                    entries: Vec::new(),
                },
                false,
                vec![format!("problem {e}")],
            ),
        };
    b.push(
        "C11",
        "moebius-cross-check",
        "exhaustive enumeration of Möbius band triangulations finds exactly the six derived irreducible classes",
        evidence,
        ok && max >= 7,
    );

    CompletenessCertificate {
        config: config.clone(),
        clauses: b.clauses,
        catalog,
        projective_exhaustive,
        moebius_exhaustive,
        members,
    }
}

fn split_evidence(r: &SplitCheckReport) -> Vec<String> {
    let mut ev = vec![
        format!("checked {}", r.checked.len()),
        format!("skipped {}", r.skipped.len()),
        format!("splits {}", r.total_splits()),
    ];
    for c in &r.checked {
        ev.push(format!(
            "member {} order {} cables {} splits {} pylonic-results {}",
            c.code,
            c.order,
            c.cables,
            c.splits,
            c.violations.len()
        ));
    }
    ev
}

/// Removing two vertices of one orbit of an irreducible member gives
/// isomorphic complexes.
fn orbit_sufficiency(catalog: &Catalog) -> bool {
    catalog
        .entries
        .iter()
        .filter(|e| is_irreducible(&e.triangulation))
        .all(|e| {
            let t = &e.triangulation;
            automorphisms(t).orbits.iter().all(|orbit| {
                let first = canonical_code(&t.remove_vertex_star(orbit[0]).expect("closed"));
                orbit
                    .iter()
                    .all(|&v| canonical_code(&t.remove_vertex_star(v).expect("closed")) == first)
            })
        })
}

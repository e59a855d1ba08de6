//! Text serialization of catalogs.
//!
//! ```text
//! # surftri catalog
//! surface projective
//! euler 1
//! orientable false
//! boundary 0
//! orders 6 8
//! engine splitting
//! version 0.1.0
//! entries 20
//!
//! entry 06000a0001030...
//! order 6
//! provenance seed P1
//! 0 1 2
//! ...
//! end
//! ```
//!
//! Entries appear in `(order, code)` order, so two runs with the same
//! configuration produce identical files.

use std::fmt::Write as _;

use thiserror::Error;

use crate::canon::{canonical_code, CanonicalCode};
use crate::complex::{SurfaceKind, Triangulation, Vertex};
use crate::enumerate::{Catalog, CatalogEntry, Engine, Provenance};
use crate::facelist::parse_face;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("entry at line {line}: {message}")]
    Entry { line: usize, message: String },
}

/// Header fields of a catalog file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogHeader {
    pub surface: SurfaceKind,
    pub min_order: usize,
    pub max_order: usize,
    pub engine: Engine,
    pub version: String,
}

/// An entry as written in the file, not yet validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawEntry {
    pub line: usize,
    pub code: String,
    pub order: usize,
    pub provenance: String,
    pub faces: Vec<[Vertex; 3]>,
}

pub fn write_catalog(c: &Catalog) -> String {
    let mut s = String::new();
    writeln!(s, "# surftri catalog").unwrap();
    writeln!(s, "surface {}", c.surface.name().unwrap_or("custom")).unwrap();
    writeln!(s, "euler {}", c.surface.euler_characteristic).unwrap();
    writeln!(s, "orientable {}", c.surface.orientable).unwrap();
    writeln!(s, "boundary {}", c.surface.boundary_components).unwrap();
    writeln!(s, "orders {} {}", c.min_order, c.max_order).unwrap();
    writeln!(s, "engine {}", c.engine.name()).unwrap();
    writeln!(s, "version {}", env!("CARGO_PKG_VERSION")).unwrap();
    writeln!(s, "entries {}", c.entries.len()).unwrap();
    for e in &c.entries {
        writeln!(s).unwrap();
        writeln!(s, "entry {}", e.code).unwrap();
        writeln!(s, "order {}", e.order()).unwrap();
        writeln!(s, "provenance {}", e.provenance).unwrap();
        s.push_str(&e.triangulation.to_face_list());
        writeln!(s, "end").unwrap();
    }
    s
}

/// Parses the file structure without validating entries.
pub fn read_catalog_raw(text: &str) -> Result<(CatalogHeader, Vec<RawEntry>), CatalogError> {
    let mut header: Vec<(usize, String, String)> = Vec::new();
    let mut entries = Vec::new();
    let mut current: Option<RawEntry> = None;
    let syntax = |line: usize, message: String| CatalogError::Syntax { line, message };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let (key, rest) = s.split_once(' ').unwrap_or((s, ""));
        match current.as_mut() {
            None => {
                if key == "entry" {
                    current = Some(RawEntry {
                        line,
                        code: rest.trim().to_string(),
                        order: 0,
                        provenance: String::new(),
                        faces: Vec::new(),
                    });
                } else {
                    header.push((line, key.to_string(), rest.trim().to_string()));
                }
            }
            Some(entry) => match key {
                "order" => {
                    entry.order = rest
                        .trim()
                        .parse()
                        .map_err(|_| syntax(line, format!("bad order {rest:?}")))?;
                }
                "provenance" => entry.provenance = rest.trim().to_string(),
                "end" => entries.push(current.take().expect("inside an entry")),
                _ => entry.faces.push(parse_face(s).map_err(|m| syntax(line, m))?),
            },
        }
    }
    if let Some(e) = current {
        return Err(syntax(e.line, "entry without end".into()));
    }

    let get = |k: &str| -> Result<(usize, &str), CatalogError> {
        header
            .iter()
            .find(|(_, key, _)| key == k)
            .map(|(l, _, v)| (*l, v.as_str()))
            .ok_or_else(|| syntax(0, format!("missing header field {k}")))
    };
    let num = |k: &str| -> Result<i64, CatalogError> {
        let (l, v) = get(k)?;
        v.parse().map_err(|_| syntax(l, format!("bad {k} {v:?}")))
    };
    let (l, orientable) = get("orientable")?;
    let orientable = orientable
        .parse()
        .map_err(|_| syntax(l, format!("bad orientable {orientable:?}")))?;
    let surface = SurfaceKind::new(num("euler")?, orientable, num("boundary")? as usize);
    let (l, orders) = get("orders")?;
    let bounds: Vec<usize> = orders
        .split_whitespace()
        .map(|t| t.parse())
        .collect::<Result<_, _>>()
        .map_err(|_| syntax(l, format!("bad orders {orders:?}")))?;
    if bounds.len() != 2 {
        return Err(syntax(l, format!("bad orders {orders:?}")));
    }
    let (l, engine) = get("engine")?;
    let engine = Engine::from_name(engine).ok_or_else(|| syntax(l, format!("unknown engine {engine:?}")))?;
    let version = get("version").map(|(_, v)| v.to_string()).unwrap_or_default();
    if let Ok((l, _)) = get("entries") {
        if num("entries")? as usize != entries.len() {
            return Err(syntax(
                l,
                format!("header announces {} entries, found {}", num("entries")?, entries.len()),
            ));
        }
    }
    Ok((
        CatalogHeader {
            surface,
            min_order: bounds[0],
            max_order: bounds[1],
            engine,
            version,
        },
        entries,
    ))
}

/// Validates one raw entry: the face list must be a triangulation whose
/// order, surface type and canonical code match the record.
pub fn validate_entry(raw: &RawEntry, surface: SurfaceKind) -> Result<CatalogEntry, CatalogError> {
    let err = |message: String| CatalogError::Entry {
        line: raw.line,
        message,
    };
    let code: CanonicalCode = raw.code.parse().map_err(|e| err(format!("bad code: {e}")))?;
    let t = Triangulation::build(raw.faces.iter().copied()).map_err(|e| err(e.to_string()))?;
    if t.order() != raw.order {
        return Err(err(format!("order {} recorded, {} found", raw.order, t.order())));
    }
    if t.surface_kind() != surface {
        return Err(err(format!("surface {} instead of {}", t.surface_kind(), surface)));
    }
    let actual = canonical_code(&t);
    if actual != code {
        return Err(err(format!("code does not match face list (recomputed {actual})")));
    }
    let provenance = parse_provenance(&raw.provenance).map_err(err)?;
    Ok(CatalogEntry {
        triangulation: t,
        code,
        provenance,
    })
}

pub fn parse_provenance(s: &str) -> Result<Provenance, String> {
    let (kind, rest) = s.split_once(' ').unwrap_or((s, ""));
    match kind {
        "seed" if !rest.is_empty() => Ok(Provenance::Seed(rest.to_string())),
        "exhaustive" => Ok(Provenance::Exhaustive),
        "split" => {
            let (parent, op) = rest
                .split_once(' ')
                .ok_or("split provenance needs a parent and a move")?;
            Ok(Provenance::Split {
                parent: parent.parse().map_err(|e| format!("bad parent code: {e}"))?,
                op: op.parse()?,
            })
        }
        _ => Err(format!("unrecognized provenance {s:?}")),
    }
}

/// Parses and fully validates a catalog file.
pub fn read_catalog(text: &str) -> Result<Catalog, CatalogError> {
    let (h, raw) = read_catalog_raw(text)?;
    let entries = raw
        .iter()
        .map(|r| validate_entry(r, h.surface))
        .collect::<Result<Vec<_>, _>>()?;
    let mut catalog = Catalog {
        surface: h.surface,
        min_order: h.min_order,
        max_order: h.max_order,
        engine: h.engine,
        entries,
    };
    catalog.sort();
    Ok(catalog)
}

//! Plain-text face lists: one face per line, three whitespace-separated
//! non-negative integer labels. Lines starting with `#` are comments and
//! blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::complex::{BuildError, Triangulation, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoadError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: BuildError,
    },
    #[error("{0}")]
    Build(#[from] BuildError),
}

/// Faces as read from text, with the 1-based line number of each.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FaceList {
    pub faces: Vec<[Vertex; 3]>,
    pub lines: Vec<usize>,
}

pub fn parse_face_list(text: &str) -> Result<FaceList, LoadError> {
    let mut out = FaceList::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        out.faces
            .push(parse_face(s).map_err(|message| LoadError::Parse { line, message })?);
        out.lines.push(line);
    }
    Ok(out)
}

pub(crate) fn parse_face(s: &str) -> Result<[Vertex; 3], String> {
    let mut labels = [0 as Vertex; 3];
    let mut tokens = s.split_whitespace();
    for slot in labels.iter_mut() {
        let tok = tokens
            .next()
            .ok_or_else(|| "expected three vertex labels".to_string())?;
        *slot = tok.parse().map_err(|_| format!("invalid vertex label {tok:?}"))?;
    }
    if tokens.next().is_some() {
        return Err("expected three vertex labels".to_string());
    }
    Ok(labels)
}

impl FaceList {
    /// Builds the triangulation, attributing face-level errors to lines.
    pub fn build(&self) -> Result<Triangulation, LoadError> {
        Triangulation::build(self.faces.iter().copied()).map_err(|e| match e {
            BuildError::DegenerateFace { index } | BuildError::DuplicateFace { index, .. } => LoadError::Invalid {
                line: self.lines[index],
                source: e,
            },
            other => LoadError::Build(other),
        })
    }
}

impl Triangulation {
    pub fn from_face_list(text: &str) -> Result<Triangulation, LoadError> {
        parse_face_list(text)?.build()
    }

    /// Sorted faces in dense ids, one per line.
    pub fn to_face_list(&self) -> String {
        let mut s = String::new();
        for f in self.faces() {
            writeln!(s, "{} {} {}", f[0], f[1], f[2]).unwrap();
        }
        s
    }
}

//! Command-line front end.
//!
//! Vertex ids on the command line and in printed face lists are the dense
//! ids `0..n`, assigned to the file labels in increasing order. For files
//! whose labels are already `0..n` the two coincide.
//!
//! Exit status: 0 on success, 1 when a check fails or a move is rejected,
//! 2 on usage, I/O or parse errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::canon::{automorphisms, canonical_code};
use crate::catalog::write_catalog;
use crate::complex::{SurfaceKind, Triangulation};
use crate::enumerate::{
    compare_catalogs, enumerate_exhaustive_range, generate_by_splitting, Catalog, EnumerateError, Seed, DEFAULT_CEILING,
};
use crate::facelist::LoadError;
use crate::moebius::{build_certificate, derive_irreducible_moebius, projective_seeds, CertificateConfig};
use crate::moves::{all_split_moves, classify_all, Move};
use crate::named;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "surftri",
    version,
    about = "Triangulations of surfaces: moves, canonical forms, enumeration"
)]
pub struct RunConfig {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a face list and report its surface type.
    Validate { path: PathBuf },
    /// Classify every edge as cable or rod.
    Classify { path: PathBuf },
    /// Print the canonical code and canonically relabeled face list.
    Canon { path: PathBuf },
    /// Apply a split (`sp v u w arc` or `spt v u`), or list all splits.
    Split {
        path: PathBuf,
        #[arg(long)]
        op: Option<String>,
    },
    /// Shrink the edge `a b` if it is a cable.
    Shrink { path: PathBuf, a: u32, b: u32 },
    /// Enumerate a surface's triangulations up to isomorphism.
    Enumerate {
        #[arg(long, value_enum)]
        surface: SurfaceArg,
        #[arg(long)]
        min_order: Option<usize>,
        #[arg(long)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = EngineArg::Splitting)]
        engine: EngineArg,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
        /// Face lists to use as splitting seeds instead of the built-in ones.
        #[arg(long = "seed")]
        seeds: Vec<PathBuf>,
        /// Directory for catalog files; without it the catalog goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Derive and certify the irreducible triangulations of the Möbius band.
    VerifyMoebius {
        #[arg(long, default_value_t = 8)]
        max_cross_check_order: usize,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: usize,
        /// Projective-plane catalog file to use instead of generating one.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Directory for the certificate, report and catalogs; without it
        /// the certificate goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurfaceArg {
    Sphere,
    Projective,
    Disk,
    Moebius,
}

impl SurfaceArg {
    pub fn kind(self) -> SurfaceKind {
        match self {
            SurfaceArg::Sphere => SurfaceKind::SPHERE,
            SurfaceArg::Projective => SurfaceKind::PROJECTIVE_PLANE,
            SurfaceArg::Disk => SurfaceKind::DISK,
            SurfaceArg::Moebius => SurfaceKind::MOEBIUS_BAND,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Splitting,
    Exhaustive,
    Compare,
}

/// Failure of a command, mapped to an exit status.
enum Failure {
    Usage(String),
    Failed(String),
}

type Outcome = Result<(), Failure>;

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    execute(&config, out, err)
}

pub fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut buffer = Vec::new();
    let result = pool.install(|| dispatch(&config.command, &mut buffer));
    if let Err(e) = out.write_all(&buffer) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Failed(m)) => {
            let _ = writeln!(err, "{m}");
            EXIT_FAILED
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { path } => cmd_validate(path, out),
        Command::Classify { path } => cmd_classify(path, out),
        Command::Canon { path } => cmd_canon(path, out),
        Command::Split { path, op } => cmd_split(path, op.as_deref(), out),
        Command::Shrink { path, a, b } => cmd_shrink(path, *a, *b, out),
        Command::Enumerate {
            surface,
            min_order,
            max_order,
            engine,
            ceiling,
            seeds,
            out: dir,
        } => cmd_enumerate(
            *surface,
            *min_order,
            *max_order,
            *engine,
            *ceiling,
            seeds,
            dir.as_deref(),
            out,
        ),
        Command::VerifyMoebius {
            max_cross_check_order,
            ceiling,
            catalog,
            out: dir,
        } => cmd_verify_moebius(
            *max_cross_check_order,
            *ceiling,
            catalog.as_deref(),
            dir.as_deref(),
            out,
        ),
    }
}

fn load(path: &Path) -> Result<Triangulation, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Triangulation::from_face_list(&text).map_err(|e| match e {
        LoadError::Parse { .. } => Failure::Usage(format!("{}: {e}", path.display())),
        _ => Failure::Failed(format!("{}: invalid: {e}", path.display())),
    })
}

fn cmd_validate(path: &Path, out: &mut dyn Write) -> Outcome {
    let t = load(path)?;
    writeln!(out, "V={} E={} F={}", t.order(), t.edges().len(), t.faces().len())?;
    writeln!(out, "{}", t.surface_kind())?;
    if let Some(name) = t.surface_kind().name() {
        writeln!(out, "surface {name}")?;
    }
    if t.labels().iter().enumerate().any(|(i, &l)| l as usize != i) {
        writeln!(out, "labels renumbered to 0..{}", t.order())?;
    }
    Ok(())
}

fn cmd_classify(path: &Path, out: &mut dyn Write) -> Outcome {
    let t = load(path)?;
    for c in classify_all(&t) {
        writeln!(out, "{c}")?;
    }
    Ok(())
}

fn cmd_canon(path: &Path, out: &mut dyn Write) -> Outcome {
    let t = load(path)?;
    let code = canonical_code(&t);
    let group = automorphisms(&t);
    writeln!(out, "code {code}")?;
    writeln!(out, "automorphisms {}", group.order())?;
    let orbits: Vec<String> = group
        .orbits
        .iter()
        .map(|o| o.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
        .collect();
    writeln!(out, "orbits {}", orbits.join(" "))?;
    write!(out, "{}", code.to_triangulation().to_face_list())?;
    Ok(())
}

fn cmd_split(path: &Path, op: Option<&str>, out: &mut dyn Write) -> Outcome {
    let t = load(path)?;
    match op {
        None => {
            for m in all_split_moves(&t) {
                writeln!(out, "{m}")?;
            }
            Ok(())
        }
        Some(s) => {
            let m: Move = s.parse().map_err(Failure::Usage)?;
            if matches!(m, Move::Shrink { .. }) {
                return Err(Failure::Usage("use the shrink command for sh moves".into()));
            }
            apply_and_print(&t, m, out)
        }
    }
}

fn cmd_shrink(path: &Path, a: u32, b: u32, out: &mut dyn Write) -> Outcome {
    let t = load(path)?;
    apply_and_print(&t, Move::Shrink { a, b }, out)
}

fn apply_and_print(t: &Triangulation, m: Move, out: &mut dyn Write) -> Outcome {
    let r = m.apply(t).map_err(|e| Failure::Failed(format!("{m}: {e}")))?;
    writeln!(out, "# {m}")?;
    write!(out, "{}", r.to_face_list())?;
    Ok(())
}

/// Built-in splitting seeds: the irreducible triangulations of each
/// supported surface.
pub fn default_seeds(surface: SurfaceArg) -> Vec<Seed> {
    match surface {
        SurfaceArg::Sphere => vec![Seed::new("tetrahedron", named::tetrahedron())],
        SurfaceArg::Disk => vec![Seed::new("triangle", named::triangle())],
        SurfaceArg::Projective => projective_seeds(),
        SurfaceArg::Moebius => {
            let catalog = generate_by_splitting(&projective_seeds(), 8).expect("seeds are consistent");
            derive_irreducible_moebius(&catalog)
                .expect("catalog covers orders 6 to 8")
                .into_iter()
                .map(|m| Seed::new(m.name, m.triangulation))
                .collect()
        }
    }
}

fn catalog_file_name(c: &Catalog) -> String {
    format!(
        "{}_{}-{}_{}.catalog",
        c.surface.name().unwrap_or("custom"),
        c.min_order,
        c.max_order,
        c.engine.name()
    )
}

fn emit_catalog(c: &Catalog, dir: Option<&Path>, out: &mut dyn Write) -> Outcome {
    match dir {
        None => write!(out, "{}", write_catalog(c))?,
        Some(d) => {
            fs::create_dir_all(d)?;
            let name = catalog_file_name(c);
            fs::write(d.join(&name), write_catalog(c))?;
            let counts: Vec<String> = c.count_by_order().iter().map(|(o, n)| format!("{o}:{n}")).collect();
            writeln!(
                out,
                "{} {} classes ({}) -> {name}",
                c.engine.name(),
                c.len(),
                counts.join(" ")
            )?;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_enumerate(
    surface: SurfaceArg,
    min_order: Option<usize>,
    max_order: usize,
    engine: EngineArg,
    ceiling: usize,
    seed_paths: &[PathBuf],
    dir: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    let kind = surface.kind();
    let min_order = min_order.unwrap_or(3);
    if min_order > max_order {
        return Err(Failure::Usage(format!(
            "--min-order {min_order} exceeds --max-order {max_order}"
        )));
    }
    let splitting = || -> Result<Catalog, Failure> {
        let seeds = if seed_paths.is_empty() {
            default_seeds(surface)
        } else {
            seed_paths
                .iter()
                .map(|p| Ok(Seed::new(p.display().to_string(), load(p)?)))
                .collect::<Result<Vec<_>, Failure>>()?
        };
        if let Some(s) = seeds.iter().find(|s| s.triangulation.surface_kind() != kind) {
            return Err(Failure::Usage(format!("seed {} is not a {}", s.name, kind)));
        }
        let full = generate_by_splitting(&seeds, max_order)?;
        Ok(Catalog {
            min_order,
            ..full.filtered(|e| e.order() >= min_order)
        })
    };
    let exhaustive = || enumerate_exhaustive_range(kind, min_order, max_order, ceiling);

    match engine {
        EngineArg::Splitting => emit_catalog(&splitting()?, dir, out),
        EngineArg::Exhaustive => emit_catalog(&exhaustive()?, dir, out),
        EngineArg::Compare => {
            let exhaustive = exhaustive()?;
            let splitting = splitting()?;
            if let Some(d) = dir {
                emit_catalog(&splitting, Some(d), out)?;
                emit_catalog(&exhaustive, Some(d), out)?;
            }
            let diff = compare_catalogs(&splitting, &exhaustive)?;
            for (code, p) in &diff.only_in_left {
                writeln!(out, "only-splitting {code} {p}")?;
            }
            for (code, _) in &diff.only_in_right {
                writeln!(out, "only-exhaustive {code}")?;
            }
            writeln!(out, "diff {}", diff.len())?;
            if diff.is_empty() {
                Ok(())
            } else {
                Err(Failure::Failed(format!("engines disagree on {} classes", diff.len())))
            }
        }
    }
}

fn cmd_verify_moebius(
    max_cross_check_order: usize,
    ceiling: usize,
    catalog: Option<&Path>,
    dir: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    if max_cross_check_order > ceiling {
        return Err(EnumerateError::CeilingExceeded {
            order: max_cross_check_order,
            ceiling,
        }
        .into());
    }
    let supplied_catalog = match catalog {
        Some(p) => Some(fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?),
        None => None,
    };
    let cert = build_certificate(&CertificateConfig {
        max_cross_check_order,
        ceiling,
        supplied_catalog,
    });
    match dir {
        None => write!(out, "{}", cert.to_text())?,
        Some(d) => {
            fs::create_dir_all(d)?;
            for (name, text) in cert.files() {
                fs::write(d.join(&name), text)?;
                writeln!(out, "wrote {name}")?;
            }
            for c in &cert.clauses {
                writeln!(out, "{} {} {}", c.id, c.name, if c.passed { "PASS" } else { "FAIL" })?;
            }
        }
    }
    if cert.passed() {
        Ok(())
    } else {
        let ids: Vec<String> = cert
            .failed_clauses()
            .iter()
            .map(|c| format!("{} {}", c.id, c.name))
            .collect();
        Err(Failure::Failed(format!("certificate failed: {}", ids.join(", "))))
    }
}

//! Derives the irreducible triangulations of the Möbius band and checks
//! the derivation.
//!
//! ```text
//! cargo run --release --example moebius_certificate [OUT_DIR]
//! ```

use std::{env, fs, path::PathBuf};

use surftri::moebius::{build_certificate, CertificateConfig};

fn main() -> std::io::Result<()> {
    let cert = build_certificate(&CertificateConfig::default());
    print!("{}", cert.report());

    if let Some(dir) = env::args().nth(1).map(PathBuf::from) {
        fs::create_dir_all(&dir)?;
        for (name, text) in cert.files() {
            fs::write(dir.join(&name), text)?;
        }
        println!("\nwrote certificate files to {}", dir.display());
    }
    if !cert.passed() {
        std::process::exit(1);
    }
    Ok(())
}

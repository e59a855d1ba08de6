use std::path::PathBuf;
use std::process::Command;

use surftri::cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn surftri(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["surftri"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn validate_reports_surface_type() {
    let (code, out, _) = surftri(&["validate", &data("triangle.tri")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("χ=1 orientable boundary=1"), "{out}");

    let (code, out, _) = surftri(&["validate", &data("hemi_icosahedron.tri")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("V=6 E=15 F=10"));
    assert!(out.contains("χ=1 non-orientable boundary=0"));
}

#[test]
fn validate_rejects_repeated_face_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.tri");
    std::fs::write(&path, "0 1 2\n# comment\n1 2 0\n").unwrap();
    let (code, _, err) = surftri(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAILED);
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("duplicates"), "{err}");

    std::fs::write(&path, "0 1 x\n").unwrap();
    let (code, _, err) = surftri(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn classify_tables() {
    let (_, out, _) = surftri(&["classify", &data("triangle.tri")]);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r.ends_with("Rod{BoundaryTriangle}")));

    let (_, out, _) = surftri(&["classify", &data("hemi_icosahedron.tri")]);
    assert_eq!(out.lines().count(), 15);
    assert!(out.lines().all(|r| r.ends_with("Rod{NonfacialTriangle}")));

    let (_, out, _) = surftri(&["classify", &data("p1_split.tri")]);
    assert!(out.lines().any(|r| r.ends_with("Cable")));
}

#[test]
fn canon_prints_code_and_faces() {
    let (code, out, _) = surftri(&["canon", &data("tetrahedron.tri")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("code 0400040001"));
    assert!(out.contains("automorphisms 24"));
    assert!(out.ends_with("0 1 2\n0 1 3\n0 2 3\n1 2 3\n"));
}

#[test]
fn split_and_shrink_commands() {
    let (_, out, _) = surftri(&["split", &data("triangle.tri")]);
    assert_eq!(out.lines().filter(|l| l.starts_with("spt")).count(), 6);

    let (code, out, _) = surftri(&["split", &data("tetrahedron.tri"), "--op", "sp 0 1 2 0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().filter(|l| !l.starts_with('#')).count(), 6);

    let (code, _, err) = surftri(&["shrink", &data("hemi_icosahedron.tri"), "0", "1"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(err.contains("rod"), "{err}");

    let (code, _, _) = surftri(&["split", &data("triangle.tri"), "--op", "sp zero"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn enumerate_compare_modes() {
    let (code, out, _) = surftri(&[
        "enumerate",
        "--surface",
        "projective",
        "--min-order",
        "6",
        "--max-order",
        "8",
        "--engine",
        "compare",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("diff 0\n"));

    let (code, out, _) = surftri(&[
        "enumerate",
        "--surface",
        "sphere",
        "--min-order",
        "4",
        "--max-order",
        "6",
        "--engine",
        "compare",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("diff 0\n"));

    let (code, _, err) = surftri(&[
        "enumerate",
        "--surface",
        "sphere",
        "--max-order",
        "12",
        "--engine",
        "exhaustive",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("ceiling"), "{err}");
}

#[test]
fn enumerate_output_is_independent_of_jobs() {
    let args = |jobs: &'static str| {
        vec![
            "--jobs",
            jobs,
            "enumerate",
            "--surface",
            "projective",
            "--max-order",
            "8",
        ]
    };
    let (_, one, _) = surftri(&args("1"));
    let (_, four, _) = surftri(&args("4"));
    assert_eq!(one, four);
    assert!(one.contains("entries 20"));
}

#[test]
fn enumerate_writes_catalog_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out, _) = surftri(&[
        "enumerate",
        "--surface",
        "disk",
        "--max-order",
        "5",
        "--engine",
        "compare",
        "--out",
        d,
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(dir.path().join("disk_3-5_splitting.catalog").exists());
    assert!(dir.path().join("disk_3-5_exhaustive.catalog").exists());
}

#[test]
fn usage_errors() {
    assert_eq!(surftri(&[]).0, EXIT_USAGE);
    assert_eq!(
        surftri(&["enumerate", "--surface", "torus", "--max-order", "7"]).0,
        EXIT_USAGE
    );
    assert_eq!(surftri(&["validate", "/nonexistent/file.tri"]).0, EXIT_USAGE);
    assert_eq!(surftri(&["--help"]).0, EXIT_OK);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_surftri");
    let ok = Command::new(bin)
        .args(["validate", &data("moebius_five.tri")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("χ=0 non-orientable boundary=1"));
    let bad = Command::new(bin).arg("frobnicate").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_moebius_writes_certificate_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out, err) = surftri(&["verify-moebius", "--out", d]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("C11 moebius-cross-check PASS"));
    let cert = std::fs::read_to_string(dir.path().join("certificate.txt")).unwrap();
    assert!(cert.contains("result PASS"));
    assert!(cert.contains("members 6"));
    assert!(dir.path().join("report.txt").exists());
    assert!(dir.path().join("projective_6-8_splitting.catalog").exists());

    // Feeding the written catalog back in reproduces the certificate.
    let catalog = dir.path().join("projective_6-8_splitting.catalog");
    let (code, again, _) = surftri(&["verify-moebius", "--catalog", catalog.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(again, cert);

    let broken = dir.path().join("broken.catalog");
    let text = std::fs::read_to_string(&catalog).unwrap();
    std::fs::write(&broken, text.replacen("order 8", "order 7", 1)).unwrap();
    let (code, _, err) = surftri(&["verify-moebius", "--catalog", broken.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAILED);
    assert!(err.contains("C0 catalog-integrity"), "{err}");
}

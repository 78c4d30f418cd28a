use std::fs;
use std::process::Command;

use superspecial::cli::{cmd_build, cmd_spectra, cmd_walk, parse_primes, verify_file, Format, RunConfig};
use superspecial::graph::GraphFile;
use superspecial::walk::WalkConfig;
use superspecial::Error;

fn ssgraph(dir: &std::path::Path, args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_ssgraph"))
        .arg("--out")
        .arg(dir)
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn prime_arguments() {
    assert_eq!(parse_primes("11").unwrap(), vec![11]);
    assert_eq!(parse_primes("1..20").unwrap(), vec![7, 11, 13, 17, 19]);
    assert!(matches!(parse_primes("15"), Err(Error::Precondition(_))));
    assert!(matches!(parse_primes("5"), Err(Error::Precondition(_))));
    assert!(matches!(parse_primes("x"), Err(Error::Precondition(_))));
}

#[test]
fn build_writes_a_file_that_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let mut cfg = RunConfig::new(dir.path());
    cfg.format = Some(Format::Csv);
    let g = cmd_build(19, &cfg).unwrap();
    for name in ["graph-19.json", "graph-19.dot", "graph-19.txt", "edges-19.csv"] {
        assert!(dir.path().join(name).exists(), "{name}");
    }
    let file = GraphFile::read_json(&dir.path().join("graph-19.json")).unwrap();
    assert_eq!(file.vertices.len(), g.len());
    assert_eq!(file.edges.len(), g.edges.len());
    let report = verify_file(&dir.path().join("graph-19.json")).unwrap();
    assert!(report.passed(), "{report}");
    let csv = fs::read_to_string(dir.path().join("edges-19.csv")).unwrap();
    assert_eq!(csv.lines().count(), g.edges.len() + 1);
}

#[test]
fn tampered_weights_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = RunConfig::new(dir.path());
    cmd_build(17, &cfg).unwrap();
    let path = dir.path().join("graph-17.json");
    let mut file = GraphFile::read_json(&path).unwrap();
    file.edges[0].weight += 1;
    file.write_json(&path).unwrap();
    match verify_file(&path) {
        Ok(report) => assert!(!report.passed()),
        Err(e) => assert!(matches!(e, Error::Format { .. })),
    }
}

#[test]
fn malformed_files_are_format_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("graph.json");
    fs::write(&path, "{\"p\": 11, \"vertices\": [").unwrap();
    assert!(matches!(GraphFile::read_json(&path), Err(Error::Format { .. })));
    assert_eq!(GraphFile::read_json(&path).unwrap_err().exit_code(), 4);
}

#[test]
fn spectra_and_walk_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = RunConfig::new(dir.path());
    let (rows, notes) = cmd_spectra(&[11, 13], &cfg).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(notes.len(), 1);
    let csv = fs::read_to_string(dir.path().join("spectra.csv")).unwrap();
    assert!(csv.starts_with("p,vertices,d_G,d_J,d_E,lambda_G,lambda_J,lambda_E"));
    let stats = cmd_walk(13, &WalkConfig::new(500, 3), &cfg).unwrap();
    assert_eq!(stats.visits.iter().sum::<u64>(), 500);
    let csv = fs::read_to_string(dir.path().join("walk-13.csv")).unwrap();
    assert_eq!(csv.lines().count(), 501);
    let json: serde_json::Value =
        serde_json::from_slice(&fs::read(dir.path().join("walk-13.json")).unwrap()).unwrap();
    assert_eq!(json["product_hits"].as_u64(), Some(stats.product_hits));
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let ok = ssgraph(dir.path(), &["verify", "-p", "11..13"]);
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stdout));
    assert_eq!(ssgraph(dir.path(), &["build", "-p", "4"]).status.code(), Some(2));
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "not json").unwrap();
    assert_eq!(ssgraph(dir.path(), &["verify", "--graph", bad.to_str().unwrap()]).status.code(), Some(4));
    let built = ssgraph(dir.path(), &["build", "-p", "11"]);
    assert!(built.status.success());
    assert!(String::from_utf8_lossy(&built.stdout).contains("5 vertices"));
}

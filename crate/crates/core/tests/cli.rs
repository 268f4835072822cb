use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_frbcs"));
    c.env("RUST_LOG", "warn");
    c
}

fn separable() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data/separable.csv")
        .to_string_lossy()
        .into_owned()
}

#[test]
fn run_writes_all_reports_deterministically() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for dir in [&a, &b] {
        let status = bin()
            .args(["run", "--data", &separable(), "--repeats", "2", "--seed", "7", "--out"])
            .arg(dir.path())
            .status()
            .unwrap();
        assert!(status.success());
    }
    for f in ["accuracy.csv", "accuracy.md", "cells.csv"] {
        let x = std::fs::read(a.path().join(f)).unwrap();
        let y = std::fs::read(b.path().join(f)).unwrap();
        assert_eq!(x, y, "{f}");
    }
    let csv = std::fs::read_to_string(a.path().join("accuracy.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap().split(',').count(), 10);
    let cells: Vec<f64> = lines.next().unwrap().split(',').skip(1).map(|v| v.parse().unwrap()).collect();
    assert_eq!(cells.len(), 9);
    assert!(cells.iter().all(|v| (0.0..=100.0).contains(v)));
    // a single dataset has no Friedman table
    assert!(!a.path().join("friedman.md").exists());
}

#[test]
fn json_config_and_friedman_report() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(
        &cfg,
        format!(
            r#"{{"datasets":[{{"path":"{0}","name":"one"}},{{"path":"{0}","name":"two"}}],
                "tnorms":["minimum","product",{{"kind":"dombi","alpha":1.5}}],
                "repeats":1,"seed":3,"out":"reports"}}"#,
            separable()
        ),
    )
    .unwrap();
    let out = bin().args(["run", "--config"]).arg(&cfg).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let md = std::fs::read_to_string(dir.path().join("reports/friedman.md")).unwrap();
    assert!(md.contains("| dombi:1.5 |"), "{md}");
    assert!(md.contains("2 degrees of freedom"));
}

#[test]
fn invalid_alpha_exits_with_config_error() {
    let out = bin()
        .args(["run", "--data", &separable(), "--tnorm", "dombi:0", "--out", "/nonexistent"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("dombi") && err.contains("> 0"), "{err}");
}

#[test]
fn missing_file_exits_with_data_error() {
    let out = bin().args(["dump-rules", "--data", "/no/such/file.csv"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/no/such/file.csv"));
}

#[test]
fn unknown_flag_is_a_config_error() {
    let out = bin().args(["run", "--bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dump_rules_lists_rules_by_weight() {
    let out = bin()
        .args(["dump-rules", "--data", &separable(), "--tnorm", "product"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("# ") && header.contains("rules"), "{header}");
    let weights: Vec<f64> = lines
        .map(|l| {
            assert!(l.starts_with("attr0 is L") && l.contains(" AND attr1 is L"), "{l}");
            let cf = l.rsplit("CF=").next().unwrap().trim_end_matches(')');
            cf.parse().unwrap()
        })
        .collect();
    assert!(!weights.is_empty());
    assert!(weights.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn dump_rules_on_degenerate_data_prints_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tie.csv");
    // one point per class at the same location: every antecedent ties
    std::fs::write(&path, "0.5,0.5,a\n0.5,0.5,b\n").unwrap();
    let out = bin().args(["dump-rules", "--data"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("# 0 rules"));
}

//! End-to-end tests for the `uavcov` binary: verbs, exit codes, and
//! deterministic output bytes.

use std::path::Path;
use std::process::{Command, Output};

fn uavcov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uavcov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

#[test]
fn version_prints_and_succeeds() {
    let out = uavcov(&["version"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("uavcov "));
}

#[test]
fn generate_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = uavcov(&[
            "generate",
            "--count",
            "8",
            "--capacity",
            "4",
            "--extent",
            "500",
            "--seed",
            "7",
            "--out",
            &path.to_string_lossy(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn run_produces_identical_report_and_svg_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = data("golden_scenario.json");
    let mut outputs = Vec::new();
    for pass in 0..2 {
        let report = dir.path().join(format!("report{pass}.json"));
        let svg = dir.path().join(format!("out{pass}.svg"));
        let out = uavcov(&[
            "run",
            "--scenario",
            &scenario,
            "--out",
            &report.to_string_lossy(),
            "--svg",
            &svg.to_string_lossy(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        outputs.push((std::fs::read(&report).unwrap(), std::fs::read(&svg).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert_eq!(outputs[0].0, std::fs::read(data("golden_report.json")).unwrap());
    let svg_text = String::from_utf8(outputs[0].1.clone()).unwrap();
    assert_eq!(svg_text.matches("<title>node ").count(), 3);
}

#[test]
fn mec_verb_cross_checks_oracle() {
    let out = uavcov(&["mec", "--scenario", &data("golden_scenario.json"), "--oracle"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("mec center"));
    assert!(stdout.contains("oracle center"));
}

#[test]
fn parse_failure_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let out = uavcov(&[
        "run",
        "--scenario",
        &bad.to_string_lossy(),
        "--out",
        &dir.path().join("r.json").to_string_lossy(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_field_exits_2_and_names_it() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"nodes":[{"x":0,"y":0,"w":-1},{"x":1,"y":0,"w":1}],"capacity":2,"altitude":50}"#,
    )
    .unwrap();
    let out = uavcov(&[
        "run",
        "--scenario",
        &bad.to_string_lossy(),
        "--out",
        &dir.path().join("r.json").to_string_lossy(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("nodes[0].w"));
}

#[test]
fn missing_file_exits_4() {
    let out = uavcov(&["mec", "--scenario", "/nonexistent/scenario.json"]);
    assert_eq!(out.status.code(), Some(4));
}

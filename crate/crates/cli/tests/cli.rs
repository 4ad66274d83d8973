use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_regbound"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn report_json(spec: &Path, extra: &[&str]) -> (i32, Value) {
    let mut args = vec!["analyze", spec.to_str().unwrap(), "--report", "-"];
    args.extend_from_slice(extra);
    let out = run(&args);
    let v = serde_json::from_slice(&out.stdout).expect("report is JSON");
    (code(&out), v)
}

#[test]
fn analyze_fixtures() {
    let (c, v) = report_json(&fixture("quadric.json"), &[]);
    assert_eq!(c, 0);
    assert_eq!(v["coefficients"]["e"], serde_json::json!(["2", "1"]));
    assert_eq!(v["bounds"]["theoremA"]["1"], serde_json::json!("7"));
    assert_eq!(v["summary"]["fail"], serde_json::json!("0"));

    let (c, v) = report_json(&fixture("cyclic_polytope.json"), &[]);
    assert_eq!(c, 0);
    assert_eq!(v["gotzmann"]["B"], serde_json::json!(["6", "13"]));
    assert_eq!(v["bounds"]["propDLower"], serde_json::json!("2"));

    let (c, v) = report_json(&fixture("powers.json"), &[]);
    assert_eq!(c, 0);
    assert_eq!(v["bounds"]["binomialLower"], serde_json::json!("1"));
    assert_eq!(v["oracle"]["reg"], serde_json::json!("1"));
}

#[test]
fn report_file_is_byte_identical_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let spec = fixture("lex_ci22.json");
    for out in [&a, &b] {
        let o = run(&[
            "analyze",
            spec.to_str().unwrap(),
            "--report",
            out.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    let c = dir.path().join("c.json");
    let o = run(&[
        "analyze",
        a.to_str().unwrap(),
        "--report",
        c.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(first, fs::read(&c).unwrap());
}

#[test]
fn levels_and_lex_degree_flags() {
    let (c, v) = report_json(&fixture("cyclic_polytope.json"), &["--levels", "2"]);
    assert_eq!(c, 0);
    let levels: Vec<&String> = v["bounds"]["theoremA"]
        .as_object()
        .unwrap()
        .keys()
        .collect();
    assert_eq!(levels, ["2"]);
    assert_eq!(v["input"]["options"]["levels"], serde_json::json!(["2"]));

    let out = run(&[
        "analyze",
        fixture("lex_ci22.json").to_str().unwrap(),
        "--max-lex-degree",
        "3",
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("truncated"));
}

#[test]
fn lexify_prints_generators() {
    let out = run(&["lexify", fixture("lex_ci22.json").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "degree 2: x1^2, x1*x2");
    assert_eq!(lines[1], "degree 3: x1*x3^2");
}

#[test]
fn invalid_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"version":"1","ring":{"vars":2},"ideal":{"kind":"powers","c":3,"a":1}}"#,
    )
    .unwrap();
    assert_eq!(code(&run(&["analyze", bad.to_str().unwrap()])), 2);
    fs::write(&bad, "{").unwrap();
    assert_eq!(code(&run(&["analyze", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["analyze", "/nonexistent/spec.json"])), 2);
    assert_eq!(code(&run(&["sweep", "--n-min", "4", "--n-max", "2"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn dimension_zero_report() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("artinian.json");
    fs::write(
        &spec,
        r#"{"version":"1","ring":{"vars":2},"ideal":{"kind":"powers","c":2,"a":2}}"#,
    )
    .unwrap();
    let (c, v) = report_json(&spec, &[]);
    assert_eq!(c, 0);
    assert_eq!(v["bounds"]["error"], serde_json::json!("DimensionZero"));
}

#[test]
fn sweep_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let par = dir.path().join("par.json");
    let seq = dir.path().join("seq.json");
    let o = run(&[
        "sweep",
        "--seed",
        "9",
        "--count",
        "60",
        "--report",
        par.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stdout));
    let o = run(&[
        "sweep",
        "--seed",
        "9",
        "--count",
        "60",
        "--sequential",
        "--report",
        seq.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read(&par).unwrap(), fs::read(&seq).unwrap());
    let v: Value = serde_json::from_slice(&fs::read(&par).unwrap()).unwrap();
    assert_eq!(v["instances"], serde_json::json!("60"));
    assert_eq!(v["failures"], serde_json::json!([]));
}

#[test]
fn stable_sweep_reports_sharpness() {
    let out = run(&[
        "sweep",
        "--seed",
        "1",
        "--count",
        "40",
        "--stable-only",
        "--report",
        "-",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let json_start = text.find("\n{").map(|i| i + 1).unwrap();
    let v: Value = serde_json::from_str(&text[json_start..]).unwrap();
    assert_eq!(v["withOracle"], serde_json::json!("40"));
    assert!(v["sharpness"]["max"].is_string());
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(code(&out), 0, "{text}");
    assert!(text.contains(" 0 failed"));
}

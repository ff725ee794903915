use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn atinf(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_atinf")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).expect("utf-8");
    let json: Value = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}"));
    assert_eq!(json["schema"], "atinf-report/1");
    (out.status.code().expect("exit code"), json, String::from_utf8_lossy(&out.stderr).into_owned())
}

fn reference_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus/reference")
}

#[test]
fn analyze_cusp() {
    let (code, j, _) = atinf(&["analyze", "--poly", "x + x^2*y", "--vars", "x,y"]);
    assert_eq!(code, 0);
    assert_eq!(j["report"]["delta"], 3);
    assert_eq!(j["report"]["b_top"], 1);
    assert_eq!(j["report"]["method"], "eqF");
    assert_eq!(j["status"], "pass");
}

#[test]
fn analyze_fermat_cubic() {
    let (code, j, _) = atinf(&["analyze", "--poly", "x^3+y^3", "--vars", "x,y"]);
    assert_eq!(code, 0);
    assert_eq!(j["report"]["delta"], 0);
    assert_eq!(j["report"]["general_at_infinity"], true);
}

#[test]
fn critical_line_is_gated_without_override() {
    let (code, j, _) = atinf(&["analyze", "--poly", "x^2*y", "--vars", "x,y"]);
    assert_eq!(code, 2);
    assert_eq!(j["report"]["delta"], "not computed");
    let (code, j, _) = atinf(&["analyze", "--poly", "x^2*y", "--vars", "x,y", "--assume-concentrated"]);
    assert_eq!(code, 0);
    assert_eq!(j["report"]["delta"], 3);
}

#[test]
fn supplied_euler_characteristic_is_required_for_a_curve_at_infinity() {
    let f = "z^4 + z^2*x^2 + z^2*y^2 + x*y*(x - y)";
    let (code, _, _) = atinf(&["analyze", "--poly", f, "--vars", "x,y,z"]);
    assert_eq!(code, 2);
    let (code, j, _) =
        atinf(&["analyze", "--poly", f, "--vars", "x,y,z", "--chi-fd", "2", "--line-at-infinity"]);
    assert_eq!(code, 0);
    assert_eq!(j["report"]["delta"], 9);
    assert_eq!(j["report"]["method"], "eqB");
}

#[test]
fn input_errors_exit_3() {
    for args in [
        vec!["analyze", "--poly", "x +* y", "--vars", "x,y"],
        vec!["analyze", "--poly", "x + w", "--vars", "x,y"],
        vec!["analyze", "--poly", "3", "--vars", "x,y"],
        vec!["analyze", "--poly", "x^13 + y^13", "--vars", "x,y"],
        vec!["analyze", "--poly", "a", "--vars", "a,b,c,d,e,f,g,h,i"],
        vec!["analyze", "--poly", "x^3 + y", "--vars", "x,y", "--t-samples", "1"],
        vec!["table", "--delta", "4"],
        vec!["table", "--delta", "-1"],
    ] {
        let (code, j, err) = atinf(&args);
        assert_eq!(code, 3, "{args:?}: {j}");
        assert_eq!(j["status"], "input-error");
        assert!(!err.is_empty());
    }
}

#[test]
fn unsafe_lifts_the_degree_limit() {
    let (code, j, _) = atinf(&["analyze", "--poly", "x^13 + y^13", "--vars", "x,y", "--unsafe"]);
    assert_eq!(code, 0);
    assert_eq!(j["report"]["b_top"], 144);
}

#[test]
fn reports_are_deterministic() {
    let args = ["analyze", "--poly", "x + x^2*y", "--vars", "x,y", "--seed", "5"];
    let run = || Command::new(env!("CARGO_BIN_EXE_atinf")).args(args).output().unwrap().stdout;
    assert_eq!(run(), run());
}

#[test]
fn table_rows() {
    let (code, j, _) = atinf(&["table", "--delta", "2"]);
    assert_eq!(code, 0);
    let labels: Vec<&str> = j["rows"].as_array().unwrap().iter().map(|r| r["arnold_type"].as_str().unwrap()).collect();
    assert_eq!(labels, ["A₂", "2A₁", "B₂"]);
    let (_, j, _) = atinf(&["table", "--delta", "3"]);
    assert_eq!(j["rows"].as_array().unwrap().len(), 6);
}

#[test]
fn euler_from_strata_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("strata.json");
    std::fs::write(&path, r#"{"n": 3, "d": 3, "points": [{"kind": "mu", "value": 1}, {"kind": "mu", "value": 1}]}"#)
        .unwrap();
    let (code, j, _) = atinf(&["euler", "--strata", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(j["chi"], 2);

    std::fs::write(&path, r#"{"n": 3, "d": 4, "curves": [{"g": 0, "mu_t": 1, "nu": 1, "gamma": 1}]}"#).unwrap();
    let (code, _, _) = atinf(&["euler", "--strata", path.to_str().unwrap()]);
    assert_eq!(code, 3);
    let (code, _, _) = atinf(&["euler", "--strata", "/nonexistent/strata.json"]);
    assert_eq!(code, 3);
}

#[test]
fn deform_checks() {
    let (code, j, _) = atinf(&["deform", "--poly", "x^2*y", "--vars", "x,y", "--kind", "linear", "--assume-concentrated"]);
    assert_eq!(code, 0, "{j}");
    let names: Vec<&str> = j["verdicts"].as_array().unwrap().iter().map(|v| v["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"SING_ISOLATED") && names.contains(&"SEMICONTINUITY"));

    let (code, j, _) =
        atinf(&["deform", "--poly", "x + x^2*y", "--vars", "x,y", "--kind", "general", "--with", "x^3 + y^3"]);
    assert_eq!(code, 0, "{j}");
    assert_eq!(j["semicontinuity"]["comparison"], "holds");
    assert_eq!(j["semicontinuity"]["deformed"][0]["delta"], 0);

    let (code, _, _) = atinf(&["deform", "--poly", "x^3 + y^3", "--vars", "x,y", "--kind", "power"]);
    assert_eq!(code, 0);

    let (code, _, _) =
        atinf(&["deform", "--poly", "x^2*y", "--vars", "x,y", "--kind", "linear", "--with", "x^2"]);
    assert_eq!(code, 3);
}

fn write_fixture(dir: &Path, name: &str, delta: i64) {
    let text = format!(
        r#"{{"name": "{name}", "poly": "x + x^2*y", "vars": ["x", "y"], "expected": {{"delta": {delta}, "b_top": 1}}}}"#
    );
    std::fs::write(dir.join(format!("{name}.json")), text).unwrap();
}

#[test]
fn empty_corpus_passes_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let (code, j, err) = atinf(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(j["total"], 0);
    assert!(err.contains("warning"));
}

#[test]
fn wrong_expected_value_fails_with_diff() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "good", 3);
    write_fixture(dir.path(), "wrong", 4);
    let (code, j, err) = atinf(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!((j["passed"].as_u64(), j["failed"].as_u64()), (Some(1), Some(1)));
    let bad = &j["fixtures"][1];
    assert_eq!(bad["file"], "wrong.json");
    assert_eq!(bad["mismatches"][0]["field"], "delta");
    assert_eq!(bad["mismatches"][0]["expected"], 4);
    assert_eq!(bad["mismatches"][0]["actual"], 3);
    assert!(err.contains("delta: expected 4, got 3"));
}

#[test]
fn malformed_fixture_is_reported_per_file() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(dir.path(), "good", 3);
    std::fs::write(dir.path().join("broken.json"), "{\"name\": 1").unwrap();
    let (code, j, _) = atinf(&["corpus", dir.path().to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(j["errors"], 1);
    assert_eq!(j["passed"], 1);
    assert!(j["fixtures"][0]["error"].is_string());
}

#[test]
fn reference_corpus_passes() {
    let (code, j, err) = atinf(&["corpus", reference_corpus().to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(j["total"], 13);
    assert_eq!(j["passed"], 13);
}

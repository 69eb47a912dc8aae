use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde::Deserialize;
use serde_json::Value;

fn flopcalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flopcalc"))
        .args(args)
        .env_remove("FLOPCALC_FORMAT")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = flopcalc(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn core_golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/golden")
        .join(name)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct ReportSchema {
    claim: String,
    params: Value,
    verdict: String,
    witnesses: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
#[allow(dead_code)]
struct WindowSchema {
    family: String,
    k: usize,
    n: usize,
    members: Vec<Vec<i32>>,
}

#[test]
fn window_generate_lists_the_weights() {
    let (code, v) = json(&["window", "generate", "--family", "W", "--k", "2", "--n", "3"]);
    assert_eq!(code, 0);
    let w: WindowSchema = serde_json::from_value(v).unwrap();
    assert_eq!(w.members, vec![vec![0, 0], vec![1, 0], vec![1, 1]]);

    let text = flopcalc(&["window", "generate", "--family", "W", "--k", "2", "--n", "3"]);
    assert!(text.status.success());
    assert!(!text.stdout.is_empty());
}

#[test]
fn window_compare_exit_codes() {
    let golden = core_golden("window_W_2_5.json");
    let g = golden.to_str().unwrap();
    let ok = flopcalc(&["window", "compare", "--family", "W", "--k", "2", "--n", "5", "--golden", g]);
    assert_eq!(ok.status.code(), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&golden).unwrap()).unwrap();
    v["members"].as_array_mut().unwrap().pop();
    fs::write(&bad, serde_json::to_string(&v).unwrap()).unwrap();
    let b = bad.to_str().unwrap();
    let mismatch =
        flopcalc(&["window", "compare", "--family", "W", "--k", "2", "--n", "5", "--golden", b]);
    assert_eq!(mismatch.status.code(), Some(1));

    let extra = dir.path().join("extra.json");
    v["unexpected"] = Value::Bool(true);
    fs::write(&extra, serde_json::to_string(&v).unwrap()).unwrap();
    let e = extra.to_str().unwrap();
    let rejected =
        flopcalc(&["window", "compare", "--family", "W", "--k", "2", "--n", "5", "--golden", e]);
    assert_eq!(rejected.status.code(), Some(2));
}

#[test]
fn invalid_parameters_exit_two() {
    let out = flopcalc(&["window", "generate", "--family", "W", "--k", "3", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = flopcalc(&["verify", "invariants", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verifications_pass_with_report_schema() {
    let runs: &[&[&str]] = &[
        &["verify", "lemma31"],
        &["verify", "lemma31", "--k", "3", "--n", "4..7"],
        &["verify", "prop44"],
        &["verify", "resolveOC"],
        &["verify", "weyman"],
        &["verify", "cancellation"],
        &["verify", "invariants", "--n", "1", "--max-deg", "6"],
        &["verify", "tseu-eq"],
    ];
    for args in runs {
        let (code, v) = json(args);
        assert_eq!(code, 0, "{args:?}");
        let r: ReportSchema = serde_json::from_value(v).unwrap();
        assert_eq!(r.verdict, "pass", "{args:?}");
    }
}

#[test]
fn verify_against_golden_files() {
    let w = core_golden("weyman.json");
    let (code, _) = json(&["verify", "weyman", "--golden", w.to_str().unwrap()]);
    assert_eq!(code, 0);
    let oc = core_golden("OC.json");
    let (code, _) = json(&["verify", "resolveOC", "--golden", oc.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _) = json(&["verify", "weyman", "--golden", oc.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn cancellation_reports_the_normalisation() {
    let (code, v) = json(&["verify", "cancellation"]);
    assert_eq!(code, 0);
    let wit = &v["witnesses"];
    assert_eq!(wit["k_class_conserved"], Value::Bool(true));
    assert_eq!(wit["cancelled"].as_array().unwrap().len(), 8);
    assert!(wit["normalization"].is_object());
}

#[test]
fn negative_control_fails() {
    let (code, v) = json(&["verify", "invariants", "--n", "1", "--max-deg", "4", "--omit", "det p"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "fail");
}

#[test]
fn complex_output_matches_golden_bytes() {
    for name in ["I0", "I1", "I2", "OC", "DeltaBar", "weyman"] {
        let out = flopcalc(&["--format", "json", "complex", name]);
        assert!(out.status.success(), "{name}");
        let want = fs::read(core_golden(&format!("{name}.json"))).unwrap();
        assert_eq!(out.stdout, want, "{name}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["--format", "json", "verify", "cancellation"][..],
        &["--format", "json", "verify", "prop44"][..],
        &["complex", "DeltaBar"][..],
    ] {
        assert_eq!(flopcalc(args).stdout, flopcalc(args).stdout, "{args:?}");
    }
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_flopcalc"))
        .args(["verify", "tseu-eq", "--n", "3..5"])
        .env("FLOPCALC_FORMAT", "json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let _: ReportSchema = serde_json::from_slice(&out.stdout).unwrap();
}

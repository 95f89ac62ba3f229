use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoinv")).args(args).env_remove("MONOINV_SEED").output().unwrap()
}

fn run_path(cmd: &str, flag: &str, path: &Path, extra: &[&str]) -> Output {
    let mut args = vec![cmd, flag, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn fix_a_is_not_unimodal() {
    let out = run_path("classify", "--spec", &fixture("fix_a.json"), &[]);
    assert_eq!(out.status.code(), Some(3));
    let r = stdout_json(&out);
    assert_eq!(r["classification"]["cdf_unimodal"], false);
    assert_eq!(r["quantile_density"], Value::Null);
    assert_eq!(r["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn fix_d_modes() {
    let out = run_path("classify", "--spec", &fixture("fix_d.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    let c = &r["classification"];
    assert_eq!(c["quantile_modes"], json!({"lo": "1/4", "hi": "3/4"}));
    assert_eq!(c["modes"], json!({"lo": "1/2", "hi": "1/2"}));
    assert_eq!(c["atom_at_mode"], json!({"x": "1/2", "mass": "1/2"}));
    assert_eq!(r["cdf_intervals"]["mass_interval"], json!({"lo": "0", "hi": "1"}));
    assert_eq!(r["quantile_intervals"]["regular_domain"], json!({"lo": "0", "hi": "1"}));
    assert_eq!(r["quantile_density"]["values"], json!(["2", "0", "2"]));
}

#[test]
fn empty_spec_is_invalid() {
    let out = run_path("classify", "--spec", &fixture("empty.json"), &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero measure"));
}

#[test]
fn bad_specs() {
    let dir = tempfile::tempdir().unwrap();
    let overlap =
        write(&dir, "o.json", r#"{"uniform_pieces":[{"a":"0","b":"2","mass":"1"},{"a":"1","b":"3","mass":"1"}]}"#);
    assert_eq!(run_path("classify", "--spec", &overlap, &[]).status.code(), Some(2));
    let nonpositive = write(&dir, "n.json", r#"{"atoms":[{"x":"0","mass":"0"}]}"#);
    assert_eq!(run_path("classify", "--spec", &nonpositive, &[]).status.code(), Some(2));
    let broken = write(&dir, "b.json", "{ not json");
    assert_eq!(run_path("classify", "--spec", &broken, &[]).status.code(), Some(1));
    assert_eq!(run_path("classify", "--spec", &dir.path().join("missing.json"), &[]).status.code(), Some(1));
}

#[test]
fn qdensity_of_fix_a_fails_with_4() {
    assert_eq!(run_path("qdensity", "--spec", &fixture("fix_a.json"), &[]).status.code(), Some(4));
    let out = run_path("qdensity", "--spec", &fixture("fix_d.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["quantile_density"]["knots"], json!(["1/4", "3/4"]));
}

#[test]
fn invert_uniform() {
    let out = run_path("invert", "--spec", &fixture("fix_b.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["inverse"]["breakpoints"], json!([]));
    assert_eq!(r["inverse"]["slopes"], json!(["1"]));
    assert_eq!(r["inverse"]["domain"], json!({"lo": "0", "hi": "1"}));
}

#[test]
fn decompose_fix_d() {
    let out = run_path("decompose", "--spec", &fixture("fix_d.json"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["atoms"], json!([{"x": "1/2", "mass": "1/2"}]));
    assert_eq!(r["abs_density"]["knots"], json!(["0", "1"]));
    assert_eq!(r["abs_density"]["values"], json!(["0", "1/2", "0"]));
}

#[test]
fn plot_points_go_to_stdout_and_json_to_out() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = run_path(
        "classify",
        "--spec",
        &fixture("fix_d.json"),
        &["--plot-points", "4", "--out", report.to_str().unwrap()],
    );
    assert_eq!(out.status.code(), Some(0));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert!(csv.starts_with("x,left,right\n"));
    assert_eq!(csv.lines().count(), 6);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(r["classification"]["cdf_unimodal"], true);
}

#[test]
fn ingest_examples() {
    let dir = tempfile::tempdir().unwrap();
    let two = write(&dir, "two.csv", "0\n1\n");
    let r = stdout_json(&run_path("ingest", "--samples", &two, &[]));
    assert_eq!(r["uniform_pieces"], json!([{"a": "0", "b": "1", "mass": "1"}]));

    let three = write(&dir, "three.csv", "x\n0\n0.5\n1\n");
    let r = stdout_json(&run_path("ingest", "--samples", &three, &["--header"]));
    assert_eq!(
        r["uniform_pieces"],
        json!([{"a": "0", "b": "1/2", "mass": "1/2"}, {"a": "1/2", "b": "1", "mass": "1/2"}])
    );
    assert_eq!(run_path("classify", "--samples", &three, &["--header"]).status.code(), Some(0));

    let one = write(&dir, "one.csv", "2\n2\n");
    assert_eq!(run_path("ingest", "--samples", &one, &[]).status.code(), Some(2));
    let r = stdout_json(&run_path("ingest", "--samples", &one, &["--allow-degenerate"]));
    assert_eq!(r["atoms"], json!([{"x": "2", "mass": "1"}]));
}

#[test]
fn ingested_spec_classifies_like_the_samples() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    let samples = fixture("uniform_1000.csv");
    let out = run_path("ingest", "--samples", &samples, &["--out", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let via_spec = run_path("classify", "--spec", &spec, &[]);
    let via_samples = run_path("classify", "--samples", &samples, &[]);
    assert_eq!(via_spec.status.code(), Some(0));
    assert_eq!(via_spec.stdout, via_samples.stdout);
}

#[test]
fn reports_are_byte_identical_and_stamp_wraps_them() {
    let a = run_path("classify", "--spec", &fixture("fix_d.json"), &[]);
    let b = run_path("classify", "--spec", &fixture("fix_d.json"), &[]);
    assert_eq!(a.stdout, b.stdout);
    let stamped = stdout_json(&run_path("classify", "--spec", &fixture("fix_d.json"), &["--stamp"]));
    assert!(stamped["stamp_unix"].is_u64());
    assert_eq!(stamped["body"], stdout_json(&a));
}

#[test]
fn anchor_override() {
    let out = run_path("classify", "--spec", &fixture("fix_d.json"), &["--anchor", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["anchor"], "1/2");
    // F(1/2) = 0 moves the quantile domain to (-3/4, 1/4)
    assert_eq!(r["quantile_intervals"]["regular_domain"], json!({"lo": "-3/4", "hi": "1/4"}));
    assert_eq!(run_path("classify", "--spec", &fixture("fix_d.json"), &["--anchor", "x"]).status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "--law", "GALOIS", "--n", "1", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["law"], "GALOIS");
    assert_eq!(run(&["verify", "--law", "NOPE"]).status.code(), Some(1));
    let all = run(&["verify", "--n", "50", "--seed", "42"]);
    assert_eq!(all.status.code(), Some(0));
    assert_eq!(stdout_json(&all).as_array().unwrap().len(), 12);
}

#[test]
fn seed_flag_reads_the_environment() {
    let help = String::from_utf8(run(&["verify", "--help"]).stdout).unwrap();
    assert!(help.contains("MONOINV_SEED"), "{help}");
}

//! CLI contract: stable exit codes, reproducible bytes, format switches.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_treg")
}

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .canonicalize()
        .expect("shipped corpus directory")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .env_remove("TREG_CONFIG")
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

#[test]
fn verify_tame_on_shipped_corpus_passes() {
    let corpus = corpus_dir().join("p1xp1.json");
    let out = run(&["verify-tame", "--corpus", corpus.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports.as_array().unwrap().len() >= 5);
}

#[test]
fn verify_reciprocity_on_both_corpora_passes() {
    for name in ["p1xp1.json", "elliptic.json"] {
        let corpus = corpus_dir().join(name);
        let out = run(&["verify-reciprocity", "--corpus", corpus.to_str().unwrap()]);
        assert_eq!(exit_code(&out), 0);
    }
}

#[test]
fn empty_corpus_yields_skipped_set() {
    let dir = std::env::temp_dir().join("treg-cli-empty");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("empty.json");
    std::fs::write(&path, "{\"schema_version\":1}\n").unwrap();
    let out = run(&["verify-tame", "--corpus", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["status"], "skipped");
}

#[test]
fn corrupted_corpus_exits_2() {
    let dir = std::env::temp_dir().join("treg-cli-bad");
    std::fs::create_dir_all(&dir).unwrap();
    // multiplicity against an unregistered component
    let bad = dir.join("bad-table.json");
    std::fs::write(
        &bad,
        r#"{"schema_version":1,"registry":{"ambients":{"A":{"kind":"curve","coords":["z"]}},"factors":{"f":{"ambient":"A","divisor":{"ghost":1}}}}}"#,
    )
    .unwrap();
    let out = run(&["verify-tame", "--corpus", bad.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);

    // unknown top-level field
    let unknown = dir.join("unknown-field.json");
    std::fs::write(&unknown, r#"{"schema_version":1,"bogus":true}"#).unwrap();
    let out = run(&["verify-tame", "--corpus", unknown.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn complete_shipped_instances_close() {
    let corpus = corpus_dir().join("completions.json");
    for target in ["e4-hyperplane", "e4-hvc", "product-e1e2"] {
        let out = run(&["complete", "--corpus", corpus.to_str().unwrap(), "--target", target]);
        assert_eq!(exit_code(&out), 0, "target {target}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(v["closed"], true);
        assert!(v["divisor"].as_object().unwrap().is_empty());
    }
}

#[test]
fn missing_fact_exits_3_and_names_it() {
    // strip one Bertini fact from the shipped completions corpus
    let text = std::fs::read_to_string(corpus_dir().join("completions.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let facts = v["registry"]["facts"].as_object_mut().unwrap();
    assert!(facts.remove("e4-hyperplane/bertini:a1-b1").is_some());
    let dir = std::env::temp_dir().join("treg-cli-nofact");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("completions.json");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let out = run(&[
        "complete",
        "--corpus",
        path.to_str().unwrap(),
        "--target",
        "e4-hyperplane",
    ]);
    assert_eq!(exit_code(&out), 3);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("a1xE4"), "stderr should name the gap: {err}");
}

#[test]
fn integrate_vanishing_case_passes() {
    let out = run(&["integrate", "--case", "eta1-f2", "--mc-n", "20000"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["quad"]["value"], 0.0);
}

#[test]
fn integrate_unknown_case_exits_2() {
    let out = run(&["integrate", "--case", "eta9-f9"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn surjectivity_is_byte_identical_and_csv_works() {
    let args = ["surjectivity", "--tol", "1e-6", "--mc-n", "20000", "--seed", "9"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout, "same config and seed must give identical bytes");

    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let c = run(&csv_args);
    assert_eq!(exit_code(&c), 0);
    let text = String::from_utf8_lossy(&c.stdout);
    assert!(text.starts_with("row,col,label,"));
    assert!(text.lines().count() >= 6);
}

#[test]
fn loose_tolerance_fails_the_verdict() {
    let out = run(&["surjectivity", "--tol", "1e3", "--mc-n", "1000"]);
    assert_eq!(exit_code(&out), 1);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], false);
}

#[test]
fn harmonicity_passes() {
    let out = run(&["harmonicity"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn config_file_overrides_defaults() {
    let dir = std::env::temp_dir().join("treg-cli-cfg");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("treg.cfg");
    std::fs::write(&cfg_path, "mc_n=5000\nmc_seed=3\n").unwrap();
    let with_env = Command::new(bin())
        .args(["integrate", "--case", "disk-unit"])
        .env("TREG_CONFIG", cfg_path.to_str().unwrap())
        .output()
        .unwrap();
    assert_eq!(exit_code(&with_env), 0);
    let v: serde_json::Value = serde_json::from_slice(&with_env.stdout).unwrap();
    assert_eq!(v["mc"]["samples"], 5000);
}

#[test]
fn out_flag_writes_the_artifact() {
    let dir = std::env::temp_dir().join("treg-cli-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "integrate",
        "--case",
        "disk-unit",
        "--mc-n",
        "5000",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["pass"], true);
}

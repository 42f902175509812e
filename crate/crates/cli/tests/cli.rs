use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_normality"))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str], problem: &Path) -> Output {
    let mut cmd = bin();
    cmd.arg(args[0]).arg(problem).args(&args[1..]);
    cmd.output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad stdout ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

const CUBES: &str = r#"{"vars": ["x", "y"], "ideals": [[[3, 0], [0, 3]]]}"#;
const MAXIMAL_TWICE: &str = r#"{"vars": ["x", "y"], "ideals": [["x", "y"], ["x", "y"]]}"#;

#[test]
fn certify_reports_a_counterexample_with_status_zero() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "cubes.json", CUBES);
    let out = run(&["certify", "--mode", "full"], &p);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["schemaVersion"], 1);
    assert_eq!(doc["command"], "certify");
    let r = &doc["result"];
    assert_eq!(r["verdict"], "counterexample");
    assert_eq!(r["witnessIndex"], serde_json::json!([1]));
    assert_eq!(r["witnessMonomial"], serde_json::json!([2, 1]));
    assert!(doc.get("timing").is_none());
}

#[test]
fn spread_and_closure() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "m.json", MAXIMAL_TWICE);
    let doc = json(&run(&["spread"], &p));
    assert_eq!(doc["result"]["product"]["lambda"], 2);
    assert_eq!(doc["result"]["ideals"], serde_json::json!([2, 2]));

    let p = write(&dir, "cubes.json", CUBES);
    let doc = json(&run(&["closure", "--index", "1"], &p));
    assert_eq!(
        doc["result"]["generators"],
        serde_json::json!([[3, 0], [2, 1], [1, 2], [0, 3]])
    );
    let doc = json(&run(&["check", "--index", "2"], &p));
    assert_eq!(doc["result"]["check"]["status"], "notClosed");
    assert_eq!(doc["result"]["check"]["witness"], serde_json::json!([5, 1]));
}

#[test]
fn frontier_mode_and_thresholds() {
    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "m.json",
        r#"{"vars": ["x", "y"], "ideals": [["x", "y"]]}"#,
    );
    let doc = json(&run(&["certify", "--mode", "frontier", "--ell", "1"], &p));
    assert_eq!(doc["result"]["verdict"], "allClosed");
    assert_eq!(doc["result"]["mode"], "frontier");
    let out = run(&["certify", "--mode", "frontier", "--ell", "0"], &p);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambda"));
    let out = run(&["certify", "--ell", "1"], &p);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_cross_validates() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "cubes.json", CUBES);
    let out = run(&["oracle"], &p);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["result"]["consistent"], true);
    assert_eq!(doc["result"]["maxTotal"], 5);
    assert_eq!(doc["result"]["oracle"]["scannedCount"], 6);
    let out = run(&["oracle", "--max-total", "3"], &p);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "bad.json",
        "{\"vars\": [\"x\"],\n \"ideals\": [[\"x^2\", \"q\"]]}",
    );
    let out = run(&["spread"], &p);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
    assert!(out.stdout.is_empty());

    let p = write(&dir, "broken.json", "{\"vars\": [\"x\"]");
    assert_eq!(run(&["spread"], &p).status.code(), Some(2));
}

#[test]
fn precondition_violations_exit_three() {
    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "unit.json",
        r#"{"vars": ["x", "y"], "ideals": [["x^0*y^0"]]}"#,
    );
    let out = run(&["spread"], &p);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unit ideal"));

    let p = write(&dir, "cubes.json", CUBES);
    assert_eq!(
        run(&["closure", "--index", "1,1"], &p).status.code(),
        Some(3)
    );
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["spread"], &missing).status.code(), Some(1));
}

#[test]
fn output_file_is_written_and_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "cubes.json", CUBES);
    let target = dir.path().join("out").join("report.json");
    std::fs::create_dir(target.parent().unwrap()).unwrap();
    let mut first = Vec::new();
    for _ in 0..2 {
        let out = bin()
            .args(["--output", target.to_str().unwrap(), "certify"])
            .arg(&p)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        let bytes = std::fs::read(&target).unwrap();
        if first.is_empty() {
            first = bytes;
        } else {
            assert_eq!(first, bytes);
        }
    }
    // only the report is left behind
    assert_eq!(
        std::fs::read_dir(target.parent().unwrap()).unwrap().count(),
        1
    );

    let doc: Value = serde_json::from_slice(&first).unwrap();
    let digest = doc["inputDigest"].as_str().unwrap();
    assert!(digest.starts_with("sha256:") && digest.len() == 7 + 64);
    let q = write(&dir, "cubes2.json", &format!("{CUBES}\n"));
    let other = json(&run(&["certify"], &q));
    assert_ne!(other["inputDigest"], doc["inputDigest"]);
    assert_eq!(other["result"], doc["result"]);
}

#[test]
fn timing_only_on_request() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "cubes.json", CUBES);
    let doc = json(&run(&["spread", "--timing"], &p));
    assert!(doc["timing"]["elapsedMs"].as_f64().unwrap() >= 0.0);
}

#[test]
fn reductions_run_is_seeded() {
    let dir = TempDir::new().unwrap();
    let p = write(
        &dir,
        "m.json",
        r#"{"vars": ["x", "y"], "ideals": [["x", "y"]]}"#,
    );
    let args = [
        "reductions",
        "--window",
        "2..5",
        "--trunc",
        "12",
        "--seed",
        "3",
        "--type",
        "2",
    ];
    let a = run(&args, &p);
    let b = run(&args, &p);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = json(&a);
    let r = &doc["result"];
    assert_eq!(r["passed"], true);
    assert_eq!(r["length"], 2);
    assert_eq!(r["columnSequences"].as_array().unwrap().len(), 1);
    assert_eq!(r["joint"]["report"]["passed"], true);
    assert_eq!(r["complete"]["window"], serde_json::json!([2, 5]));

    // defaults: window lambda..lambda+3, derived cap
    let doc = json(&run(&["reductions"], &p));
    assert_eq!(doc["result"]["window"], serde_json::json!([2, 5]));
    assert_eq!(doc["result"]["trunc"], 12);

    let bad = run(&["reductions", "--window", "3"], &p);
    assert_eq!(bad.status.code(), Some(2));
    let bad = run(&["reductions", "--type", "1"], &p);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn unknown_command_is_a_usage_error() {
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

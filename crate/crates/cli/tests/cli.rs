use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use natded_core::corpus::corpus;
use natded_core::formats::encode_proof;

fn natded(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_natded"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn golden_document() -> serde_json::Value {
    encode_proof(corpus().iter().find(|e| e.name == "huth_ryan_example").unwrap().proof.as_ref().unwrap())
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.ndproof");
    fs::write(&good, golden_document().to_string()).unwrap();
    let out = natded(&["check", path(&good)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("accepted"));

    let mut doc = golden_document();
    doc["proof"]["children"][0]["children"][1]["children"][0]["goal"]["assumptions"] = serde_json::json!([]);
    let bad = dir.path().join("bad.ndproof");
    fs::write(&bad, doc.to_string()).unwrap();
    let out = natded(&["check", path(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("[0, 1, 0]"), "{}", stdout(&out));
    assert!(stdout(&out).contains("NotAnAssumption"));

    let garbled = dir.path().join("garbled.ndproof");
    fs::write(&garbled, "{\"format_version\": 1,").unwrap();
    assert_eq!(natded(&["check", path(&garbled)]).status.code(), Some(2));
    fs::write(&garbled, r#"{"format_version": 1}"#).unwrap();
    let out = natded(&["check", path(&garbled)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/proof"));
    assert_eq!(natded(&["check", path(&dir.path().join("missing"))]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(natded(&[]).status.code(), Some(64));
    assert_eq!(natded(&["prove"]).status.code(), Some(64));
    assert_eq!(natded(&["check"]).status.code(), Some(64));
    assert_eq!(natded(&["print", "x", "--format", "html"]).status.code(), Some(64));
    assert_eq!(natded(&["validate", "x", "--max-size", "many"]).status.code(), Some(64));
    assert_eq!(natded(&["--help"]).status.code(), Some(0));
    assert_eq!(natded(&["--version"]).status.code(), Some(0));
}

#[test]
fn validate_reports_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("f.fol");
    fs::write(&file, r#"Imp (Uni (Pre "P" [Var 0])) (Exi (Pre "P" [Var 0]))"#).unwrap();
    let out = natded(&["validate", path(&file), "--max-size", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("valid up to 3 (exhaustive"));

    let out = natded(&["validate", path(&file), "--max-size", "3", "--budget", "5", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("(sampled"), "{}", stdout(&out));

    fs::write(&file, r#"Imp (Exi (Pre "P" [Var 0])) (Uni (Pre "P" [Var 0]))"#).unwrap();
    let out = natded(&["validate", path(&file), "--max-size", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("countermodel"));
    assert!(stdout(&out).contains("universe: {0..1}"), "{}", stdout(&out));

    fs::write(&file, "Imp (Pre").unwrap();
    assert_eq!(natded(&["validate", path(&file)]).status.code(), Some(2));
    fs::write(&file, "Falsity").unwrap();
    assert_eq!(natded(&["validate", path(&file), "--budget", "0"]).status.code(), Some(64));
}

#[test]
fn print_formats() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.ndproof");
    fs::write(&file, golden_document().to_string()).unwrap();
    let ok = stdout(&natded(&["print", path(&file)]));
    assert_eq!(ok.lines().count(), 6);
    assert!(ok.lines().all(|l| l.contains(" OK (")));
    let tree = stdout(&natded(&["print", "--format", "tree", path(&file)]));
    assert!(tree.starts_with("⊢ Imp (Con"));
    assert!(tree.lines().nth(1).unwrap().contains("[Imp_E: p := Pre \"P\" []]"));
}

#[test]
fn corpus_export_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let out = natded(&["corpus", "--export", path(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    let bundled = corpus();
    for entry in &bundled {
        assert!(dir.path().join(format!("{}.fol", entry.name)).exists());
        assert_eq!(dir.path().join(format!("{}.ndproof", entry.name)).exists(), entry.proof.is_some());
    }
    let out = natded(&["corpus", "--run-all", "--from", path(dir.path())]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).lines().count(), bundled.len());

    let mut doc = golden_document();
    doc["proof"]["children"][0]["args"]["p"] = serde_json::json!({"pre": ["R", []]});
    fs::write(dir.path().join("curry.ndproof"), doc.to_string()).unwrap();
    let out = natded(&["corpus", "--run-all", "--from", path(dir.path())]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().any(|l| l.starts_with("curry") && l.contains("FAIL")));

    fs::write(dir.path().join("curry.ndproof"), "[]").unwrap();
    assert_eq!(natded(&["corpus", "--run-all", "--from", path(dir.path())]).status.code(), Some(2));
}

#[test]
fn small_fuzz_run() {
    let out = natded(&["fuzz-soundness", "--count", "20", "--max-size", "2", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout(&out);
    assert!(report.contains("proofs: 20 accepted"), "{report}");
    assert!(report.contains("countermodels: 0"));
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiddity")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc)
}

const SQRT2_TUPLE: &str = r#"{"field":{"min_poly":["-2","0","1"],"root_hint":{"re":["1","2"],"im":["0","0"]},"assume_irreducible":false},"generator":["0","1"],"multipliers":[1,1,1,1,1,1,1,1]}"#;

#[test]
fn check_exit_codes() {
    let (code, doc) = json(&["check", "--int", "--multipliers", "0,0"]);
    assert_eq!(code, 0);
    assert_eq!(doc["epsilon"], -1);
    let (code, doc) = json(&["check", "--int", "--multipliers", "1,2,1,2"]);
    assert_eq!((code, doc["epsilon"].as_i64()), (0, Some(-1)));
    let (code, doc) = json(&["check", "--int", "--multipliers", "1,1"]);
    assert_eq!((code, doc["is_quiddity"].as_bool()), (1, Some(false)));
    assert_eq!(run(&["check", "{not json"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--int", "--multipliers", "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn check_reads_inline_and_stdin_documents() {
    let (code, doc) = json(&["check", SQRT2_TUPLE]);
    assert_eq!((code, doc["epsilon"].as_i64()), (0, Some(1)));

    let mut child = Command::new(env!("CARGO_BIN_EXE_quiddity"))
        .args(["--json", "check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(SQRT2_TUPLE.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn errors_are_structured_in_json_mode() {
    let out = run(&["--json", "classify", "--min-poly", "-1,0,1", "--root-hint", "0,2"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].is_string());
}

#[test]
fn classify_examples() {
    let (code, doc) = json(&["classify", "--min-poly", "-1,-1,1", "--root-hint", "1.6,1.7"]);
    assert_eq!(code, 0);
    assert_eq!(doc["family"], "Unknown");
    assert!(!doc["notes"].as_array().unwrap().is_empty());

    let (_, doc) = json(&["classify", "--min-poly", "-1,-2,1", "--root-hint", "-0.5,-0.4"]);
    assert_eq!(doc["family"], "FourTupleFamily");
    assert_eq!(doc["justification"], "ConjugateModulusGE2");

    let (_, doc) = json(&["classify", "--transcendental"]);
    assert_eq!(doc["justification"], "Transcendental");
}

#[test]
fn enumerate_includes_zero_four_tuple() {
    let (code, doc) = json(&["enumerate", "--int", "--nmax", "4", "--kbound", "2"]);
    assert_eq!(code, 0);
    let sets: Vec<Vec<i64>> = doc["quiddities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| serde_json::from_value(m["multipliers"].clone()).unwrap())
        .collect();
    // canonical representative of (0, 2, 0, -2)
    assert!(sets.contains(&vec![-2, 0, 2, 0]));
}

#[test]
fn identical_configs_give_identical_output() {
    let args = ["--json", "census", "--min-poly", "-2,0,1", "--root-hint", "1,2", "--nmax", "6", "--kbound", "2"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let mut seq = args.to_vec();
    seq.insert(1, "--sequential");
    assert_eq!(run(&seq).stdout, a.stdout);
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--json", "census", "--int", "--nmax", "6", "--kbound", "2", "--cache-dir", d];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let uncached = run(&args[..args.len() - 2]);
    assert_eq!(first.stdout, uncached.stdout);
}

#[test]
fn verify_suites() {
    assert_eq!(run(&["verify", "small-sizes"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "rouche-examples"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    let list = String::from_utf8(run(&["verify", "--list"]).stdout).unwrap();
    assert!(list.contains("reduction-oracle"));
}

#[test]
fn polycrit_and_parity() {
    let (code, doc) = json(&["polycrit", "--poly", "5,0,0,5,10,1", "--radius", "2"]);
    assert_eq!(code, 0);
    assert!(doc.to_string().contains("\"count\":4"));
    let (code, _) = json(&["parity", "--min-poly", "1,0,0,0,1", "--root-hint", "0.5,1,0.5,1", "--nmax", "5", "--kbound", "1"]);
    assert_eq!(code, 0);
}

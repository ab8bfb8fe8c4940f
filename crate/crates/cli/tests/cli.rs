use std::process::{Command, Output};

use serde_json::Value;

fn wsd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wsd"))
        .args(args)
        .env_remove("WSD_PRIMES")
        .output()
        .expect("run wsd")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn table1_json() {
    let out = wsd(&["verify", "table1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "verify table1");
    assert!(v["meta"]["timestamp"].is_string());
    let m = &v["results"]["suites"][0]["data"]["multiplicity"];
    let want = serde_json::json!([
        [1, 0, 0, 0],
        [0, 3, 0, 0],
        [3, 6, 3, 0],
        [10, 9, 8, 1],
        [6, 18, 9, 3],
        [6, 18, 9, 3],
        [10, 9, 8, 1],
        [3, 6, 3, 0],
        [0, 3, 0, 0],
        [1, 0, 0, 0]
    ]);
    assert_eq!(m, &want);
}

#[test]
fn exact_closure_on_hw3() {
    let out = wsd(&[
        "closure", "--block", "hw3", "--field", "exact", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["results"]["runs"][0]["summary"]["dimension"], 15);
    assert_eq!(v["results"]["expected_dimension"], 15);
}

#[test]
fn corrupted_operator_fails_with_named_identity() {
    let out = wsd(&["verify", "relations", "--corrupt-operator", "E10"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[FAIL] relations: E I + I E = Id"));
    assert!(text.contains("E(1,0)I(1,0) + I(1,0)E(1,0) = Id"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(wsd(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(
        wsd(&["verify", "table1", "--prime", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(wsd(&["closure", "--block", "hw9"]).status.code(), Some(2));
    assert_eq!(
        wsd(&["verify", "table1", "--format", "xml"]).status.code(),
        Some(2)
    );
    let env = Command::new(env!("CARGO_BIN_EXE_wsd"))
        .args(["verify", "table1"])
        .env("WSD_PRIMES", "11")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
}

#[test]
fn primes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_wsd"))
        .args(["closure", "--block", "hw3", "--format", "json"])
        .env("WSD_PRIMES", "1000000009,998244353")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let primes: Vec<u64> = v["results"]["runs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["summary"]["prime"].as_u64().unwrap())
        .collect();
    assert_eq!(primes, vec![1000000009, 998244353]);
}

#[test]
fn report_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("appendix.csv");
    let out = wsd(&[
        "verify",
        "appendix",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("group,check,passed,detail\n"));
    assert_eq!(text.lines().count(), 5);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn results_are_reproducible() {
    let a = json_of(&wsd(&["verify", "bases", "--format", "json"]));
    let b = json_of(&wsd(&["verify", "bases", "--format", "json"]));
    assert_eq!(
        serde_json::to_string(&a["results"]).unwrap(),
        serde_json::to_string(&b["results"]).unwrap()
    );
}

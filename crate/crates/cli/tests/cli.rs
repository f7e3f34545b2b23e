use std::fs;
use std::process::{Command, Output};

use nelson_core::algebra::parse_algebra;
use nelson_core::catalog;

fn nelson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nelson")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn catalog_entry_round_trips_through_the_loader() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a8.alg");
    let o = nelson(&["catalog", "--get", "A8", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let loaded = parse_algebra(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(loaded.same_tables(&catalog::get("A8").unwrap()));
    let o = nelson(&["validate", "--class", "s-algebra", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn n3_check_on_a4_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a4.alg");
    nelson(&["catalog", "--get", "A4", "--out", path.to_str().unwrap()]);
    let o = nelson(&["validate", "--class", "n3", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL x->x = y->y  witness (0, b)"), "{}", stdout(&o));
    let o = nelson(&["--format", "json", "validate", "--class", "n3", "A4"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let failed: Vec<_> = v["verdicts"].as_array().unwrap().iter().filter(|x| x["holds"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["witness_names"], serde_json::json!(["0", "b"]));
}

#[test]
fn paper_suite_passes_and_reports_refutations() {
    let o = nelson(&["paper-suite"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("9/9 refuted"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS C")).count(), 10);
    let o = nelson(&["--format", "json", "paper-suite"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["criteria"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn exit_codes() {
    assert_eq!(nelson(&["countermodel", "A8", "p | ~p"]).status.code(), Some(1));
    assert_eq!(nelson(&["countermodel", "B2", "p | ~p"]).status.code(), Some(0));
    assert_eq!(nelson(&["countermodel", "A8", "p |"]).status.code(), Some(2));
    assert_eq!(nelson(&["validate", "--class", "nope", "A8"]).status.code(), Some(2));
    assert_eq!(nelson(&["validate", "--class", "mv", "no-such-file.alg"]).status.code(), Some(2));
    assert_eq!(nelson(&["satisfies", "L3star", "--eq", "x & (y | z) = (x & y) | (x & z)"]).status.code(), Some(0));
    assert_eq!(nelson(&["satisfies", "A8", "--eq", "x & (y | z) = (x & y) | (x & z)"]).status.code(), Some(1));
    assert_eq!(nelson(&["satisfies", "L3", "--quasieq", "x * x = x ==> x = 1"]).status.code(), Some(1));
}

#[test]
fn proof_scripts() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.proof");
    fs::write(&good, "calculus S_PRIME\nassume p\ngoal q => p\nstep 1: p by assumption\nstep 2: p => (q => p) by axiom S3\nstep 3: q => p by rule MP from 1,2\n").unwrap();
    let o = nelson(&["check-proof", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "accepted: q => p");
    let bad = dir.path().join("bad.proof");
    fs::write(&bad, "calculus S_PRIME\nassume p\nstep 1: p by assumption\nstep 2: p => (q => p) by axiom S3\nstep 3: q => p by rule MP from 2,1\n").unwrap();
    let o = nelson(&["check-proof", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "rejected at step 3: no rule match for MP");
    let broken = dir.path().join("broken.proof");
    fs::write(&broken, "calculus S_PRIME\nstep 1: p by magic\n").unwrap();
    assert_eq!(nelson(&["check-proof", broken.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn doubling_and_translation_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("l3star.alg");
    assert_eq!(nelson(&["double", "--in", "L3", "--out", out.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(nelson(&["validate", "--class", "s-algebra", out.to_str().unwrap()]).status.code(), Some(0));
    let prime = dir.path().join("a8p.alg");
    nelson(&["translate", "--to", "sprime", "A8", "--out", prime.to_str().unwrap()]);
    let text = fs::read_to_string(&prime).unwrap();
    assert!(text.contains("signature & | * => 0 1"), "{text}");
    let back = dir.path().join("a8.alg");
    nelson(&["translate", "--to", "s", prime.to_str().unwrap(), "--out", back.to_str().unwrap()]);
    let round = parse_algebra(&fs::read_to_string(&back).unwrap()).unwrap();
    let a8 = catalog::get("A8").unwrap();
    assert!(round.same_up_to_element_order(&a8.with_name(round.name())));
    assert_eq!(nelson(&["double", "--in", "A4"]).status.code(), Some(2));
}

#[test]
fn star_output() {
    let o = nelson(&["star", "--quasieq", "x * x = x"]);
    assert_eq!(stdout(&o), "x | ~x = x ==> x * x = x\n(x | ~x) * (x | ~x) = x | ~x\n");
    assert_eq!(nelson(&["star", "--quasieq", "~x = x"]).status.code(), Some(2));
}

#[test]
fn search_writes_models_and_honours_budget() {
    let dir = tempfile::tempdir().unwrap();
    let o = nelson(&[
        "search", "--size", "6", "--class", "s-algebra", "--require", "x & (y | z) = (x & y) | (x & z)",
        "--forbid", "x * x = x", "--out-dir", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert!(!files.is_empty());
    for f in files {
        let a = parse_algebra(&fs::read_to_string(f.unwrap().path()).unwrap()).unwrap();
        assert_eq!(a.signature().to_string(), "& | * => ~ 0 1");
    }
    let o = nelson(&["--format", "json", "search", "--size", "4", "--class", "cirl", "--mode", "count"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 11);
    let o = nelson(&["search", "--size", "8", "--class", "s-algebra", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("budget"));
    let o = nelson(&["search", "--size", "7", "--class", "s-algebra", "--forbid-class", "distributive", "--mode", "first"]);
    assert_eq!(o.status.code(), Some(1));
}

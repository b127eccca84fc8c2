//! The command-line front end: output shapes and exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_soberlens"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn input(name: &str, json: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("soberlens-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn check_space_passes() {
    let p = input("sierpinski.json", r#"{"n": 2, "opens": [[], [1], [0, 1]]}"#);
    let o = run(&[
        "check",
        p.to_str().unwrap(),
        "--checks",
        "properties,oracles,duality,powerdomain",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v = json(&o);
    assert_eq!(v["properties"]["sober"], true);
    assert_eq!(v["quasi_lenses"].as_array().unwrap().len(), 3);
    assert!(v["violations"].as_array().unwrap().is_empty());
}

#[test]
fn check_preorder_and_lattice() {
    let p = input("chain.json", r#"{"n": 3, "leq": [[0, 1], [1, 2]]}"#);
    assert_eq!(run(&["check", p.to_str().unwrap()]).status.code(), Some(0));
    let o = run(&["check", p.to_str().unwrap(), "--reject-non-transitive"]);
    assert_eq!(o.status.code(), Some(2));

    let l = input(
        "m3.json",
        r#"{"m": 5, "leq": [[0, 1], [0, 2], [0, 3], [1, 4], [2, 4], [3, 4]]}"#,
    );
    let o = run(&[
        "check",
        l.to_str().unwrap(),
        "--checks",
        "frame,temperance,frames",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["frame"]["is_frame"], false);
    assert_eq!(v["temperance"]["locally_temperate"], false);
}

#[test]
fn input_errors_exit_2() {
    let bad = input("bad.json", r#"{"n": 2, "opens": [[0], [1]]}"#);
    assert_eq!(
        run(&["check", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let garbage = input("garbage.json", "{");
    assert_eq!(
        run(&["check", garbage.to_str().unwrap()]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["check", "/nonexistent/x.json"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["suite", "--max-points", "9"]).status.code(), Some(2));
    assert_eq!(run(&["suite", "--suites", "nope"]).status.code(), Some(2));
}

#[test]
fn rejected_certificate_exits_1() {
    let good = input(
        "good.json",
        r#"{"space": "cofinite_nat", "kind": "non_weakly_hausdorff_pair", "payload": {"x": 0, "y": 1, "w": {"nats": {"tag": "finite", "support": []}}}}"#,
    );
    let o = run(&["examples", "--certificate", good.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"]["valid"], true);

    let wrong = input(
        "wrong.json",
        r#"{"space": "scott_nat_ab", "kind": "non_weakly_hausdorff_pair", "payload": {"x": 0, "y": 1, "w": {"nats": {"tag": "finite", "support": []}}}}"#,
    );
    let o = run(&["examples", "--certificate", wrong.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));

    let malformed = input(
        "malformed.json",
        r#"{"space": "cofinite_nat", "kind": "nope"}"#,
    );
    let o = run(&["examples", "--certificate", malformed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_and_duality() {
    let p = input("sierpinski2.json", r#"{"n": 2, "subbasis": [[1]]}"#);
    let o = run(&["enumerate", "quasi-lenses", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.starts_with(b"{") || o.stdout.starts_with(b"["));

    let o = run(&["enumerate", "spaces", "--max-points", "3"]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["duality", p.to_str().unwrap(), "--exclude-empty"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn dot_output_and_out_flag() {
    let p = input("sierpinski3.json", r#"{"n": 2, "subbasis": [[1]]}"#);
    let out = p.with_extension("dot");
    let o = run(&[
        "check",
        p.to_str().unwrap(),
        "--checks",
        "powerdomain",
        "--format",
        "dot",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("digraph \"lenses_tem\""));
    assert_eq!(run(&["suite", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn small_suite_passes() {
    let o = run(&[
        "suite",
        "--max-points",
        "3",
        "--samples",
        "20",
        "--hyperspace-samples",
        "5",
        "--lattice-samples",
        "5",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stdout)
    );
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["schema_version"], 1);
}

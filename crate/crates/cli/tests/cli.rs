use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epiview"))
        .args(args)
        .env_remove("EPIVIEW_MAX_ATOMS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const PI1: &str = "a | b.\na :- K b.\nb :- K a.\n";

#[test]
fn solve_reports_single_view() {
    let dir = TempDir::new().unwrap();
    let g3 = write(&dir, "g3.thy", "K a -> a.\n");
    let o = run(&["solve", g3.to_str().unwrap(), "--semantics", "faeel"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 world view: [{}]");
}

#[test]
fn solve_without_views_exits_three() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.lp", "a | b.\nc :- K a.\n:- not c.\n");
    let o = run(&["solve", p3.to_str().unwrap(), "--semantics", "g91"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).trim(), "no world views");
}

#[test]
fn extra_atoms_widen_the_signature() {
    let dir = TempDir::new().unwrap();
    let empty = write(&dir, "empty.lp", "");
    let p = empty.to_str().unwrap();
    let o = run(&["solve", p, "--atoms", "a", "--semantics", "ael"]);
    assert_eq!(stdout(&o).trim(), "1 world view: [{},{a}]");
    for fast in [true, false] {
        let mut args = vec!["solve", p, "--atoms", "a"];
        if !fast {
            args.push("--no-fast-path");
        }
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), "1 world view: [{}]");
    }
}

#[test]
fn json_round_trips() {
    let dir = TempDir::new().unwrap();
    let p1 = write(&dir, "p1.lp", PI1);
    let o = run(&["solve", p1.to_str().unwrap(), "--semantics", "g91", "--format", "json", "--explain"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["input", "semantics", "world_views", "founded", "witnesses"]);
    assert_eq!(v["world_views"], serde_json::json!([[["a", "b"]], [["a"], ["b"]]]));
    assert_eq!(v["founded"], serde_json::json!([false, true]));
    assert_eq!(
        v["witnesses"][0],
        serde_json::json!([{"X": ["a"], "I": ["a", "b"]}, {"X": ["b"], "I": ["a", "b"]}])
    );
    assert!(v["witnesses"][1].is_null());
}

#[test]
fn empty_view_is_not_absence() {
    let dir = TempDir::new().unwrap();
    let g3 = write(&dir, "g3.thy", "K a -> a.\n");
    let o = run(&["solve", g3.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["world_views"], serde_json::json!([[[]]]));
    let p3 = write(&dir, "p3.lp", "a | b.\nc :- K a.\n:- not c.\n");
    let o = run(&["solve", p3.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["world_views"], serde_json::json!([]));
}

#[test]
fn check_founded_verdicts() {
    let dir = TempDir::new().unwrap();
    let p1 = write(&dir, "p1.lp", PI1);
    let p = p1.to_str().unwrap();
    let o = run(&["check-founded", p, "[{a,b}]"]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert!(text.starts_with("unfounded {<{a},{a,b}>,<{b},{a,b}>}"), "{text}");
    let o = run(&["check-founded", p, "[{a},{b}]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "founded");

    let g3 = write(&dir, "g3.lp", "a :- K a.\n");
    let o = run(&["check-founded", g3.to_str().unwrap(), "[{}]", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["founded"], Value::Bool(true));
    assert!(v["witness"].is_null());

    let o = run(&["check-founded", p, "[{a"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn compare_flags_unfounded_view() {
    let dir = TempDir::new().unwrap();
    let p1 = write(&dir, "p1.lp", PI1);
    let o = run(&["compare", p1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("g91 view [{a,b}] is unfounded"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("faeel ") && l.ends_with("[{a},{b}]")), "{text}");

    let neg = write(&dir, "neg.lp", "a :- not K not a.\n");
    let o = run(&["compare", neg.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["world_views"]["g91"], v["world_views"]["faeel"]);

    let p5 = write(&dir, "p5.lp", "a | b.\nc :- K a.\n:- not K c.\n");
    let o = run(&["compare", p5.to_str().unwrap(), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["world_views"]["g91"], serde_json::json!([]));
    assert_eq!(v["world_views"]["faeel"], serde_json::json!([]));
}

#[test]
fn exit_codes_for_errors() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.lp", "a :- (b.\n");
    assert_eq!(run(&["solve", bad.to_str().unwrap()]).status.code(), Some(1));
    let theory = write(&dir, "t.thy", "K a -> a.\n");
    assert_eq!(run(&["solve", theory.to_str().unwrap(), "--explain"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "/nonexistent/x.lp"]).status.code(), Some(1));
    assert_eq!(run(&["solve", theory.to_str().unwrap(), "--semantics", "nope"]).status.code(), Some(1));

    let p1 = write(&dir, "p1.lp", PI1);
    let o = run(&["solve", p1.to_str().unwrap(), "--max-atoms", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-atoms"));
    let o = Command::new(env!("CARGO_BIN_EXE_epiview"))
        .args(["solve", p1.to_str().unwrap()])
        .env("EPIVIEW_MAX_ATOMS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mode_override() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "rules.txt", PI1);
    let o = run(&["solve", p.to_str().unwrap(), "--mode", "program", "--explain"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 world view: [{a},{b}] founded");
}

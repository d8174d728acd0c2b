use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn brieskorn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brieskorn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("brieskorn-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let path = self.0.join(name);
        std::fs::write(&path, contents).unwrap();
        path.to_string_lossy().into_owned()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn lattice_json_and_matrix() {
    let out = brieskorn(&["lattice", "2", "3", "5", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["rank"], 8);
    assert_eq!(v["gram"].as_array().unwrap().len(), 8);

    let out = brieskorn(&["lattice", "2", "2", "3", "--matrix"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn output_is_deterministic() {
    let a = brieskorn(&["word", "milnor", "3", "3", "4"]);
    let b = brieskorn(&["word", "milnor", "3", "3", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["letter_count"], 2 * 2 * 4);
}

#[test]
fn invalid_input_exits_two_with_error_on_stderr() {
    let out = brieskorn(&["lattice", "1", "2", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("at least 2"));

    assert_eq!(
        brieskorn(&["lattice", "two", "3", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(brieskorn(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = brieskorn(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for cmd in [
        "lattice",
        "oracle",
        "relation",
        "word",
        "substitute",
        "surgery",
        "sp-table",
        "resolve",
        "stein",
        "embed",
        "selftest",
    ] {
        assert!(text.contains(cmd), "help lists {cmd}");
    }
}

#[test]
fn relations_pass() {
    for args in [
        ["relation", "gchain", "4"],
        ["relation", "chain-even", "3"],
        ["relation", "chain-odd", "2"],
    ] {
        let out = brieskorn(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert_eq!(json(&out)["pass"], true);
    }
    assert_eq!(
        json(&brieskorn(&["relation", "gchain", "3"]))["minimal_exponent"],
        3
    );
}

#[test]
fn substitute_round_trip_through_files() {
    let dir = Scratch::new("subst");
    let word = dir.file("word.txt", "t1_1 d1 d2 d3 T1_2 d1 d2 d3\n");
    let pattern = dir.file("pattern.txt", "d1 d2 d3");
    let replacement = dir.file(
        "replacement.json",
        r#"{"fiber":{"genus":1,"boundary_count":3},"word":"t1_1 t2_1"}"#,
    );
    let out = brieskorn(&[
        "substitute",
        "--word",
        &word,
        "--pattern",
        &pattern,
        "--replacement",
        &replacement,
        "--at",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["word"], "t1_1 d1 d2 d3 T1_2 t1_1 t2_1");

    let out = brieskorn(&[
        "substitute",
        "--word",
        &word,
        "--pattern",
        &pattern,
        "--replacement",
        &replacement,
        "--at",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.0.join("missing.txt");
    let out = brieskorn(&[
        "substitute",
        "--word",
        missing.to_str().unwrap(),
        "--pattern",
        &pattern,
        "--replacement",
        &replacement,
        "--at",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn surgery_accepts_negative_invariants() {
    let out = brieskorn(&[
        "surgery", "apply", "--euler", "-4", "--sigma", "-7", "--blowup", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["after"]["euler"], -4 + 9);
    assert_eq!(v["after"]["signature"], -7 - 5);

    let delta = json(&brieskorn(&["surgery", "delta", "2"]));
    assert_eq!(delta["blowup"]["delta_euler"], 0);
    assert_eq!(delta["blowup"]["delta_signature"], 0);
    assert_eq!(delta["blowdown"]["delta_b2"], 0);
}

#[test]
fn sp_table_text_is_aligned() {
    let out = brieskorn(&["sp-table", "4", "--text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let widths: Vec<usize> = text.lines().map(|l| l.chars().count()).collect();
    assert_eq!(widths.len(), 4);
    assert!(text.contains("K3 # 4C̄P²"));
}

#[test]
fn resolve_dot_and_json() {
    let out = brieskorn(&["resolve", "torus-link", "4", "6", "--dot"]);
    assert!(out.status.success());
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("shape=diamond").count(), 2);

    let v = json(&brieskorn(&["resolve", "torus-link", "3", "5"]));
    assert_eq!(v["s3_unimodular"], true);

    let v = json(&brieskorn(&["resolve", "fermat", "4"]));
    assert_eq!(v["vertices"][0]["genus"], 3);
    assert!(v.get("s3_unimodular").is_none());

    assert_eq!(brieskorn(&["resolve", "chain", "2"]).status.code(), Some(2));
    assert!(brieskorn(&["resolve", "chain", "2", "--odd"])
        .status
        .success());
}

#[test]
fn stein_and_embed() {
    let v = json(&brieskorn(&["stein", "2", "3", "4"]));
    let handles = v["handles"].as_array().unwrap();
    assert_eq!(handles.len(), 6);
    assert!(handles.iter().all(|h| h["tb"] == -1 && h["rotation"] == 0));

    let out = brieskorn(&["embed", "2", "3", "4", "2", "3", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["added_handles"], 2);

    let out = brieskorn(&["embed", "2", "3", "5", "2", "3", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

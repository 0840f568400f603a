use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathcover-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lab_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pathcover-lab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = lab(&full);
    (serde_json::from_slice(&o.stdout).expect("valid JSON"), o.status.code().unwrap())
}

#[test]
fn gen_prints_graph6() {
    assert_eq!(stdout(&lab(&["gen", "K(3)"])), "Bw\n");
    assert_eq!(stdout(&lab(&["gen", "P(2)"])), "A_\n");
    assert_eq!(stdout(&lab(&["gen", "F1(1,1)"])), stdout(&lab(&["gen", "S(3)"])));
    let (v, code) = json(&["gen", "C(5)"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["order"], 5);
    assert_eq!(v["results"]["size"], 5);
    let bad = lab(&["gen", "Q(3)"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}

#[test]
fn invariants_of_small_graphs() {
    let text = stdout(&lab(&["invariants", "S(3)"]));
    assert_eq!(text, "Cs alpha=3 pc=2 pp=2 cc=3 cp=3 ham=false\n");
    let (v, code) = json(&["invariants", "P(5)", "H3(2,3)", "--which", "cc,pp"]);
    assert_eq!(code, 0);
    let graphs = v["results"]["graphs"].as_array().unwrap();
    assert_eq!(graphs[0]["cc"]["value"], 3);
    assert_eq!(graphs[1]["pp"]["value"], 2);
    assert!(graphs[0].get("alpha").is_none());
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn invariants_respect_budget() {
    let o = lab(&["invariants", "P(20)", "--which", "pc"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
    let o = lab(&["--max-order-exact", "20", "invariants", "P(20)", "--which", "pc"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pc=1"));
}

#[test]
fn invariants_read_stdin() {
    let o = lab_stdin(&["invariants", "--which", "alpha,ham"], "Bw\n\nCs\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Bw alpha=1 ham=true\nCs alpha=3 ham=false\n");
}

#[test]
fn free_reports_witnesses() {
    let o = lab(&["free", "C(6)", "-f", "P(6)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("free\n"));
    let (v, code) = json(&["free", "C(6)", "-f", "P(5)", "-f", "P(6)"]);
    assert_eq!(code, 1);
    let members = v["results"]["graphs"][0]["members"].as_array().unwrap();
    assert_eq!(members[0]["present"], true);
    assert_eq!(members[0]["witness"].as_array().unwrap().len(), 5);
    assert_eq!(members[1]["present"], false);
}

#[test]
fn cover_builds_certified_systems() {
    let (v, code) = json(&["cover", "-n", "3", "--check-freeness", "P(9)"]);
    assert_eq!(code, 0);
    let g = &v["results"]["graphs"][0];
    assert_eq!(g["paths"]["paths"].as_array().unwrap().len(), 1);
    assert_eq!(g["certificate"]["spine_bound"], 3);
    let (v, code) = json(&["cover", "-n", "3", "--mode", "partition", "P(9)"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["graphs"][0]["certificate"]["spine_bound"], 1);

    let o = lab(&["cover", "-n", "3", "--check-freeness", "S(3)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("S(3)"));
    assert_eq!(lab(&["cover", "-n", "3", "Ag"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "ramsey"],
        vec!["verify", "lemmas"],
        vec!["--seed", "1", "verify", "random", "--count", "500"],
    ] {
        let o = lab(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).ends_with(" 0 failed\n"));
    }
}

#[test]
fn verify_is_thread_count_independent() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_pathcover-lab"))
            .args(["--json", "--seed", "5", "verify", "random", "--count", "100"])
            .env("PATHCOVER_LAB_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn sample_is_deterministic() {
    let args = ["--seed", "9", "sample", "--order", "8", "--edge-prob", "1/3", "--count", "5"];
    let a = stdout(&lab(&args));
    assert_eq!(a, stdout(&lab(&args)));
    assert_eq!(a.lines().count(), 5);
    assert_ne!(a, stdout(&lab(&["--seed", "10", "sample", "--order", "8", "--edge-prob", "1/3", "--count", "5"])));
    assert_eq!(stdout(&lab(&["sample", "--order", "4", "--edge-prob", "1"])), "C~\n");
    assert_eq!(stdout(&lab(&["sample", "--order", "4", "--edge-prob", "0"])), "C?\n");
    assert_eq!(lab(&["sample", "--order", "0", "--edge-prob", "0.5"]).status.code(), Some(2));
    assert_eq!(lab(&["sample", "--order", "4", "--edge-prob", "2"]).status.code(), Some(2));

    let o = lab(&["--seed", "2", "sample", "--order", "9", "--edge-prob", "0.2", "--count", "4", "--connected-only"]);
    for line in stdout(&o).lines() {
        let inv = stdout(&lab(&["invariants", line, "--which", "alpha"]));
        assert!(inv.starts_with(line));
    }
}

#[test]
fn json_report_shape() {
    let (v, _) = json(&["invariants", "K(4)"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys.len(), 4);
    for k in ["command", "inputs", "results", "checks"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    assert_eq!(v["command"], "invariants");
}

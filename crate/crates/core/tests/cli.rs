use std::path::PathBuf;
use std::process::{Command, Output};

use lightframe::report::{CheckReport, Status};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lightframe")).args(args).output().expect("binary runs")
}

fn manifest_path(name: &str) -> String {
    format!("{}/manifests/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lightframe-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn passing_run_exits_zero() {
    let o = run(&["check", &manifest_path("example-4-2.lm"), "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains(" 0 fail"));
}

#[test]
fn failing_run_exits_one_and_prints_the_witness() {
    let o = run(&["check", &manifest_path("example-4-3.lm"), "--suite", "frame"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("fail"));
    assert!(out.contains("frame.dimension"));
    assert!(out.contains("dimension obstruction"));
    let o = run(&["check", "example-4-1.lm", "--suite", "lightlike"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("1/8*D1^2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["check", &manifest_path("example-4-2.lm"), "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["check", "/nonexistent/m.lm"]).status.code(), Some(2));
    assert_eq!(run(&["check", &manifest_path("example-4-2.lm"), "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let bad = scratch("bad.lm");
    std::fs::write(&bad, "[ambient]\ncoordinates = x y\nindex = 0\nepsilon = 1\nxi[1] = 0, 1, 0\n").unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.lm:"));
}

#[test]
fn json_is_deterministic_and_round_trips() {
    let args = ["check", "example-4-2.lm", "--suite", "induced", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let rep: CheckReport = serde_json::from_slice(&a.stdout).unwrap();
    assert!(rep.items.iter().all(|i| i.status == Status::Pass));
    assert_eq!(rep.item("induced.B[xi1,U]").unwrap().witness, "-1");
    let again = serde_json::to_string_pretty(&rep).unwrap() + "\n";
    assert_eq!(again.as_bytes(), a.stdout.as_slice());
}

#[test]
fn output_flag_writes_the_report() {
    let path = scratch("report.json");
    let o = run(&["check", "example-4-2.lm", "--suite", "structure", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let rep: CheckReport = serde_json::from_str(&text).unwrap();
    assert_eq!(rep.count(Status::Pass), rep.items.len());
    assert!(rep.item("s.normal").is_some());
}

#[test]
fn manifest_suites_are_the_default() {
    let o = run(&["check", "example-4-3.lm"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("frame.dimension"));
}

#[test]
fn suites_are_listed() {
    let o = run(&["suites"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for s in ["structure", "lightlike", "frame", "induced", "distributions", "curvature", "all"] {
        assert!(out.lines().any(|l| l.starts_with(s)), "{s} missing from:\n{out}");
    }
}

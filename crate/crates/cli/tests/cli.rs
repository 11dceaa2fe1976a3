use std::io::Write;
use std::process::{Command, Output};

use logcoh::report::{parse_report, TheoremCheck};

fn logcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logcoh")).args(args).env_remove("LOGCOH_CUTOFF").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_json_is_parseable_and_deterministic() {
    let a = logcoh(&["analyze", "x^5 + y^5 + x^2*y^2", "--vars", "x,y", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    let b = logcoh(&["analyze", "x^5 + y^5 + x^2*y^2", "--vars", "x,y", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let r = parse_report(&stdout(&a)).unwrap();
    assert_eq!(r.mu(), Some(11));
    assert_eq!(r.tau(), Some(10));
    assert!(matches!(r.theorem_check, TheoremCheck::InKernel { .. }));
}

#[test]
fn analyze_text_shows_certificate_identities() {
    let o = logcoh(&["analyze", "x^5 + y^5 + x^2*y^2"]);
    let s = stdout(&o);
    assert!(s.contains("f*h = 0"));
    assert!(s.contains("f_x*h = [1/(x^2*y)]"));
    assert!(s.contains("f_y*h = [1/(x*y^2)]"));
}

#[test]
fn kernel_witness_and_terms() {
    let o = logcoh(&["kernel", "x^2 + y^3", "--vars", "x,y"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("[1/(x*y)] not in ker d1"));
    let o = logcoh(&["kernel", "x^5 + y^5 + x^2*y^2", "--term", "1:1,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "in_kernel");
    let o = logcoh(&["kernel", "x^2 + y^3", "--term", "1:0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn lct_verb() {
    let o = logcoh(&["lct", "x^3 + y^3 + z^3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lct"]["status"], "fails");
    assert_eq!(v["lct"]["k"], 1);
    let o = logcoh(&["lct", "x^2 + y^3 + z^5", "--weights", "1/2,1/3,1/5"]);
    assert!(stdout(&o).contains("lct: holds"));
    let o = logcoh(&["lct", "x^5 + y^5 + x^2*y^2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn derlog_verb() {
    let o = logcoh(&["derlog", "x*y*(x+y)*(x+y*z)", "--vars", "x,y,z", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["generators"].as_array().unwrap().len() >= 3);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(logcoh(&["analyze", "x -", "--vars", "x,y"]).status.code(), Some(2));
    assert_eq!(logcoh(&["analyze", "x + w", "--vars", "x,y"]).status.code(), Some(2));
    assert_eq!(logcoh(&["corpus", "/nonexistent/corpus.toml"]).status.code(), Some(2));
    assert_eq!(logcoh(&["analyze", "x^2", "--cutoff", "1"]).status.code(), Some(2));
}

#[test]
fn corpus_exit_codes() {
    let o = logcoh(&["corpus"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let mut empty = tempfile::NamedTempFile::new().unwrap();
    empty.write_all(b"# nothing here\n").unwrap();
    let o = logcoh(&["corpus", empty.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1);

    let mut wrong = tempfile::NamedTempFile::new().unwrap();
    wrong
        .write_all(b"[[entry]]\nname = \"A2\"\nvars = [\"x\", \"y\"]\nf = \"x^2 + y^3\"\n[entry.expect]\nqh = false\n")
        .unwrap();
    let o = logcoh(&["corpus", wrong.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("qh: expected false, got true"));
}

#[test]
fn cutoff_environment_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_logcoh"))
        .args(["analyze", "x^2 + y^40", "--format", "json"])
        .env("LOGCOH_CUTOFF", "10")
        .output()
        .unwrap();
    let r = parse_report(&stdout(&o)).unwrap();
    assert!(!r.gates.isolated);
    assert_eq!(r.options.cutoff, 10);
}

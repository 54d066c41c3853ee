//! End-to-end checks of the `dbcycle` binary.

use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dbcycle(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dbcycle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn poset_file(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const TWO_CHAIN: &str = "elements: A B\ncover: A B\n";

#[test]
fn invalid_range_is_a_usage_error() {
    let out = dbcycle(&["gen-weight-range", "--n", "4", "--k", "2", "--s", "2", "--t", "2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("requires s+k-1 <= t"), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = dbcycle(&["gen-debruijn", "--k", "2", "--n", "3", "--bogus"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let args = ["verify", "--mode", "weight-range", "--n", "4", "--k", "2", "--s", "2", "--t", "3"];
    let good = dbcycle(&[&args[..], &["--cycle", "1110011010"]].concat(), None);
    assert_eq!(good.status.code(), Some(0), "{}", stdout(&good));
    assert!(stdout(&good).starts_with("PASS"));

    let bad = dbcycle(&[&args[..], &["--cycle", "1110011011"]].concat(), None);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("counterexample"));

    let malformed = dbcycle(&[&args[..], &["--cycle", "11x0"]].concat(), None);
    assert_eq!(malformed.status.code(), Some(2));
}

#[test]
fn machine_report() {
    let out = dbcycle(
        &["verify", "--mode", "weight-range", "--n", "3", "--k", "2", "--s", "0", "--t", "3", "--machine"],
        Some("11101000\n"),
    );
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("verdict=PASS\n"));
    assert!(text.contains("length=8\n"));
    assert!(text.contains("distinct_windows=8\n"));
}

#[test]
fn generated_cycle_pipes_into_verify() {
    let generated = dbcycle(&["gen-weight-range", "--n", "6", "--k", "3", "--s", "4", "--t", "8"], None);
    assert_eq!(generated.status.code(), Some(0));
    let verified = dbcycle(
        &["verify", "--mode", "weight-range", "--n", "6", "--k", "3", "--s", "4", "--t", "8"],
        Some(&stdout(&generated)),
    );
    assert_eq!(verified.status.code(), Some(0), "{}", stdout(&verified));

    let full = dbcycle(&["gen-debruijn", "--k", "11", "--n", "2"], None);
    assert_eq!(full.status.code(), Some(0));
    assert!(stdout(&full).contains(','));
    let verified = dbcycle(
        &["verify", "--mode", "weight-range", "--n", "2", "--k", "11", "--s", "0", "--t", "20"],
        Some(&stdout(&full)),
    );
    assert_eq!(verified.status.code(), Some(0), "{}", stdout(&verified));
}

#[test]
fn poset_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = poset_file(&dir, "chain.poset", TWO_CHAIN);
    let generated = dbcycle(&["gen-poset", "--poset", &path, "--n", "3"], None);
    assert_eq!(generated.status.code(), Some(0));
    let text = stdout(&generated);
    let mut lines = text.lines();
    let cycle = lines.next().unwrap();
    assert_eq!(cycle.len(), 27);
    let legend: Vec<&str> = lines.collect();
    assert_eq!(legend, ["0\t{}\t{}", "1\t{A}\t{A,B}", "2\t{B}\t{B}"]);

    let verified = dbcycle(&["verify", "--mode", "poset", "--poset", &path, "--n", "3", "--cycle", cycle], None);
    assert_eq!(verified.status.code(), Some(0), "{}", stdout(&verified));
}

#[test]
fn decode_window() {
    let dir = tempfile::tempdir().unwrap();
    let path = poset_file(&dir, "chain.poset", TWO_CHAIN);
    let out = dbcycle(&["decode", "--poset", &path, "--n", "2", "--cycle", "110022120", "--at", "3"], None);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "B={2}\nA={}\n");

    let out = dbcycle(&["decode", "--poset", &path, "--n", "2", "--cycle", "110022120", "--at", "9"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_poset_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cyclic = poset_file(&dir, "cyclic.poset", "elements: a b\ncover: a b\ncover: b a\n");
    let out = dbcycle(&["gen-poset", "--poset", &cyclic, "--n", "2"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:"));

    let missing = dir.path().join("absent.poset");
    let out = dbcycle(&["gen-poset", "--poset", missing.to_str().unwrap(), "--n", "2"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn path_demo_trace() {
    let out = dbcycle(
        &["path-demo", "--n", "11", "--k", "6", "--s", "25", "--t", "30", "--from", "0,0,0,2,2,5,5,5,3,3"],
        None,
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "{0,0,0,2,2,5,5,5,3,3} 25");
    assert_eq!(*lines.last().unwrap(), "{2,2,2,2,2,3,3,3,3,3} 25");
    assert!(lines.iter().skip(1).step_by(2).all(|l| l.starts_with("↓ ")));

    let illegal = dbcycle(&["path-demo", "--n", "4", "--k", "2", "--s", "2", "--t", "3", "--from", "000"], None);
    assert_eq!(illegal.status.code(), Some(2));
}

#[test]
fn count_rows() {
    let out = dbcycle(&["count", "--n", "3", "--k", "2"], None);
    assert_eq!(stdout(&out), "0\t1\n1\t3\n2\t3\n3\t1\ntotal\t8\n");

    let out = dbcycle(&["count", "--n", "4", "--k", "3", "--s", "2", "--t", "4"], None);
    assert_eq!(stdout(&out), "2\t10\n3\t16\n4\t19\ntotal\t45\n");

    let out = dbcycle(&["count", "--n", "4", "--k", "2", "--j", "2"], None);
    assert_eq!(stdout(&out), "2\t6\n");

    let out = dbcycle(&["count", "--n", "4", "--k", "2", "--j", "5"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generation_is_repeatable() {
    let args = ["gen-weight-range", "--n", "7", "--k", "4", "--s", "3", "--t", "12", "--seedless"];
    assert_eq!(dbcycle(&args, None).stdout, dbcycle(&args, None).stdout);
}

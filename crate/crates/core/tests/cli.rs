//! The command-line front end: exit codes, formats and determinism.

use std::process::{Command, Output};

fn staut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_staut")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn quantale_check_rel3_passes_on_every_element() {
    let o = staut(&["quantale", "check", "rel:3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("negation-identity") && out.contains(" 512 "), "{out}");
}

#[test]
fn structured_reports_are_byte_identical() {
    let args = ["vec", "scalar-table", "--format", "structured", "--seed", "17"];
    let (a, b) = (staut(&args), staut(&args));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["seed"], 17);
    assert_eq!(v["schema"], "staut-report/1");
}

#[test]
fn scalar_table_lists_all_four_scalars() {
    let out = stdout(&staut(&["vec", "scalar-table"]));
    for lam in ["scalar[1]", "scalar[-1]", "scalar[2]", "scalar[1/2]"] {
        assert!(out.contains(lam), "{lam} missing");
    }
    assert!(out.contains("quasicycle: Pnul- K+ T0-"));
}

#[test]
fn braided_report_names_the_cycle_reading() {
    let o = staut(&["braided", "d2-suite"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cycle_from_balance reading"));
}

#[test]
fn failing_verdict_exits_one() {
    // identity is not a cycle on S3 pointed at a transposition
    let o = staut(&["zang", "suite", "s3:t01"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL fang.precondition"));
}

#[test]
fn unknown_builtin_exits_two_and_lists_choices() {
    let o = staut(&["quantale", "check", "rel9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("available: rel:1..4"));
}

#[test]
fn parse_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.vcat");
    std::fs::write(&path, "quantale luk:3\nobjects a b\n  hom a c = 1\n").unwrap();
    let o = staut(&["prof", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3, column 3"), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn oversized_window_is_an_input_error() {
    let o = staut(&["zang", "suite", "thin", "--window", "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bounded universe"));
}

#[test]
fn report_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let o = staut(&["quantale", "check", "s3:t01", "--format", "structured", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), o.stdout);
}

#[test]
fn quantale_description_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.q");
    std::fs::write(&path, "elements bot top\norder bot top\ntensor bot bot = bot\ntensor bot top = bot\ntensor top bot = bot\ntensor top top = top\nunit top\ndualizer bot\n").unwrap();
    let o = staut(&["quantale", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}{}", stdout(&o), String::from_utf8_lossy(&o.stderr));
}

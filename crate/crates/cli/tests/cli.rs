//! Behavior of the `qncalc` binary: output text and exit codes.

use std::process::{Command, Output};

fn qncalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qncalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

#[test]
fn normalize_prints_canonical_text() {
    let out = qncalc(&["normalize", "w(2)' u^2 w(2)"]);
    assert_eq!(stdout(&out), "u\n");
    assert_eq!(out.status.code(), Some(0));

    let out = qncalc(&["normalize", "u u'"]);
    assert_eq!(stdout(&out), "1\n");

    let out = qncalc(&["normalize", "w(3)' u w(3)"]);
    assert_eq!(stdout(&out), "0\n");

    let out = qncalc(&["normalize", "(w(2)w(2)') (u w(3)w(3)')"]);
    assert_eq!(stdout(&out), "u^4 w(6) w(6)' u^-3\n");
}

#[test]
fn equal_answers_and_exit_codes() {
    let out = qncalc(&[
        "equal",
        "--algebra",
        "qn",
        "w(2)w(2)' + u w(2)w(2)' u'",
        "1",
    ]);
    assert_eq!(stdout(&out), "true\n");
    assert_eq!(out.status.code(), Some(0));

    let out = qncalc(&[
        "equal",
        "--algebra",
        "nt",
        "w(2)w(2)' + u w(2)w(2)' u'",
        "1",
    ]);
    assert_eq!(stdout(&out), "false\n");
    assert_eq!(out.status.code(), Some(1));

    let out = qncalc(&["equal", "--algebra", "nt", "u u'", "1"]);
    assert_eq!(stdout(&out), "true\n");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn apply_prints_model_images() {
    let out = qncalc(&["apply", "--model", "qn", "--vector", "3", "w(2)"]);
    assert_eq!(stdout(&out), "e(6)\n");
    assert_eq!(out.status.code(), Some(0));

    let out = qncalc(&["apply", "--model", "qn", "--vector", "3", "w(2)'"]);
    assert_eq!(stdout(&out), "0\n");

    let out = qncalc(&["apply", "--model", "nt", "--vector", "1,3", "w(2)"]);
    assert_eq!(stdout(&out), "e(2,6)\n");

    let out = qncalc(&["apply", "--model", "nt", "--vector", "0,3", "w(2)'"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn errors_use_exit_code_two() {
    let out = qncalc(&["normalize", "w(0)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));

    let out = qncalc(&["normalize", "w(2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qncalc(&["normalize", "w(2)^-1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("evaluation error"));

    let out = qncalc(&["apply", "--model", "nt", "--vector", "3", "w(2)"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qncalc(&["equal", "--algebra", "zz", "u", "u"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qncalc(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_runs_suites() {
    let out = qncalc(&["check", "--suite", "cuntz", "--max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("suite cuntz: PASS"));

    let out = qncalc(&["check", "--suite", "toeplitz", "--max", "6", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("suite toeplitz: PASS"));

    let out = qncalc(&["check", "--suite", "laca-raeburn", "--max", "12"]);
    assert_eq!(out.status.code(), Some(0));

    let out = qncalc(&["check", "--suite", "nica", "--max", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["normalize", "--json", "1/2*w(6)w(6)' + 2i*u w(2) - u'"];
    let first = qncalc(&args);
    let second = qncalc(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(
        stdout(&first),
        "[{\"a\":0,\"m\":1,\"n\":1,\"b\":1,\"coeff\":[-1,1,0,1]},\
          {\"a\":1,\"m\":2,\"n\":1,\"b\":0,\"coeff\":[0,1,2,1]},\
          {\"a\":0,\"m\":6,\"n\":6,\"b\":0,\"coeff\":[1,2,0,1]}]\n"
    );
}

#[test]
fn laurent_subcommands() {
    let out = qncalc(&["laurent", "transfer", "-m", "2", "Z^3"]);
    assert_eq!(stdout(&out), "0\n");

    let out = qncalc(&["laurent", "transfer", "-m", "3", "Z^6"]);
    assert_eq!(stdout(&out), "Z^2\n");

    let out = qncalc(&["laurent", "condexp", "-m", "2", "Z^2 + Z^3"]);
    assert_eq!(stdout(&out), "Z^2\n");

    let out = qncalc(&["laurent", "inflate", "-m", "3", "Z^2"]);
    assert_eq!(stdout(&out), "Z^6\n");

    let out = qncalc(&["laurent", "inner", "-m", "2", "Z", "Z^3"]);
    assert_eq!(stdout(&out), "Z\n");

    let out = qncalc(&["laurent", "inner", "-m", "2", "1", "Z"]);
    assert_eq!(stdout(&out), "0\n");

    let out = qncalc(&["laurent", "transfer", "-m", "0", "Z"]);
    assert_eq!(out.status.code(), Some(2));
}

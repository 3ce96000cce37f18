//! End-to-end checks of the `verify` binary: output formats, file output,
//! and exit codes.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_verify"))
}

#[test]
fn tsv_format_and_columns() {
    let out = bin()
        .args(["--identity", "example12"])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("identity\tn\tlhs\trhs\tresidual\tpass"));
    assert_eq!(lines.next(), Some("example12\t7\t24\t24\t0\ttrue"));
    assert_eq!(lines.next(), None);
}

#[test]
fn json_format() {
    let out = bin()
        .args(["--identity", "example12", "--format", "json"])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["identity"], "example12");
    assert_eq!(rows[0]["n"], 7);
    assert_eq!(rows[0]["lhs"], "24");
    assert_eq!(rows[0]["residual"], "0");
    assert_eq!(rows[0]["pass"], true);
}

#[test]
fn rationals_render_as_fractions() {
    // cor5iii at n = 3 evaluates to (p - 1)/6 = 1/3
    let out = bin()
        .args(["--identity", "cor5iii", "--min", "3", "--max", "3"])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("cor5iii\t3\t1/3\t1/3\t0\ttrue"), "got: {stdout}");
}

#[test]
fn out_file_written() {
    let path = std::env::temp_dir().join("classrel_cli_out.tsv");
    let out = bin()
        .args(["--identity", "example12", "--out", path.to_str().unwrap()])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.contains("example12\t7\t24"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn unknown_identity_is_usage_error() {
    let out = bin().args(["--identity", "nope"]).output().expect("run binary");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown identity"));
}

#[test]
fn inverted_range_is_usage_error() {
    let out = bin()
        .args(["--identity", "cor3", "--min", "50", "--max", "10"])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn infeasible_range_is_usage_error() {
    let out = bin()
        .args(["--identity", "cor3", "--max", "100000000"])
        .output()
        .expect("run binary");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("feasibility"));
}

#[test]
fn list_prints_every_identity() {
    let out = bin().arg("--list").output().expect("run binary");
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    for name in [
        "prop1_series",
        "prop2",
        "cor3",
        "prop4",
        "cor5i",
        "cor5ii",
        "cor5iii",
        "inert_primes",
        "eichler4n",
        "eichler_odd",
        "jacobi",
        "jacobi_alt",
        "remark6_theta",
        "lemma7",
        "lemma9i",
        "lemma9ii",
        "remark10_eta",
        "remark10_repsums",
        "e2A_quasimodular",
        "e2B_series",
        "example12",
        "remark13",
        "eq2_limits",
    ] {
        assert!(stdout.lines().any(|l| l.starts_with(name)), "missing {name}");
    }
}

#[test]
fn empty_identity_list_reports_nothing() {
    let out = bin().arg("--identity=").output().expect("run binary");
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    // header only
    assert_eq!(stdout.lines().count(), 1);
}

//! End-to-end checks of the command grammar, output, and exit codes.

use primeform_cli::{run_cli, EXIT_MISMATCH, EXIT_SUCCESS, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("primeform").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn nth_prints_the_prime() {
    let (code, out, _) = run(&["nth", "100"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert_eq!(out, "541\n");
}

#[test]
fn nth_variant_a_and_oracle_agree() {
    let (_, out_a, _) = run(&["nth", "250", "--variant", "a"]);
    let (_, out_b, _) = run(&["nth", "250", "--variant", "b"]);
    let (_, out_o, _) = run(&["nth", "250", "--oracle"]);
    assert_eq!(out_a, "1583\n");
    assert_eq!(out_a, out_b);
    assert_eq!(out_a, out_o);
}

#[test]
fn next_handles_large_inputs() {
    let (code, out, _) = run(&["next", "1000000000000"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert_eq!(out, "1000000000039\n");
}

#[test]
fn next_methods_agree_where_they_should() {
    for method in ["scan", "formula", "oracle"] {
        let (code, out, _) = run(&["next", "9", "--method", method]);
        assert_eq!(code, EXIT_SUCCESS, "{method}");
        assert_eq!(out, "11\n", "{method}");
    }
    // The characterized scan intentionally disagrees at 9.
    let (code, out, _) = run(&["next", "9", "--method", "paper-scan"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert_eq!(out, "13\n");
}

#[test]
fn is_prime_reports_classification_and_method() {
    let (code, out, _) = run(&["is-prime", "11"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert_eq!(out, "11: prime (s-test)\n");
    let (_, out, _) = run(&["is-prime", "12"]);
    assert_eq!(out, "12: composite (wheel)\n");
    let (_, out, _) = run(&["is-prime", "1"]);
    assert_eq!(out, "1: unit-or-zero (lookup)\n");
    let (_, out, _) = run(&["is-prime", "13", "--method", "trial"]);
    assert_eq!(out, "13: prime (oracle)\n");
}

#[test]
fn raw_indicator_warns_off_domain_but_succeeds() {
    let (code, out, err) = run(&["is-prime", "8", "--method", "s-test-raw"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert!(out.contains("indicator 1"), "stdout: {out}");
    assert!(err.contains("warning"), "stderr: {err}");
    // On-domain values get no warning.
    let (code, out, err) = run(&["is-prime", "49", "--method", "s-test-raw"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert!(out.contains("indicator 0"));
    assert!(out.contains("s = 3/4"));
    assert!(err.is_empty());
}

#[test]
fn pi_methods_all_print_the_count() {
    for method in ["reduced", "full", "sieve"] {
        let (code, out, _) = run(&["pi", "541", "--method", method]);
        assert_eq!(code, EXIT_SUCCESS, "{method}");
        assert_eq!(out, "100\n", "{method}");
    }
}

#[test]
fn usage_errors_exit_one() {
    let cases: &[&[&str]] = &[
        &["pi", "5"],
        &["pi", "5", "--method", "full"],
        &["nth", "0"],
        &["next", "0", "--method", "formula"],
        &["next", "3", "--method", "paper-scan"],
        &["frobnicate", "5"],
        &["nth", "10", "--variant", "c"],
        &["nth"],
        &["is-prime", "-4"],
        &["verify", "--suite", "pi"],
    ];
    for args in cases {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "args: {args:?}");
        assert!(!err.is_empty(), "args: {args:?}");
    }
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert!(out.contains("primeform"));
    let (code, _, _) = run(&["--version"]);
    assert_eq!(code, EXIT_SUCCESS);
    let (code, out, _) = run(&["verify", "--help"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert!(out.contains("--suite"));
}

#[test]
fn verify_suites_pass_on_small_ranges() {
    for suite in ["s-test", "pi", "nth", "next", "paper-scan"] {
        let (code, out, _) = run(&["verify", "--suite", suite, "--max", "120"]);
        assert_eq!(code, EXIT_SUCCESS, "{suite}");
        assert!(out.contains("all values match: true"), "{suite}");
    }
}

#[test]
fn verify_records_are_parseable_and_clean() {
    let (code, out, _) = run(&[
        "verify", "--suite", "nth", "--max", "50", "--format", "records",
    ]);
    assert_eq!(code, EXIT_SUCCESS);
    let mut saw_failures_row = false;
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("record is JSON");
        for field in ["input", "expected", "got", "method", "elapsed_seconds"] {
            assert!(v.get(field).is_some(), "missing {field}: {line}");
        }
        if v["method"] == "nth:failures" {
            saw_failures_row = true;
            assert_eq!(v["got"], 0);
        }
    }
    assert!(saw_failures_row);
}

#[test]
fn verify_paper_scan_records_list_known_divergences() {
    let (code, out, _) = run(&[
        "verify",
        "--suite",
        "paper-scan",
        "--max",
        "100",
        "--format",
        "records",
    ]);
    assert_eq!(code, EXIT_SUCCESS);
    let divergent: Vec<u64> = out
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .filter(|v| v["method"] == "paper-scan/divergence")
        .map(|v| v["input"].as_u64().unwrap())
        .collect();
    for n in [9, 10, 15] {
        assert!(divergent.contains(&n), "n = {n} missing from {divergent:?}");
    }
}

#[test]
fn record_bodies_are_stable_across_runs() {
    let strip_timing = |text: &str| -> Vec<serde_json::Value> {
        text.lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("elapsed_seconds");
                v
            })
            .collect()
    };
    let (_, first, _) = run(&["bench", "--table", "1", "--format", "records"]);
    let (_, second, _) = run(&["bench", "--table", "1", "--format", "records"]);
    assert_eq!(strip_timing(&first), strip_timing(&second));
    assert_eq!(strip_timing(&first).len(), 8);

    let (_, first, _) = run(&[
        "verify", "--suite", "pi", "--max", "300", "--format", "records",
    ]);
    let (_, second, _) = run(&[
        "verify", "--suite", "pi", "--max", "300", "--format", "records",
    ]);
    assert_eq!(strip_timing(&first), strip_timing(&second));
}

#[test]
fn bench_table_one_exits_clean() {
    let (code, out, _) = run(&["bench", "--table", "1"]);
    assert_eq!(code, EXIT_SUCCESS);
    assert!(out.contains("table: table1"));
    assert!(out.contains("1583"));
    assert!(out.contains("all values match: true"));
}

#[test]
fn mismatch_exit_code_is_distinct() {
    assert_eq!(EXIT_MISMATCH, 2);
    assert_ne!(EXIT_MISMATCH, EXIT_USAGE);
}

#[test]
fn spawned_binary_round_trip() {
    use std::process::Command;
    let exe = env!("CARGO_BIN_EXE_primeform");
    let ok = Command::new(exe).args(["pi", "541"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "100\n");

    let usage = Command::new(exe).args(["pi"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(1));
    assert!(!usage.stderr.is_empty());
}

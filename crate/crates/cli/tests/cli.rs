//! End-to-end tests of the binary: exit-code contract, report formats,
//! JSON round-tripping, and parallel/serial determinism.

use std::process::{Command, Output};

use arcfib_cli::report::{AlgebraicReport, ListEntry, ReportRow, SelftestReport, SweepReport};

fn arcfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arcfib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal exit")
}

#[test]
fn list_reports_all_entries() {
    let out = arcfib(&["--format", "json", "list"]);
    assert_eq!(exit_code(&out), 0);
    let entries: Vec<ListEntry> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(entries.len(), 32);
    assert!(entries
        .iter()
        .any(|e| e.id == "L1-5" && e.parity == "m odd"));
    assert!(entries
        .iter()
        .any(|e| e.id == "L1-6" && e.parity == "m even"));

    let text = arcfib(&["list"]);
    assert_eq!(exit_code(&text), 0);
    let body = stdout(&text);
    assert!(body.contains("L1-5"));
    assert!(body.contains("(m odd)"));
    assert!(body.contains("(m even)"));
}

#[test]
fn verify_exit_codes() {
    let out = arcfib(&["verify", "T3-c", "--m", "1", "--t", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("verified"));

    // parity violation is a usage error
    let out = arcfib(&["verify", "T1-a", "--m", "1", "--t", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("parity"));

    let out = arcfib(&["verify", "I-E4", "--digits", "30"]);
    assert_eq!(exit_code(&out), 0);

    let out = arcfib(&["verify", "NO-SUCH-ID", "--t", "1"]);
    assert_eq!(exit_code(&out), 2);

    // missing required parameter
    let out = arcfib(&["verify", "T1-b"]);
    assert_eq!(exit_code(&out), 2);

    // --digits on a finite identity
    let out = arcfib(&["verify", "HR64", "--t", "3", "--digits", "10"]);
    assert_eq!(exit_code(&out), 2);

    // clap-level usage error
    let out = arcfib(&["no-such-command"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_per_index_entries_take_n() {
    let out = arcfib(&["verify", "L1-5", "--m", "1", "--n", "3"]);
    assert_eq!(exit_code(&out), 0);
    let out = arcfib(&["verify", "L1-5", "--m", "1", "--t", "3"]);
    assert_eq!(exit_code(&out), 2, "per-index entries reject --t");
    let out = arcfib(&["verify", "L1-5", "--m", "1", "--n", "0"]);
    assert_eq!(exit_code(&out), 2, "n = 0 is rejected");
}

#[test]
fn json_reports_round_trip() {
    let out = arcfib(&["--format", "json", "verify", "T3-c", "--m", "1", "--t", "1"]);
    let raw = stdout(&out);
    let row: ReportRow = serde_json::from_str(raw.trim()).unwrap();
    assert_eq!(serde_json::to_string(&row).unwrap(), raw.trim());
    assert_eq!(row.gaussian.as_ref().unwrap().re, "1");
    assert_eq!(row.gaussian.as_ref().unwrap().im, "0");
    assert_eq!(row.pi_multiple, Some(0));

    let out = arcfib(&["--format", "json", "eval", "I-E6", "--digits", "40"]);
    let raw = stdout(&out);
    let row: ReportRow = serde_json::from_str(raw.trim()).unwrap();
    assert_eq!(serde_json::to_string(&row).unwrap(), raw.trim());
    assert!(row
        .lhs
        .as_ref()
        .unwrap()
        .starts_with("1.10714871779409050301706546017853704"));

    let out = arcfib(&[
        "--format",
        "json",
        "sweep",
        "T2-a",
        "--m-range",
        "0..3",
        "--t-range",
        "0..4",
    ]);
    let raw = stdout(&out);
    let report: SweepReport = serde_json::from_str(raw.trim()).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap(), raw.trim());
    assert_eq!(report.checked, 20);
    assert_eq!(report.verified, 20);

    let out = arcfib(&[
        "--format",
        "json",
        "algebraic",
        "ALG-09",
        "--m-range",
        "0..8",
        "--n-range",
        "0..8",
    ]);
    let raw = stdout(&out);
    let report: AlgebraicReport = serde_json::from_str(raw.trim()).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap(), raw.trim());
    assert_eq!(report.failed, 0);
}

#[test]
fn sweep_examples_and_empty_grid() {
    let out = arcfib(&["sweep", "T1-b", "--m-range", "1..5", "--t-range", "0..8"]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout(&out);
    assert!(body.contains("27 checked"), "3 odd m x 9 t: {body}");
    assert!(body.contains("0 falsified"));

    let out = arcfib(&["sweep", "HR63-T5", "--t-range", "0..16"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("17 checked"));

    // parity filters everything out
    let out = arcfib(&["sweep", "T1-a", "--m-range", "1..1", "--t-range", "0..4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("empty sweep grid"));

    // malformed range
    let out = arcfib(&["sweep", "T1-a", "--m-range", "5..2", "--t-range", "0..4"]);
    assert_eq!(exit_code(&out), 2);

    // per-index sweep via --n-range
    let out = arcfib(&["sweep", "L1-1", "--m-range", "0..4", "--n-range", "1..6"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("18 checked"));
}

#[test]
fn parallel_and_serial_sweeps_are_byte_identical() {
    for format in ["json", "csv", "text"] {
        let serial = arcfib(&[
            "--format",
            format,
            "sweep",
            "T3-c",
            "--m-range",
            "0..4",
            "--t-range",
            "0..6",
            "--jobs",
            "1",
        ]);
        let parallel = arcfib(&[
            "--format",
            format,
            "sweep",
            "T3-c",
            "--m-range",
            "0..4",
            "--t-range",
            "0..6",
            "--jobs",
            "4",
        ]);
        assert_eq!(exit_code(&serial), 0);
        assert_eq!(exit_code(&parallel), 0);
        assert_eq!(
            stdout(&serial),
            stdout(&parallel),
            "{format} sweep must not depend on parallelism"
        );
    }
}

#[test]
fn csv_sweep_emits_one_row_per_instance() {
    let out = arcfib(&[
        "--format",
        "csv",
        "sweep",
        "T1-b",
        "--m-range",
        "1..3",
        "--t-range",
        "0..4",
    ]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout(&out);
    let mut lines = body.lines();
    assert_eq!(lines.next().unwrap(), ReportRow::CSV_HEADER);
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10, "2 odd m x 5 t");
    assert!(rows.iter().all(|r| r.contains("verified")));
    assert!(
        rows.iter().all(|r| r.ends_with(',')),
        "sweep rows carry no elapsed"
    );
}

#[test]
fn eval_reports_values() {
    let out = arcfib(&["eval", "I-E7", "--digits", "35"]);
    assert_eq!(exit_code(&out), 0);
    let body = stdout(&out);
    assert!(
        body.contains("0.78539816339744830961566084581987572"),
        "{body}"
    );

    let out = arcfib(&["eval", "C3-a", "--m", "3", "--digits", "25"]);
    assert_eq!(exit_code(&out), 0);

    // finite identity rejected
    let out = arcfib(&["eval", "HR64", "--digits", "10"]);
    assert_eq!(exit_code(&out), 2);

    // digits is required
    let out = arcfib(&["eval", "I-E7"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn algebraic_family_sweeps() {
    let out = arcfib(&[
        "algebraic",
        "ALG-11",
        "--m-range",
        "0..10",
        "--n-range",
        "0..10",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("55 checked"), "5 odd m x 11 n");

    let out = arcfib(&[
        "algebraic",
        "ALG-99",
        "--m-range",
        "0..4",
        "--n-range",
        "0..4",
    ]);
    assert_eq!(exit_code(&out), 2);

    // parity filters everything
    let out = arcfib(&[
        "algebraic",
        "ALG-11",
        "--m-range",
        "0..0",
        "--n-range",
        "0..4",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn selftest_quick_passes() {
    let out = arcfib(&["--format", "json", "selftest", "--quick"]);
    assert_eq!(exit_code(&out), 0);
    let raw = stdout(&out);
    let report: SelftestReport = serde_json::from_str(raw.trim()).unwrap();
    assert_eq!(serde_json::to_string(&report).unwrap(), raw.trim());
    assert_eq!(report.status, "ok");
    assert!(report.sections.iter().all(|s| s.failed == 0));
    assert!(report.sections.iter().any(|s| s.name == "negative control"));
}

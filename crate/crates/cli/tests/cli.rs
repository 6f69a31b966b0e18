//! End-to-end checks of the command line surface: exit codes, the
//! documented output shapes, and byte stability of the JSON output.

use std::io::Write;
use std::process::{Command, Output};

fn nilorbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilorbit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_sp1_json_lists_three_data_with_verdicts() {
    let out = nilorbit(&["enumerate", "--family", "sp_r", "--n", "1", "--format", "json"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 3);
    assert_eq!(rows[0]["reason"], "zero_orbit");
    assert_eq!(rows[1]["stable"], false);
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        vec!["enumerate", "--family", "so_r", "--p", "3", "--q", "2", "--format", "json"],
        vec!["table1", "--max-dim", "4", "--format", "json"],
    ] {
        let a = nilorbit(&args);
        let b = nilorbit(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn classify_su_non_split_is_not_stable() {
    let out = nilorbit(&[
        "classify",
        "--family",
        "su",
        "--p",
        "1",
        "--q",
        "1",
        "--datum",
        r#"{"entries":[{"r":1,"sig":[1,0]}]}"#,
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows[0]["stable"], false);
    assert_eq!(rows[0]["gibbs"], "not_determined");
}

#[test]
fn classify_rejects_invalid_datum_with_exit_2() {
    let out = nilorbit(&[
        "classify",
        "--family",
        "so_r",
        "--p",
        "2",
        "--q",
        "1",
        "--datum",
        r#"{"entries":[{"r":1,"dim":1}]}"#,
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn matrix_check_zero_matrix_exits_2() {
    let mut file = tempfile_path("zero");
    writeln!(
        file.1,
        r#"{{"alg":{{"family":"sl_r","n":2}},"matrix":[["0","0"],["0","0"]]}}"#
    )
    .unwrap();
    let out = nilorbit(&["matrix-check", "--input", &file.0]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("x must be nonzero"), "{err}");
}

#[test]
fn matrix_check_sl2_reports_conjugator_and_agreement() {
    let mut file = tempfile_path("j2");
    writeln!(
        file.1,
        r#"{{"alg":{{"family":"sl_r","n":2}},"matrix":[["0","1"],["0","0"]]}}"#
    )
    .unwrap();
    let out = nilorbit(&["matrix-check", "--input", &file.0, "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["stable"], false);
    assert_eq!(v["combinatorial_agrees"], true);
    assert_eq!(v["conjugator_det"], "-1");
    assert_eq!(v["datum"]["entries"][0]["r"], 1);
}

#[test]
fn matrix_check_so21_component_evidence() {
    // The so(2,1) vector-orbit representative w.r.t. diag(1,1,-1).
    let mut file = tempfile_path("so21");
    writeln!(
        file.1,
        r#"{{"alg":{{"family":"so_r","p":2,"q":1}},"matrix":[["0","1","0"],["-1","0","1"],["0","1","0"]]}}"#
    )
    .unwrap();
    let out = nilorbit(&["matrix-check", "--input", &file.0, "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["stable"], false);
    assert_eq!(v["sigma_tau"], serde_json::json!([-1, -1]));
}

#[test]
fn csv_has_the_fixed_header_and_no_commas_in_fields() {
    let out = nilorbit(&["enumerate", "--family", "so_r", "--p", "2", "--q", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "family,params,datum,stable,gibbs,reason");
    for line in lines {
        assert_eq!(line.split(',').count(), 6, "{line}");
    }
}

#[test]
fn selftest_small_sweep_passes() {
    let out = nilorbit(&["selftest", "--max-dim", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.starts_with("PASS")), "{text}");
}

#[test]
fn unknown_family_exits_2() {
    let out = nilorbit(&["enumerate", "--family", "g2", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

fn tempfile_path(tag: &str) -> (String, std::fs::File) {
    let path = std::env::temp_dir().join(format!("nilorbit-cli-test-{tag}-{}.json", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path.to_string_lossy().into_owned(), file)
}

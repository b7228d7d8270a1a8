//! End-to-end tests of the `oplattice` binary: documents in, documents out,
//! exit codes as contracted.

use serde_json::Value;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};
use tempfile::NamedTempFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_oplattice"))
}

fn write_doc(content: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

fn run(args: &[&str], input: &Path) -> Output {
    let mut cmd = bin();
    cmd.args(args).arg("--input").arg(input);
    cmd.output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn recurrence_hermite() {
    let f = write_doc(
        r#"{
            "lattice": {"kind": "quadratic", "c4": 0, "c5": 0, "c6": 1},
            "pearson": {"a": 0, "b": 0, "c": "-1/2", "d": 1, "e": 0},
            "n_max": 3
        }"#,
    );
    let out = run(&["recurrence", "--json"], f.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let doc = stdout_json(&out);
    assert_eq!(doc["table"]["B"], serde_json::json!(["0", "0", "0"]));
    assert_eq!(doc["table"]["C"], serde_json::json!(["1/2", "1", "3/2"]));
    assert_eq!(doc["regularity"]["regular_to"], 2);
}

#[test]
fn recurrence_truncates_on_degeneracy() {
    let f = write_doc(
        r#"{
            "lattice": {"kind": "quadratic", "c4": 0, "c5": 2, "c6": 1},
            "pearson": {"a": 0, "b": 1, "c": 1, "d": 0, "e": 1},
            "n_max": 4
        }"#,
    );
    let out = run(&["recurrence", "--json"], f.path());
    assert_eq!(out.status.code(), Some(3));
    let doc = stdout_json(&out);
    assert_eq!(doc["truncated_at"], 0);
    assert_eq!(doc["regularity"]["first_failure"]["reason"], "dn_zero");
}

#[test]
fn recurrence_para_krawtchouk_data() {
    let f = write_doc(
        r#"{
            "lattice": {"kind": "quadratic", "c4": 0, "c5": 2, "c6": 1},
            "pearson": {"a": "-1/4", "b": "9/8", "c": "-9/4", "d": 1, "e": "-9/4"},
            "n_max": 4
        }"#,
    );
    let out = run(&["recurrence", "--json"], f.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let doc = stdout_json(&out);
    assert_eq!(
        doc["table"]["B"],
        serde_json::json!(["9/4", "9/4", "9/4", "9/4"])
    );
}

fn pk_table_doc() -> &'static str {
    r#"{
        "lattice": {"kind": "quadratic", "c4": 0, "c5": 2, "c6": 1},
        "table": {
            "B": ["9/4", "9/4", "9/4", "9/4", "9/4"],
            "C": ["21/16", "5/2", "9/16", "5/2", "21/16"]
        },
        "verify_to": 4
    }"#
}

#[test]
fn classify_positive_case() {
    let f = write_doc(pk_table_doc());
    let out = run(&["classify", "--json"], f.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let doc = stdout_json(&out);
    assert_eq!(doc["verdict"], "classical");
    assert_eq!(doc["pearson"]["a"], "-1/4");
    assert_eq!(doc["pearson"]["b"], "9/8");
    assert_eq!(doc["pearson"]["c"], "-9/4");
    assert_eq!(doc["pearson"]["e"], "-9/4");

    // the human summary mirrors the verdict line
    let out = run(&["classify"], f.path());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("The sequence is classical for x(s) = 2s + 1"));
}

#[test]
fn classify_negative_case() {
    let doc = pk_table_doc().replace(r#""c5": 2, "c6": 1"#, r#""c5": 3, "c6": 0"#);
    let f = write_doc(&doc);
    let out = run(&["classify"], f.path());
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("The sequence is not classical for x(s) = 3s"));
}

#[test]
fn classify_rejects_zero_c() {
    let f = write_doc(
        r#"{
            "lattice": {"kind": "quadratic", "c4": 0, "c5": 2, "c6": 1},
            "table": {"B": ["0", "0", "0"], "C": ["1", "0", "1"]},
            "verify_to": 2
        }"#,
    );
    let out = run(&["classify"], f.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_verify_to_flag_overrides() {
    // the document asks for more than the table holds; the flag rescues it
    let doc = pk_table_doc().replace(r#""verify_to": 4"#, r#""verify_to": 10"#);
    let f = write_doc(&doc);
    let out = run(&["classify"], f.path());
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify", "--verify-to", "4"], f.path());
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn para_krawtchouk_full_report() {
    let f = write_doc(r#"{"pk": {"N": 5, "gamma": "1/2"}}"#);
    let out = run(&["para-krawtchouk", "--json"], f.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let doc = stdout_json(&out);
    assert_eq!(doc["runs"][0]["verdict"], "classical");
    assert_eq!(doc["runs"][1]["verdict"], "not_classical");
    assert_eq!(doc["weight_sum"], "1");
    assert_eq!(doc["gram"]["orthogonal"], true);
    assert_eq!(doc["gram"]["norm_ratios_ok"], true);
    assert_eq!(
        doc["nodes"],
        serde_json::json!(["0", "1/2", "2", "5/2", "4", "9/2"])
    );
}

#[test]
fn para_krawtchouk_rejects_bad_params() {
    for body in [
        r#"{"pk": {"N": 4, "gamma": "1/2"}}"#,
        r#"{"pk": {"N": 5, "gamma": "2"}}"#,
        r#"{"pk": {"N": 5, "gamma": "0"}}"#,
    ] {
        let f = write_doc(body);
        let out = run(&["para-krawtchouk"], f.path());
        assert_eq!(out.status.code(), Some(2), "doc {body} must be rejected");
    }
}

#[test]
fn sweep_grids() {
    let f = write_doc(
        r#"{
            "grid": {
                "N": [3, 5],
                "gamma": ["1/3", "1/2"],
                "lattices": [{"kind": "quadratic", "c4": 0, "c5": 2, "c6": 1}]
            }
        }"#,
    );
    let out = run(&["sweep", "--json"], f.path());
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let doc = stdout_json(&out);
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records.len(), 4);
    assert!(records.iter().all(|r| r["verdict"] == "classical"));

    // one classical, one not
    let f = write_doc(
        r#"{
            "grid": {
                "N": [5],
                "gamma": ["1/2"],
                "lattices": [
                    {"kind": "quadratic", "c4": 0, "c5": 2, "c6": 1},
                    {"kind": "quadratic", "c4": 0, "c5": 3, "c6": 0}
                ]
            }
        }"#,
    );
    let doc = stdout_json(&run(&["sweep", "--json"], f.path()));
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records[0]["verdict"], "classical");
    assert_eq!(records[1]["verdict"], "not_classical");

    // empty grid: zero records, success
    let f = write_doc(r#"{"grid": {"N": [], "gamma": [], "lattices": []}}"#);
    let out = run(&["sweep", "--json"], f.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["records"], serde_json::json!([]));

    // invalid grid entry
    let f = write_doc(r#"{"grid": {"N": [4], "gamma": ["1/2"], "lattices": []}}"#);
    assert_eq!(run(&["sweep"], f.path()).status.code(), Some(2));
}

#[test]
fn unknown_fields_rejected() {
    let f = write_doc(r#"{"pk": {"N": 5, "gamma": "1/2"}, "bogus": 1}"#);
    assert_eq!(run(&["para-krawtchouk"], f.path()).status.code(), Some(2));
    let f = write_doc(r#"{"pk": {"N": 5, "gamma": "1/2", "extra": 3}}"#);
    assert_eq!(run(&["para-krawtchouk"], f.path()).status.code(), Some(2));
}

#[test]
fn floats_rejected() {
    let f = write_doc(r#"{"pk": {"N": 5, "gamma": 0.5}}"#);
    assert_eq!(run(&["para-krawtchouk"], f.path()).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_round_trips() {
    let f = write_doc(
        r#"{
            "lattice": {"kind": "quadratic", "c4": 0, "c5": 2, "c6": 1},
            "pearson": {"a": "-1/4", "b": "9/8", "c": "-9/4", "d": 1, "e": "-9/4"},
            "n_max": 4
        }"#,
    );
    let first = run(&["recurrence", "--json"], f.path());
    let second = run(&["recurrence", "--json"], f.path());
    assert_eq!(first.stdout, second.stdout, "byte-identical reruns");

    // the emitted table section is itself valid classify input
    let doc = stdout_json(&first);
    let classify_doc = serde_json::json!({
        "lattice": {"kind": "quadratic", "c4": 0, "c5": 2, "c6": 1},
        "table": doc["table"],
        "verify_to": 3
    });
    let f2 = write_doc(&classify_doc.to_string());
    let out = run(&["classify", "--json"], f2.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["verdict"], "classical");
}

#[test]
fn out_file_receives_document() {
    let f = write_doc(r#"{"pk": {"N": 3, "gamma": "1/2"}}"#);
    let target = NamedTempFile::new().unwrap();
    let mut cmd = bin();
    cmd.args(["para-krawtchouk"])
        .arg("--input")
        .arg(f.path())
        .arg("--out")
        .arg(target.path());
    let out = cmd.output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    // stdout carries the human summary, the file the document
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("classical"));
    let written: Value =
        serde_json::from_str(&std::fs::read_to_string(target.path()).unwrap()).unwrap();
    assert_eq!(written["command"], "para-krawtchouk");
}

#[test]
fn missing_sections_are_input_errors() {
    let f = write_doc(r#"{"n_max": 3}"#);
    assert_eq!(run(&["recurrence"], f.path()).status.code(), Some(2));
    let f = write_doc(r#"{"lattice": {"kind": "quadratic", "c4": 0, "c5": 2, "c6": 1}}"#);
    assert_eq!(run(&["classify"], f.path()).status.code(), Some(2));
    assert_eq!(run(&["sweep"], f.path()).status.code(), Some(2));
}

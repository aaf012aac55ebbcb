//! End-to-end CLI behavior: exit codes, input validation, slow-path
//! guards, and the shapes of the single-object command outputs.

use std::io::Write;
use std::process::{Command, Output};

fn filtra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_filtra"))
        .args(args)
        .output()
        .expect("filtra binary runs")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, contents: &str) -> String {
    let path = dir.path().join(name);
    let mut file = std::fs::File::create(&path).unwrap();
    file.write_all(contents.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("single JSON object on stdout")
}

const SIERPINSKI_PAIR: &str =
    r#"{"sigma":{"n":2,"opens":[[],[0],[0,1]]},"tau":{"n":2,"opens":[[],[0],[0,1],[1]]}}"#;

#[test]
fn filtration_reports_the_slowest_sequence() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(&dir, "pair.json", SIERPINSKI_PAIR);
    let output = filtra(&["filtration", "--input", &input]);
    assert_eq!(output.status.code(), Some(0));
    let value = stdout_json(&output);
    assert_eq!(value["command"], "filtration");
    assert_eq!(value["stabilization"], 1);
    assert_eq!(value["is_filtration"], true);
    assert_eq!(value["stages"].as_array().unwrap().len(), 2);
}

#[test]
fn incomparable_pair_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let reversed =
        r#"{"sigma":{"n":2,"opens":[[],[0],[0,1],[1]]},"tau":{"n":2,"opens":[[],[0],[0,1]]}}"#;
    let input = write_temp(&dir, "pair.json", reversed);
    let output = filtra(&["filtration", "--input", &input]);
    assert_eq!(output.status.code(), Some(2));
    assert!(output.stdout.is_empty());
    assert!(!output.stderr.is_empty());
}

#[test]
fn malformed_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        "not json at all",
        r#"{"sigma":{"n":2,"opens":[[],[0],[0,1]]}}"#,
        r#"{"sigma":{"n":2,"opens":[[],[0],[0,1]]},"tau":{"n":2,"opens":[[],[0],[0,1],[1]]},"extra":1}"#,
        r#"{"sigma":{"n":2,"opens":[[0],[0,1]]},"tau":{"n":2,"opens":[[],[0],[0,1],[1]]}}"#,
        r#"{"sigma":{"n":2,"opens":[[],[7]]},"tau":{"n":2,"opens":[[],[0,1]]}}"#,
    ];
    for (i, text) in cases.iter().enumerate() {
        let input = write_temp(&dir, &format!("bad{i}.json"), text);
        let output = filtra(&["filtration", "--input", &input]);
        assert_eq!(output.status.code(), Some(2), "case {i}: {text}");
    }
    let output = filtra(&["filtration", "--input", "/does/not/exist.json"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn slow_regimes_require_the_flag() {
    for args in [
        &["enumerate", "--n", "6"][..],
        &["enumerate", "--n", "6", "--count-only"][..],
        &["check", "--n", "5"][..],
        &["check", "--n", "4", "--theorem", "lemmas"][..],
        &["search", "--n", "5", "--drop", "basis-level"][..],
    ] {
        let output = filtra(args);
        assert_eq!(output.status.code(), Some(2), "{args:?}");
    }
    // Out of range even with the flag.
    let output = filtra(&["enumerate", "--n", "7", "--allow-slow"]);
    assert_eq!(output.status.code(), Some(2));
    let output = filtra(&["check", "--n", "6", "--allow-slow"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn stab_sweep_at_four_runs_without_the_flag() {
    let output = filtra(&["check", "--n", "4", "--theorem", "stab2", "--jobs", "4"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn enumerate_lines_carry_indices_in_order() {
    let output = filtra(&["enumerate", "--n", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 30);
    for (i, line) in lines[..29].iter().enumerate() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(value["index"], i as u64);
        assert_eq!(value["topology"]["n"], 3);
    }
    let summary: serde_json::Value = serde_json::from_str(lines[29]).unwrap();
    assert_eq!(summary["count"], 29);
}

#[test]
fn hierarchy_respects_xi_max() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(&dir, "topo.json", r#"{"n":2,"opens":[[],[0],[0,1]]}"#);
    let output = filtra(&["hierarchy", "--input", &input]);
    assert_eq!(output.status.code(), Some(0));
    let value = stdout_json(&output);
    assert_eq!(value["command"], "hierarchy");
    assert_eq!(value["stabilization_xi"], 2);
    assert_eq!(value["classes"].as_array().unwrap().len(), 4);
    assert_eq!(
        value["classes"][0]["pi"],
        serde_json::json!([[], [0, 1], [1]])
    );
    assert_eq!(value["borel"], serde_json::json!([[], [0], [0, 1], [1]]));

    let output = filtra(&["hierarchy", "--input", &input, "--xi-max", "1"]);
    let value = stdout_json(&output);
    assert_eq!(value["classes"].as_array().unwrap().len(), 2);
}

#[test]
fn slight_lists_minus_and_plus_towers() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(&dir, "pair.json", SIERPINSKI_PAIR);
    let output = filtra(&["slight", "--input", &input, "--nu", "2"]);
    assert_eq!(output.status.code(), Some(0));
    let value = stdout_json(&output);
    assert_eq!(value["command"], "slight");
    assert_eq!(value["nu"], 2);
    assert_eq!(value["stage_count"], 2);
    let families = value["families"].as_array().unwrap();
    assert_eq!(families.len(), 2);
    assert_eq!(families[0]["minus"], serde_json::json!([[]]));
    assert_eq!(families[1]["plus"], serde_json::json!([[]]));

    let output = filtra(&["slight", "--input", &input, "--nu", "0"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn search_exit_codes_follow_findings() {
    let found = filtra(&["search", "--n", "2", "--drop", "basis-level"]);
    assert_eq!(found.status.code(), Some(1));
    let clean = filtra(&["search", "--n", "2", "--drop", "semiregularity"]);
    assert_eq!(clean.status.code(), Some(0));
    let bad = filtra(&["search", "--n", "2", "--drop", "everything"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn timing_flag_attaches_micros() {
    let output = filtra(&["check", "--n", "2", "--theorem", "stab2", "--timing"]);
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert!(first["timing_micros"].is_u64());
    let plain = filtra(&["check", "--n", "2", "--theorem", "stab2"]);
    let plain_text = String::from_utf8(plain.stdout).unwrap();
    assert!(!plain_text.contains("timing_micros"));
}

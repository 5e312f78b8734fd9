//! End-to-end tests of the command-line interface: spec'd outputs, exact
//! rational strings, exit codes, and determinism.

use std::process::Output;

fn run(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_fusym"))
        .args(args)
        .output()
        .unwrap()
}

fn json_of(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).unwrap()
}

#[test]
fn tableau_reports_the_content_sequence() {
    let output = run(&[
        "tableau", "--outer", "5,3,3,3,3", "--inner", "3,3,2", "--column",
    ]);
    assert!(output.status.success());
    let value = json_of(&output);
    let contents: Vec<&str> = value["results"]["contents"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(
        contents,
        vec!["-3", "-4", "-2", "-3", "0", "-1", "-2", "3", "4"]
    );
}

#[test]
fn fuse_prints_the_two_term_element() {
    let output = run(&["fuse", "--outer", "2"]);
    assert!(output.status.success());
    let value = json_of(&output);
    assert_eq!(
        value["results"]["element"],
        serde_json::json!([["id", "1"], ["(1 2)", "1"]])
    );
}

#[test]
fn fuse_accepts_an_explicit_filling() {
    let row = run(&["fuse", "--outer", "2,1", "--tableau", "[[1,1],[1,2],[2,1]]"]);
    assert!(row.status.success());
    let column = run(&["fuse", "--outer", "2,1"]);
    assert!(column.status.success());
    assert_ne!(json_of(&row)["results"], json_of(&column)["results"]);
}

#[test]
fn symmetrizer_reports_rank_and_exact_trace() {
    let output = run(&["symmetrizer", "--outer", "1", "--outer-tilde", "1", "-N", "2"]);
    assert!(output.status.success());
    let value = json_of(&output);
    assert_eq!(value["results"]["dim"], 4);
    assert_eq!(value["results"]["rank"], 3);
    assert_eq!(value["results"]["trace"], "3");
}

#[test]
fn verify_thm15_passes_with_witness() {
    let output = run(&[
        "verify", "thm15", "--outer", "1", "--outer-tilde", "1", "-N", "2", "-M", "0",
    ]);
    assert!(output.status.success());
    let value = json_of(&output);
    assert_eq!(value["results"]["pass"], true);
    assert_eq!(value["results"]["solution_dim"], 1);
    assert_eq!(value["results"]["invertible"], true);
    assert_eq!(value["results"]["commutants"], serde_json::json!([1, 1]));
    let witness = value["results"]["intertwiner"].as_array().unwrap();
    assert_eq!(witness.len(), 3);
    assert!(value["anchors"]
        .as_array()
        .unwrap()
        .iter()
        .any(|a| a == "Thm 1.5"));
}

#[test]
fn verify_prop14_and_sec44_pass() {
    let prop14 = run(&["verify", "prop14", "--outer", "2", "-N", "2"]);
    assert!(prop14.status.success());
    assert_eq!(json_of(&prop14)["results"]["pass"], true);
    let sec44 = run(&["verify", "sec44", "-N", "2"]);
    assert!(sec44.status.success());
    assert_eq!(json_of(&sec44)["results"]["pass"], true);
}

#[test]
fn verify_prop16_passes_on_the_single_box_pair() {
    let output = run(&[
        "verify", "prop16", "--outer", "1", "--outer-tilde", "1", "-N", "2", "-M", "0",
    ]);
    assert!(output.status.success());
    let value = json_of(&output);
    assert_eq!(value["results"]["pass"], true);
    assert_eq!(value["results"]["dim"], 3);
}

#[test]
fn unknown_names_exit_with_invalid_input() {
    let suite = run(&["suite", "everything"]);
    assert_eq!(suite.status.code(), Some(2));
    let check = run(&["verify", "prop99"]);
    assert_eq!(check.status.code(), Some(2));
    let bounds = run(&["suite", "fusion", "--bounds", "huge"]);
    assert_eq!(bounds.status.code(), Some(2));
}

#[test]
fn malformed_shapes_exit_with_invalid_input() {
    let output = run(&["tableau", "--outer", "2,x"]);
    assert_eq!(output.status.code(), Some(2));
    let increasing = run(&["tableau", "--outer", "1,3"]);
    assert_eq!(increasing.status.code(), Some(2));
}

#[test]
fn oversized_instances_exit_with_bound_exceeded() {
    let output = run(&[
        "verify", "prop14", "--outer", "4,4,4", "-N", "9",
    ]);
    assert_eq!(output.status.code(), Some(3));
}

#[test]
fn suite_runs_are_deterministic_and_quiet_on_stdout() {
    let first = run(&["suite", "fusion", "--bounds", "tiny"]);
    let second = run(&["suite", "fusion", "--bounds", "tiny"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let value = json_of(&first);
    assert_eq!(value["results"]["pass"], true);
    assert!(value["inputs"]["seed"].is_number());
}

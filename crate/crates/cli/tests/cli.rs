//! End-to-end tests of the binary: formats, exit codes, determinism, and
//! the batch stream contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_idealconn"))
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn idealconn");
    child.stdin.as_mut().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().expect("wait for idealconn")
}

fn stdout_of(args: &[&str], stdin: &str) -> String {
    let out = run_with_stdin(args, stdin);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// graph6 of the 6-vertex split fixture, produced by the generator itself.
fn split6_line() -> String {
    stdout_of(&["gen", "--class", "split6"], "").trim().to_string()
}

#[test]
fn analyze_split_fixture() {
    let report: serde_json::Value =
        serde_json::from_str(stdout_of(&["analyze", "--cliquetree"], &split6_line()).trim())
            .unwrap();
    assert_eq!(report["classes"]["split"], true);
    assert_eq!(report["classes"]["chordal"], true);
    assert_eq!(report["classes"]["threshold"], false);
    assert_eq!(report["ideal"]["ideal"], false);
    assert_eq!(report["ideal"]["witness"]["local"], 3);
    assert_eq!(report["ideal"]["witness"]["bound"], 4);
    assert_eq!(report["agreement"], true);
    assert_eq!(report["cliquetree"]["clique_count"], 4);
}

#[test]
fn analyze_complete_graph() {
    let line = stdout_of(&["gen", "--class", "complete", "--n", "4"], "");
    let report: serde_json::Value =
        serde_json::from_str(stdout_of(&["analyze"], &line).trim()).unwrap();
    assert_eq!(report["ideal"]["ideal"], true);
    assert_eq!(report["ideal"]["kappa"], 3);
}

#[test]
fn ideal_reports_witness_for_path() {
    let line = stdout_of(&["gen", "--class", "path", "--n", "4"], "");
    let report: serde_json::Value =
        serde_json::from_str(stdout_of(&["ideal", "--json"], &line).trim()).unwrap();
    assert_eq!(report["ideal"], false);
    assert_eq!(report["kappa"], 1);
    assert_eq!(report["witness"]["u"], 1);
    assert_eq!(report["witness"]["v"], 2);
}

#[test]
fn paths_prints_space_separated_lines() {
    let line = stdout_of(&["gen", "--class", "cycle", "--n", "4"], "");
    let out = stdout_of(&["paths", "0", "2"], &line);
    let mut lines: Vec<&str> = out.lines().collect();
    lines.sort_unstable();
    assert_eq!(lines, vec!["0 1 2", "0 3 2"]);
}

#[test]
fn avg_prints_exact_rationals() {
    // 2K2 has pair connectivities 1, 1 and four zeros.
    let out = stdout_of(&["avg"], "C`\n");
    assert_eq!(out.trim(), "1/3");
    let k4 = stdout_of(&["gen", "--class", "complete", "--n", "4"], "");
    assert_eq!(stdout_of(&["avg"], &k4).trim(), "3");
}

#[test]
fn menger_json() {
    let c5 = stdout_of(&["gen", "--class", "cycle", "--n", "5"], "");
    let verdict: serde_json::Value =
        serde_json::from_str(stdout_of(&["menger", "1", "--json"], &c5).trim()).unwrap();
    assert_eq!(verdict["holds"], false);
    assert_eq!(verdict["failing_fault_set"], serde_json::json!([0]));
}

#[test]
fn edgelist_format() {
    let report: serde_json::Value = serde_json::from_str(
        stdout_of(&["ideal", "--json", "--format", "edgelist"], "4 4\n0 1\n1 2\n2 3\n3 0\n")
            .trim(),
    )
    .unwrap();
    assert_eq!(report["ideal"], true);
    assert_eq!(report["kappa"], 2);
}

#[test]
fn parse_errors_exit_2() {
    let out = run_with_stdin(&["ideal"], "!!!bad\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 0"));
}

#[test]
fn decompose_json_shape() {
    let line = split6_line();
    let decomp: serde_json::Value =
        serde_json::from_str(stdout_of(&["decompose"], &line).trim()).unwrap();
    assert_eq!(decomp["conditions"]["overall"], false);
    assert_eq!(decomp["subgraphs"].as_array().unwrap().len(), 2);
    // No clique cut case: C4 reports null.
    let c4 = stdout_of(&["gen", "--class", "cycle", "--n", "4"], "");
    let none: serde_json::Value =
        serde_json::from_str(stdout_of(&["decompose"], &c4).trim()).unwrap();
    assert!(none["cut"].is_null());
}

#[test]
fn cliquetree_json_and_dot() {
    let line = stdout_of(&["gen", "--class", "threshold16"], "");
    let tree: serde_json::Value =
        serde_json::from_str(stdout_of(&["cliquetree", "--universal"], &line).trim()).unwrap();
    assert_eq!(tree["nodes"].as_array().unwrap().len(), 5);
    assert_eq!(tree["edges"].as_array().unwrap().len(), 4);
    assert_eq!(tree["universal"], true);
    assert_eq!(
        tree["profile"],
        serde_json::json!([5, 5, 5, 5, 3, 2, 1, 1, 1, 1, 1, 1])
    );
    let dot = stdout_of(&["cliquetree", "--dot"], &line);
    assert!(dot.starts_with("graph cliquetree {"));
}

#[test]
fn recognize_single_class_json() {
    let line = stdout_of(&["gen", "--class", "threshold16"], "");
    let verdict: serde_json::Value = serde_json::from_str(
        stdout_of(&["recognize", "--class", "threshold", "--json"], &line).trim(),
    )
    .unwrap();
    assert_eq!(verdict["member"], true);
    assert_eq!(verdict["certificate"]["creation_sequence"].as_array().unwrap().len(), 16);
}

#[test]
fn gen_is_deterministic_and_exhaustive() {
    let a = stdout_of(&["gen", "--class", "chordal", "--n", "9", "--count", "4", "--seed", "11"], "");
    let b = stdout_of(&["gen", "--class", "chordal", "--n", "9", "--count", "4", "--seed", "11"], "");
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 4);
    let all3 = stdout_of(&["gen", "--class", "all", "--n", "3"], "");
    assert_eq!(all3.lines().count(), 8);
}

#[test]
fn batch_stream_contract() {
    // Three inputs, one of them bad; non-strict keeps going.
    let corpus = format!("{}\nnot-a-graph!\nC`\n", split6_line());
    let out = run_with_stdin(&["batch"], &corpus);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let records: Vec<serde_json::Value> =
        stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 3);
    assert_eq!(records[0]["input_id"], "1");
    assert!(records[1]["error"].is_string());
    assert_eq!(records[2]["input_id"], "3");
    let summary: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
    assert_eq!(summary["inputs"], 3);
    assert_eq!(summary["parse_errors"], 1);
    assert_eq!(summary["disagreements"], 0);

    // Strict mode aborts with the parse exit code.
    let strict = run_with_stdin(&["batch", "--strict"], &corpus);
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn batch_parallel_matches_serial() {
    let corpus = stdout_of(
        &["gen", "--class", "threshold", "--n", "9", "--count", "40", "--seed", "3"],
        "",
    );
    let serial = stdout_of(&["batch"], &corpus);
    let parallel = stdout_of(&["batch", "--jobs", "4"], &corpus);
    // Reports carry timings, so compare the order-sensitive stable fields.
    let key = |s: &str| -> Vec<(String, String, String)> {
        s.lines()
            .map(|l| {
                let v: serde_json::Value = serde_json::from_str(l).unwrap();
                (
                    v["input_id"].as_str().unwrap().to_string(),
                    v["classes"].to_string(),
                    v["ideal"].to_string(),
                )
            })
            .collect()
    };
    assert_eq!(key(&serial), key(&parallel));
    assert_eq!(serial.lines().count(), 40);
}

#[test]
fn batch_over_exhaustive_small_corpus_has_no_disagreements() {
    let corpus = stdout_of(&["gen", "--class", "all", "--n", "5"], "");
    let out = run_with_stdin(&["batch", "--jobs", "2"], &corpus);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 1024);
    let summary: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
    assert_eq!(summary["inputs"], 1024);
    assert_eq!(summary["disagreements"], 0);
    assert_eq!(summary["parse_errors"], 0);
}

#[test]
fn batch_of_random_threshold_graphs_is_all_ideal() {
    let corpus = stdout_of(
        &["gen", "--class", "threshold", "--n", "12", "--count", "100", "--seed", "2"],
        "",
    );
    let out = run_with_stdin(&["batch"], &corpus);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 100);
    let summary: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
    assert_eq!(summary["inputs"], 100);
    assert_eq!(summary["ideal_count"], 100);
    assert_eq!(summary["class_counts"]["threshold"], 100);
    assert_eq!(summary["disagreements"], 0);
}

#[test]
fn empty_batch_is_empty_success() {
    let out = run_with_stdin(&["batch"], "");
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let summary: serde_json::Value =
        serde_json::from_str(String::from_utf8(out.stderr).unwrap().trim()).unwrap();
    assert_eq!(summary["inputs"], 0);
}

#[test]
fn zero_vertex_graph_is_handled() {
    // "?" encodes the graph on zero vertices.
    let report: serde_json::Value =
        serde_json::from_str(stdout_of(&["analyze", "--cliquetree"], "?\n").trim()).unwrap();
    assert_eq!(report["ideal"]["ideal"], true);
    assert_eq!(report["ideal"]["kappa"], 0);
    assert_eq!(report["agreement"], true);
    let out = run_with_stdin(&["batch"], "?\n");
    assert!(out.status.success());
}

#[test]
fn dot_output() {
    let line = stdout_of(&["gen", "--class", "star", "--n", "3"], "");
    let dot = stdout_of(&["dot"], &line);
    assert!(dot.starts_with("graph g {"));
    assert!(dot.contains("0 -- 1;"));
}

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathchrom")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn read(p: &str) -> String {
    std::fs::read_to_string(Path::new(p)).unwrap()
}

#[test]
fn gen_g2_has_eleven_vertices() {
    let out = run(&["gen", "--family", "G", "--n", "2"]);
    assert!(out.status.success());
    let g = stdout_json(&out);
    assert_eq!(g["vertices"].as_array().unwrap().len(), 11);
    assert_eq!(g["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn decompose_then_verify_chromatic() {
    let dir = TempDir::new().unwrap();
    let (g, d) = (path(&dir, "g.json"), path(&dir, "d.json"));
    assert!(run(&["gen", "--family", "G", "--n", "4", "--out", &g]).status.success());
    let dec = run(&["decompose", "--family", "G", "--n", "4", "--method", "geometric", "--shrink", "--out", &d]);
    assert!(dec.status.success());
    let out = run(&["verify", "--graph", &g, "--decomp", &d, "--chromatic", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["valid"], true);
    assert_eq!(report["chromatic"], 2);
}

#[test]
fn verify_reports_broken_decomposition() {
    let dir = TempDir::new().unwrap();
    let (g, d) = (path(&dir, "g.json"), path(&dir, "d.json"));
    assert!(run(&["gen", "--family", "S", "--n", "4", "--out", &g]).status.success());
    assert!(run(&["decompose", "--family", "S", "--n", "4", "--method", "shift", "--out", &d]).status.success());
    let mut doc: Value = serde_json::from_str(&read(&d)).unwrap();
    doc["intervals"]["I:1,2"] = serde_json::json!([4, 4]);
    std::fs::write(&d, doc.to_string()).unwrap();
    let out = run(&["verify", "--graph", &g, "--decomp", &d]);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert_eq!(report["valid"], false);
    assert!(!report["uncovered_edges"].as_array().unwrap().is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn natural_tree_verifies() {
    let dir = TempDir::new().unwrap();
    let (g, d) = (path(&dir, "h.json"), path(&dir, "t.json"));
    assert!(run(&["gen", "--family", "H", "--n", "3", "--out", &g]).status.success());
    let dec = run(&["decompose", "--family", "H", "--n", "3", "--method", "natural-tree", "--out", &d]);
    assert!(dec.status.success());
    let out = run(&["verify", "--graph", &g, "--decomp", &d, "--chromatic"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["chromatic"], 2);
}

#[test]
fn solve_pchr_on_k4() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "k4.json");
    let vertices: Vec<Value> = (0..4).map(|i| serde_json::json!({"id": i, "key": format!("k{i}")})).collect();
    let edges = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];
    std::fs::write(&g, serde_json::json!({"vertices": vertices, "edges": edges}).to_string()).unwrap();
    for flag in ["--pchr", "--chi"] {
        let out = run(&["solve", "--graph", &g, flag]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        assert_eq!(stdout_json(&out)["value"], 4);
    }
    assert_eq!(run(&["solve", "--graph", &g]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--graph", &g, "--pchr", "--chi"]).status.code(), Some(2));
}

#[test]
fn check_properties_exit_codes() {
    let ok = run(&["check-properties", "--n", "5", "--method", "geometric", "--shrink"]);
    assert_eq!(ok.status.code(), Some(0));
    let report = stdout_json(&ok);
    assert_eq!(report["conformant"], true);
    assert_eq!(report["Q1"], serde_json::json!(["OMR"]));
    assert_eq!(report["Q6"], serde_json::json!(["ISF"]));
    let bad = run(&["check-properties", "--n", "5", "--method", "geometric", "--no-shrink"]);
    assert_eq!(bad.status.code(), Some(1));
    let report = stdout_json(&bad);
    assert_eq!(report["conformant"], false);
    assert_eq!(report["two_coloring"]["proper"], false);
}

#[test]
fn dot_and_json_round_trip() {
    let dir = TempDir::new().unwrap();
    let (g, g2, dot) = (path(&dir, "g.json"), path(&dir, "g2.json"), path(&dir, "g.dot"));
    assert!(run(&["gen", "--family", "G", "--n", "3", "--out", &g]).status.success());
    assert!(run(&["export", "--graph", &g, "--format", "dot", "--out", &dot]).status.success());
    assert!(run(&["export", "--graph", &g, "--format", "json", "--out", &g2]).status.success());
    assert_eq!(read(&g), read(&g2));
    let text = read(&dot);
    assert!(text.starts_with("graph "));
    let g_doc: Value = serde_json::from_str(&read(&g)).unwrap();
    assert_eq!(text.matches(" -- ").count(), g_doc["edges"].as_array().unwrap().len());
    // Generating twice is byte-identical.
    assert_eq!(run(&["gen", "--family", "G", "--n", "3"]).stdout, read(&g).into_bytes());
}

#[test]
fn decomposition_host_tree_as_dot() {
    let out = run(&["decompose", "--family", "H", "--n", "2", "--method", "natural-tree", "--format", "dot"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph T {"));
    assert_eq!(text.matches(" -- ").count(), 6);
}

#[test]
fn embeddings_are_checked() {
    let g = run(&["embed", "--embed", "shift-in-G", "--size", "4"]);
    assert_eq!(g.status.code(), Some(0));
    let doc = stdout_json(&g);
    assert_eq!(doc["isomorphic"], true);
    assert_eq!(doc["vertices"].as_object().unwrap().len(), 6);
    let h = run(&["embed", "--embed", "shift-in-H", "--size", "2"]);
    assert_eq!(h.status.code(), Some(0));
    assert_eq!(stdout_json(&h)["isomorphic"], true);
    assert_eq!(run(&["embed", "--embed", "shift-in-G", "--size", "4", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn classify_single_pair_and_counts() {
    let out = run(&["classify", "--first", "V:,0,1", "--second", "V:0,00,01"]);
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["adjacent"], true);
    let counts = stdout_json(&run(&["classify", "--n", "2"]));
    let total: u64 = counts["ordered_pairs"].as_object().unwrap().values().map(|v| v.as_u64().unwrap()).sum();
    assert_eq!(total, 11 * 10);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["gen", "--family", "X", "--n", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "G"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--family", "G", "--n", "2", "--method", "shift"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--graph", "/nonexistent/g.json", "--decomp", "/nonexistent/d.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

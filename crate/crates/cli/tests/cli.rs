//! End-to-end runs of the `qint` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn qint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qint")).args(args).output().expect("binary runs")
}

fn run(args: &[&str], code: i32) -> Output {
    let out = qint(args);
    assert_eq!(out.status.code(), Some(code), "qint {args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out
}

fn json(args: &[&str], code: i32) -> Value {
    serde_json::from_slice(&run(args, code).stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn spectrum(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

fn ids(list: &Value) -> Vec<String> {
    list.as_array().unwrap().iter().map(|m| m["catalog_id"].as_str().unwrap_or("?").to_string()).collect()
}

fn graph6s(list: &Value) -> Vec<String> {
    list.as_array().unwrap().iter().map(|m| m["graph6"].as_str().unwrap().to_string()).collect()
}

#[test]
fn verify_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k3.txt", "3 3\n0 1\n1 2\n0 2\n");
    let r = json(&["verify", &f], 0);
    let g = &r["results"]["graphs"][0];
    assert_eq!(g["q_integral"], true);
    assert_eq!(spectrum(&g["spectrum"]), vec![4, 1, 1]);
    assert_eq!(g["spectral_radius"], 4);
    assert_eq!(g["connected"], true);
    assert_eq!(g["bipartite"], false);
    assert_eq!(g["catalog_id"], "G1");
    assert_eq!(r["schema"], 1);
}

#[test]
fn verify_diamond_is_not_integral() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "diamond.txt", "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n");
    let g = &json(&["verify", &f], 0)["results"]["graphs"][0];
    assert_eq!(g["q_integral"], false);
    assert!(g["spectrum"].is_null());
    // the hub pair and the rim pair split into 2x2 blocks
    let root5 = 5f64.sqrt();
    let want = [3.0 + root5, 2.0, 2.0, 3.0 - root5];
    let got: Vec<f64> = g["float_spectrum"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect();
    assert_eq!(got.len(), 4);
    for (a, b) in got.iter().zip(want) {
        assert!((a - b).abs() < 1e-8, "{got:?}");
    }
}

#[test]
fn verify_hexagon_is_bipartite() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let g = &json(&["verify", &f], 0)["results"]["graphs"][0];
    assert_eq!(g["vertices"], 6);
    assert_eq!(g["bipartite"], true);
    assert_eq!(g["max_degree"], 2);
    assert_eq!(g["max_edge_degree"], 2);
    // circulant: 2 + 2 cos(2 pi k / 6)
    let mut want: Vec<i64> = (0..6).map(|k| (2.0 + 2.0 * (std::f64::consts::PI * k as f64 / 3.0).cos()).round() as i64).collect();
    want.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(spectrum(&g["spectrum"]), want);
}

#[test]
fn parse_errors_name_the_byte_offset() {
    let dir = tempfile::tempdir().unwrap();
    let dup = write(dir.path(), "dup.txt", "3 2\n0 1\n1 0\n");
    let out = run(&["verify", &dup], 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 8"), "{}", String::from_utf8_lossy(&out.stderr));

    let bad = write(dir.path(), "bad.g6", "Bw\nB!\n");
    let out = run(&["verify", &bad], 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("byte 4"), "{}", String::from_utf8_lossy(&out.stderr));

    run(&["verify", dir.path().join("missing").to_str().unwrap()], 3);
    run(&["verify", "--g6", ""], 3);
}

#[test]
fn verify_reads_several_graph6_lines() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "two.g6", ">>graph6<<Bw\nC~\n");
    let r = json(&["verify", &f], 0);
    assert_eq!(graph6s(&r["results"]["graphs"]), vec!["Bw", "C~"]);
}

#[test]
fn exhausted_search_finds_nothing() {
    let r = json(&["search", "lemma-2common", "--rho", "6"], 0);
    assert_eq!(r["results"]["found"].as_array().unwrap().len(), 0);
    assert_eq!(r["certificate"]["frontier_exhausted"], true);
    assert_eq!(r["certificate"]["cap_hit"], false);
}

#[test]
fn t32_search_finds_the_fish() {
    let r = json(&["search", "seed-t32", "--rho", "6"], 0);
    assert_eq!(ids(&r["results"]["found"]), vec!["G8"]);
    assert_eq!(r["certificate"]["frontier_exhausted"], true);
}

#[test]
fn pruning_off_finds_the_same_graphs() {
    let pruned = json(&["search", "seed-t32"], 0);
    let full = json(&["search", "seed-t32", "--max-vertices", "9", "--pruning", "off"], 2);
    assert_eq!(graph6s(&pruned["results"]["found"]), graph6s(&full["results"]["found"]));
    assert!(full["certificate"]["explored"].as_u64() > pruned["certificate"]["explored"].as_u64());
    assert_eq!(full["certificate"]["cap_hit"], true);
}

#[test]
fn pinned_seed_file_matches_the_scenario() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "xy.txt", "2 1\n0 1\n");
    let file = json(&["search", &k2, "--rho", "6", "--pin", "0=4", "--pin", "1=3", "--edge-cap", "5"], 0);
    let scenario = json(&["search", "seed-xy"], 0);
    assert_eq!(graph6s(&file["results"]["found"]), graph6s(&scenario["results"]["found"]));
    assert_eq!(ids(&file["results"]["found"]), vec!["G8"]);
}

#[test]
fn search_input_errors() {
    run(&["search", "seed-t32", "--rho", "5"], 3);
    run(&["search", "seed-t32", "--pin", "0=4"], 3);
    run(&["search", "no-such-seed"], 3);
    run(&["search", "seed-t32", "--max-vertices", "99"], 3);
    run(&["search", "seed-t32", "--pruning", "sideways"], 3);
    run(&["search", "G1", "--rho", "3"], 3);
    run(&["search", "G1", "--pin", "7=2"], 3);
    run(&["frobnicate"], 3);
    run(&["--help"], 0);
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["--no-timing", "search", "seed-t32"], 0).stdout;
    let b = run(&["--no-timing", "search", "seed-t32"], 0).stdout;
    assert_eq!(a, b);
    let v: Value = serde_json::from_slice(&a).unwrap();
    assert!(v.get("timing").is_none());
    let timed = json(&["search", "seed-t32"], 0);
    assert!(timed["timing"]["elapsed_ms"].is_number());
    assert_eq!(timed["fingerprint"], v["fingerprint"]);
    assert_eq!(timed["results"], v["results"]);
}

#[test]
fn classify_small_radii() {
    assert_eq!(ids(&json(&["classify", "--rho", "5"], 0)["results"]["members"]), vec!["G1", "G2"]);
    assert_eq!(ids(&json(&["classify", "--rho", "4"], 0)["results"]["members"]), vec!["G1"]);
    run(&["classify", "--rho", "7"], 3);
    run(&["classify", "--rho", "3"], 3);
}

#[test]
fn classify_radius_six_round_trips() {
    let r = json(&["classify", "--rho", "6", "--oracle-nmax", "8"], 0);
    let members = &r["results"]["members"];
    assert_eq!(ids(members), vec!["G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8"]);
    assert_eq!(r["results"]["oracle"]["confirmed"], true);
    // every reported graph re-verifies to its reported spectrum
    for m in members.as_array().unwrap() {
        let g6 = m["graph6"].as_str().unwrap();
        let v = &json(&["verify", "--g6", g6], 0)["results"]["graphs"][0];
        assert_eq!(v["spectrum"], m["spectrum"], "{g6}");
        assert_eq!(v["connected"], true);
        assert_eq!(v["bipartite"], false);
    }
}

#[test]
fn enumerate_examples() {
    let r = json(&["enumerate", "--nmax", "4", "--rho", "6"], 0);
    assert_eq!(r["results"]["graphs"].as_array().unwrap().len(), 2);
    let r = json(&["enumerate", "--nmax", "6", "--rho", "5"], 0);
    assert_eq!(ids(&r["results"]["graphs"]), vec!["G1", "G2"]);
    run(&["enumerate", "--nmax", "11", "--rho", "6"], 3);
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k3.txt", "3 3\n0 1\n1 2\n0 2\n");
    for spec in ["G1", f.as_str()] {
        let text = String::from_utf8(run(&["export-dot", spec], 0).stdout).unwrap();
        assert!(text.starts_with("graph "));
        assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 3);
        assert_eq!(text.lines().filter(|l| l.trim().trim_end_matches(';').parse::<usize>().is_ok()).count(), 3);
    }
}

#[test]
fn catalog_export_and_scenarios() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("data");
    run(&["--data-dir", data.to_str().unwrap(), "export-catalog"], 0);
    let g6 = fs::read_to_string(data.join("catalog.g6")).unwrap();
    assert_eq!(g6.lines().count(), 8);
    let cat: Value = serde_json::from_str(&fs::read_to_string(data.join("catalog.json")).unwrap()).unwrap();
    let entries = cat["graphs"].as_array().unwrap();
    assert_eq!(entries.len(), 8);
    for (line, e) in g6.lines().zip(entries) {
        let v = &json(&["verify", "--g6", line], 0)["results"]["graphs"][0];
        assert_eq!(v["spectrum"], e["spectrum"]);
    }

    let s = json(&["scenarios"], 0);
    let list = s["results"]["scenarios"].as_array().unwrap();
    assert!(list.iter().any(|x| x["id"] == "seed-t32"));
}

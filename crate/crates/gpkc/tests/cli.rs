use std::process::{Command, Output};

use gpkc::census::read_csv;
use gpkc_core::families::GpParams;
use gpkc_core::graph::decode_graph6;
use gpkc_core::search::is_isomorphic;
use gpkc_core::{gp, Graph};

fn gpkc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpkc")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gpg(n: usize, k: usize) -> Graph {
    gp(GpParams::new(n, k).unwrap())
}

#[test]
fn classify_lines() {
    let o = gpkc(&["classify", "--n", "12", "--k", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "B1: quotient C+(12,5), involution α⁶γ\n");
    assert_eq!(stdout(&gpkc(&["classify", "--n", "11", "--k", "2"])), "NotBipartite: not a Kronecker cover\n");
    assert_eq!(
        stdout(&gpkc(&["classify", "--n", "24", "--k", "7", "--ascii"])),
        "B2: quotient C-(24,7), involution a^12*b*g\n"
    );
}

#[test]
fn classify_json() {
    let o = gpkc(&["classify", "--n", "10", "--k", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["case"], "Exceptional_10_3");
    assert_eq!(v["quotients"], serde_json::json!(["GP(5,2)", "H"]));
    assert_eq!(v["cover"], true);
    let v: serde_json::Value = serde_json::from_slice(&gpkc(&["classify", "--n", "8", "--k", "3", "--json"]).stdout).unwrap();
    assert_eq!(v["cover"], false);
}

#[test]
fn exit_codes() {
    let o = gpkc(&["classify", "--n", "10", "--k", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1 <= k < n/2"));
    assert_eq!(gpkc(&["classify", "--n", "10"]).status.code(), Some(2));
    assert_eq!(gpkc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gpkc(&["kc", "--gp", "5"]).status.code(), Some(2));
    assert_eq!(gpkc(&["kc", "--g6", "!!"]).status.code(), Some(1));
    assert_eq!(gpkc(&["quotient", "--n", "7", "--k", "2"]).status.code(), Some(1));
    assert_eq!(gpkc(&["quotient", "--n", "12", "--k", "5", "--a", "4"]).status.code(), Some(1));
    assert_eq!(gpkc(&["export", "--family", "cplus", "--n", "12"]).status.code(), Some(2));
}

#[test]
fn kronecker_cover_of_petersen_is_desargues() {
    let o = gpkc(&["kc", "--gp", "5,2"]);
    let g = decode_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert!(is_isomorphic(&g, &gpg(10, 3)).unwrap());
    let o = gpkc(&["kc", "--g6", "C~"]);
    let g = decode_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert!(is_isomorphic(&g, &gpg(4, 1)).unwrap());
}

#[test]
fn quotients() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("q.dot");
    let o = gpkc(&["quotient", "--n", "10", "--k", "3", "--delta", "--dot", dot.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let q = decode_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert!(is_isomorphic(&q, &gpkc_core::h_graph()).unwrap());
    assert_eq!(std::fs::read_to_string(&dot).unwrap().matches("--").count(), 15);
    let o = gpkc(&["quotient", "--n", "12", "--k", "5", "--a", "2"]);
    let q = decode_graph6(stdout(&o).trim().as_bytes()).unwrap();
    let c = gpkc_core::lcf(&gpkc_core::families::c_plus(GpParams::new(12, 5).unwrap()).unwrap()).unwrap();
    assert!(is_isomorphic(&q, &c).unwrap());
    let o = gpkc(&["quotient", "--n", "26", "--k", "7"]);
    let q = decode_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert!(is_isomorphic(&q, &gpg(13, 6)).unwrap());
}

#[test]
fn census_files_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let j = dir.path().join("c.json");
    for path in [&a, &b, &j] {
        let o = gpkc(&["census", "--max-n", "20", "--oracle", "--out", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let rows = read_csv(&bytes[..]).unwrap();
    let json: Vec<gpkc::census::CensusRow> = serde_json::from_slice(&std::fs::read(&j).unwrap()).unwrap();
    assert_eq!(rows, json);
    assert!(rows.windows(2).all(|w| (w[0].n, w[0].k) < (w[1].n, w[1].k)));
    let o = gpkc(&["census", "--max-n", "80", "--oracle"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn vertex_bound_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_gpkc"))
        .args(["census", "--max-n", "20", "--oracle"])
        .env(gpkc::MAX_VERTICES_VAR, "30")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound is 30"));
}

#[test]
fn verify_and_export() {
    let o = gpkc(&["verify", "--max-n", "26", "--quiet"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("0 failed\n"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning: GP(8,3)"));
    let o = gpkc(&["export", "--family", "h"]);
    let h = decode_graph6(stdout(&o).trim().as_bytes()).unwrap();
    assert_eq!(h, gpkc_core::h_graph());
    let o = gpkc(&["export", "--family", "gp", "--n", "5", "--k", "2", "--format", "dot"]);
    assert!(stdout(&o).starts_with("graph G {\n"));
    assert_eq!(gpkc(&["export", "--family", "cminus", "--n", "8", "--k", "3"]).status.code(), Some(1));
}

use std::path::Path;
use std::process::{Command, Output};

use heavyberge::bounds::{BlueRedGraph, BoundReport};
use heavyberge::{find_copy, Hypergraph, Mode, PatternGraph};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heavyberge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn generate_q_writes_hypergraph_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("q.json");
    let o = run(&["generate", "Q", "--n", "6", "--parts", "3", "--r", "3", "--t", "2", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let h = Hypergraph::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(h.edge_count(), 11);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("q.report.json")).unwrap()).unwrap();
    assert_eq!(report["size"], 11);
    assert_eq!(report["predicted"], 11);
    assert_eq!(report["freeness"]["pattern"], "K4");
    assert_eq!(report["freeness"]["free"], true);
}

#[test]
fn generate_sts_and_c2() {
    let o = run(&["generate", "sts", "--n", "7"]);
    assert!(o.status.success());
    assert_eq!(Hypergraph::from_json(&stdout(&o)).unwrap().edge_count(), 7);

    let o = run(&["generate", "c2", "--n", "10", "--r", "3", "--t", "2"]);
    assert!(o.status.success());
    assert_eq!(Hypergraph::from_json(&stdout(&o)).unwrap().edge_count(), 36);
}

#[test]
fn generator_errors_exit_nonzero() {
    let o = run(&["generate", "sts", "--n", "8"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["generate", "Q", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["generate", "c4", "--n", "12", "--t", "4", "--pattern", "S2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
    let h = Hypergraph::from_json(&stdout(&a)).unwrap();
    assert!(find_copy(&h, &PatternGraph::star(2), 4, Mode::Heavy).unwrap().is_none());
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let fano = stdout(&run(&["generate", "sts", "--n", "7"]));
    let fano = write(dir.path(), "fano.json", &fano);
    let o = run(&["check", "--input", &fano, "--pattern", "S2", "--t", "2", "--mode", "heavy"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "free");

    let berge = write(
        dir.path(),
        "tri.json",
        r#"{"n":9,"r":3,"edges":[[0,1,3],[0,1,4],[1,2,5],[1,2,6],[0,2,7],[0,2,8]]}"#,
    );
    let o = run(&["check", "--input", &berge, "--pattern", "K3", "--t", "2", "--mode", "berge"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let (head, witness) = text.split_once('\n').unwrap();
    assert_eq!(head, "contained");
    let w: Value = serde_json::from_str(witness).unwrap();
    assert_eq!(w["t"], 2);

    let bad = write(dir.path(), "bad.json", "{\"n\": 3, \"r\": 3, \"edges\": [[0,1]]}");
    let o = run(&["check", "--input", &bad, "--pattern", "K3", "--t", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["check", "--input", &fano, "--pattern", "X9", "--t", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_accepts_pattern_files() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write(dir.path(), "fano.json", &stdout(&run(&["generate", "sts", "--n", "7"])));
    let tri = write(dir.path(), "k3.json", &PatternGraph::complete(3).to_json());
    let o = run(&["check", "--input", &fano, "--pattern", &tri, "--t", "1", "--mode", "berge"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bounds_formats() {
    let o = run(&["bounds", "--n", "6", "--r", "3", "--t", "2", "--pattern", "K4", "--format", "json"]);
    assert!(o.status.success());
    let report: BoundReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.best_lower(), Some(11));
    assert_eq!(report.best_upper(), Some(27));

    let csv = stdout(&run(&["bounds", "--n", "6", "--r", "3", "--t", "2", "--pattern", "K4", "--format", "csv"]));
    assert!(csv.lines().any(|l| l == "upper,blue-red,27"));
    assert!(csv.lines().any(|l| l == "lower,Q,11"));

    let table = stdout(&run(&["bounds", "--n", "6", "--r", "3", "--t", "2", "--pattern", "K4"]));
    assert!(table.contains("27") && table.contains("11"));
}

#[test]
fn turan_exact_reports_exhaustion() {
    let o = run(&["turan-exact", "--n", "5", "--r", "3", "--pattern", "S2", "--t", "2", "--mode", "heavy"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exhausted"], true);
    assert_eq!(v["value"], 4);
    let h = Hypergraph::from_json(&v["extremal"].to_string()).unwrap();
    assert_eq!(h.edge_count(), 4);
}

#[test]
fn symmetrize_log_is_monotone() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", r#"{"n":6,"blue":[[0,1],[1,2],[2,3]],"red":[[3,4],[4,5],[0,5],[0,3]]}"#);
    let o = run(&["symmetrize", "--input", &g, "--k", "4", "--r", "3", "--t", "2"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for step in v["steps"].as_array().unwrap() {
        assert!(step["g_after"].as_u64() >= step["g_before"].as_u64());
    }
    assert!(v["final_g"].as_u64() >= v["initial_g"].as_u64());
    let graph = BlueRedGraph::from_json(&v["graph"].to_string()).unwrap();
    assert!(graph.is_monochromatic());

    let k4 = write(dir.path(), "k4.json", r#"{"n":4,"blue":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]],"red":[]}"#);
    assert_eq!(run(&["symmetrize", "--input", &k4, "--k", "4", "--r", "3", "--t", "2"]).status.code(), Some(2));
}

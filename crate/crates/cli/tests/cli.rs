use std::path::Path;
use std::process::{Command, Output};

use quandle_cli::verify::RunReport;
use serde_json::{json, Value};

fn quandle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quandle")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn homology_of_r3() {
    let v = json_of(&quandle(&["homology", "R3", "--n", "2", "--kind", "Q"]));
    assert_eq!(v, json!({"free_rank": 0, "torsion": []}));
    let v = json_of(&quandle(&["homology", "R4", "--n", "2", "--kind", "Q", "--coeffs", "Z2", "--cohomology"]));
    assert_eq!(v, json!({"free_rank": 0, "torsion": [2, 2, 2, 2]}));
}

#[test]
fn betti_table_of_trivial_quandle() {
    let v = json_of(&quandle(&["betti", "T3", "--n", "4"]));
    for (i, row) in v["rows"].as_array().unwrap().iter().enumerate() {
        let n = i as u32 + 1;
        let b = 3 * 2u64.pow(n - 1);
        assert_eq!(row["betti"]["R"], json!(3u64.pow(n)));
        assert_eq!(row["betti"]["Q"], json!(b));
        assert_eq!(row["betti"]["D"], json!(3u64.pow(n) - b));
        assert_eq!(row["betti"], row["lower_bound"]);
    }
}

#[test]
fn quandle_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    let made = json_of(&quandle(&["make", "Z3[T]/(T^2+1)", "--out", path.to_str().unwrap()]));
    assert_eq!(made["size"], json!(9));
    let orbits = json_of(&quandle(&["orbits", path.to_str().unwrap()]));
    assert_eq!(orbits["is_quandle"], json!(true));
    let bad = write(dir.path(), "bad.json", r#"{"size": 2, "table": [[0, 0], [0, 1]]}"#);
    assert_eq!(quandle(&["orbits", &bad]).status.code(), Some(2));
}

#[test]
fn invariants_of_diagrams() {
    let dir = tempfile::tempdir().unwrap();
    let unknot = write(dir.path(), "unknot.vb", "strands=1\n");
    let trefoil = write(dir.path(), "tre.vb", "s1 s1 s1\n");
    let phi = write(
        dir.path(),
        "phi.json",
        r#"{"group": [2], "support": [["0","1"],["0","T+1"],["1","0"],["1","T+1"],["T+1","0"],["T+1","1"]]}"#,
    );
    let v = json_of(&quandle(&["invariant", "--diagram", &unknot, "--quandle", "S4", "--cocycle", &phi]));
    assert_eq!(v, json!({"colorings": 4, "state_sum": {"0": 4}}));
    let v = json_of(&quandle(&["invariant", "--diagram", &trefoil, "--quandle", "S4", "--cocycle", &phi, "--coeffs", "Z2"]));
    assert_eq!(v, json!({"colorings": 16, "state_sum": {"0": 4, "t": 12}}));
    let out = quandle(&["invariant", "--diagram", &trefoil, "--quandle", "S4", "--cocycle", &phi, "--coeffs", "Z3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn loops_in_diagram_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(dir.path(), "k.vb", "s1 s1 s1\nloop strand=1 pos=3 sign=+1 color=2T+2\nloop strand=2 pos=3 sign=+1 color=3\n");
    let phi = write(dir.path(), "zero.json", r#"{"support": []}"#);
    let v = json_of(&quandle(&["invariant", "--diagram", &d, "--quandle", "Z4[T]/(T^2-T-1)", "--cocycle", &phi, "--coeffs", "Z2"]));
    let n = v["colorings"].as_u64().unwrap();
    assert!(n >= 1);
    assert_eq!(v["state_sum"], json!({"0": n}));
}

#[test]
fn shadow_cycles_of_trefoil() {
    let dir = tempfile::tempdir().unwrap();
    let trefoil = write(dir.path(), "tre.vb", "s1 s1 s1\n");
    let v = json_of(&quandle(&["shadow", "--diagram", &trefoil, "--quandle", "R3", "--p", "3"]));
    assert_eq!(v["shadow_colorings"], json!(27));
    assert!(v["nonzero_classes"].as_u64().unwrap() > 0);
    let virt = write(dir.path(), "v.vb", "s1 v1\n");
    assert_eq!(quandle(&["shadow", "--diagram", &virt, "--quandle", "R3"]).status.code(), Some(2));
}

#[test]
fn other_commands() {
    let v = json_of(&quandle(&["sx", "R3", "--max-n", "4"]));
    assert_eq!(v["index"], json!(">4"));
    let v = json_of(&quandle(&["coker", "R4", "--n", "2", "--kind", "R"]));
    assert_eq!(v["cokernel"], json!({"free_rank": 0, "torsion": [2, 2]}));
    assert_eq!(v["bounds_hold"], json!(true));
    let v = json_of(&quandle(&["cocycles", "S4", "--coeffs", "Z2"]));
    assert_eq!(v["h2"], json!({"free_rank": 0, "torsion": [2]}));
    let out = quandle(&["boundary", "R3", "--n", "2", "--kind", "Q"]);
    assert!(out.status.success());
    let m = quandle_cli::formats::parse_triplets(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!((m.rows(), m.cols()), (3, 6));
}

#[test]
fn exit_codes() {
    assert_eq!(quandle(&["homology", "nonsense", "--n", "2"]).status.code(), Some(2));
    assert_eq!(quandle(&["homology"]).status.code(), Some(2));
    assert_eq!(quandle(&["homology", "R5", "--n", "9", "--kind", "R", "--cap", "1000"]).status.code(), Some(3));
}

#[test]
fn fast_report_loads_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = quandle(&["verify", "--scope", "fast", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let report: RunReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.pass);
    assert_eq!(report.checks.len(), 15);
    assert!(String::from_utf8(out.stdout).unwrap().lines().filter(|l| l.starts_with("PASS")).count() == 15);
}

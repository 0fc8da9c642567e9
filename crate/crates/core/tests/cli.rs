use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn etap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etap")).args(args).output().expect("run etap")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("etap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn clifford_dump() {
    let out = etap(&["clifford", "--sig", "3,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dimS"], 4);
    assert_eq!(v["gammas"].as_array().unwrap().len(), 3);

    assert_eq!(etap(&["clifford", "--sig", "0,0"]).status.code(), Some(2));
    assert_eq!(etap(&["clifford", "--sig", "x"]).status.code(), Some(2));
}

#[test]
fn clifford_variants_differ() {
    let a = json(&etap(&["clifford", "--complex", "--n", "7"]));
    let b = json(&etap(&["clifford", "--complex", "--n", "7", "--variant", "second"]));
    assert_eq!(a["variant"], "first");
    assert_eq!(b["variant"], "second");
    assert_ne!(a["gammas"], b["gammas"]);
}

#[test]
fn forms_listing() {
    let v = json(&etap(&["forms", "--sig", "3,1", "--N", "1"]));
    assert_eq!(v["etaDimension"], 4);
    assert_eq!(v["etaBasis"].as_array().unwrap().len(), 4);
    for f in v["basis"].as_array().unwrap() {
        if f["status"] == "degenerate" {
            assert!(f["invariants"].is_null());
        }
    }
    let v = json(&etap(&["forms", "--complex", "--n", "8", "--N", "1"]));
    let pieces: Vec<&str> = v["pieces"].as_array().unwrap().iter().map(|p| p["invariants"].as_str().unwrap()).collect();
    assert!(pieces.iter().any(|p| p.starts_with("(-,+")), "{pieces:?}");
    assert!(v["default"].as_str().unwrap().starts_with("(-,+"));
}

#[test]
fn prolong_f_ii_report() {
    let out = etap(&["prolong", "--sig", "7,0", "--N", "1"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    let dims: Vec<u64> = v["analysis"]["degrees"].as_array().unwrap().iter().map(|d| d["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [7, 8, 22, 8, 7]);
    assert_eq!(v["analysis"]["identification"], "F II");
    assert_eq!(v["analysis"]["killing"]["simple"], true);
    assert_eq!(v["catalog"]["verdict"], "match");
    assert!(v.get("timingMs").is_none());
}

#[test]
fn prolong_nonsimple_and_contact() {
    let v = json(&etap(&["prolong", "--complex", "--n", "5"]));
    let a = &v["analysis"];
    assert_eq!(a["degrees"].as_array().unwrap().len(), 3);
    assert_eq!(a["killing"]["semisimple"], false);
    assert_eq!(v["catalog"]["verdict"], "match");

    let out = etap(&["prolong", "--sig", "1,0", "--N", "1", "--max-degree", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["analysis"]["truncated"], true);
    let dims: Vec<u64> = v["analysis"]["degrees"].as_array().unwrap().iter().map(|d| d["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 2, 4, 6, 9, 12, 16]);
}

#[test]
fn max_degree_from_env() {
    let out = Command::new(env!("CARGO_BIN_EXE_etap"))
        .args(["prolong", "--sig", "1,0"])
        .env("ETAP_MAX_DEGREE", "2")
        .output()
        .unwrap();
    let v = json(&out);
    assert_eq!(v["analysis"]["degrees"].as_array().unwrap().len(), 5);
}

#[test]
fn form_selection() {
    let v = json(&etap(&["prolong", "--sig", "3,1", "--form-invariants", "-,+"]));
    assert_eq!(v["analysis"]["identification"], "su(2,4)");
    let v = json(&etap(&["prolong", "--sig", "3,1", "--form-invariants=+,-"]));
    assert_eq!(v["analysis"]["identification"], "su(3,3)");

    let out = etap(&["prolong", "--sig", "3,1", "--form-invariants", "+,+"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("candidates"));
    assert_eq!(etap(&["prolong", "--sig", "3,1", "--form", "99"]).status.code(), Some(2));
    assert_eq!(etap(&["prolong", "--sig", "0,2"]).status.code(), Some(2));
}

#[test]
fn dump_round_trip_and_stability() {
    let path = scratch("sp12.json");
    let p = path.to_str().unwrap();
    let first = etap(&["prolong", "--sig", "3,0", "--out", p]);
    assert_eq!(first.status.code(), Some(0));
    let dump = std::fs::read(&path).unwrap();
    let second = etap(&["prolong", "--sig", "3,0", "--out", p]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(dump, std::fs::read(&path).unwrap());

    let d: Value = serde_json::from_slice(&dump).unwrap();
    assert_eq!(d["field"], "real");
    assert!(d["brackets"][0][3].is_string());

    let out = etap(&["analyze", p]);
    assert_eq!(out.status.code(), Some(0));
    let a = json(&out);
    assert_eq!(a, json(&first)["analysis"]);
    assert_eq!(a["identification"], "sp(1,2)");
}

#[test]
fn analyze_rejects_bad_input() {
    let path = scratch("bad.json");
    std::fs::write(&path, "{\"field\": \"real\"}").unwrap();
    assert_eq!(etap(&["analyze", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(etap(&["analyze", "/nonexistent/etap.json"]).status.code(), Some(2));
}

#[test]
fn markdown_report() {
    let out = etap(&["prolong", "--sig", "2,2", "--format", "md"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("| sl(5,R) | (2,2) | 4 | 1 | 1 | (4,4,8,4,4) |"), "{s}");
}

#[test]
fn verify_tables_suites() {
    let out = etap(&["verify-tables", "--suite", "complex", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["passed"], 7);

    let out = etap(&["verify-tables", "--suite", "contact"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("3 passed, 0 failed"));

    assert_eq!(etap(&["verify-tables", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_tables_n1() {
    let out = etap(&["verify-tables", "--suite", "n1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    assert_eq!(v["failed"], 0);
}

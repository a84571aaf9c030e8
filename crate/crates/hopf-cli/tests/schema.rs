//! The report shape per command: top-level keys, entry keys and check names.
//! `HOPF_BLESS=1` rewrites the golden file.

use std::collections::BTreeMap;

use hopf_cli::run;
use serde_json::{json, Value};

fn shape(args: &[&str]) -> Value {
    let mut full = vec!["hopf"];
    full.extend_from_slice(args);
    let out = run(full);
    let v: Value = serde_json::from_str(&out.stdout).expect("report json");
    let top: Vec<&String> = v.as_object().unwrap().keys().collect();
    let checks = v["checks"].as_array().unwrap();
    let entry_keys: Vec<Vec<&String>> = checks.iter().map(|c| c.as_object().unwrap().keys().collect()).collect();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted, "checks are sorted by name");
    for k in &entry_keys {
        assert_eq!(k, &entry_keys[0]);
    }
    json!({ "top": top, "entry": entry_keys[0], "names": names, "parameters": v["parameters"] })
}

#[test]
fn report_schema_matches_golden() {
    let mut got = BTreeMap::new();
    got.insert("verify", shape(&["verify", "--algebra", "k_xi_iso3", "--order", "2", "--xi", "3/5", "--strict"]));
    got.insert("scatter", shape(&["scatter", "--p", "[[0.1,0],[0.2,0],[0.3,0]]", "--q", "[[0.1,0],[0.2,0],[0.3,0]]"]));
    got.insert("scatter_batch", shape(&["scatter", "--samples", "3"]));
    got.insert("contract_residual", shape(&["contract-residual", "--order", "2"]));
    got.insert("classical", shape(&["classical", "--d", "3"]));
    let text = serde_json::to_string_pretty(&got).unwrap() + "\n";
    let path = format!("{}/tests/golden/report_schema.json", env!("CARGO_MANIFEST_DIR"));
    if std::env::var("HOPF_BLESS").is_ok() {
        std::fs::write(&path, &text).unwrap();
    }
    let want = std::fs::read_to_string(&path).expect("golden file exists; run with HOPF_BLESS=1");
    assert_eq!(text, want);
}

#[test]
fn every_entry_has_the_four_fields() {
    let out = run(["hopf", "classical", "--d", "5"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    for c in v["checks"].as_array().unwrap() {
        let keys: Vec<_> = c.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["detail", "name", "paper_ref", "status"]);
        assert!(["pass", "fail", "skipped"].contains(&c["status"].as_str().unwrap()));
    }
}

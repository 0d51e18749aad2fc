use std::process::{Command, Output};

use serde_json::Value;

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json", "--no-timestamp"];
    all.extend_from_slice(args);
    let out = verify(&all);
    let v = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    (v, out.status.code().unwrap())
}

#[test]
fn list_checks_has_ten_entries_in_catalog_order() {
    let out = verify(&["list-checks", "--format", "json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert_eq!(
        ids,
        [
            "example-universal",
            "lemma-s",
            "plethysm-eq4",
            "decompositions",
            "lemma-cohomology",
            "prop-cubic",
            "prop-fano",
            "theorem-moduli",
            "remark-d34",
            "oracles"
        ]
    );
    let fano = v.as_array().unwrap().iter().find(|e| e["id"] == "prop-fano").unwrap();
    assert!(fano["description"].as_str().unwrap().contains("surjective with kernel <s_f>"));
    let remark = v.as_array().unwrap().iter().find(|e| e["id"] == "remark-d34").unwrap();
    assert_eq!(remark["informational"], true);

    let text = verify(&["list-checks"]);
    assert_eq!(String::from_utf8(text.stdout).unwrap().lines().count(), 10);
}

#[test]
fn theorem_moduli_at_d5() {
    let (v, code) = json(&["--d-min", "5", "--d-max", "5", "--check", "theorem-moduli"]);
    assert_eq!(code, 0);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 1);
    let r = &results[0];
    assert_eq!(r["status"], "pass");
    assert_eq!(r["computed"]["h1_X"], 35);
    assert_eq!(r["computed"]["h1_F"], 35);
    assert_eq!(r["expected"]["h1"], 35);
    let axioms: Vec<&str> = r["axioms"].as_array().unwrap().iter().map(|a| a.as_str().unwrap()).collect();
    assert!(axioms.iter().any(|a| a.starts_with("H0_tangent_fano_zero: ")));
    assert!(axioms.iter().any(|a| a.starts_with("H0_tangent_cubic_zero: ")));
    assert!(!r["provenance"].as_str().unwrap().is_empty());
}

#[test]
fn lemma_cohomology_passes_for_large_d() {
    let (v, code) = json(&["--d-min", "6", "--d-max", "12", "--check", "lemma-cohomology"]);
    assert_eq!(code, 0);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 7);
    for r in results {
        assert_eq!(r["status"], "pass", "{r}");
        assert_eq!(r["computed"]["acyclic_classes"], 7);
        assert_eq!(r["computed"]["h0_sym3_tensor_dual"], 1);
    }
    assert_eq!(v["summary"]["pass"], 7);
}

#[test]
fn prop_cubic_at_d3_in_text() {
    let out = verify(&["--d-min", "3", "--d-max", "3", "--check", "prop-cubic", "--no-timestamp"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().find(|l| l.contains("prop-cubic")).unwrap();
    assert!(line.starts_with("pass"));
    assert!(line.contains("\"h1_tangent_cubic\":10"));
    assert!(text.contains("summary: 1 pass, 0 fail"));
}

#[test]
fn d5_discrepancy_and_strict_flag() {
    let args = ["--d-min", "5", "--d-max", "5", "--check", "lemma-cohomology"];
    let (v, code) = json(&args);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!(r["status"], "paper-discrepancy");
    assert_eq!(r["computed"]["d5_normal_level"], 3);
    assert_eq!(r["expected"]["d5_normal_level"], 2);
    assert_eq!(r["computed"]["d5_normal_degree"], 5);
    assert_eq!(r["computed"]["d5_normal_dimension"], 7);
    assert_eq!(r["computed"]["d5_tangent_degree"], 4);
    assert_eq!(v["summary"]["discrepancy"], 1);

    let mut strict = args.to_vec();
    strict.push("--strict-paper");
    let (v, code) = json(&strict);
    assert_eq!(code, 3);
    assert_eq!(v["params"]["strict_paper"], true);
}

#[test]
fn small_d_rows_are_skipped() {
    let (v, code) = json(&["--d-min", "3", "--d-max", "5", "--check", "prop-fano", "--check", "remark-d34"]);
    assert_eq!(code, 0);
    let statuses: Vec<(&str, u64, &str)> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["check"].as_str().unwrap(), r["d"].as_u64().unwrap(), r["status"].as_str().unwrap()))
        .collect();
    assert_eq!(
        statuses,
        [
            ("prop-fano", 3, "skipped"),
            ("prop-fano", 4, "skipped"),
            ("prop-fano", 5, "pass"),
            ("remark-d34", 3, "informational"),
            ("remark-d34", 4, "informational"),
            ("remark-d34", 5, "skipped"),
        ]
    );
    assert_eq!(v["summary"]["skipped"], 3);
    assert_eq!(v["summary"]["informational"], 2);
}

#[test]
fn usage_errors_exit_with_2() {
    assert_eq!(verify(&["--d-min", "2", "--d-max", "5"]).status.code(), Some(2));
    assert_eq!(verify(&["--d-min", "7", "--d-max", "5"]).status.code(), Some(2));
    assert_eq!(verify(&["--check", "no-such-check"]).status.code(), Some(2));
    assert_eq!(verify(&["--format", "yaml"]).status.code(), Some(2));
    assert_eq!(verify(&["--jobs", "0"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_without_timestamp() {
    let args = ["--d-min", "3", "--d-max", "8", "--format", "json", "--no-timestamp"];
    let serial = verify(&[&args[..], &["--jobs", "1"]].concat());
    let parallel = verify(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(serial.stdout, parallel.stdout);
    assert_eq!(serial.stdout, verify(&args).stdout);
    assert!(!String::from_utf8_lossy(&serial.stdout).contains("timestamp"));

    let stamped = verify(&["--d-min", "5", "--d-max", "5", "--check", "lemma-s", "--format", "json"]);
    let v: Value = serde_json::from_slice(&stamped.stdout).unwrap();
    assert!(v["timestamp"].is_string());
}

#[test]
fn default_run_is_clean() {
    let (v, code) = json(&[]);
    assert_eq!(code, 0);
    let s = &v["summary"];
    assert_eq!(s["fail"], 0);
    assert_eq!(s["undetermined"], 0);
    let total: u64 = ["pass", "fail", "undetermined", "discrepancy", "skipped", "informational"]
        .iter()
        .map(|k| s[k].as_u64().unwrap())
        .sum();
    assert_eq!(total as usize, v["results"].as_array().unwrap().len());
    assert_eq!(v["params"]["d_min"], 3);
    assert_eq!(v["params"]["d_max"], 12);
    assert_eq!(v["version"], "1");
}

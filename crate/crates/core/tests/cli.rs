use autsurf::cli::run;
use serde_json::Value;

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["autsurf", "--format", "json"];
    full.extend_from_slice(args);
    let out = run(full);
    (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
}

#[test]
fn classify_reports_schema_fields() {
    let (code, v) = json(&["classify", "--genus", "14"]);
    assert_eq!(code, 0);
    assert_eq!(v["genus"], 14);
    assert_eq!(v["q"], 13);
    assert_eq!(v["q_prime"], true);
    assert_eq!(v["theorem1_consistent"], true);
    let s = &v["strata"][1];
    assert_eq!(s["paper_name"], "C_13 ⋊_4 C_4");
    assert!(s["vector_count"].as_u64().unwrap() > 0);
    assert_eq!(s["representatives"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_byte_identical_across_workers() {
    let a = run(["autsurf", "classify", "--genus", "12", "--workers", "1"]);
    let b = run(["autsurf", "classify", "--genus", "12", "--workers", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.code, 0);
}

#[test]
fn non_prime_genus_is_refused() {
    let (code, _) = json(&["classify", "--genus", "9"]);
    assert_eq!(code, 1);
}

#[test]
fn jacobian_family_one_needs_q_one_mod_four() {
    assert_eq!(json(&["jacobian", "--family", "F1", "--q", "11"]).0, 1);
    let (code, v) = json(&["jacobian", "--family", "F1", "--q", "13"]);
    assert_eq!(code, 0);
    assert_eq!(v["residual"], 0);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(["autsurf", "classify"]).code, 1);
    assert_eq!(run(["autsurf", "frobnicate"]).code, 1);
    assert_eq!(run(["autsurf", "strata", "--group", "dihedral:0", "--signature", "0;2,2,2,2,2"]).code, 1);
}

#[test]
fn failed_check_exits_three() {
    assert_eq!(run(["autsurf", "counterexample", "--kind", "dihedral2", "--n", "3"]).code, 3);
    assert_eq!(run(["autsurf", "counterexample", "--kind", "q8", "--n", "3"]).code, 0);
}

#[test]
fn table_format_is_default() {
    let out = run(["autsurf", "extensions", "--signature", "0;2,2,4,4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("0;2,2,2,4"));
    assert!(serde_json::from_str::<Value>(&out.stdout).is_err());
}

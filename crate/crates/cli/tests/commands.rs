use serde_json::Value;
use splitq_cli::{run, Outcome, EXIT_BUDGET, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("splitq").chain(args.iter().copied()))
}

fn report(args: &[&str]) -> Value {
    let out = call(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}{}", out.stdout, out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn types_counts() {
    for (size, count) in [("1", 1), ("2", 4), ("4", 22), ("6", 103)] {
        let r = report(&["types", "--size", size]);
        assert_eq!(r["result"]["count"], count);
        assert_eq!(r["result"]["types"].as_array().unwrap().len(), count);
    }
    let r = report(&["types", "--size", "2"]);
    assert_eq!(r["result"]["types"], serde_json::json!(["1:2", "1:1,1", "1:1;1:1", "2:1"]));
    assert_eq!(call(&["types", "--size", "0"]).code, EXIT_USAGE);
    assert_eq!(call(&["types", "--size", "13"]).code, EXIT_USAGE);
}

#[test]
fn sigma_examples() {
    let r = report(&["sigma", "--type", "1:4"]);
    assert_eq!(r["result"]["sigma"]["coeffs"], serde_json::json!([0, 0, 0, 0, 1]));
    assert_eq!(r["status"], "ok");
    let r = report(&["sigma", "--type", "2:1", "--eval", "3"]);
    assert_eq!(r["result"]["value"], 4);
    let r = report(&["sigma", "--all-of-size", "4", "--method", "both"]);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["result"]["rows"].as_array().unwrap().len(), 22);
    assert!(r["result"]["rows"].as_array().unwrap().iter().all(|row| row["agree"] == true));
}

#[test]
fn sigma_usage_errors() {
    assert_eq!(call(&["sigma", "--all-of-size", "3"]).code, EXIT_USAGE);
    assert_eq!(call(&["sigma", "--type", "1:3"]).code, EXIT_USAGE);
    assert_eq!(call(&["sigma", "--type", "2:0"]).code, EXIT_USAGE);
    assert_eq!(call(&["sigma"]).code, EXIT_USAGE);
    assert_eq!(call(&["sigma", "--type", "1:2", "--all-of-size", "2"]).code, EXIT_USAGE);
    let out = call(&["sigma", "--type", "garbage"]);
    let r: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(r["status"], "error");
    assert!(r["error"].as_str().unwrap().contains("garbage"));
}

#[test]
fn touchard_three_way() {
    let r = report(&["touchard", "--m", "3", "--method", "all"]);
    assert_eq!(r["status"], "ok");
    assert_eq!(r["result"]["display"], "5 + 6q + 3q^2 + q^3");
    for key in ["enum", "refine", "from_rhs"] {
        assert_eq!(r["result"][key]["coeffs"], serde_json::json!([5, 6, 3, 1]), "{key}");
    }
    let r = report(&["touchard", "--m", "10", "--method", "rhs"]);
    assert_eq!(r["result"]["diagrams"], 654729075);
    assert_eq!(call(&["touchard", "--m", "9", "--method", "enum"]).code, EXIT_BUDGET);
    assert_eq!(call(&["touchard", "--m", "12", "--method", "refine"]).code, EXIT_BUDGET);
}

#[test]
fn invariants_report() {
    let r = report(&["invariants", "--type", "1:1,1"]);
    assert_eq!(r["result"]["n"], 2);
    let x = r["result"]["x"].as_array().unwrap();
    assert_eq!(x[1]["coeffs"], serde_json::json!([1, 1]));
    assert_eq!(r["result"]["f"]["vars"], serde_json::json!(["q", "t"]));
}

#[test]
fn verify_passes_for_small_fields() {
    for (m, q) in [("1", "2"), ("1", "3"), ("1", "4"), ("1", "5"), ("2", "2"), ("2", "3")] {
        let r = report(&["verify", "--m", m, "--q", q]);
        assert_eq!(r["status"], "ok");
        assert_eq!(r["result"]["failed"], 0);
        assert!(r["mismatches"].as_array().unwrap().is_empty());
    }
    let r = report(&["verify", "--m", "2", "--q", "4"]);
    assert_eq!(r["result"]["passed"], 22);
    assert_eq!(call(&["verify", "--m", "1", "--q", "6"]).code, EXIT_USAGE);
    assert_eq!(call(&["verify", "--m", "2", "--q", "2", "--budget", "10"]).code, EXIT_BUDGET);
}

#[test]
fn oracle_matrix_files() {
    let r = report(&["oracle", "classify", "--matrix", &data("zero2x2.json")]);
    assert_eq!(r["result"]["type"], "1:1,1");
    let r = report(&["oracle", "classify", "--matrix", &data("diag_f4.json")]);
    assert_eq!(r["result"]["type"], "1:1;1:1");
    let r = report(&["oracle", "count-splitting", "--matrix", &data("diag_f4.json")]);
    assert_eq!(r["result"]["count"], 3);
    let r = report(&["oracle", "classify", "--matrix", &data("companion_f3.json")]);
    assert_eq!(r["result"]["type"], "2:2");
    let r = report(&["oracle", "count-invariant", "--matrix", &data("zero2x2.json")]);
    assert_eq!(r["result"]["counts"], serde_json::json!([1, 3, 1]));
    assert_eq!(call(&["oracle", "classify", "--matrix", "/nonexistent.json"]).code, EXIT_USAGE);
}

#[test]
fn oracle_from_type_compares_with_formula() {
    let r = report(&["oracle", "count-splitting", "--type", "1:2;2:1", "--p", "3"]);
    assert_eq!(r["result"]["count"], r["result"]["formula"]);
    let r = report(&["oracle", "count-invariant", "--type", "2:1,1", "--p", "2", "--k", "2"]);
    assert_eq!(r["result"]["counts"], r["result"]["formula"]);
    let r = report(&["oracle", "classify", "--type", "1:1;3:1", "--p", "2"]);
    assert_eq!(r["result"]["type"], "1:1;3:1");
    assert_eq!(call(&["oracle", "classify", "--type", "1:1;1:1;1:1", "--p", "2"]).code, EXIT_USAGE);
    assert_eq!(call(&["oracle", "classify", "--type", "1:1"]).code, EXIT_USAGE);
    assert_eq!(call(&["oracle", "count-splitting", "--type", "1:1", "--p", "2", "--d", "2"]).code, EXIT_USAGE);
}

#[test]
fn csv_tables() {
    let out = call(&["--csv", "types", "--size", "2"]);
    assert_eq!(out.stdout, "type\n1:2\n\"1:1,1\"\n1:1;1:1\n2:1\n");
    let out = call(&["sigma", "--all-of-size", "2", "--eval", "2", "--csv"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), 5);
    assert!(out.stdout.starts_with("type,sigma,value\n1:2,q,2\n"));
    assert_eq!(call(&["--csv", "oracle", "classify", "--matrix", &data("zero2x2.json")]).code, EXIT_USAGE);
}

#[test]
fn identical_inputs_give_identical_bytes() {
    for args in [
        vec!["sigma", "--all-of-size", "6", "--method", "both"],
        vec!["verify", "--m", "2", "--q", "3"],
        vec!["touchard", "--m", "5", "--method", "all"],
    ] {
        let a = call(&args);
        let b = call(&args);
        assert_eq!(a, b);
    }
    let timed: Value = serde_json::from_str(&call(&["--timing", "types", "--size", "3"]).stdout).unwrap();
    assert!(timed["timing_ms"].is_number());
    let untimed: Value = serde_json::from_str(&call(&["types", "--size", "3"]).stdout).unwrap();
    assert!(untimed.get("timing_ms").is_none());
}

#[test]
fn mismatch_exit_code_is_distinct() {
    assert_ne!(EXIT_MISMATCH, EXIT_OK);
    assert_ne!(EXIT_MISMATCH, EXIT_USAGE);
    assert_eq!(call(&["--help"]).code, EXIT_OK);
}

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gderiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

#[test]
fn spaces_of_h() {
    let out = run(&["spaces", "--algebra", "H", "--kind", "gder"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "spaces");
    assert_eq!(r["inputs"]["degree"], "both");
    assert_eq!(r["results"]["dims"]["total"], 7);
    assert_eq!(r["results"]["dims"]["even"], 4);
    assert!(r["version"].is_string());
    let witnesses = r["results"]["parts"][0]["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 4);
    assert!(witnesses[0]["d_double_prime"].is_array());

    let out = run(&["spaces", "--algebra", "H", "--kind", "gder", "--compatible"]);
    assert_eq!(report(&out)["results"]["dims"]["total"], 5);
}

#[test]
fn scalars_are_exact_pairs() {
    let r = report(&run(&["spaces", "--algebra", "H", "--kind", "der", "--degree", "even"]));
    let entry = &r["results"]["parts"][0]["basis"][0][0][0];
    assert!(entry["re"].as_array().unwrap().len() == 2);
    assert!(entry["im"].as_array().unwrap().len() == 2);
    assert!(no_floats(&report(&run(&["extend", "--algebra", "H"]))));
}

fn no_floats(v: &Value) -> bool {
    match v {
        Value::Number(n) => !n.is_f64(),
        Value::Array(a) => a.iter().all(no_floats),
        Value::Object(o) => o.values().all(no_floats),
        _ => true,
    }
}

#[test]
fn validate_abelian() {
    let out = run(&["validate", "--algebra", "abelian3"]);
    assert_eq!(out.status.code(), Some(0));
    let axioms = &report(&out)["results"]["axioms"];
    for key in ["closure_ok", "skew_ok", "mixed_omega_ok", "jacobi_ok"] {
        assert_eq!(axioms[key], true, "{key}");
    }
}

#[test]
fn falsified_statement_exits_one() {
    let out = run(&[
        "theorems",
        "--algebra",
        "heisenberg-like-lie-super",
        "--statement",
        "centroid-tower",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["results"]["reports"][0]["conclusion"], "fails");
    assert!(r["results"]["reports"][0]["counterexample"].is_object());
}

#[test]
fn holding_statements_exit_zero() {
    let out = run(&["theorems", "--algebra", "H"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["reports"].as_array().unwrap().len(), 18);
    assert_eq!(run(&["extend", "--algebra", "H"]).status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    for args in [
        &["spaces", "--algebra", "no-such-algebra", "--kind", "der"][..],
        &["theorems", "--algebra", "H", "--statement", "no-such-statement"],
        &["spaces", "--algebra", "H", "--kind", "bogus"],
        &["jordan", "--algebra", "H"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let out = run(&["validate", "--algebra", "no-such-algebra"]);
    assert!(report(&out)["results"]["error"].is_string());
}

#[test]
fn malformed_document_exits_two() {
    let dir = std::env::temp_dir().join(format!("gderiv-cli-bad-{}", std::process::id()));
    std::fs::write(&dir, "{\"name\": 3}").unwrap();
    let out = run(&["validate", "--algebra", dir.to_str().unwrap()]);
    std::fs::remove_file(&dir).unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_round_trips_through_a_file() {
    let exported = report(&run(&["export", "--algebra", "H"]));
    let path = std::env::temp_dir().join(format!("gderiv-cli-h-{}.json", std::process::id()));
    std::fs::write(&path, exported["results"].to_string()).unwrap();
    let out = run(&[
        "spaces",
        "--algebra",
        path.to_str().unwrap(),
        "--kind",
        "qder",
        "--compatible",
    ]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["dims"]["total"], 5);
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["jordan", "--algebra", "H", "--samples", "20", "--seed", "5"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let r = report(&a);
    assert_eq!(r["inputs"]["seed"], 5);
    assert_eq!(r["results"]["classified"], 20);
    let c = run(&["jordan", "--algebra", "H", "--samples", "20", "--seed", "6"]);
    assert_ne!(a.stdout, c.stdout);
}

use std::path::PathBuf;
use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn laumon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laumon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn schema(name: &str) -> JSONSchema {
    let path: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "schema",
        &format!("{name}.schema.json"),
    ]
    .iter()
    .collect();
    let text = std::fs::read_to_string(path).expect("schema file exists");
    let value: Value = serde_json::from_str(&text).expect("schema is json");
    JSONSchema::compile(&value).expect("schema compiles")
}

fn assert_valid(name: &str, v: &Value) {
    let s = schema(name);
    let msgs: Vec<String> = match s.validate(v) {
        Ok(()) => Vec::new(),
        Err(errors) => errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect(),
    };
    assert!(msgs.is_empty(), "{name} output violates schema: {msgs:?}");
}

fn run_ok(args: &[&str]) -> Value {
    let out = laumon(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v = json_of(&out);
    assert_valid(args[0], &v);
    v
}

#[test]
fn kostant_listings() {
    assert_eq!(
        run_ok(&["kostant", "--n", "3", "--gamma", "1,1"])["rows"]
            .as_array()
            .unwrap()
            .len(),
        2
    );
    let empty = run_ok(&["kostant", "--n", "2", "--gamma", "0"]);
    assert_eq!(empty["count"], 1);
    assert_eq!(empty["rows"][0]["partition"], serde_json::json!([]));
    assert_eq!(
        run_ok(&["kostant", "--n", "3", "--gamma", "2,1"])["count"],
        2
    );
}

#[test]
fn poincare_polynomials() {
    assert_eq!(
        run_ok(&["poincare", "--n", "2", "--alpha", "1"])["text"],
        "1+t+t^2+t^3"
    );
    assert_eq!(
        run_ok(&["poincare", "--n", "2", "--alpha", "0"])["text"],
        "1+t"
    );
    let shifted = run_ok(&["poincare", "--n", "3", "--alpha", "1,0", "--shifted"]);
    assert_eq!(shifted["text"], "q^-5+2q^-3+3q^-1+3q+2q^3+q^5");
    assert_eq!(shifted["variable"], "q");
}

#[test]
fn genfunc_dump() {
    let v = run_ok(&["genfunc", "--n", "2", "--degree", "4"]);
    let weights: Vec<Value> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["weight"].clone())
        .collect();
    assert_eq!(
        weights,
        vec![
            serde_json::json!([1]),
            serde_json::json!([2]),
            serde_json::json!([3]),
            serde_json::json!([4])
        ]
    );

    let v = run_ok(&["genfunc", "--n", "3", "--degree", "4"]);
    let coeffs = v["coefficients"].as_array().unwrap();
    assert_eq!(coeffs.len(), 1);
    assert_eq!(coeffs[0]["weight"], serde_json::json!([2, 2]));

    let out = laumon(&["genfunc", "--n", "3", "--degree", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cell_tables() {
    assert_eq!(run_ok(&["cells", "--n", "2", "--alpha", "1"])["count"], 4);
    assert_eq!(run_ok(&["cells", "--n", "3", "--alpha", "0,0"])["count"], 6);
    let v = run_ok(&["cells", "--n", "3", "--alpha", "1,0", "--dims"]);
    assert_eq!(v["count"], 12);
    assert!(v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r.get("d_conjectured").is_some()));
    let plain = run_ok(&["cells", "--n", "2", "--alpha", "1"]);
    assert!(plain["rows"][0].get("d_conjectured").is_none());
}

#[test]
fn verify_examples() {
    let v = run_ok(&["verify", "--n", "2", "--degree", "9", "--suite", "all"]);
    assert_eq!(v["exit_code"], 0);
    let v = run_ok(&["verify", "--n", "3", "--degree", "8", "--suite", "serre"]);
    assert_eq!(v["reports"][0]["status"], "PASS");
    let v = run_ok(&["verify", "--n", "2", "--degree", "9", "--suite", "celldim"]);
    let report = &v["reports"][0];
    assert_eq!(report["category"], "CONJECTURE");
    assert!(report["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "PASS"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--n", "2", "--degree", "9", "--suite", "nope"][..],
        &["kostant", "--n", "3", "--gamma", "1"],
        &["kostant", "--n", "1", "--gamma", "1"],
        &["poincare", "--n", "2"],
        &["poincare", "--n", "2", "--alpha", "1", "--format", "xml"],
        &["kostant", "--n", "2", "--gamma", "13"],
        &["kostant", "--n", "2", "--gamma", "3", "--cap", "bogus=1"],
    ] {
        let out = laumon(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn caps_can_be_raised() {
    let v = run_ok(&[
        "kostant",
        "--n",
        "2",
        "--gamma",
        "13",
        "--cap",
        "kostant=13",
    ]);
    assert_eq!(v["count"], 1);
}

#[test]
fn text_formats() {
    let out = laumon(&["poincare", "--n", "2", "--alpha", "1", "--format", "csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "exponent,coefficient\nt^0,1\nt^1,1\nt^2,1\nt^3,1\n"
    );
    let out = laumon(&["kostant", "--n", "3", "--gamma", "1,1", "--format", "latex"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("\\begin{tabular}{lll}"));
    assert!(s.contains("\\{i1, i2\\} & 2 & 2 \\\\"));
    let out = laumon(&[
        "verify", "--n", "2", "--degree", "3", "--suite", "euler", "--format", "csv",
    ]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("suite,category,case,status\neuler,THEOREM,alpha=(0),PASS\n"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--n", "3", "--degree", "7", "--suite", "all"];
    assert_eq!(laumon(&args).stdout, laumon(&args).stdout);
}

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn galfix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galfix")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/schema/report.schema.json")
}

/// Validates with the Python `jsonschema` package; `None` when it is missing.
fn validate(report: &str) -> Option<Result<(), String>> {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    std::fs::write(&path, report).unwrap();
    let script = "import json,sys\n\
        try:\n    import jsonschema\nexcept ImportError:\n    sys.exit(3)\n\
        jsonschema.validate(json.load(open(sys.argv[2])), json.load(open(sys.argv[1])))";
    let out = Command::new("python3").arg("-c").arg(script).arg(schema_path()).arg(&path).output().ok()?;
    match out.status.code() {
        Some(0) => Some(Ok(())),
        Some(3) => None,
        _ => Some(Err(String::from_utf8_lossy(&out.stderr).into_owned())),
    }
}

#[test]
fn list_names_every_suite() {
    let o = galfix(&["list"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for s in galfix::suites::SUITES {
        assert!(text.contains(s), "{s} missing from {text}");
    }
}

#[test]
fn queries() {
    let cases: &[(&[&str], &str)] = &[
        (&["query", "2-core", "(3,1)"], "()"),
        (&["query", "d-core", "lambda=(4,3,1)", "d=4"], "()"),
        (&["query", "generic-degree", "(2,1)"], "q^2 + q"),
        (&["query", "conductor", "[(),(2),(),()]"], "4"),
        (&["query", "field", "eps=-1", "lambda=(2,1)", "ell=7", "q=3", "r=2"], "trivial over Q_7"),
        (&["query", "field", "eps=-1", "lambda=(2,1)", "ell=5", "q=2", "r=2"], "Q_5(√(-q))"),
    ];
    for (args, want) in cases {
        let o = galfix(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o).trim(), *want, "{args:?}");
    }
    let o = galfix(&["query", "weyl", "type=B", "rank=2", "d=4", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"]["order"], 4);
    assert_eq!(v["value"]["matches"], true);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["run", "--suite", "bogus"][..],
        &["run", "--suite", "cor74,table1", "--params", "n_max=3"],
        &["run", "--suite", "cor74", "--params", "nonsense=1"],
        &["query", "2-core", "(1,3)"],
        &["query", "nope", "x"],
    ] {
        let o = galfix(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn passing_run_report() {
    let o = galfix(&["run", "--suite", "table1", "--suite", "cor74,lemma72", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["pass"], true);
    let names: Vec<&str> = v["reports"].as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert_eq!(names, ["table1", "cor74", "lemma72"]);
    assert!(v["reports"][0].get("wall_time_ms").is_none());
    if let Some(r) = validate(&text) {
        r.unwrap();
    }
}

#[test]
fn reports_are_byte_identical() {
    let args = ["run", "--suite", "lemma22,prop75,cor55,weyl-match", "--json", "-"];
    let a = galfix(&args);
    let b = galfix(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn params_are_recorded() {
    let o = galfix(&["run", "--suite", "cor74", "--params", "n_max=6,d_max=4", "--json", "-"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["reports"][0]["params"]["n_max"], "6");
    assert_eq!(v["reports"][0]["params"]["d_max"], "4");
}

#[test]
fn broken_table_fails_with_one() {
    let embedded = include_str!("../../core/data/table1.json");
    let mut table: Value = serde_json::from_str(embedded).unwrap();
    table["rows"][0]["d"].as_array_mut().unwrap().push(Value::from(4));
    table["rows"][5]["d"].as_array_mut().unwrap().push(Value::from(4));
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("table.json");
    std::fs::write(&data, serde_json::to_string(&table).unwrap()).unwrap();
    let json = dir.path().join("out.json");
    let o = galfix(&["run", "--suite", "table1", "--data", data.to_str().unwrap(), "--json", json.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL table1"));
    let text = std::fs::read_to_string(&json).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["pass"], false);
    assert_eq!(v["reports"][0]["status"], "fail");
    assert_eq!(v["reports"][0]["counterexample_count"], 2);
    if let Some(r) = validate(&text) {
        r.unwrap();
    }
}

#[test]
fn timings_and_csv() {
    let o = galfix(&["run", "--suite", "table1,thm66a", "--timings", "--csv", "-"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("check,status,checked,counterexample_count,params,wall_time_ms"));
    assert!(lines.next().unwrap().starts_with("table1,pass,"));
    assert!(lines.next().unwrap().starts_with("thm66a,pass,"));

    let o = galfix(&["run", "--suite", "thm66a", "--timings", "--json", "-"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["reports"][0]["wall_time_ms"].is_u64());
    if let Some(r) = validate(&stdout(&o)) {
        r.unwrap();
    }
}

#[test]
fn jobs_flag() {
    let o = galfix(&["run", "--suite", "cor55", "--jobs", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS cor55 checked"));
    assert_eq!(galfix(&["run", "--suite", "cor55", "--jobs", "0"]).status.code(), Some(2));
}

use std::process::{Command, Output};

fn semicenter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semicenter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn catalog_lists_families() {
    let o = semicenter(&["catalog"]);
    assert!(o.status.success());
    let out = stdout(&o);
    for name in ["L:n", "panyushev", "example32", "heisenberg:P", "sl2", "abelian:n"] {
        assert!(out.contains(name), "missing {name} in\n{out}");
    }
}

#[test]
fn failing_criteria_still_exit_zero() {
    let o = semicenter(&["analyze", "--catalog", "L:5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("[Fails] kernel-freeness (certified)"), "{out}");
    assert!(
        out.contains("[Fails] index-center-bound (certified): 3*3 <= 5+2*1"),
        "{out}"
    );
}

#[test]
fn reduce_jordan_block_takes_k_branch() {
    let o = semicenter(&["reduce", "--catalog", "example32"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("chosen: k-branch"), "{out}");
    assert!(out.contains("result: [v1,v2] = v3"), "{out}");
    assert!(out.contains("(preserved)"), "{out}");
}

#[test]
fn reduce_with_explicit_semi_invariant() {
    let o = semicenter(&["reduce", "--catalog", "panyushev", "--weight-of", "v2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("chosen: h-branch"));
}

#[test]
fn reduce_rejects_non_semi_invariant() {
    let o = semicenter(&["reduce", "--catalog", "panyushev", "--weight-of", "v1"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("not a semi-invariant"), "{}", stderr(&o));
}

#[test]
fn reduce_nilpotent_has_nothing_to_do() {
    let o = semicenter(&["reduce", "--catalog", "L:4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("nothing to reduce"));
}

#[test]
fn json_report_is_deterministic() {
    let run = || {
        let o = semicenter(&["analyze", "--catalog", "L:4", "--json", "-"]);
        assert!(o.status.success());
        stdout(&o)
    };
    let a = run();
    assert_eq!(a, run());
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["index"], 2);
    assert_eq!(v["c_value"], 3);
    assert_eq!(v["semi_invariants"]["degrees"], serde_json::json!([1, 2]));
}

#[test]
fn json_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    let o = semicenter(&["kernel", "--catalog", "L:5", "--json", path.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["kernel"]["generators"].as_array().unwrap().len(), 4);
    assert_eq!(v["verdict"]["status"], "fails");
}

#[test]
fn algebra_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl2.json");
    std::fs::write(&path, semicenter::catalog::sl2().to_json_string()).unwrap();
    let o = semicenter(&["invariants", "--file", path.to_str().unwrap(), "--max-degree", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("h^2 + 4*e*f"), "{}", stdout(&o));
}

#[test]
fn malformed_file_is_rejected_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"name\": \"x\", \"basis\": [\"a\"").unwrap();
    let o = semicenter(&["analyze", "--file", path.to_str().unwrap()]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.contains("bad.json") && err.contains("line"), "{err}");
}

#[test]
fn bad_inputs_exit_nonzero() {
    for args in [
        vec!["analyze", "--catalog", "L:2"],
        vec!["analyze", "--catalog", "nosuch"],
        vec!["analyze"],
        vec!["analyze", "--catalog", "sl2", "--order", "bogus"],
        vec!["reduce", "--catalog", "panyushev", "--weight-of", "v1 +"],
    ] {
        let o = semicenter(&args);
        assert!(!o.status.success(), "{args:?} should fail");
    }
}

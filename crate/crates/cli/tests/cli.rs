use std::process::Command;

use serde_json::Value;

fn qkcheck(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qkcheck")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_writes_report_and_exit_code_tracks_failures() {
    let dir = std::env::temp_dir().join(format!("qkcheck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, _, _) =
        qkcheck(&["verify", "--n", "2", "--suite", "isotropy,weyl,bochner", "--seed", "7", "--out", path.to_str().unwrap()]);
    let text = std::fs::read_to_string(&path).unwrap();
    let report: Value = serde_json::from_str(&text).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    let fails = checks.iter().filter(|c| c["verdict"] == "FAIL").count();
    assert_eq!(code == 0, fails == 0);
    assert!(text.ends_with("}\n"));
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_is_deterministic_on_stdout() {
    let args = ["verify", "--n", "2", "--suite", "symbols", "--seed", "11"];
    let (_, a, _) = qkcheck(&args);
    let (_, b, _) = qkcheck(&args);
    assert_eq!(a, b);
    assert!(a.contains("\"seed\":11"));
}

#[test]
fn observe_mode_never_fails() {
    let (code, out, _) = qkcheck(&["verify", "--n", "2", "--suite", "isotropy", "--mode", "observe"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["verdict"] == "OBSERVED"));
}

#[test]
fn markdown_format_has_summary() {
    let (_, out, _) = qkcheck(&["verify", "--n", "1", "--suite", "weyl", "--format", "markdown"]);
    assert!(out.contains("Summary"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let (code, _, err) = qkcheck(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonsense"));
}

#[test]
fn weyl_reports_both_routes() {
    let (code, out, _) = qkcheck(&["weyl", "--n", "3", "--p", "3", "--q", "1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 64);
    assert_eq!(v["dim_classical"], 64);
    assert_eq!(v["weight"], "(2,1,0)");
    let (_, out, _) = qkcheck(&["weyl", "--n", "2", "--p", "4", "--q", "0"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 0);
}

#[test]
fn decompose_lambda3_at_n2() {
    let (code, out, _) = qkcheck(&["decompose", "--n", "2", "--k", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 56);
    let sum: u64 = v["blocks"].as_array().unwrap().iter().map(|b| b["dim"].as_u64().unwrap()).sum();
    assert_eq!(sum, 56);
}

#[test]
fn form_ops_on_emitted_phi() {
    let dir = std::env::temp_dir().join(format!("qkcheck-form-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("phi.json");
    let (_, phi, _) = qkcheck(&["phi", "--n", "2"]);
    std::fs::write(&path, &phi).unwrap();
    let file = path.to_str().unwrap();

    let (code, out, _) = qkcheck(&["form", "--file", file, "--op", "isotropy"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 13);
    assert_eq!(v["bracket_closed"], true);

    let (_, out, _) = qkcheck(&["form", "--file", file, "--op", "c2"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["holds"], true);

    let (_, star, _) = qkcheck(&["form", "--file", file, "--op", "hodge"]);
    std::fs::write(&path, &star).unwrap();
    let (_, back, _) = qkcheck(&["form", "--file", file, "--op", "hodge"]);
    // N = 8, degree 4: ** = +1
    assert_eq!(back, phi);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn malformed_form_is_rejected() {
    let path = std::env::temp_dir().join(format!("qkcheck-bad-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"N": 4, "degree": 2, "terms": [{"indices": [2, 1], "coeff": "1"}]}"#).unwrap();
    let (code, _, err) = qkcheck(&["form", "--file", path.to_str().unwrap(), "--op", "norm"]);
    assert_eq!(code, 2);
    assert!(err.contains("increasing"));
    std::fs::remove_file(&path).ok();
}

use qkcheck_web::{form_op_value, small_checks_report, weyl_table_value};

#[test]
fn weyl_table_rows_agree() {
    let v = weyl_table_value(3, 5).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["dim"] == r["dim_classical"]));
    let l31 = rows.iter().find(|r| r["p"] == 3 && r["q"] == 1).unwrap();
    assert_eq!(l31["dim"], 64);
}

#[test]
fn form_ops() {
    let a = r#"{"N": 4, "degree": 1, "terms": [{"indices": [1], "coeff": "1"}]}"#;
    let b = r#"{"N": 4, "degree": 1, "terms": [{"indices": [2], "coeff": "-1/2"}]}"#;
    let w = form_op_value(a, "wedge", b).unwrap();
    assert_eq!(w["terms"][0]["indices"], serde_json::json!([1, 2]));
    assert_eq!(w["terms"][0]["coeff"], "-1/2");
    let s = form_op_value(a, "hodge", "").unwrap();
    assert_eq!(s["terms"][0]["indices"], serde_json::json!([2, 3, 4]));
    assert_eq!(form_op_value(b, "norm", "").unwrap()["norm2"], "1/4");
    assert!(form_op_value(a, "bogus", "").is_err());
}

#[test]
fn small_checks_at_n2_have_no_failures() {
    let text = small_checks_report(2, "isotropy,weyl", 7).unwrap();
    assert!(!text.contains("\"FAIL\""));
    assert!(small_checks_report(3, "all", 7).is_err());
}

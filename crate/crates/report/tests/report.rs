use qiso_report::{Check, Status, SuiteReport};

fn sample() -> SuiteReport {
    let mut r = SuiteReport::new("demo");
    r.push(Check::new("one", "1 = 1", true));
    r.push(Check::control("ctrl", "x = y (expected false)", true));
    r.push(Check::new("two", "a = b", false).with_residual(2, Some("a - b".into())).with_note("note"));
    r
}

#[test]
fn overall_status_ignores_controls_that_fail() {
    let mut r = sample();
    assert!(!r.ok());
    r.checks.retain(|c| c.id != "two");
    assert!(r.ok());
    assert_eq!(r.count(Status::NegativeControl), 1);
}

#[test]
fn control_that_passes_is_a_failure() {
    let c = Check::control("ctrl", "x = y", false);
    assert_eq!(c.status, Status::Fail);
    assert!(!c.passed());
}

#[test]
fn json_schema_fields() {
    let v = sample().to_json();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        let mut keys: Vec<&str> = row.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort();
        assert_eq!(keys, ["id", "millis", "residual_terms", "source", "status"]);
    }
    assert_eq!(rows[1]["status"], "negative-control");
    assert_eq!(rows[2]["residual_terms"], 2);
}

#[test]
fn text_rendering_shows_failed_residuals() {
    let text = sample().render_text(false);
    assert!(text.contains("FAIL two"));
    assert!(text.contains("residual: a - b"));
    assert!(text.contains("CTRL ctrl"));
    assert!(text.trim_end().ends_with("demo: 1 pass, 1 fail, 1 negative-control"));
}

#[test]
fn only_keeps_named_lines_in_order() {
    let r = sample().only(&["two".into(), "one".into()]);
    let ids: Vec<&str> = r.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["one", "two"]);
    assert_eq!(sample().only(&[]).checks.len(), 3);
}

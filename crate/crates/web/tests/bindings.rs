use nelson_web::{catalog_list, countermodel, double_algebra, validate_algebra};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn lists_the_catalog() {
    let v = parse(catalog_list());
    assert_eq!(v.as_array().unwrap().len(), 6);
    assert_eq!(v[0]["key"], "A8");
}

#[test]
fn refutes_excluded_middle_in_a8() {
    let v = parse(countermodel("A8", "p | ~p"));
    assert_eq!(v["valid"], false);
    assert_eq!(v["valuation"]["p"], "c");
    assert_eq!(v["value"], "a");
    assert_eq!(parse(countermodel("B2", "p | ~p"))["valid"], true);
    assert!(parse(countermodel("A8", "p |"))["error"].is_string());
}

#[test]
fn validates_pasted_text() {
    let text = nelson_core::catalog::source_text("A4").unwrap();
    let v = parse(validate_algebra(text, "n3"));
    let failed: Vec<&Value> = v["verdicts"].as_array().unwrap().iter().filter(|x| x["holds"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["axiom"], "x->x = y->y");
    assert!(parse(validate_algebra("A4", "bogus"))["error"].is_string());
}

#[test]
fn doubles_l3() {
    let v = parse(double_algebra("L3"));
    assert_eq!(v["size"], 6);
    assert_eq!(v["s_algebra"], true);
    assert!(v["text"].as_str().unwrap().starts_with("algebra"));
    assert!(parse(double_algebra("A4"))["error"].is_string());
}

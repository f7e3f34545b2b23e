//! Browser bindings. Every entry point takes plain strings and returns a JSON
//! string with either the result or an `error` field, so the page needs no
//! glue beyond `JSON.parse`.
//!
//! An algebra argument is a catalog key (`A8`, `L3`, ...) or the text of an
//! algebra file.

use nelson_core::algebra::{parse_algebra, validate, write_algebra, CheckKind, FiniteAlgebra};
use nelson_core::catalog;
use nelson_core::formula::parse;
use nelson_core::semantics::find_countermodel;
use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

fn load(source: &str) -> Result<FiniteAlgebra, String> {
    let key = source.trim();
    if catalog::KEYS.contains(&key) {
        return catalog::get(key).map_err(|e| e.to_string());
    }
    parse_algebra(source).map_err(|e| e.to_string())
}

fn respond(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// Catalog keys with a one-line description each.
#[wasm_bindgen]
pub fn catalog_list() -> String {
    let entries: Vec<Value> = catalog::entries()
        .iter()
        .map(|e| json!({ "key": e.key, "size": e.algebra.size(), "description": e.description }))
        .collect();
    Value::from(entries).to_string()
}

/// The first valuation (variables in alphabetical order) under which
/// `formula` is not 1, or `"valid": true`.
#[wasm_bindgen]
pub fn countermodel(algebra: &str, formula: &str) -> String {
    respond((|| {
        let a = load(algebra)?;
        let f = parse(formula).map_err(|e| e.to_string())?;
        let cm = find_countermodel(&a, &f).map_err(|e| e.to_string())?;
        Ok(match cm {
            None => json!({ "formula": f.to_string(), "valid": true }),
            Some(c) => {
                let valuation: serde_json::Map<String, Value> =
                    c.valuation.named(&a).into_iter().map(|(k, v)| (k, Value::from(v))).collect();
                json!({
                    "formula": f.to_string(),
                    "valid": false,
                    "valuation": valuation,
                    "value": a.element_name(c.value),
                })
            }
        })
    })())
}

/// The full validation report for one class (`s-algebra`, `n4`, ...).
#[wasm_bindgen]
pub fn validate_algebra(algebra: &str, class: &str) -> String {
    respond((|| {
        let a = load(algebra)?;
        let kind: CheckKind = class.parse()?;
        serde_json::to_value(validate(&a, kind)).map_err(|e| e.to_string())
    })())
}

/// Doubles a CIRL and returns the result in the algebra file format.
#[wasm_bindgen]
pub fn double_algebra(algebra: &str) -> String {
    respond((|| {
        let a = load(algebra)?;
        let d = nelson_core::bridge::double(&a).map_err(|e| e.to_string())?;
        let s = validate(&d, CheckKind::SAlgebra).passed();
        Ok(json!({ "size": d.size(), "s_algebra": s, "text": write_algebra(&d) }))
    })())
}

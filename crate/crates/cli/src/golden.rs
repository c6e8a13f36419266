//! Golden-value comparison of a report against a shipped fixture.

use serde_json::Value;

/// Reference values for the triangle with sides 6, 5, 4.
pub const FIXTURE_654: &str = include_str!("../fixtures/sides_6_5_4.json");

pub fn fixture_654() -> Value {
    serde_json::from_str(FIXTURE_654).expect("fixture is valid JSON")
}

/// Every leaf of `expected` must be present in `actual`; floats agree to `tol`
/// relative, everything else exactly. Returns the mismatching paths.
pub fn compare(expected: &Value, actual: &Value, tol: f64) -> Vec<String> {
    let mut errs = Vec::new();
    walk(expected, actual, tol, String::new(), &mut errs);
    errs
}

fn walk(expected: &Value, actual: &Value, tol: f64, path: String, errs: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, ev) in e {
                let p = format!("{path}.{k}");
                match a.get(k) {
                    Some(av) => walk(ev, av, tol, p, errs),
                    None => errs.push(format!("{p}: missing")),
                }
            }
        }
        (Value::Array(e), Value::Array(a)) if e.len() == a.len() => {
            for (i, (ev, av)) in e.iter().zip(a).enumerate() {
                walk(ev, av, tol, format!("{path}[{i}]"), errs);
            }
        }
        (Value::Number(e), Value::Number(a)) if !(e.is_i64() && a.is_i64()) => {
            let (e, a) = (e.as_f64().unwrap_or(f64::NAN), a.as_f64().unwrap_or(f64::NAN));
            if a.is_nan() || (a - e).abs() > tol * e.abs().max(1e-300) {
                errs.push(format!("{path}: expected {e}, got {a}"));
            }
        }
        (e, a) if e == a => {}
        (e, a) => errs.push(format!("{path}: expected {e}, got {a}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn subset_semantics() {
        let e = json!({"a": [1, 2], "f": 1.0});
        let a = json!({"a": [1, 2], "f": 1.0 + 1e-12, "extra": true});
        assert!(compare(&e, &a, 1e-9).is_empty());
        let a = json!({"a": [1, 3], "f": 1.1});
        assert_eq!(compare(&e, &a, 1e-9).len(), 2);
        assert_eq!(compare(&json!({"x": 1}), &json!({}), 1e-9), vec![".x: missing".to_string()]);
    }
}

//! Browser bindings. Every export takes plain numbers or strings and returns
//! a JSON string: `{"ok": true, ...}` on success, `{"ok": false, "error": ...}`
//! otherwise, so the page never has to catch exceptions.

use artin_core::artin::residual_reports;
use artin_core::series::{divergence_certificate, residual, rows, solve_flat_counterexample};
use artin_core::{parse_polynomial, RElement, Rational};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Upper limits that keep a click responsive.
pub const MAX_ORDER: usize = 60;
pub const MAX_C: u32 = 24;

fn respond(result: Result<Value, String>) -> String {
    let v = match result {
        Ok(Value::Object(mut map)) => {
            map.insert("ok".into(), Value::Bool(true));
            Value::Object(map)
        }
        Ok(other) => json!({ "ok": true, "value": other }),
        Err(error) => json!({ "ok": false, "error": error }),
    };
    v.to_string()
}

/// Normal form and norm data of a polynomial's class.
#[wasm_bindgen]
pub fn normal_form(expr: &str) -> String {
    respond((|| {
        let p = parse_polynomial(expr).map_err(|e| e.to_string())?;
        let r = RElement::project(&p).map_err(|e| e.to_string())?;
        let quotient = r.divide_by_x().map_err(|e| e.to_string())?;
        Ok(json!({
            "input": p.to_string(),
            "normal_form": r.to_string(),
            "norm_bound": r.norm_upper_bound().to_string(),
            "exact_norm": r.exact_norm().map(|n| n.to_string()),
            "divided_by_x": quotient.map(|h| h.to_string()),
        }))
    })())
}

/// Coefficients of the solution of `(x − y·t)·f = z²` and the least `k` with
/// `‖f_k‖ ≥ bound^k`.
#[wasm_bindgen]
pub fn solve_series(order: usize, bound: &str) -> String {
    respond((|| {
        if order > MAX_ORDER {
            return Err(format!("order is limited to {MAX_ORDER} here"));
        }
        let bound: Rational = bound.trim().parse().map_err(|_| format!("not a rational number: {bound:?}"))?;
        let f = solve_flat_counterexample(order).map_err(|e| e.to_string())?;
        let res = residual(&f).map_err(|e| e.to_string())?;
        let cert = divergence_certificate(&f, &bound).map_err(|e| e.to_string())?;
        Ok(json!({
            "coefficients": rows(&f),
            "residual_zero": res.is_zero(),
            "divergence": cert,
        }))
    })())
}

/// Residual `t`-orders of the approximate solutions for `c = 0..=c_max`.
#[wasm_bindgen]
pub fn strong_artin(example: u8, c_max: u32) -> String {
    respond((|| {
        if c_max > MAX_C {
            return Err(format!("c is limited to {MAX_C} here"));
        }
        let reports = residual_reports(example, c_max).map_err(|e| e.to_string())?;
        Ok(json!({ "example": example, "rows": reports }))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn normal_form_ok_and_error() {
        let v = parse(normal_form("z^2*w1"));
        assert_eq!(v["ok"], true);
        assert_eq!(v["normal_form"], "y*w0^2");
        assert_eq!(v["divided_by_x"], "w0*w1");
        let v = parse(normal_form("x +"));
        assert_eq!(v["ok"], false);
        assert!(v["error"].as_str().unwrap().contains("parse error"));
    }

    #[test]
    fn series_export() {
        let v = parse(solve_series(26, "10"));
        assert_eq!(v["ok"], true);
        assert_eq!(v["divergence"]["least_k"], 25);
        assert_eq!(v["coefficients"][3]["coeff"], "6*w3");
        assert_eq!(parse(solve_series(61, "10"))["ok"], false);
        assert_eq!(parse(solve_series(5, "-1"))["ok"], false);
    }

    #[test]
    fn strong_artin_export() {
        let v = parse(strong_artin(1, 3));
        assert_eq!(v["rows"][1]["leading"], "(1/4)*x");
        assert_eq!(parse(strong_artin(5, 3))["ok"], false);
    }
}

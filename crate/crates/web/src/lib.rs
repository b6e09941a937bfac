//! Browser bindings. Each export takes plain strings and numbers and returns
//! a JSON string, so the page needs no generated TypeScript glue beyond the
//! wasm-bindgen loader.

use darcais_core::arith::ArithFnSpec;
use darcais_core::darcais::generate;
use darcais_core::delta::{build_delta, largest_zero_of};
use darcais_core::rational::{parse_rational, to_f64};
use darcais_core::sequences::{by_name, display_root};
use darcais_core::Rational;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Browser-side cap on `n`; expansion of `Delta_n` grows quickly.
pub const MAX_ZERO_N: usize = 30;
pub const MAX_SEQ_N: usize = 2000;

fn rat(r: &Rational) -> Value {
    json!({ "num": r.numer().to_string(), "den": r.denom().to_string(), "approx": to_f64(r) })
}

fn parse_g(g: &str) -> Result<ArithFnSpec, String> {
    g.parse().map_err(|e: darcais_core::Error| e.to_string())
}

/// `P_0(x)..P_N(x)`.
pub fn poly_values_json(g: &str, n: usize, x: &str) -> Result<String, String> {
    let spec = parse_g(g)?;
    let x = parse_rational(x).map_err(|e| e.to_string())?;
    let seq = generate(&spec, n.min(MAX_SEQ_N));
    let rows: Vec<Value> = seq
        .value_table(&x)
        .iter()
        .enumerate()
        .map(|(i, v)| json!({ "n": i, "value": rat(v) }))
        .collect();
    Ok(json!({ "g": spec.to_string(), "x": rat(&x), "rows": rows }).to_string())
}

/// Largest real zero of `Delta_n` for `from <= n <= to`.
pub fn largest_zeros_json(g: &str, from: usize, to: usize, width: &str) -> Result<String, String> {
    if from == 0 || from > to {
        return Err("need 1 <= from <= to".into());
    }
    if to > MAX_ZERO_N {
        return Err(format!("n is capped at {MAX_ZERO_N} in the browser"));
    }
    let spec = parse_g(g)?;
    let width = parse_rational(width).map_err(|e| e.to_string())?;
    let seq = generate(&spec, to + 1);
    let mut rows = Vec::new();
    for n in from..=to {
        let iv = build_delta(&seq, n)
            .and_then(|d| largest_zero_of(&d, &width))
            .map_err(|e| e.to_string())?;
        rows.push(json!({
            "n": n,
            "lo": rat(&iv.lo),
            "hi": rat(&iv.hi),
            "exact": iv.exact.is_some(),
        }));
    }
    Ok(json!({ "g": spec.to_string(), "rows": rows }).to_string())
}

/// Values and n-th roots of a named counting sequence.
pub fn sequence_roots_json(name: &str, n: usize, decimals: usize) -> Result<String, String> {
    if n > MAX_SEQ_N {
        return Err(format!("N is capped at {MAX_SEQ_N} in the browser"));
    }
    let seq = by_name(name, n).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = seq
        .values
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, v)| {
            let root = display_root(v, i, decimals);
            json!({ "n": i, "value": v.to_string(), "root": root })
        })
        .collect();
    Ok(json!({ "name": seq.name, "rows": rows }).to_string())
}

#[wasm_bindgen]
pub fn poly_values(g: &str, n: usize, x: &str) -> Result<String, JsValue> {
    poly_values_json(g, n, x).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn largest_zeros(g: &str, from: usize, to: usize, width: &str) -> Result<String, JsValue> {
    largest_zeros_json(g, from, to, width).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sequence_roots(name: &str, n: usize, decimals: usize) -> Result<String, JsValue> {
    sequence_roots_json(name, n, decimals).map_err(|e| JsValue::from_str(&e))
}

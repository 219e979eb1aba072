//! Browser bindings: a coproduct calculator, a tableau order check and
//! modified-equation coefficients. The plain functions return text and are
//! tested natively; the exported wrappers turn errors into JS strings.

use std::fmt::Write as _;

use bseries::bseries::{
    delta_bck, delta_cefm, elementary_weights, order_of, solve_modified, tree_table, ModifiedMode, RKTableau,
};
use bseries::forest::Forest;
use bseries::lbseries::{delta_mkw, fdb_coproduct, BellWord};
use bseries::TensorDisplay;
use wasm_bindgen::prelude::*;

/// Largest truncation order the page accepts; keeps exact arithmetic interactive.
pub const MAX_ORDER: usize = 6;

fn check_order(n: usize) -> Result<(), bseries::Error> {
    if n > MAX_ORDER {
        return Err(bseries::Error::Capacity { requested: n, max: MAX_ORDER });
    }
    Ok(())
}

/// A builtin name or tableau text.
fn tableau(src: &str) -> Result<RKTableau, bseries::Error> {
    let src = src.trim();
    if src.contains('\n') || src.starts_with(|c: char| c.is_ascii_digit()) {
        RKTableau::parse(src)
    } else {
        RKTableau::builtin(src)
    }
}

pub fn coproduct_text(algebra: &str, element: &str) -> Result<String, bseries::Error> {
    Ok(match algebra {
        "bck" => TensorDisplay(&delta_bck(&element.parse::<Forest>()?)).to_string(),
        "cefm" => TensorDisplay(&delta_cefm(&element.parse::<Forest>()?)).to_string(),
        "mkw" => TensorDisplay(&delta_mkw(&element.parse()?)).to_string(),
        "fdb" => TensorDisplay(&fdb_coproduct(&element.parse::<BellWord>()?)).to_string(),
        other => return Err(bseries::Error::Unsupported(format!("unknown algebra `{other}`"))),
    })
}

pub fn order_text(src: &str, n: usize) -> Result<String, bseries::Error> {
    check_order(n)?;
    let r = order_of(&elementary_weights(&tableau(src)?, n), n);
    let mut out = format!("order: {}\n", r.order);
    if let Some(v) = r.violation {
        let _ = writeln!(out, "first violation: {}  got {}  expected {}", v.tree, v.got, v.expected);
    }
    Ok(out)
}

pub fn modified_text(src: &str, mode: &str, n: usize) -> Result<String, bseries::Error> {
    check_order(n)?;
    let mode: ModifiedMode = mode.parse()?;
    let beta = solve_modified(&elementary_weights(&tableau(src)?, n), mode, n)?;
    Ok(tree_table(&beta, n).into_iter().map(|(t, v)| format!("{t}\t{v}\n")).collect())
}

fn js<T>(r: Result<T, bseries::Error>) -> Result<T, JsValue> {
    r.map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen]
pub fn coproduct(algebra: &str, element: &str) -> Result<String, JsValue> {
    js(coproduct_text(algebra, element))
}

#[wasm_bindgen]
pub fn order(src: &str, n: usize) -> Result<String, JsValue> {
    js(order_text(src, n))
}

#[wasm_bindgen]
pub fn modified(src: &str, mode: &str, n: usize) -> Result<String, JsValue> {
    js(modified_text(src, mode, n))
}

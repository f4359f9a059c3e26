//! Browser bindings for `mcgdim`. Each operation returns a JSON string; the
//! plain functions are usable (and tested) natively.

use mcgdim::sigio::render_signature;
use mcgdim::{check_criterion, conclude, enumerate_signatures, parse_signature, GroupSpec, Mode};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest group the demo will build for a `λ` query.
pub const LAMBDA_CAP: usize = 200;

fn to_string(v: Value) -> String {
    serde_json::to_string(&v).expect("values serialize")
}

/// Invariants, Weyl surface and (given `genus`) the Riemann–Hurwitz order
/// of a signature.
pub fn analyze_signature(text: &str, genus: Option<u32>) -> Result<String, String> {
    let sig = parse_signature(text).map_err(|e| e.to_string())?;
    let (e, c) = sig.ef_cf();
    let mut v = json!({
        "canonical": render_signature(&sig),
        "orientable": sig.is_orientable(),
        "e_F": sig.elliptic_count(),
        "c_F": sig.corner_count(),
        "b_m": sig.mirror_boundaries(),
        "b_c": sig.cornered_boundaries(),
        "E_F": e,
        "C_F": c,
        "chi_orb": sig.orbifold_euler(),
        "weyl_surface": sig.underlying_surface().to_string(),
        "vcd_weyl": sig.vcd_weyl(),
    });
    if let Some(g) = genus {
        v["rh_order"] = json!(sig.rh_order(g));
    }
    Ok(to_string(v))
}

/// Pure Riemann–Hurwitz criterion report for `N_genus` with its conclusion.
pub fn criterion_report(genus: u32, max_order: Option<u64>) -> Result<String, String> {
    let report =
        check_criterion(genus, Mode::PureRh, None, max_order).map_err(|e| e.to_string())?;
    let conclusion = conclude(genus, Some(&report)).map_err(|e| e.to_string())?;
    let mut v = serde_json::to_value(&report).expect("report serializes");
    v["conclusion"] = serde_json::to_value(conclusion).expect("conclusion serializes");
    Ok(to_string(v))
}

/// Quotient signatures of `N_genus` by groups of the given order.
pub fn enumerate(genus: u32, order: u64) -> Result<String, String> {
    if genus < 3 {
        return Err(format!("genus {genus} is below 3"));
    }
    let rows: Vec<Value> = enumerate_signatures(genus, order)
        .iter()
        .map(|s| json!({ "signature": render_signature(s), "vcd_weyl": s.vcd_weyl() }))
        .collect();
    Ok(to_string(
        json!({ "genus": genus, "order": order, "signatures": rows }),
    ))
}

/// Exact `λ` for a group such as `C12`, `D5`, `S4` or `C2xD4`.
pub fn lambda(spec: &str) -> Result<String, String> {
    let spec: GroupSpec = spec
        .trim()
        .parse()
        .map_err(|e: mcgdim::GroupError| e.to_string())?;
    let group = spec.build(LAMBDA_CAP).map_err(|e| e.to_string())?;
    Ok(to_string(json!({
        "group": spec.to_string(),
        "order": group.order(),
        "lambda": group.lambda_exact(),
    })))
}

#[wasm_bindgen(js_name = analyzeSignature)]
pub fn analyze_signature_js(text: &str, genus: Option<u32>) -> Result<String, JsError> {
    analyze_signature(text, genus).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = criterionReport)]
pub fn criterion_report_js(genus: u32, max_order: Option<u32>) -> Result<String, JsError> {
    criterion_report(genus, max_order.map(u64::from)).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = enumerate)]
pub fn enumerate_js(genus: u32, order: u32) -> Result<String, JsError> {
    enumerate(genus, order as u64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = lambda)]
pub fn lambda_js(spec: &str) -> Result<String, JsError> {
    lambda(spec).map_err(|e| JsError::new(&e))
}

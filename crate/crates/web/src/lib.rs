//! Browser bindings. Each exported function returns a JSON string for the
//! page in `www/` to render; the `*_json` functions are the same operations
//! without the JS error type so they can be tested natively.

use serde_json::{json, Value};
use splitq::chords::{diagrams, touchard_refine};
use splitq::invariants::x_polys;
use splitq::json::value as big;
use splitq::splitting::{sigma_main, sigma_via_recurrence};
use splitq::{ChordDiagram, SimilarityClassType, UniPoly};
use wasm_bindgen::prelude::*;

const MAX_DIAGRAM_M: usize = 6;
const MAX_TOUCHARD_M: usize = 10;
const MAX_TYPE_SIZE: u32 = 12;

fn poly(p: &UniPoly) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(big).collect::<Vec<_>>(), "display": p.to_string() })
}

/// Splitting count and invariant-subspace counts for a type string.
pub fn sigma_json(ty: &str, q: i64) -> Result<String, String> {
    let tau: SimilarityClassType = ty.parse().map_err(|e: splitq::TypeError| e.to_string())?;
    if tau.size() > MAX_TYPE_SIZE {
        return Err(format!("size {} is above the demo limit of {MAX_TYPE_SIZE}", tau.size()));
    }
    let sigma = sigma_main(&tau).map_err(|e| e.to_string())?;
    let check = sigma_via_recurrence(&tau).map_err(|e| e.to_string())?;
    let x = x_polys(&tau).map_err(|e| e.to_string())?.x;
    let out = json!({
        "type": tau.to_string(),
        "q": q,
        "sigma": poly(&sigma),
        "value": big(&sigma.eval_i64(q)),
        "recurrence_agrees": sigma == check,
        "x": x.iter().map(|p| json!({ "poly": poly(p), "value": big(&p.eval_i64(q)) })).collect::<Vec<_>>(),
    });
    Ok(out.to_string())
}

/// Crossing distribution of chord diagrams on `2m` nodes.
pub fn touchard_json(m: usize) -> Result<String, String> {
    if m > MAX_TOUCHARD_M {
        return Err(format!("m = {m} is above the demo limit of {MAX_TOUCHARD_M}"));
    }
    let t = touchard_refine(m);
    let total: num_bigint::BigInt = t.coeffs().iter().sum();
    Ok(json!({ "m": m, "touchard": poly(&t), "diagrams": big(&total) }).to_string())
}

fn diagram_value(d: &ChordDiagram, index: usize, count: usize) -> Value {
    json!({
        "m": d.m(),
        "index": index,
        "count": count,
        "arcs": d.arcs(),
        "crossing_pairs": d.crossing_pairs(),
        "crossings": d.crossings(),
        "openings": d.openings(),
    })
}

/// The `index`-th chord diagram on `2m` nodes (wrapping around).
pub fn diagram_json(m: usize, index: usize) -> Result<String, String> {
    if m == 0 || m > MAX_DIAGRAM_M {
        return Err(format!("m must be between 1 and {MAX_DIAGRAM_M}"));
    }
    let all = diagrams(m);
    let i = index % all.len();
    Ok(diagram_value(&all[i], i, all.len()).to_string())
}

/// Crossings of a diagram given as a 1-based pairing, e.g. `"3,4,1,2"`.
pub fn pairing_json(pairing: &str) -> Result<String, String> {
    let p = pairing
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| format!("{s:?} is not a node number")))
        .collect::<Result<Vec<_>, _>>()?;
    let d = ChordDiagram::from_pairing(&p).map_err(|e| e.to_string())?;
    Ok(diagram_value(&d, 0, 1).to_string())
}

#[wasm_bindgen]
pub fn sigma_report(ty: &str, q: i32) -> Result<String, JsError> {
    sigma_json(ty, q as i64).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn touchard_report(m: u32) -> Result<String, JsError> {
    touchard_json(m as usize).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn chord_diagram(m: u32, index: u32) -> Result<String, JsError> {
    diagram_json(m as usize, index as usize).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn chord_crossings(pairing: &str) -> Result<String, JsError> {
    pairing_json(pairing).map_err(|e| JsError::new(&e))
}

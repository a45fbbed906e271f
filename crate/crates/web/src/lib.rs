//! Browser bindings. Every export takes and returns JSON strings so the page
//! needs no glue beyond `JSON.parse`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use qkcheck::exterior::json::{form_to_json, pieces_from_json};
use qkcheck::exterior::KForm;
use qkcheck::gstructure::engine::is_bracket_closed;
use qkcheck::gstructure::StructureForm;
use qkcheck::linalg::scalar::render;
use qkcheck::quaternionic::build_phi;
use qkcheck::rep::weyl::{weight_of, weyl_dim, weyl_dim_classical};
use qkcheck::suite::{run_suite, Suite, SuiteConfig};

/// Largest `n` the page will run checks for; n = 3 takes seconds natively and
/// much longer in wasm.
pub const MAX_BROWSER_N: usize = 2;
/// Forms up to this dimension are accepted by the form tools.
pub const MAX_FORM_DIM: usize = 12;

fn err(e: impl std::fmt::Display) -> JsValue {
    JsValue::from_str(&e.to_string())
}

/// Dimensions of every λ^p_q with `p ≤ p_max`, by both Weyl routes.
pub fn weyl_table_value(n: usize, p_max: u32) -> qkcheck::Result<Value> {
    let mut rows = Vec::new();
    for p in 0..=p_max {
        for q in 0..=p / 2 {
            let row = match weight_of(p, q, n)? {
                Some(w) => json!({"p": p, "q": q, "weight": w.to_string(), "dim": weyl_dim(&w), "dim_classical": weyl_dim_classical(&w)}),
                None => json!({"p": p, "q": q, "weight": null, "dim": 0, "dim_classical": 0}),
            };
            rows.push(row);
        }
    }
    Ok(json!({"n": n, "rows": rows}))
}

#[wasm_bindgen]
pub fn weyl_table(n: usize, p_max: u32) -> Result<String, JsValue> {
    if n == 0 || n > 12 || p_max > 24 {
        return Err(err("need 1 ≤ n ≤ 12 and p ≤ 24"));
    }
    weyl_table_value(n, p_max).map(|v| v.to_string()).map_err(err)
}

#[wasm_bindgen]
pub fn phi_json(n: usize) -> Result<String, JsValue> {
    if n == 0 || 4 * n > MAX_FORM_DIM {
        return Err(err(format!("need 1 ≤ n ≤ {}", MAX_FORM_DIM / 4)));
    }
    build_phi(n).map(|p| form_to_json(&p)).map_err(err)
}

fn single(text: &str) -> qkcheck::Result<KForm> {
    let mut pieces = pieces_from_json(text)?;
    if pieces.len() != 1 {
        return Err(qkcheck::Error::InvalidArgument("expected a single form".into()));
    }
    let f = pieces.remove(0);
    if f.dim() > MAX_FORM_DIM {
        return Err(qkcheck::Error::InvalidArgument(format!("N ≤ {MAX_FORM_DIM} in the browser")));
    }
    Ok(f)
}

/// `op` is one of `norm`, `hodge`, `wedge` (with `other`), `isotropy`.
pub fn form_op_value(text: &str, op: &str, other: &str) -> qkcheck::Result<Value> {
    let a = single(text)?;
    Ok(match op {
        "norm" => json!({"degree": a.degree(), "terms": a.nnz(), "norm2": render(&a.norm2())}),
        "hodge" => serde_json::from_str(&form_to_json(&a.hodge()))?,
        "wedge" => {
            let b = single(other)?;
            serde_json::from_str(&form_to_json(&a.wedge(&b)?))?
        }
        "isotropy" => {
            let g = StructureForm::single(a)?.isotropy_algebra();
            json!({"dim": g.dim(), "bracket_closed": is_bracket_closed(&g)?})
        }
        _ => return Err(qkcheck::Error::InvalidArgument(format!("unknown op {op}"))),
    })
}

#[wasm_bindgen]
pub fn form_op(text: &str, op: &str, other: &str) -> Result<String, JsValue> {
    form_op_value(text, op, other).map(|v| v.to_string()).map_err(err)
}

/// Runs the named suites (comma separated, or `all`) at small `n`.
pub fn small_checks_report(n: usize, suites: &str, seed: u64) -> qkcheck::Result<String> {
    if n > MAX_BROWSER_N {
        return Err(qkcheck::Error::InvalidArgument(format!("n ≤ {MAX_BROWSER_N} in the browser")));
    }
    let config = SuiteConfig::new(n, Suite::parse_list(suites)?, seed);
    Ok(run_suite(&config)?.to_json())
}

#[wasm_bindgen]
pub fn small_checks(n: usize, suites: &str, seed: u64) -> Result<String, JsValue> {
    small_checks_report(n, suites, seed).map_err(err)
}

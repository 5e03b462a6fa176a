//! Browser bindings. Each export takes plain strings and numbers and returns
//! a JSON document for the page to render.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use hypertree_spectra::spectra::loose_path_crosscheck;
use hypertree_spectra::toppling::{topple_report, CensusLimits, OrderingSpec};
use hypertree_spectra::{charpoly_hypertree, good_ordering, io, validate, Hypergraph};

// Browsers are single threaded here, so keep every enumeration small.
const SUBGRAPH_CAP: usize = 20_000;
const DIGRAPH_CAP: usize = 50_000;

fn load(src: &str) -> Result<Hypergraph, String> {
    let raw = io::parse(src)
        .map_err(|e| format!("line {}, column {}: {}", e.line, e.column, e.message))?;
    let v = validate(&raw);
    if !v.hypertree {
        return Err(format!("not a hypertree: {}", v.findings.join("; ")));
    }
    raw.into_hypergraph().map_err(|e| e.to_string())
}

pub fn charpoly_json(src: &str) -> Result<Value, String> {
    let h = load(src)?;
    let t = good_ordering(&h, 0).map_err(|e| e.to_string())?;
    let report = charpoly_hypertree(&t, SUBGRAPH_CAP).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = report
        .per_subgraph
        .iter()
        .map(|term| {
            json!({
                "subgraph": term.handle.label(&h),
                "a_H": term.exponent.to_string(),
                "phi_H": term.base.to_string(),
            })
        })
        .collect();
    Ok(json!({
        "factored": report.factored.to_string(),
        "degree": report.total_degree.to_string(),
        "nullity": report.nullity.to_string(),
        "rows": rows,
    }))
}

pub fn loose_path_json(m: usize, r: usize) -> Result<Value, String> {
    if m > 12 || r > 8 {
        return Err("keep m <= 12 and r <= 8 in the browser".into());
    }
    let cmp = loose_path_crosscheck(m, r, SUBGRAPH_CAP).map_err(|e| e.to_string())?;
    serde_json::to_value(cmp).map_err(|e| e.to_string())
}

/// `ordering` is `good` or comma-separated labels, highest priority first.
pub fn topple_json(src: &str, root: &str, ordering: &str) -> Result<Value, String> {
    let h = load(src)?;
    let id = |l: &str| {
        h.vertex_by_label(l.trim())
            .ok_or(format!("no vertex labelled `{}`", l.trim()))
    };
    let spec = if ordering.trim() == "good" {
        let root = if root.trim().is_empty() { 0 } else { id(root)? };
        OrderingSpec::Good { root }
    } else {
        OrderingSpec::Explicit(ordering.split(',').map(id).collect::<Result<_, _>>()?)
    };
    let limits = CensusLimits {
        max_len: 30,
        max_cycles: 200_000,
    };
    let report = topple_report(&h, &spec, DIGRAPH_CAP, limits).map_err(|e| e.to_string())?;
    serde_json::to_value(report).map_err(|e| e.to_string())
}

fn finish(v: Result<Value, String>) -> Result<String, JsValue> {
    v.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn charpoly(src: &str) -> Result<String, JsValue> {
    finish(charpoly_json(src))
}

#[wasm_bindgen]
pub fn loose_path(m: usize, r: usize) -> Result<String, JsValue> {
    finish(loose_path_json(m, r))
}

#[wasm_bindgen]
pub fn topple(src: &str, root: &str, ordering: &str) -> Result<String, JsValue> {
    finish(topple_json(src, root, ordering))
}

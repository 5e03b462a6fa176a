//! Reading and writing hypergraph files.
//!
//! The text format is a header line `r n m` followed by `m` lines of vertex
//! labels; lines starting with `#` are comments. The JSON form is
//! `{"r":3,"vertices":[...],"edges":[[...],...]}`. Labels are arbitrary
//! tokens. On load they are sorted (numerically when every label is an
//! integer) and the position in that order becomes the vertex id.

use std::collections::BTreeSet;
use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;

use crate::hypergraph::{Hypergraph, RawHypergraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

// Whitespace-separated tokens of a line with 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, tok)| (line[..s].chars().count() + 1, tok))
        .collect()
}

fn sort_labels(labels: &mut [String]) {
    if labels.iter().all(|l| l.parse::<i128>().is_ok()) {
        labels.sort_by_key(|l| l.parse::<i128>().expect("checked above"));
    } else {
        labels.sort();
    }
}

// Sorted label list, padded with fresh labels up to `n`.
fn label_table(used: BTreeSet<String>, n: usize) -> Vec<String> {
    let mut labels: Vec<String> = used.into_iter().collect();
    let numeric = labels.iter().all(|l| l.parse::<i128>().is_ok());
    let mut next = 0i128;
    while labels.len() < n {
        let fresh = if numeric {
            next += 1;
            next.to_string()
        } else {
            next += 1;
            format!("_{next}")
        };
        if !labels.contains(&fresh) {
            labels.push(fresh);
        }
    }
    sort_labels(&mut labels);
    labels
}

fn remap(r: usize, n: usize, edges: &[Vec<String>]) -> Result<RawHypergraph, String> {
    let used: BTreeSet<String> = edges.iter().flatten().cloned().collect();
    if used.len() > n {
        return Err(format!("{} distinct labels but n = {n}", used.len()));
    }
    let labels = label_table(used, n);
    let id = |l: &String| labels.iter().position(|x| x == l).expect("label in table");
    let edges = edges.iter().map(|e| e.iter().map(id).collect()).collect();
    Ok(RawHypergraph { r, labels, edges })
}

/// Parses the text format. Edges of the wrong size are kept, so that
/// validation can report them.
pub fn parse_text(src: &str) -> Result<RawHypergraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<Vec<String>> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in src.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks = tokens(raw);
        match header {
            None => {
                if toks.len() != 3 {
                    let col = toks.get(3).map_or(raw.len() + 1, |t| t.0);
                    return Err(ParseError::new(line_no, col, "header must be `r n m`"));
                }
                let mut vals = [0usize; 3];
                for (k, &(col, tok)) in toks.iter().enumerate() {
                    vals[k] = tok.parse().map_err(|_| {
                        ParseError::new(
                            line_no,
                            col,
                            format!("expected a nonnegative integer, found `{tok}`"),
                        )
                    })?;
                }
                header = Some((vals[0], vals[1], vals[2]));
            }
            Some((_, _, m)) => {
                if edges.len() == m {
                    return Err(ParseError::new(
                        line_no,
                        toks[0].0,
                        format!("more than the declared {m} edges"),
                    ));
                }
                edges.push(toks.iter().map(|t| t.1.to_string()).collect());
            }
        }
    }
    let Some((r, n, m)) = header else {
        return Err(ParseError::new(
            last_line.max(1),
            1,
            "missing `r n m` header",
        ));
    };
    if edges.len() < m {
        return Err(ParseError::new(
            last_line + 1,
            1,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    remap(r, n, &edges).map_err(|msg| ParseError::new(1, 1, msg))
}

fn json_label(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

/// Parses the JSON form. The vertex list fixes n and must cover every label
/// used by an edge.
pub fn parse_json(src: &str) -> Result<RawHypergraph, ParseError> {
    let doc: Value = serde_json::from_str(src)
        .map_err(|e| ParseError::new(e.line(), e.column(), e.to_string()))?;
    let bad = |msg: &str| ParseError::new(1, 1, msg);
    let r = doc
        .get("r")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("`r` must be a nonnegative integer"))? as usize;
    let vertices: Vec<String> = doc
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("`vertices` must be an array"))?
        .iter()
        .map(|v| json_label(v).ok_or_else(|| bad("vertex labels are strings or numbers")))
        .collect::<Result<_, _>>()?;
    let declared: BTreeSet<&String> = vertices.iter().collect();
    if declared.len() != vertices.len() {
        return Err(bad("`vertices` repeats a label"));
    }
    let edges: Vec<Vec<String>> = doc
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("`edges` must be an array"))?
        .iter()
        .map(|e| {
            e.as_array()
                .ok_or_else(|| bad("each edge is an array"))?
                .iter()
                .map(|v| json_label(v).ok_or_else(|| bad("vertex labels are strings or numbers")))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    if let Some(l) = edges.iter().flatten().find(|l| !declared.contains(l)) {
        return Err(bad(&format!("edge uses undeclared vertex `{l}`")));
    }
    let mut labels = vertices.clone();
    sort_labels(&mut labels);
    let id = |l: &String| labels.iter().position(|x| x == l).expect("declared");
    let edges = edges.iter().map(|e| e.iter().map(id).collect()).collect();
    Ok(RawHypergraph { r, labels, edges })
}

/// JSON if the first non-blank character is `{`, the text format otherwise.
pub fn parse(src: &str) -> Result<RawHypergraph, ParseError> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_text(src)
    }
}

pub fn read_file(path: impl AsRef<Path>) -> Result<RawHypergraph, ReadError> {
    let path = path.as_ref();
    let src = std::fs::read_to_string(path).map_err(|source| ReadError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse(&src)?)
}

pub fn to_text(h: &Hypergraph) -> String {
    h.to_string()
}

pub fn to_json(h: &Hypergraph) -> Value {
    let label = |v: &usize| -> Value {
        let l = h.label(*v);
        l.parse::<i64>().map_or_else(|_| json!(l), |n| json!(n))
    };
    json!({
        "r": h.r(),
        "vertices": (0..h.n()).map(|v| label(&v)).collect::<Vec<_>>(),
        "edges": h.edges().iter().map(|e| e.iter().map(label).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIVE_EDGE: &str = "# five edges\n3 11 5\n1 4 7\n1 2 3\n4 5 6\n7 8 9\n7 10 11\n";

    #[test]
    fn numeric_labels_sort_numerically() {
        let raw = parse_text(FIVE_EDGE).unwrap();
        assert_eq!(raw.labels[9], "10");
        assert_eq!(raw.edges[4], vec![6, 9, 10]);
        let h = raw.into_hypergraph().unwrap();
        assert_eq!(to_text(&h).lines().next(), Some("3 11 5"));
    }

    #[test]
    fn text_round_trip() {
        let h = parse_text(FIVE_EDGE).unwrap().into_hypergraph().unwrap();
        let again = parse_text(&to_text(&h)).unwrap().into_hypergraph().unwrap();
        assert_eq!(h, again);
        let via_json = parse(&to_json(&h).to_string())
            .unwrap()
            .into_hypergraph()
            .unwrap();
        assert_eq!(h, via_json);
    }

    #[test]
    fn word_labels() {
        let raw = parse_text("2 3 2\nb a\nc b\n").unwrap();
        assert_eq!(raw.labels, vec!["a", "b", "c"]);
        assert_eq!(raw.edges, vec![vec![1, 0], vec![2, 1]]);
    }

    #[test]
    fn padding_and_wrong_sizes() {
        let raw = parse_text("3 1 0\n").unwrap();
        assert_eq!(raw.labels, vec!["1"]);
        let raw = parse_text("3 4 1\n1 2 3 4\n").unwrap();
        assert_eq!(raw.edges[0].len(), 4);
        assert!(raw.into_hypergraph().is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_text("3 x 1\n1 2 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        let e = parse_text("3 3 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_text("3 3 1\n1 2 3\n1 2 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 1));
        let e = parse_json("{\"r\": 3,\n \"vertices\": [1, 2, 3],\n \"edges\": [[1, 2, 9]]}")
            .unwrap_err();
        assert!(e.message.contains("undeclared"));
        let e = parse_json("{\"r\": 3,\n  oops}").unwrap_err();
        assert_eq!(e.line, 2);
    }
}

//! Graph serialization: edge-list text, JSON, and write-only DOT export.
//!
//! Edge-list format: optional `#` comment lines, a header line `n m`, then
//! `m` lines `u v` with 0-based whitespace-separated endpoints. Roles only
//! travel through the JSON format.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("missing header line \"n m\"")]
    MissingHeader,
    #[error("malformed line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    roles: BTreeMap<String, usize>,
}

pub fn to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges().to_vec(),
        roles: g.roles().clone(),
    };
    serde_json::to_string(&doc).expect("graph serialization cannot fail")
}

pub fn from_json(text: &str) -> Result<Graph, ParseError> {
    let doc: GraphJson = serde_json::from_str(text)?;
    Ok(Graph::build(doc.n, &doc.edges, doc.roles)?)
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.edge_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let mut parts = header.split_whitespace();
    let parse_num = |tok: Option<&str>, line: usize| -> Result<usize, ParseError> {
        tok.ok_or(ParseError::Malformed {
            line,
            reason: "expected two numbers".into(),
        })?
        .parse()
        .map_err(|e| ParseError::Malformed {
            line,
            reason: format!("{e}"),
        })
    };
    let n = parse_num(parts.next(), line_no)?;
    let m = parse_num(parts.next(), line_no)?;

    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        let mut parts = text.split_whitespace();
        let u = parse_num(parts.next(), line)?;
        let v = parse_num(parts.next(), line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::build(n, &edges, BTreeMap::new())?)
}

/// Auto-detects JSON vs edge-list input.
pub fn from_str(text: &str) -> Result<Graph, ParseError> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_edgelist(text)
    }
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    let mut by_vertex: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
    for (name, &v) in g.roles() {
        by_vertex.entry(v).or_default().push(name);
    }
    for v in 0..g.n() {
        match by_vertex.get(&v) {
            Some(names) => out.push_str(&format!(
                "  {v} [label=\"{v}\\n{}\"];\n",
                names.join(",")
            )),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

//! Plain-text instance format.
//!
//! ```text
//! # comment
//! n m k
//! u v
//! ...
//! ```
//!
//! Vertices are 0-based and every undirected edge is listed once. The writer
//! emits edges sorted, so `write(read(f)) == f` up to comments and edge order.

use std::fmt::Write as _;

use super::{EditSet, Graph};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_fields<const N: usize>(line_no: usize, line: &str) -> Result<[usize; N]> {
    let mut out = [0usize; N];
    let mut fields = line.split_whitespace();
    for slot in out.iter_mut() {
        let tok = fields.next().ok_or_else(|| parse_err(line_no, format!("expected {N} integers")))?;
        *slot = tok.parse().map_err(|_| parse_err(line_no, format!("not a non-negative integer: {tok:?}")))?;
    }
    if fields.next().is_some() {
        return Err(parse_err(line_no, format!("expected exactly {N} integers")));
    }
    Ok(out)
}

/// Parses `(graph, k)` from the instance format.
pub fn read_instance_text(text: &str) -> Result<(Graph, usize)> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header `n m k`"))?;
    let [n, m, k] = parse_fields::<3>(hline, header)?;
    let mut g = Graph::new(n);
    let mut seen = 0usize;
    for (line_no, line) in lines {
        let [u, v] = parse_fields::<2>(line_no, line)?;
        if u >= n || v >= n {
            return Err(parse_err(line_no, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop on {u}")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(hline, format!("header announces {m} edges, found {seen}")));
    }
    Ok((g, k))
}

pub fn write_instance_text(g: &Graph, k: usize) -> String {
    let edges = g.edges();
    let mut out = String::with_capacity(16 + 12 * edges.len());
    writeln!(out, "{} {} {}", g.n(), edges.len(), k).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses an edit set: one `u v` pair per line, `#` comments allowed.
pub fn read_edit_set_text(text: &str) -> Result<EditSet> {
    let mut out = EditSet::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let [u, v] = parse_fields::<2>(i + 1, line)?;
        if u == v {
            return Err(parse_err(i + 1, format!("self-loop on {u}")));
        }
        if !out.insert(u, v) {
            return Err(parse_err(i + 1, format!("duplicate pair {u} {v}")));
        }
    }
    Ok(out)
}

pub fn write_edit_set_text(s: &EditSet) -> String {
    s.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

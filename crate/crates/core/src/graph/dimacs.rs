//! DIMACS `p edge` reader and canonical writer.
//!
//! The reader accepts `c` comment lines, exactly one `p edge n m` (or
//! `p col n m`) header, and `e u v` lines with 1-based ids. The declared edge
//! count is not enforced: duplicate lines and reversed orientations collapse
//! into one edge. The writer emits the header followed by `e u v` lines with
//! `u < v` in ascending order, so `write(parse(t))` is a fixed point.

use std::fmt::Write as _;

use super::{Graph, GraphError};

pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let err = |line: usize, message: String| GraphError::Parse { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate problem line".into()));
                }
                let format = tokens.next();
                if !matches!(format, Some("edge" | "col" | "edges")) {
                    return Err(err(
                        line_no,
                        format!("unsupported problem format {format:?}"),
                    ));
                }
                let count = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err(line_no, "malformed vertex count in header".into()))?;
                tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err(line_no, "malformed edge count in header".into()))?;
                if tokens.next().is_some() {
                    return Err(err(line_no, "trailing tokens in header".into()));
                }
                n = Some(count);
            }
            Some("e") => {
                let n = n.ok_or_else(|| err(line_no, "edge line before problem line".into()))?;
                let mut endpoint = || -> Result<usize, GraphError> {
                    let id = tokens
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| err(line_no, "malformed edge line".into()))?;
                    if id == 0 || id > n {
                        return Err(err(line_no, format!("vertex id {id} out of range 1..={n}")));
                    }
                    Ok(id - 1)
                };
                let u = endpoint()?;
                let v = endpoint()?;
                if u == v {
                    return Err(err(line_no, format!("self-loop at vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => {
                return Err(err(line_no, format!("unrecognized line type {other:?}")));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }
    let n = n.ok_or_else(|| err(text.lines().count() + 1, "missing problem line".into()))?;
    Graph::from_edges(n, edges)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    let _ = writeln!(out, "p edge {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

//! Instance text format.
//!
//! ```text
//! # optional comment lines
//! p kernel <n> <m>
//! a <u> <v>        (exactly m lines, one arc u -> v, 0-indexed)
//! ```
//!
//! A bidirected edge is written as both `a u v` and `a v u`. Blank lines are
//! ignored. Duplicate arcs, self-loops and out-of-range endpoints are errors.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::SuperOrientation;

pub fn parse_instance(text: &str) -> Result<SuperOrientation> {
    let mut header: Option<(usize, usize)> = None;
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err("second header line"));
                }
                if fields.len() != 4 || fields[1] != "kernel" {
                    return Err(err("expected `p kernel <n> <m>`"));
                }
                let n = parse_num(fields[2], line_no)?;
                let m = parse_num(fields[3], line_no)?;
                header = Some((n, m));
            }
            "a" => {
                let (n, m) = header.ok_or_else(|| err("arc before the header line"))?;
                if fields.len() != 3 {
                    return Err(err("expected `a <u> <v>`"));
                }
                if arcs.len() == m {
                    return Err(err("more arc lines than announced in the header"));
                }
                let u = parse_num(fields[1], line_no)?;
                let v = parse_num(fields[2], line_no)?;
                if u >= n || v >= n {
                    return Err(err(&format!("arc ({u}, {v}) out of range for n = {n}")));
                }
                if u == v {
                    return Err(err(&format!("self-loop on {u}")));
                }
                arcs.push((u, v));
            }
            other => return Err(err(&format!("unknown line type `{other}`"))),
        }
    }
    let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing `p kernel` header".into() })?;
    if arcs.len() != m {
        return Err(Error::Parse { line: 0, msg: format!("header announces {m} arcs, found {}", arcs.len()) });
    }
    SuperOrientation::new(n, arcs).map_err(|e| match e {
        Error::Duplicate(u, v) => Error::Parse { line: 0, msg: format!("duplicate arc ({u}, {v})") },
        other => other,
    })
}

fn parse_num(s: &str, line: usize) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("`{s}` is not a non-negative integer") })
}

/// Writes `d` in ascending arc order, preceded by `comments` as `#` lines.
pub fn write_instance(d: &SuperOrientation, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "p kernel {} {}", d.n(), d.arc_count());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "a {u} {v}");
    }
    out
}

/// Parses a comma- or whitespace-separated vertex list such as `"1,3"`.
pub fn parse_vertex_list(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).map(|t| parse_num(t, 0)).collect()
}

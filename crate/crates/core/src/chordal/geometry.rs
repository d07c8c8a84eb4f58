//! Interval and circular-arc models.
//!
//! Text format, one line per vertex in any order:
//!
//! ```text
//! # comment
//! circle <length>              (optional; arcs only)
//! arc <v> <start> <end>        (or `interval <v> <start> <end>`)
//! ```
//!
//! Coordinates are rationals written `p/q` or `p`. Intervals and arcs are
//! closed, so touching endpoints intersect. An arc with `start > end` wraps
//! through the top of the circle; with a `circle` line, coordinates are first
//! reduced modulo its length.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

pub type Coord = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepresentationKind {
    Interval,
    CircularArc,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricRepresentation {
    pub kind: RepresentationKind,
    pub circle: Option<Coord>,
    /// `spans[v] = (start, end)`.
    pub spans: Vec<(Coord, Coord)>,
}

impl GeometricRepresentation {
    pub fn new(kind: RepresentationKind, circle: Option<Coord>, spans: Vec<(Coord, Coord)>) -> Result<Self> {
        if let Some(len) = circle {
            if kind == RepresentationKind::Interval {
                return Err(Error::InvalidRepresentation("a circle length only applies to arcs".into()));
            }
            if len <= Coord::from_integer(0) {
                return Err(Error::InvalidRepresentation(format!("circle length {len} is not positive")));
            }
        }
        let spans = spans
            .into_iter()
            .enumerate()
            .map(|(v, (s, e))| {
                if kind == RepresentationKind::Interval && s > e {
                    return Err(Error::InvalidRepresentation(format!("interval of {v} has start {s} after end {e}")));
                }
                Ok(match circle {
                    Some(len) => (modulo(s, len), modulo(e, len)),
                    None => (s, e),
                })
            })
            .collect::<Result<_>>()?;
        Ok(GeometricRepresentation { kind, circle, spans })
    }

    pub fn n(&self) -> usize {
        self.spans.len()
    }

    pub fn wraps(&self, v: usize) -> bool {
        let (s, e) = self.spans[v];
        s > e
    }

    /// Whether the span of `v` contains the point `p`.
    pub fn covers(&self, v: usize, p: Coord) -> bool {
        let (s, e) = self.spans[v];
        if self.wraps(v) {
            p >= s || p <= e
        } else {
            s <= p && p <= e
        }
    }

    pub fn intersects(&self, u: usize, v: usize) -> bool {
        match (self.wraps(u), self.wraps(v)) {
            (true, true) => true,
            (false, false) => {
                let (a, b) = self.spans[u];
                let (c, d) = self.spans[v];
                a <= d && c <= b
            }
            (true, false) => self.meets_wrapping(u, v),
            (false, true) => self.meets_wrapping(v, u),
        }
    }

    fn meets_wrapping(&self, wrapping: usize, plain: usize) -> bool {
        let (s, e) = self.spans[wrapping];
        let (a, b) = self.spans[plain];
        b >= s || a <= e
    }

    /// The intersection graph of the spans.
    pub fn intersection_graph(&self) -> UndirectedGraph {
        let n = self.n();
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| self.intersects(u, v));
        UndirectedGraph::new(n, edges).expect("pairs are distinct and in range")
    }

    /// Checks that `g` is exactly the intersection graph.
    pub fn validate(&self, g: &UndirectedGraph) -> Result<()> {
        if self.n() != g.n() {
            return Err(Error::InvalidRepresentation(format!(
                "representation has {} vertices, graph has {}",
                self.n(),
                g.n()
            )));
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let meet = self.intersects(u, v);
                if meet != g.has_edge(u, v) {
                    let what =
                        if meet { "intersect but are not adjacent" } else { "are adjacent but do not intersect" };
                    return Err(Error::InvalidRepresentation(format!("{u} and {v} {what}")));
                }
            }
        }
        Ok(())
    }
}

fn modulo(x: Coord, len: Coord) -> Coord {
    let r = x - (x / len).floor() * len;
    debug_assert!(r >= Coord::from_integer(0) && r < len);
    r
}

pub fn parse_representation(text: &str) -> Result<GeometricRepresentation> {
    let mut kind = None;
    let mut circle = None;
    let mut spans: Vec<Option<(Coord, Coord)>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let coord = |s: &str| s.parse::<Coord>().map_err(|_| err(format!("`{s}` is not a rational number")));
        match fields[0] {
            "circle" => {
                if fields.len() != 2 {
                    return Err(err("expected `circle <length>`".into()));
                }
                if circle.replace(coord(fields[1])?).is_some() {
                    return Err(err("second circle line".into()));
                }
            }
            tag @ ("arc" | "interval") => {
                if fields.len() != 4 {
                    return Err(err(format!("expected `{tag} <v> <start> <end>`")));
                }
                let this = if tag == "arc" { RepresentationKind::CircularArc } else { RepresentationKind::Interval };
                if *kind.get_or_insert(this) != this {
                    return Err(err("arcs and intervals are mixed".into()));
                }
                let v: usize = fields[1].parse().map_err(|_| err(format!("bad vertex `{}`", fields[1])))?;
                if v >= spans.len() {
                    spans.resize(v + 1, None);
                }
                if spans[v].replace((coord(fields[2])?, coord(fields[3])?)).is_some() {
                    return Err(err(format!("vertex {v} listed twice")));
                }
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let spans = spans
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::InvalidRepresentation(format!("vertex {v} has no span"))))
        .collect::<Result<Vec<_>>>()?;
    GeometricRepresentation::new(kind.unwrap_or(RepresentationKind::Interval), circle, spans)
}

pub fn write_representation(rep: &GeometricRepresentation) -> String {
    let mut out = String::new();
    if let Some(len) = rep.circle {
        let _ = writeln!(out, "circle {len}");
    }
    let tag = match rep.kind {
        RepresentationKind::Interval => "interval",
        RepresentationKind::CircularArc => "arc",
    };
    for (v, (s, e)) in rep.spans.iter().enumerate() {
        let _ = writeln!(out, "{tag} {v} {s} {e}");
    }
    out
}

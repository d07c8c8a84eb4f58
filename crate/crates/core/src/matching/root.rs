//! Bipartite multigraphs whose line graph is the input graph.
//!
//! Root certificate format:
//!
//! ```text
//! # comment
//! left <root vertex>...
//! right <root vertex>...
//! edge <line vertex> <left end> <right end>
//! ```
//!
//! Root vertices are `0..r` and must each be listed on exactly one side;
//! every line vertex `0..n` needs exactly one `edge` line.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A bipartite multigraph on root vertices `0..side.len()`, with one edge per
/// line vertex: `edges[v] = (left end, right end)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteRoot {
    side: Vec<Side>,
    edges: Vec<(usize, usize)>,
    /// Line vertices incident to each root vertex, ascending.
    incident: Vec<Vec<usize>>,
}

impl BipartiteRoot {
    pub fn new(side: Vec<Side>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let r = side.len();
        let mut incident = vec![Vec::new(); r];
        for (v, &(a, b)) in edges.iter().enumerate() {
            if a >= r || b >= r {
                return Err(Error::InvalidRoot(format!("edge of line vertex {v} has an endpoint out of range")));
            }
            if side[a] != Side::Left || side[b] != Side::Right {
                return Err(Error::InvalidRoot(format!("edge of line vertex {v} is not left-to-right")));
            }
            incident[a].push(v);
            incident[b].push(v);
        }
        Ok(BipartiteRoot { side, edges, incident })
    }

    pub fn root_vertex_count(&self) -> usize {
        self.side.len()
    }

    pub fn line_vertex_count(&self) -> usize {
        self.edges.len()
    }

    pub fn side(&self, b: usize) -> Side {
        self.side[b]
    }

    pub fn edge(&self, v: usize) -> (usize, usize) {
        self.edges[v]
    }

    pub fn incident(&self, b: usize) -> &[usize] {
        &self.incident[b]
    }

    pub fn line_graph(&self) -> UndirectedGraph {
        let edges = self
            .incident
            .iter()
            .flat_map(|inc| inc.iter().enumerate().flat_map(move |(i, &u)| inc[i + 1..].iter().map(move |&v| (u, v))));
        UndirectedGraph::from_edges_dedup(self.edges.len(), edges).expect("incidences are in range")
    }

    /// Checks that the line graph of the root is exactly `g`, vertex for
    /// vertex.
    pub fn validate(&self, g: &UndirectedGraph) -> Result<()> {
        if self.edges.len() != g.n() {
            return Err(Error::InvalidRoot(format!(
                "root has {} edges, graph has {} vertices",
                self.edges.len(),
                g.n()
            )));
        }
        let line = self.line_graph();
        for u in 0..g.n() {
            if line.neighbors(u) != g.neighbors(u) {
                let v = line
                    .neighbors(u)
                    .iter()
                    .chain(g.neighbors(u))
                    .copied()
                    .find(|&v| line.has_edge(u, v) != g.has_edge(u, v))
                    .expect("neighbor lists differ");
                return Err(Error::InvalidRoot(format!(
                    "line vertices {u} and {v} are {} in the graph but {} in the root",
                    adjacency_word(g.has_edge(u, v)),
                    adjacency_word(line.has_edge(u, v))
                )));
            }
        }
        Ok(())
    }

    /// The sub-multigraph formed by the edges of `vertices`; line vertex `i`
    /// of the result is `vertices[i]`. Root vertices left without edges are
    /// dropped.
    pub fn restrict(&self, vertices: &[usize]) -> BipartiteRoot {
        let mut index = HashMap::new();
        let mut side = Vec::new();
        let mut edges = Vec::with_capacity(vertices.len());
        for &v in vertices {
            let (a, b) = self.edges[v];
            let mut id = |x: usize| {
                *index.entry(x).or_insert_with(|| {
                    side.push(self.side[x]);
                    side.len() - 1
                })
            };
            let a = id(a);
            let b = id(b);
            edges.push((a, b));
        }
        BipartiteRoot::new(side, edges).expect("restriction of a valid root")
    }
}

fn adjacency_word(adjacent: bool) -> &'static str {
    if adjacent {
        "adjacent"
    } else {
        "non-adjacent"
    }
}

pub fn parse_root(text: &str) -> Result<BipartiteRoot> {
    let mut side: Vec<Option<Side>> = Vec::new();
    let mut edges: Vec<Option<(usize, usize)>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let nums = fields[1..]
            .iter()
            .map(|s| s.parse::<usize>().map_err(|_| err(format!("`{s}` is not a non-negative integer"))))
            .collect::<Result<Vec<_>>>()?;
        match fields[0] {
            tag @ ("left" | "right") => {
                let s = if tag == "left" { Side::Left } else { Side::Right };
                for b in nums {
                    if b >= side.len() {
                        side.resize(b + 1, None);
                    }
                    if side[b].replace(s).is_some() {
                        return Err(err(format!("root vertex {b} listed twice")));
                    }
                }
            }
            "edge" => {
                let [v, a, b] = nums[..] else {
                    return Err(err("expected `edge <line vertex> <left> <right>`".into()));
                };
                if v >= edges.len() {
                    edges.resize(v + 1, None);
                }
                if edges[v].replace((a, b)).is_some() {
                    return Err(err(format!("line vertex {v} listed twice")));
                }
            }
            other => return Err(err(format!("unknown line type `{other}`"))),
        }
    }
    let side = side
        .into_iter()
        .enumerate()
        .map(|(b, s)| s.ok_or_else(|| Error::InvalidRoot(format!("root vertex {b} is on neither side"))))
        .collect::<Result<Vec<_>>>()?;
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(v, e)| e.ok_or_else(|| Error::InvalidRoot(format!("line vertex {v} has no edge"))))
        .collect::<Result<Vec<_>>>()?;
    BipartiteRoot::new(side, edges)
}

pub fn write_root(root: &BipartiteRoot) -> String {
    let mut out = String::new();
    for (tag, s) in [("left", Side::Left), ("right", Side::Right)] {
        out.push_str(tag);
        for b in (0..root.root_vertex_count()).filter(|&b| root.side(b) == s) {
            let _ = write!(out, " {b}");
        }
        out.push('\n');
    }
    for v in 0..root.line_vertex_count() {
        let (a, b) = root.edge(v);
        let _ = writeln!(out, "edge {v} {a} {b}");
    }
    out
}

/// A bipartite multigraph whose line graph is `g`, or `None`.
///
/// Closed twins are bundled into parallel edges, so a clique becomes a single
/// bundle of parallel edges. On the twin-free quotient, the edges at a root
/// vertex are `{u, v}` plus the common neighbors of `u` and `v`, for any
/// edge `uv` inside that star; vertices lying in fewer than two such stars
/// get pendant root vertices. The result is checked against `g` before it is
/// returned, so `None` may also mean that an unusual small graph was missed.
pub fn reconstruct_bipartite_root(g: &UndirectedGraph) -> Option<BipartiteRoot> {
    let n = g.n();
    // Closed-neighborhood twin classes, represented by their smallest member.
    let mut rep = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for v in 0..n {
        if rep[v] != usize::MAX {
            continue;
        }
        rep[v] = v;
        reps.push(v);
        for &w in g.neighbors(v) {
            if w > v && rep[w] == usize::MAX && closed_twins(g, v, w) {
                rep[w] = v;
            }
        }
    }
    let q_index: HashMap<usize, usize> = reps.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let q = g.induced(&reps);

    // Stars of the twin-free quotient, deduplicated.
    let mut stars: Vec<Vec<usize>> = Vec::new();
    let mut star_of: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut member_of: Vec<Vec<usize>> = vec![Vec::new(); q.n()];
    for (u, v) in q.edges() {
        let mut star: Vec<usize> = vec![u, v];
        star.extend(q.neighbors(u).iter().copied().filter(|&w| q.has_edge(v, w)));
        star.sort_unstable();
        if !q.is_clique(&star) {
            return None;
        }
        if star_of.contains_key(&star) {
            continue;
        }
        let id = stars.len();
        for &w in &star {
            member_of[w].push(id);
            if member_of[w].len() > 2 {
                return None;
            }
        }
        star_of.insert(star.clone(), id);
        stars.push(star);
    }

    // Root vertices: one per star, plus pendants. Number them in order of
    // first appearance along the quotient vertices.
    let mut root_id: Vec<Option<usize>> = vec![None; stars.len()];
    let mut next = 0;
    let mut q_edges = Vec::with_capacity(q.n());
    for (w, owners) in member_of.iter().enumerate() {
        let mut ends = Vec::with_capacity(2);
        for &s in owners {
            ends.push(*root_id[s].get_or_insert_with(|| {
                next += 1;
                next - 1
            }));
        }
        while ends.len() < 2 {
            ends.push(next);
            next += 1;
        }
        q_edges.push((ends[0], ends[1], w));
    }

    // Two-color the root, smallest vertex of each component on the left.
    let mut adj = vec![Vec::new(); next];
    for &(a, b, _) in &q_edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut side: Vec<Option<Side>> = vec![None; next];
    for s in 0..next {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(Side::Left);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            let other = if side[x] == Some(Side::Left) { Side::Right } else { Side::Left };
            for &y in &adj[x] {
                match side[y] {
                    None => {
                        side[y] = Some(other);
                        stack.push(y);
                    }
                    Some(t) if t != other => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let side: Vec<Side> = side.into_iter().map(|s| s.expect("colored")).collect();

    let edges = (0..n)
        .map(|v| {
            let (a, b, _) = q_edges[q_index[&rep[v]]];
            if side[a] == Side::Left {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let root = BipartiteRoot::new(side, edges).ok()?;
    root.validate(g).ok()?;
    Some(root)
}

fn closed_twins(g: &UndirectedGraph, u: usize, v: usize) -> bool {
    let mut a = g.neighbor_bits(u).clone();
    a.insert(u);
    let mut b = g.neighbor_bits(v).clone();
    b.insert(v);
    a == b
}

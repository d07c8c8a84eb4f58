//! Undirected graphs and super-orientations on dense vertex indices `0..n`.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A simple undirected graph. Neighbor lists are kept sorted alongside an
/// adjacency bitset per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    adj: Vec<Vec<usize>>,
    bits: Vec<FixedBitSet>,
    edge_count: usize,
}

impl UndirectedGraph {
    /// Rejects self-loops, out-of-range endpoints and parallel edges.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            check_range(u, n)?;
            check_range(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.bits[u].contains(v) {
                return Err(Error::Duplicate(u.min(v), u.max(v)));
            }
            g.insert(u, v);
        }
        g.finish();
        Ok(g)
    }

    /// Like [`UndirectedGraph::new`] but silently merges repeated edges.
    pub fn from_edges_dedup(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            check_range(u, n)?;
            check_range(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !g.bits[u].contains(v) {
                g.insert(u, v);
            }
        }
        g.finish();
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    fn empty(n: usize) -> Self {
        UndirectedGraph { adj: vec![Vec::new(); n], bits: vec![FixedBitSet::with_capacity(n); n], edge_count: 0 }
    }

    fn insert(&mut self, u: usize, v: usize) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.bits[u].insert(v);
        self.bits[v].insert(u);
        self.edge_count += 1;
    }

    fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_bits(&self, v: usize) -> &FixedBitSet {
        &self.bits[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nb)| nb.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        self.non_adjacent_pair(vertices).is_none()
    }

    /// First non-adjacent pair in `vertices`, scanning in the given order.
    pub fn non_adjacent_pair(&self, vertices: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if u != v && !self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// Induced subgraph on `vertices` (which must be distinct); vertex `i`
    /// of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> UndirectedGraph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Self::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && j > i {
                    g.insert(i, j);
                }
            }
        }
        g.finish();
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.n()).collect();
        let mask = vec![true; self.n()];
        components_within(self, &all, &mask)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// Connected components of the subgraph induced by `members` (`mask[v]` must
/// be true exactly for members). Components are sorted and ordered by their
/// smallest vertex.
pub(crate) fn components_within(g: &UndirectedGraph, members: &[usize], mask: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for &s in members {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort_by_key(|c| c[0]);
    out
}

fn check_range(v: usize, n: usize) -> Result<()> {
    if v >= n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

/// A digraph in which every pair of adjacent vertices is joined by one arc or
/// by both. An edge with both arcs present is *bidirected*; an orientation is
/// a super-orientation without bidirected edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperOrientation {
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    out_bits: Vec<FixedBitSet>,
    graph: UndirectedGraph,
    arc_count: usize,
}

impl SuperOrientation {
    /// Rejects self-loops, out-of-range endpoints and repeated arcs.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        let mut out_bits = vec![FixedBitSet::with_capacity(n); n];
        let mut edges = Vec::new();
        let mut arc_count = 0;
        for (u, v) in arcs {
            check_range(u, n)?;
            check_range(v, n)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if out_bits[u].contains(v) {
                return Err(Error::Duplicate(u, v));
            }
            out_bits[u].insert(v);
            out[u].push(v);
            inc[v].push(u);
            arc_count += 1;
            if !out_bits[v].contains(u) {
                edges.push((u, v));
            }
        }
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_unstable();
        }
        let graph = UndirectedGraph::new(n, edges)?;
        let d = SuperOrientation { out, inc, out_bits, graph, arc_count };
        debug_assert!(d.check_invariants());
        Ok(d)
    }

    fn check_invariants(&self) -> bool {
        (0..self.n()).all(|u| {
            self.out[u].iter().all(|&v| self.graph.has_edge(u, v) && self.inc[v].binary_search(&u).is_ok())
                && self.graph.neighbors(u).iter().all(|&v| self.has_arc(u, v) || self.has_arc(v, u))
        })
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out_bits[u].contains(v)
    }

    /// Both `(u, v)` and `(v, u)` are arcs.
    pub fn is_bidirected(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// `(u, v)` is an arc and `(v, u)` is not.
    pub fn is_one_way(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && !self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn out_bits(&self, v: usize) -> &FixedBitSet {
        &self.out_bits[v]
    }

    pub fn underlying(&self) -> &UndirectedGraph {
        &self.graph
    }

    /// Arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, o)| o.iter().map(move |&v| (u, v)))
    }

    /// First bidirected edge `{u, v}` with `u < v`, if any.
    pub fn first_bidirected(&self) -> Option<(usize, usize)> {
        self.graph.edges().find(|&(u, v)| self.is_bidirected(u, v))
    }

    pub fn is_orientation(&self) -> bool {
        self.first_bidirected().is_none()
    }

    pub fn require_orientation(&self) -> Result<()> {
        match self.first_bidirected() {
            Some((u, v)) => Err(Error::NotAnOrientation(u, v)),
            None => Ok(()),
        }
    }

    /// Induced subdigraph on the distinct vertices `vertices`; vertex `i` of
    /// the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SuperOrientation {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let arcs: Vec<(usize, usize)> = vertices
            .iter()
            .enumerate()
            .flat_map(|(i, &v)| {
                let local = &local;
                self.out[v].iter().filter_map(move |&w| {
                    let j = local[w];
                    (j != usize::MAX).then_some((i, j))
                })
            })
            .collect();
        SuperOrientation::new(vertices.len(), arcs).expect("induced subdigraph of a valid digraph")
    }

    /// Replaces every edge of `g` by arcs following `dir(u, v)` for `u < v`.
    pub fn from_graph(g: &UndirectedGraph, mut dir: impl FnMut(usize, usize) -> EdgeDirection) -> Self {
        let mut arcs = Vec::with_capacity(2 * g.edge_count());
        for (u, v) in g.edges() {
            match dir(u, v) {
                EdgeDirection::Forward => arcs.push((u, v)),
                EdgeDirection::Backward => arcs.push((v, u)),
                EdgeDirection::Both => {
                    arcs.push((u, v));
                    arcs.push((v, u));
                }
            }
        }
        SuperOrientation::new(g.n(), arcs).expect("arcs follow the edges of a simple graph")
    }
}

/// Direction assigned to an edge `{u, v}` (`u < v`) when orienting a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeDirection {
    Forward,
    Backward,
    Both,
}

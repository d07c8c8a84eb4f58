//! Augmentation certificates.
//!
//! A certificate describes `G` as the line graph `L` of a bipartite multigraph
//! (the host root) in which some flat edges `x_i y_i` were augmented: `x_i`
//! and `y_i` are replaced by cliques `X_i` and `Y_i` joined by the cross edges
//! `E_i`, with `X_i` complete to the other neighbors of `x_i` and `Y_i`
//! complete to those of `y_i`.
//!
//! JSON layout:
//!
//! ```json
//! {
//!   "host_root": { "left": [0], "right": [1, 2], "edges": [[0, 1], [0, 2]] },
//!   "host_to_graph": [null, null],
//!   "gadgets": [ { "x": 0, "y": 1, "X": [0, 1], "Y": [2], "cross": [[1, 2]] } ]
//! }
//! ```
//!
//! `host_root.edges[v]` is the `(left, right)` edge of host vertex `v`;
//! `host_to_graph[v]` is the vertex of `G` for an unaugmented host vertex and
//! `null` for the `x_i`, `y_i`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::checks::is_flat;
use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;
use crate::matching::{BipartiteRoot, Side};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    pub x: usize,
    pub y: usize,
    #[serde(rename = "X")]
    pub x_clique: Vec<usize>,
    #[serde(rename = "Y")]
    pub y_clique: Vec<usize>,
    pub cross: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationCertificate {
    pub host_root: BipartiteRoot,
    pub host_to_graph: Vec<Option<usize>>,
    pub gadgets: Vec<Gadget>,
}

#[derive(Serialize, Deserialize)]
struct RootDoc {
    left: Vec<usize>,
    right: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct CertificateDoc {
    host_root: RootDoc,
    host_to_graph: Vec<Option<usize>>,
    gadgets: Vec<Gadget>,
}

impl AugmentationCertificate {
    /// A certificate without augmentations: `G` is the line graph of `root`.
    pub fn plain(root: BipartiteRoot) -> Self {
        let host_to_graph = (0..root.line_vertex_count()).map(Some).collect();
        AugmentationCertificate { host_root: root, host_to_graph, gadgets: Vec::new() }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CertificateDoc =
            serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
        let r = doc.host_root.left.len() + doc.host_root.right.len();
        let mut side = vec![None; r];
        for (list, s) in [(&doc.host_root.left, Side::Left), (&doc.host_root.right, Side::Right)] {
            for &b in list {
                if b >= r || side[b].replace(s).is_some() {
                    return Err(Error::InvalidRoot(format!("root vertex {b} is listed twice or out of range")));
                }
            }
        }
        let side = side.into_iter().map(|s| s.expect("every slot filled")).collect();
        let host_root = BipartiteRoot::new(side, doc.host_root.edges)?;
        Ok(AugmentationCertificate { host_root, host_to_graph: doc.host_to_graph, gadgets: doc.gadgets })
    }

    pub fn to_json(&self) -> String {
        let root = &self.host_root;
        let by_side = |s: Side| (0..root.root_vertex_count()).filter(|&b| root.side(b) == s).collect();
        let doc = CertificateDoc {
            host_root: RootDoc {
                left: by_side(Side::Left),
                right: by_side(Side::Right),
                edges: (0..root.line_vertex_count()).map(|v| root.edge(v)).collect(),
            },
            host_to_graph: self.host_to_graph.clone(),
            gadgets: self.gadgets.clone(),
        };
        serde_json::to_string_pretty(&doc).expect("plain data serializes")
    }

    pub fn host_graph(&self) -> UndirectedGraph {
        self.host_root.line_graph()
    }

    /// The vertices of `G` standing in for host vertex `h`.
    pub(crate) fn expansion(&self, h: usize) -> Vec<usize> {
        if let Some(g) = self.host_to_graph[h] {
            return vec![g];
        }
        for gd in &self.gadgets {
            if gd.x == h {
                return gd.x_clique.clone();
            }
            if gd.y == h {
                return gd.y_clique.clone();
            }
        }
        Vec::new()
    }

    /// Checks the structural conditions and returns the graph on `n`
    /// vertices obtained by applying all augmentations.
    pub fn replay(&self, n: usize) -> Result<UndirectedGraph> {
        let bad = |msg: String| Error::InvalidCertificate(msg);
        let host = self.host_graph();
        let hn = host.n();
        if self.host_to_graph.len() != hn {
            return Err(bad(format!("host_to_graph has {} entries for {hn} host vertices", self.host_to_graph.len())));
        }
        let mut role = vec![None; hn];
        for (i, gd) in self.gadgets.iter().enumerate() {
            for h in [gd.x, gd.y] {
                if h >= hn {
                    return Err(bad(format!("gadget {i} names host vertex {h}, out of range")));
                }
                if role[h].replace(i).is_some() {
                    return Err(bad(format!("host vertex {h} is in two augmented edges")));
                }
                if self.host_to_graph[h].is_some() {
                    return Err(bad(format!("augmented host vertex {h} also maps to a graph vertex")));
                }
            }
            if gd.x == gd.y || !host.has_edge(gd.x, gd.y) || !is_flat(&host, gd.x, gd.y) {
                return Err(bad(format!("gadget {i}: {{{}, {}}} is not a flat edge of the host", gd.x, gd.y)));
            }
            if gd.x_clique.is_empty() || gd.y_clique.is_empty() || gd.cross.is_empty() {
                return Err(bad(format!("gadget {i} has an empty side or no cross edge")));
            }
            for &(a, b) in &gd.cross {
                if !gd.x_clique.contains(&a) || !gd.y_clique.contains(&b) {
                    return Err(bad(format!("gadget {i}: cross edge ({a}, {b}) does not go from X to Y")));
                }
            }
        }
        let mut seen = vec![false; n];
        let images = self
            .host_to_graph
            .iter()
            .enumerate()
            .filter(|&(h, _)| role[h].is_none())
            .map(|(h, g)| g.ok_or_else(|| bad(format!("host vertex {h} maps to nothing"))))
            .chain(self.gadgets.iter().flat_map(|gd| gd.x_clique.iter().chain(&gd.y_clique)).map(|&g| Ok(g)));
        for g in images {
            let g = g?;
            if g >= n || std::mem::replace(&mut seen[g], true) {
                return Err(bad(format!("graph vertex {g} is out of range or used twice")));
            }
        }
        if let Some(g) = seen.iter().position(|&s| !s) {
            return Err(bad(format!("graph vertex {g} is not covered")));
        }

        let mut edges = Vec::new();
        for (u, v) in host.edges() {
            if role[u].is_some() && role[u] == role[v] {
                continue;
            }
            let (eu, ev) = (self.expansion(u), self.expansion(v));
            edges.extend(eu.iter().flat_map(|&a| ev.iter().map(move |&b| (a, b))));
        }
        for gd in &self.gadgets {
            for side in [&gd.x_clique, &gd.y_clique] {
                edges.extend(side.iter().enumerate().flat_map(|(i, &a)| side[i + 1..].iter().map(move |&b| (a, b))));
            }
            edges.extend(gd.cross.iter().copied());
        }
        UndirectedGraph::new(n, edges).map_err(|e| bad(format!("replay failed: {e}")))
    }

    /// Checks that replaying the certificate gives exactly `g`.
    pub fn validate(&self, g: &UndirectedGraph) -> Result<()> {
        let replayed = self.replay(g.n())?;
        if replayed != *g {
            let (u, v) = (0..g.n())
                .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
                .find(|&(u, v)| replayed.has_edge(u, v) != g.has_edge(u, v))
                .expect("graphs differ in some pair");
            return Err(Error::InvalidCertificate(format!(
                "replay disagrees with the graph on {{{u}, {v}}} (replay says {})",
                if replayed.has_edge(u, v) { "adjacent" } else { "non-adjacent" }
            )));
        }
        Ok(())
    }

    /// A certificate for `G[vertices]`, where graph vertex `vertices[i]`
    /// becomes `i`.
    ///
    /// Per gadget with `X' = X ∩ vertices`, `Y' = Y ∩ vertices`: if both are
    /// nonempty and still joined by a cross edge the gadget stays. Otherwise
    /// the flat edge is deleted from the host root, and the surviving sides
    /// become bundles of parallel host edges, which are closed twins.
    pub fn restrict(&self, vertices: &[usize]) -> Result<AugmentationCertificate> {
        let local: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let root = &self.host_root;
        let mut side: Vec<Side> = (0..root.root_vertex_count()).map(|b| root.side(b)).collect();
        let mut edges = Vec::new();
        let mut host_to_graph = Vec::new();
        let mut gadgets = Vec::new();
        let gadget_of: Vec<Option<usize>> =
            (0..root.line_vertex_count()).map(|h| self.gadgets.iter().position(|g| g.x == h || g.y == h)).collect();

        for (h, &owner) in gadget_of.iter().enumerate() {
            match owner {
                None => {
                    if let Some(l) = self.host_to_graph[h].and_then(|g| local.get(&g).copied()) {
                        edges.push(root.edge(h));
                        host_to_graph.push(Some(l));
                    }
                }
                Some(i) if self.gadgets[i].x == h => {
                    let gd = &self.gadgets[i];
                    let keep = |s: &[usize]| s.iter().filter_map(|g| local.get(g).copied()).collect::<Vec<_>>();
                    let xs = keep(&gd.x_clique);
                    let ys = keep(&gd.y_clique);
                    let cross: Vec<(usize, usize)> =
                        gd.cross.iter().filter_map(|(a, b)| Some((*local.get(a)?, *local.get(b)?))).collect();
                    let (ex, mut ey) = (root.edge(gd.x), root.edge(gd.y));
                    if !cross.is_empty() {
                        edges.push(ex);
                        host_to_graph.push(None);
                        let x = edges.len() - 1;
                        edges.push(ey);
                        host_to_graph.push(None);
                        gadgets.push(Gadget { x, y: x + 1, x_clique: xs, y_clique: ys, cross });
                        continue;
                    }
                    if !xs.is_empty() && !ys.is_empty() {
                        ey = split_apart(&mut side, ex, ey);
                    }
                    for (copies, e) in [(xs, ex), (ys, ey)] {
                        for l in copies {
                            edges.push(e);
                            host_to_graph.push(Some(l));
                        }
                    }
                }
                Some(_) => {}
            }
        }
        let cert = AugmentationCertificate { host_root: BipartiteRoot::new(side, edges)?, host_to_graph, gadgets };
        Ok(cert)
    }
}

/// Moves `y` off the root vertex it shares with `x` (both of their shared
/// vertices if they are parallel), deleting the flat edge `xy` from the line
/// graph. Returns the new edge of `y`.
pub(crate) fn split_apart(side: &mut Vec<Side>, x: (usize, usize), y: (usize, usize)) -> (usize, usize) {
    let mut fresh = |s: Side| {
        side.push(s);
        side.len() - 1
    };
    let (mut a, mut b) = y;
    if a == x.0 {
        a = fresh(Side::Left);
    }
    if b == x.1 {
        b = fresh(Side::Right);
    }
    (a, b)
}

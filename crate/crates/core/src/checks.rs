//! Structural checks: claw-freeness, flat edges and clique-acyclicity.

use crate::chordality::ChordalEvidence;
use crate::error::{Error, Result};
use crate::graph::{SuperOrientation, UndirectedGraph};

/// Result of a clique-acyclicity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueAcyclicity {
    Acyclic,
    /// A directed cycle of one-way arcs inside a clique, starting at its
    /// smallest vertex and listed along the arcs.
    Cycle(Vec<usize>),
}

impl CliqueAcyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, CliqueAcyclicity::Acyclic)
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            CliqueAcyclicity::Acyclic => Ok(()),
            CliqueAcyclicity::Cycle(cycle) => Err(Error::NotCliqueAcyclic { cycle }),
        }
    }
}

/// Decides clique-acyclicity.
///
/// With a chordal certificate, every maximal clique is checked for a cycle of
/// one-way arcs. Without one, `d` must be an orientation, and the check looks
/// for a directed triangle. Super-orientations without chordal evidence are
/// refused with [`Error::Undecidable`].
pub fn check_clique_acyclic(d: &SuperOrientation, evidence: Option<&ChordalEvidence>) -> Result<CliqueAcyclicity> {
    match evidence {
        Some(ChordalEvidence::Chordal(s)) => {
            if s.peo.len() != d.n() {
                return Err(Error::InvalidParameter("chordal evidence is for a different graph".into()));
            }
            Ok(cliques_acyclic(d, &s.cliques))
        }
        Some(ChordalEvidence::Hole(hole)) if !d.is_orientation() => Err(Error::NotChordal { hole: hole.clone() }),
        _ if d.is_orientation() => {
            Ok(directed_triangle(d).map_or(CliqueAcyclicity::Acyclic, |t| CliqueAcyclicity::Cycle(t.to_vec())))
        }
        _ => Err(Error::Undecidable),
    }
}

/// Lexicographically first directed triangle `u -> v -> w -> u` with `u` its
/// smallest vertex, considering one-way arcs only.
pub fn directed_triangle(d: &SuperOrientation) -> Option<[usize; 3]> {
    for u in 0..d.n() {
        for &v in d.out_neighbors(u) {
            if v < u || !d.is_one_way(u, v) {
                continue;
            }
            let closing =
                d.in_neighbors(u).iter().copied().find(|&w| w > u && d.is_one_way(w, u) && d.is_one_way(v, w));
            if let Some(w) = closing {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// Checks each listed clique for a directed cycle of one-way arcs.
pub(crate) fn cliques_acyclic(d: &SuperOrientation, cliques: &[Vec<usize>]) -> CliqueAcyclicity {
    for clique in cliques {
        if let Some(cycle) = one_way_cycle(d, clique) {
            return CliqueAcyclicity::Cycle(cycle);
        }
    }
    CliqueAcyclicity::Acyclic
}

/// A directed cycle of one-way arcs among `vertices`, if any.
pub(crate) fn one_way_cycle(d: &SuperOrientation, vertices: &[usize]) -> Option<Vec<usize>> {
    let k = vertices.len();
    let mut indeg = vec![0usize; k];
    for (i, &u) in vertices.iter().enumerate() {
        for (j, &v) in vertices.iter().enumerate() {
            if i != j && d.is_one_way(v, u) {
                indeg[i] += 1;
            }
        }
    }
    let mut removed = vec![false; k];
    let mut stack: Vec<usize> = (0..k).filter(|&i| indeg[i] == 0).collect();
    while let Some(i) = stack.pop() {
        removed[i] = true;
        for j in 0..k {
            if !removed[j] && j != i && d.is_one_way(vertices[i], vertices[j]) {
                indeg[j] -= 1;
                if indeg[j] == 0 {
                    stack.push(j);
                }
            }
        }
    }
    let start = (0..k).filter(|&i| !removed[i]).min_by_key(|&i| vertices[i])?;
    // Every remaining vertex has a one-way in-arc from another remaining one;
    // walk those arcs backwards until a vertex repeats.
    let mut seen_at = vec![usize::MAX; k];
    let mut walk = Vec::new();
    let mut cur = start;
    while seen_at[cur] == usize::MAX {
        seen_at[cur] = walk.len();
        walk.push(cur);
        cur = (0..k)
            .filter(|&j| !removed[j] && d.is_one_way(vertices[j], vertices[cur]))
            .min_by_key(|&j| vertices[j])
            .expect("remaining vertices keep an in-arc");
    }
    let mut cycle: Vec<usize> = walk[seen_at[cur]..].iter().map(|&i| vertices[i]).collect();
    cycle.reverse();
    let s = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(s);
    Some(cycle)
}

/// Result of a claw-freeness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClawCheck {
    ClawFree,
    Claw { center: usize, leaves: [usize; 3] },
}

impl ClawCheck {
    pub fn is_claw_free(&self) -> bool {
        matches!(self, ClawCheck::ClawFree)
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            ClawCheck::ClawFree => Ok(()),
            ClawCheck::Claw { center, leaves } => Err(Error::Claw { center, leaves }),
        }
    }
}

/// Looks for an induced `K_{1,3}`, reporting the lexicographically first
/// `(center, leaves)` found.
pub fn check_claw_free(g: &UndirectedGraph) -> ClawCheck {
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for (i, &x) in nb.iter().enumerate() {
            for (j, &y) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(x, y) {
                    continue;
                }
                if let Some(&z) = nb[j + 1..].iter().find(|&&z| !g.has_edge(x, z) && !g.has_edge(y, z)) {
                    return ClawCheck::Claw { center: c, leaves: [x, y, z] };
                }
            }
        }
    }
    ClawCheck::ClawFree
}

/// Edges `{x, y}` (as `x < y`, ascending) whose endpoints have no common neighbor.
pub fn find_flat_edges(g: &UndirectedGraph) -> Vec<(usize, usize)> {
    g.edges().filter(|&(x, y)| is_flat(g, x, y)).collect()
}

pub fn is_flat(g: &UndirectedGraph, x: usize, y: usize) -> bool {
    g.has_edge(x, y) && g.neighbor_bits(x).is_disjoint(g.neighbor_bits(y))
}

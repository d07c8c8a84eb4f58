//! Kernels of chordal-family digraphs.
//!
//! * [`solve_chordal_super`]: clique-acyclic super-orientations of chordal
//!   graphs. A chordal graph without a clique-cutset is a clique, and any sink
//!   of a clique is a kernel of it, so the decomposition engine only ever
//!   asks for sinks.
//! * [`solve_chordal_orientation`]: any orientation of a chordal graph, where
//!   a kernel need not exist but is unique when it does.
//! * [`solve_circular_arc_orientation`]: orientations of circular-arc graphs,
//!   by reduction to the previous case.
//!
//! A hand run of [`solve_chordal_orientation`] on `0 -> 1 <- 2`: the smallest
//! simplicial vertex is 0, so the call recurses on `{1, 2} ∪ N+(0) = {1, 2}`,
//! a clique with sink 1. `{1}` absorbs 0 as well, so it is returned.

mod circular;
mod geometry;

pub use circular::{
    reference_point, residual_vertices, solve_circular_arc_orientation, trace_circular_arc_orientation, Attempt,
    CircularTrace,
};
pub use geometry::{parse_representation, write_representation, GeometricRepresentation, RepresentationKind};

use crate::checks::cliques_acyclic;
use crate::chordality::{is_simplicial_within, recognize_chordal, ChordalEvidence};
use crate::decomposition::{Decomposer, DecompositionStats, EliminationStrategy, SinkAtom};
use crate::error::{Error, Result};
use crate::graph::SuperOrientation;
use crate::kernel::{sinks_of, verdict_within};
use crate::vertex_set::VertexSet;
use crate::CliqueAcyclicity;

/// A kernel of a clique-acyclic super-orientation of a chordal graph.
pub fn solve_chordal_super(d: &SuperOrientation) -> Result<VertexSet> {
    solve_chordal_super_with_stats(d).map(|(k, _)| k)
}

/// [`solve_chordal_super`] together with the decomposition counters.
pub fn solve_chordal_super_with_stats(d: &SuperOrientation) -> Result<(VertexSet, DecompositionStats)> {
    let structure = match recognize_chordal(d.underlying()) {
        ChordalEvidence::Chordal(s) => s,
        ChordalEvidence::Hole(hole) => return Err(Error::NotChordal { hole }),
    };
    if let CliqueAcyclicity::Cycle(cycle) = cliques_acyclic(d, &structure.cliques) {
        return Err(Error::NotCliqueAcyclic { cycle });
    }
    Decomposer::new(&SinkAtom, EliminationStrategy::Perfect(structure.position)).solve(d)
}

/// The kernel of an orientation of a chordal graph, or `None` if it has none.
///
/// Clique-acyclicity is not required. Each level removes the smallest-index
/// simplicial vertex `v` together with its in-only neighbors, and afterwards
/// tries `K'` and `K' ∪ {v}`, the only candidates by uniqueness.
pub fn solve_chordal_orientation(d: &SuperOrientation) -> Result<Option<VertexSet>> {
    d.require_orientation()?;
    let g = d.underlying();
    if let ChordalEvidence::Hole(hole) = recognize_chordal(g) {
        return Err(Error::NotChordal { hole });
    }
    let n = d.n();

    // Descend, recording (members, v) per level until a clique remains.
    let mut mask = vec![true; n];
    let mut members: Vec<usize> = (0..n).collect();
    let mut levels: Vec<(Vec<usize>, usize)> = Vec::new();
    while !g.is_clique(&members) {
        let v = members
            .iter()
            .copied()
            .find(|&v| is_simplicial_within(g, v, &mask))
            .expect("a chordal graph has a simplicial vertex");
        let next: Vec<usize> =
            members.iter().copied().filter(|&u| u != v && (!g.has_edge(u, v) || d.has_arc(v, u))).collect();
        for &u in &members {
            mask[u] = false;
        }
        for &u in &next {
            mask[u] = true;
        }
        levels.push((std::mem::replace(&mut members, next), v));
    }

    let sink = match sinks_of(d, &members).first() {
        Some(s) => s,
        None if members.is_empty() => return Ok(Some(VertexSet::new())),
        None => return Ok(None),
    };
    let mut kernel = vec![sink];
    let mut in_set = vec![false; n];
    in_set[sink] = true;
    while let Some((members, v)) = levels.pop() {
        if verdict_within(d, &members, &in_set, &kernel).is_kernel() {
            continue;
        }
        in_set[v] = true;
        let pos = kernel.partition_point(|&u| u < v);
        kernel.insert(pos, v);
        if !verdict_within(d, &members, &in_set, &kernel).is_kernel() {
            return Ok(None);
        }
    }
    Ok(Some(VertexSet::from_sorted(kernel)))
}

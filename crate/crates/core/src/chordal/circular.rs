//! Orientations of circular-arc graphs.
//!
//! Fix the point `p` at the start of vertex 0's arc and let `C` be the arcs
//! through `p`. A kernel meets the clique `C` in at most one vertex `S`, and
//! the rest of it is the kernel of `D_S`, the digraph induced by the arcs
//! outside `C` and not adjacent to `S`. Those arcs avoid `p`, so `D_S` is an
//! orientation of an interval graph and has at most one kernel.

use super::geometry::{Coord, GeometricRepresentation};
use super::solve_chordal_orientation;
use crate::error::Result;
use crate::graph::{SuperOrientation, UndirectedGraph};
use crate::kernel::verify_kernel;
use crate::vertex_set::VertexSet;

/// What happened for each candidate `S`, in the order tried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularTrace {
    pub point: Option<Coord>,
    pub clique: Vec<usize>,
    pub attempts: Vec<Attempt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attempt {
    pub chosen: Option<usize>,
    pub residual: Vec<usize>,
    /// The kernel of `D_S`, in vertices of `D`.
    pub residual_kernel: Option<VertexSet>,
    pub accepted: bool,
}

/// The start of vertex 0's span, or `None` for the empty representation.
pub fn reference_point(rep: &GeometricRepresentation) -> Option<Coord> {
    rep.spans.first().map(|&(s, _)| s)
}

/// Vertices outside `clique` and not adjacent to `chosen`.
pub fn residual_vertices(g: &UndirectedGraph, clique: &[usize], chosen: Option<usize>) -> Vec<usize> {
    (0..g.n()).filter(|v| !clique.contains(v)).filter(|&v| chosen.is_none_or(|s| !g.has_edge(s, v))).collect()
}

/// The kernel of `d` found by trying `S = ∅` and then each `{c}`, `c ∈ C`,
/// in ascending order; `None` if `d` has no kernel.
///
/// Intervals are accepted as arcs that never wrap.
pub fn solve_circular_arc_orientation(
    d: &SuperOrientation,
    rep: &GeometricRepresentation,
) -> Result<Option<VertexSet>> {
    trace_circular_arc_orientation(d, rep).map(|(k, _)| k)
}

pub fn trace_circular_arc_orientation(
    d: &SuperOrientation,
    rep: &GeometricRepresentation,
) -> Result<(Option<VertexSet>, CircularTrace)> {
    d.require_orientation()?;
    let g = d.underlying();
    rep.validate(g)?;
    let point = reference_point(rep);
    let clique: Vec<usize> = match point {
        Some(p) => (0..d.n()).filter(|&v| rep.covers(v, p)).collect(),
        None => Vec::new(),
    };
    debug_assert!(g.is_clique(&clique));

    let mut trace = CircularTrace { point, clique: clique.clone(), attempts: Vec::new() };
    let candidates = std::iter::once(None).chain(clique.iter().map(|&c| Some(c)));
    for chosen in candidates {
        let residual = residual_vertices(g, &clique, chosen);
        let residual_kernel = solve_chordal_orientation(&d.induced(&residual))?.map(|k| k.map_through(&residual));
        let candidate = residual_kernel.as_ref().map(|k| match chosen {
            Some(s) => k.union(&VertexSet::from([s])),
            None => k.clone(),
        });
        let accepted = match &candidate {
            Some(k) => verify_kernel(d, k)?.is_kernel(),
            None => false,
        };
        trace.attempts.push(Attempt { chosen, residual, residual_kernel, accepted });
        if accepted {
            return Ok((candidate, trace));
        }
    }
    Ok((None, trace))
}

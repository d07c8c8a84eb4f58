//! Kernel verification and clique sinks.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SuperOrientation;
use crate::vertex_set::VertexSet;

/// Outcome of checking whether a vertex set is a kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelVerdict {
    Kernel,
    /// Two adjacent vertices, both in the set (`u < v`).
    NotStable(usize, usize),
    /// A vertex outside the set with no out-neighbor inside it.
    NotAbsorbed(usize),
}

impl KernelVerdict {
    pub fn is_kernel(&self) -> bool {
        matches!(self, KernelVerdict::Kernel)
    }
}

impl fmt::Display for KernelVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelVerdict::Kernel => write!(f, "kernel"),
            KernelVerdict::NotStable(u, v) => write!(f, "not stable: {u} and {v} are adjacent"),
            KernelVerdict::NotAbsorbed(u) => write!(f, "not absorbing: {u} has no out-neighbor in the set"),
        }
    }
}

/// Checks that `set` is stable and absorbing in `d`.
///
/// Stability is scanned first, over members in ascending order and then their
/// larger neighbors in ascending order; absorption is then scanned over
/// non-members in ascending order. The first failure is reported.
pub fn verify_kernel(d: &SuperOrientation, set: &VertexSet) -> Result<KernelVerdict> {
    let n = d.n();
    if let Some(v) = set.iter().find(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut member = vec![false; n];
    for v in set {
        member[v] = true;
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(verdict_within(d, &all, &member, set.as_slice()))
}

/// Kernel check restricted to the subdigraph induced by `vertices` (sorted).
/// `in_set[v]` marks the members of the candidate; `set` lists them sorted.
pub(crate) fn verdict_within(
    d: &SuperOrientation,
    vertices: &[usize],
    in_set: &[bool],
    set: &[usize],
) -> KernelVerdict {
    for &u in set {
        if let Some(&v) = d.underlying().neighbors(u).iter().find(|&&v| v > u && in_set[v]) {
            return KernelVerdict::NotStable(u, v);
        }
    }
    for &u in vertices {
        if !in_set[u] && !d.out_neighbors(u).iter().any(|&w| in_set[w]) {
            return KernelVerdict::NotAbsorbed(u);
        }
    }
    KernelVerdict::Kernel
}

/// Vertices of the clique `clique` that receive an arc from every other
/// clique vertex. Fails with a non-adjacent pair if `clique` is not a clique.
pub fn clique_sinks(d: &SuperOrientation, clique: &VertexSet) -> Result<VertexSet> {
    let n = d.n();
    if let Some(v) = clique.iter().find(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if let Some((u, v)) = d.underlying().non_adjacent_pair(clique.as_slice()) {
        return Err(Error::NotAClique(u, v));
    }
    Ok(sinks_of(d, clique.as_slice()))
}

/// Sinks of a set known to be a clique.
pub(crate) fn sinks_of(d: &SuperOrientation, clique: &[usize]) -> VertexSet {
    clique.iter().copied().filter(|&v| clique.iter().all(|&u| u == v || d.has_arc(u, v))).collect()
}

/// The unique sink of a clique in an orientation, or `NoSink`.
pub(crate) fn unique_sink(d: &SuperOrientation, clique: &[usize]) -> Result<usize> {
    let sinks = sinks_of(d, clique);
    debug_assert!(sinks.len() <= 1 || !d.is_orientation());
    sinks.first().ok_or_else(|| Error::NoSink { vertices: clique.to_vec() })
}

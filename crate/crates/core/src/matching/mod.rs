//! Kernels of line graphs of bipartite multigraphs as stable matchings.
//!
//! In the line graph of a root multigraph `B`, the edges at a root vertex `b`
//! form a clique, and an arc `f -> e` inside it says that `b` likes `e` at
//! least as much as `f`. A kernel is then a matching of `B` in which every
//! unmatched edge is blocked at one of its ends, that is, a stable matching.
//!
//! A hand run on the root `K_{2,2}` with left `{0, 2}`, right `{1, 3}`, edges
//! `0 = 01, 1 = 21, 2 = 23, 3 = 03` and the directed cycle `0 -> 1 -> 2 -> 3
//! -> 0`: root vertex 0 ranks `0` over `3`, vertex 2 ranks `2` over `1`, vertex
//! 1 ranks `1` over `0` and vertex 3 ranks `3` over `2`. Vertex 0 proposes
//! along `0`, vertex 2 along `2`; both are accepted, giving `{0, 2}`.

mod root;

pub use root::{parse_root, reconstruct_bipartite_root, write_root, BipartiteRoot, Side};

use std::collections::VecDeque;

use crate::checks::one_way_cycle;
use crate::decomposition::{Decomposer, DecompositionStats, EliminationStrategy};
use crate::error::{Error, Result};
use crate::graph::SuperOrientation;
use crate::kernel::verify_kernel;
use crate::vertex_set::VertexSet;

/// Weak orders of the edges at each root vertex, best first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreferenceTables {
    root: BipartiteRoot,
    /// `layers[b]`: tie classes at root vertex `b`, each ascending.
    layers: Vec<Vec<Vec<usize>>>,
}

impl PreferenceTables {
    pub fn root(&self) -> &BipartiteRoot {
        &self.root
    }

    pub fn layers(&self, b: usize) -> &[Vec<usize>] {
        &self.layers[b]
    }

    /// The strict list at `b`: tie classes in order, ties broken by smallest
    /// line vertex.
    pub fn strict_list(&self, b: usize) -> Vec<usize> {
        self.layers[b].iter().flatten().copied().collect()
    }
}

/// Ranks the edges at every root vertex by peeling off, repeatedly, the edges
/// with no one-way arc to a remaining edge.
///
/// An edge is ranked strictly above another only if there is an arc toward it
/// from the other, and a one-way arc always gives a strict ranking. Bidirected
/// pairs are not forced into the same class: a bidirected `e, f` with `e -> g`
/// one-way and `f, g` bidirected cannot be a total preorder.
pub fn preferences_from_orientation(d: &SuperOrientation, root: &BipartiteRoot) -> Result<PreferenceTables> {
    root.validate(d.underlying())?;
    let mut layers = Vec::with_capacity(root.root_vertex_count());
    for b in 0..root.root_vertex_count() {
        let clique = root.incident(b);
        let mut remaining: Vec<usize> = clique.to_vec();
        let mut classes = Vec::new();
        while !remaining.is_empty() {
            let (top, rest): (Vec<usize>, Vec<usize>) =
                remaining.iter().partition(|&&e| !remaining.iter().any(|&f| d.is_one_way(e, f)));
            if top.is_empty() {
                let cycle = one_way_cycle(d, &remaining).expect("no undominated edge implies a one-way cycle");
                return Err(Error::NotCliqueAcyclic { cycle });
            }
            classes.push(top);
            remaining = rest;
        }
        layers.push(classes);
    }
    Ok(PreferenceTables { root: root.clone(), layers })
}

/// Left-proposing deferred acceptance on the strict lists. The matched edges
/// form a kernel of `d`; this is verified before returning.
pub fn gale_shapley(d: &SuperOrientation, prefs: &PreferenceTables) -> Result<VertexSet> {
    let root = prefs.root();
    let r = root.root_vertex_count();
    let lists: Vec<Vec<usize>> = (0..r).map(|b| prefs.strict_list(b)).collect();
    let mut rank = vec![usize::MAX; root.line_vertex_count() * 2];
    // rank[2 * e + (0 | 1)]: position of e in the list of its left | right end.
    for (b, list) in lists.iter().enumerate() {
        let slot = usize::from(root.side(b) == Side::Right);
        for (i, &e) in list.iter().enumerate() {
            rank[2 * e + slot] = i;
        }
    }

    let mut next_choice = vec![0usize; r];
    let mut held: Vec<Option<usize>> = vec![None; r];
    let mut free: VecDeque<usize> = (0..r).filter(|&b| root.side(b) == Side::Left).collect();
    while let Some(a) = free.pop_front() {
        let Some(&e) = lists[a].get(next_choice[a]) else {
            continue;
        };
        next_choice[a] += 1;
        let (_, b) = root.edge(e);
        match held[b] {
            None => held[b] = Some(e),
            Some(cur) if rank[2 * e + 1] < rank[2 * cur + 1] => {
                held[b] = Some(e);
                free.push_back(root.edge(cur).0);
            }
            Some(_) => free.push_back(a),
        }
    }

    let matching: VertexSet = held.into_iter().flatten().collect();
    match verify_kernel(d, &matching)? {
        verdict if verdict.is_kernel() => Ok(matching),
        verdict => Err(Error::VerificationFailed { verdict }),
    }
}

/// A kernel of a clique-acyclic super-orientation of the line graph of
/// `root`.
pub fn solve_line_bipartite(d: &SuperOrientation, root: &BipartiteRoot) -> Result<VertexSet> {
    let prefs = preferences_from_orientation(d, root)?;
    gale_shapley(d, &prefs)
}

/// Atom solver for DE graphs: reconstruct the root of the atom and match.
pub fn line_bipartite_atom(d: &SuperOrientation, vertices: &[usize]) -> Result<VertexSet> {
    let root =
        reconstruct_bipartite_root(d.underlying()).ok_or_else(|| Error::NotDeAtom { vertices: vertices.to_vec() })?;
    solve_line_bipartite(d, &root)
}

/// A kernel of a clique-acyclic super-orientation of a DE graph, by
/// clique-cutset decomposition down to line graphs of bipartite multigraphs.
/// Class membership is not checked up front; an atom that is not such a line
/// graph is reported as [`Error::NotDeAtom`].
pub fn solve_de_super(d: &SuperOrientation) -> Result<VertexSet> {
    solve_de_super_with_stats(d).map(|(k, _)| k)
}

pub fn solve_de_super_with_stats(d: &SuperOrientation) -> Result<(VertexSet, DecompositionStats)> {
    Decomposer::new(&line_bipartite_atom, EliminationStrategy::MinimalFill).solve(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeDirection, UndirectedGraph};
    use crate::oracle::{enumerate_kernels, DEFAULT_MAX_N};

    fn k22() -> BipartiteRoot {
        parse_root("left 0 2\nright 1 3\nedge 0 0 1\nedge 1 2 1\nedge 2 2 3\nedge 3 0 3\n").unwrap()
    }

    #[test]
    fn four_cycle_by_hand() {
        let d = SuperOrientation::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let k = solve_line_bipartite(&d, &k22()).unwrap();
        assert_eq!(k, VertexSet::from([0, 2]));
        assert!(enumerate_kernels(&d, DEFAULT_MAX_N).unwrap().contains(&k));
    }

    #[test]
    fn all_ties_give_a_perfect_matching() {
        let d = SuperOrientation::from_graph(&UndirectedGraph::cycle(4), |_, _| EdgeDirection::Both);
        let k = solve_line_bipartite(&d, &k22()).unwrap();
        assert_eq!(k.len(), 2);
        assert!(enumerate_kernels(&d, DEFAULT_MAX_N).unwrap().contains(&k));
    }

    #[test]
    fn star_preferences() {
        // One root vertex with three edges: a transitive tournament.
        let root = parse_root("left 0\nright 1 2 3\nedge 0 0 1\nedge 1 0 2\nedge 2 0 3\n").unwrap();
        let d = SuperOrientation::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let prefs = preferences_from_orientation(&d, &root).unwrap();
        assert_eq!(prefs.layers(0), &[vec![2], vec![1], vec![0]]);
        assert_eq!(gale_shapley(&d, &prefs).unwrap(), VertexSet::from([2]));

        let tie = SuperOrientation::from_graph(&UndirectedGraph::complete(3), |_, _| EdgeDirection::Both);
        assert_eq!(preferences_from_orientation(&tie, &root).unwrap().layers(0), &[vec![0, 1, 2]]);

        let cyc = SuperOrientation::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(preferences_from_orientation(&cyc, &root), Err(Error::NotCliqueAcyclic { cycle: vec![0, 1, 2] }));
    }

    #[test]
    fn single_left_vertex_prefers_e() {
        let root = parse_root("left 0\nright 1 2\nedge 0 0 1\nedge 1 0 2\n").unwrap();
        let d = SuperOrientation::new(2, [(1, 0)]).unwrap();
        assert_eq!(solve_line_bipartite(&d, &root).unwrap(), VertexSet::from([0]));
    }

    #[test]
    fn de_solver_on_a_clique_and_a_chain() {
        let d = SuperOrientation::new(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(solve_de_super(&d).unwrap(), VertexSet::from([2]));
        // Square of a path on five vertices, arcs toward larger indices.
        let g = UndirectedGraph::new(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let d = SuperOrientation::from_graph(&g, |_, _| EdgeDirection::Forward);
        let k = solve_de_super(&d).unwrap();
        assert!(enumerate_kernels(&d, DEFAULT_MAX_N).unwrap().contains(&k));
    }

    #[test]
    fn de_solver_rejects_non_line_atoms() {
        // The diamond splits into two triangles; the wheel on a 4-cycle is an
        // atom and the line graph of no bipartite multigraph.
        let diamond = SuperOrientation::new(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        assert!(solve_de_super(&diamond).is_ok());
        let wheel = SuperOrientation::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert!(matches!(solve_de_super(&wheel), Err(Error::NotDeAtom { .. })));
    }
}

//! Kernels of clique-acyclic orientations of claw-free perfect graphs.
//!
//! Atoms of the clique-cutset decomposition either have a kernel with at most
//! nine vertices, found by brute force, or are augmentations of line graphs
//! of bipartite multigraphs, described by an [`AugmentationCertificate`].
//!
//! For one augmented flat edge `xy` with cliques `X`, `Y`, let `s_X`, `s_Y` be
//! the sinks of `D[X]`, `D[Y]`, labelled so that `(s_X, s_Y)` is not an arc,
//! `U = Y \ N(s_X)` and `s_U` the sink of `D[U]`. Keeping only `s_X`, `s_Y`,
//! `s_U` of the gadget gives a set `Z` such that every kernel of `D[Z]` is a
//! kernel of `D`, and `G[Z]` is the host graph with `x, y` played by `s_X`,
//! `s_Y`, except that:
//!
//! * if `s_X` and `s_Y` are non-adjacent, the edge `xy` is missing;
//! * if `s_U` is a third vertex, it is an extra vertex adjacent to the clique
//!   `N[y] \ {x}`.
//!
//! Both changes are again line graphs of bipartite multigraphs, so after all
//! gadgets are reduced the kernel comes from a stable matching.

mod certificate;

pub use certificate::{AugmentationCertificate, Gadget};

use std::cell::Cell;

use crate::checks::{check_claw_free, directed_triangle, ClawCheck};
use crate::decomposition::{AtomSolver, Decomposer, DecompositionStats, EliminationStrategy};
use crate::error::{Error, Result};
use crate::graph::SuperOrientation;
use crate::kernel::{unique_sink, verify_kernel};
use crate::matching::{reconstruct_bipartite_root, solve_line_bipartite, BipartiteRoot, Side};
use crate::oracle::{find_kernel_bounded_stability, DEFAULT_STABILITY_BOUND};
use crate::vertex_set::VertexSet;

/// How `G[Z]` relates to the host graph for one gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetCase {
    /// `(s_Y, s_X)` is an arc and `U` is empty: the host graph itself.
    Intact,
    /// `s_X`, `s_Y` are non-adjacent (then `s_U = s_Y`): the flat edge is
    /// deleted.
    FlatEdgeDeleted,
    /// `(s_Y, s_X)` is an arc and `U` is nonempty: one extra vertex `s_U`.
    ExtraVertex,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetTrace {
    pub s_x: usize,
    pub s_y: usize,
    /// Whether the certificate's `X` and `Y` were exchanged so that
    /// `(s_X, s_Y)` is not an arc.
    pub swapped: bool,
    pub u: Vec<usize>,
    pub s_u: Option<usize>,
    pub case: GadgetCase,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub gadgets: Vec<GadgetTrace>,
    /// `Z_0 = V ⊇ Z_1 ⊇ ... ⊇ Z_h`.
    pub z: Vec<VertexSet>,
    /// Root whose line graph is `G[Z_h]`; its line vertex `i` is the `i`-th
    /// smallest vertex of `Z_h`.
    pub reduced_root: BipartiteRoot,
}

impl ReductionTrace {
    pub fn final_set(&self) -> &VertexSet {
        self.z.last().expect("Z_0 is always present")
    }
}

/// Computes the sinks, the sets `Z_i` and the reduced root. `cert` must
/// already be validated against `d`.
pub fn reduce_augmentations(d: &SuperOrientation, cert: &AugmentationCertificate) -> Result<ReductionTrace> {
    d.require_orientation()?;
    let g = d.underlying();
    let host = &cert.host_root;
    let mut side: Vec<Side> = (0..host.root_vertex_count()).map(|b| host.side(b)).collect();
    // Root edge and graph vertex of every line vertex of the reduced root.
    let mut line: Vec<((usize, usize), usize)> =
        (0..host.line_vertex_count()).filter_map(|h| cert.host_to_graph[h].map(|v| (host.edge(h), v))).collect();
    let mut in_z = vec![true; d.n()];
    let mut z = vec![VertexSet::from_iter(0..d.n())];
    let mut traces = Vec::with_capacity(cert.gadgets.len());

    for gd in &cert.gadgets {
        let mut s_x = unique_sink(d, &gd.x_clique)?;
        let mut s_y = unique_sink(d, &gd.y_clique)?;
        let (mut hx, mut hy, mut ys) = (gd.x, gd.y, &gd.y_clique);
        let swapped = d.has_arc(s_x, s_y);
        if swapped {
            std::mem::swap(&mut s_x, &mut s_y);
            std::mem::swap(&mut hx, &mut hy);
            ys = &gd.x_clique;
        }
        let u: Vec<usize> = {
            let mut u: Vec<usize> = ys.iter().copied().filter(|&w| !g.has_edge(s_x, w)).collect();
            u.sort_unstable();
            u
        };
        let s_u = if u.is_empty() { None } else { Some(unique_sink(d, &u)?) };
        let case = match (d.has_arc(s_y, s_x), s_u) {
            (false, _) => {
                assert_eq!(s_u, Some(s_y), "non-adjacent sinks force s_U = s_Y");
                GadgetCase::FlatEdgeDeleted
            }
            (true, None) => GadgetCase::Intact,
            (true, Some(_)) => GadgetCase::ExtraVertex,
        };

        for &w in gd.x_clique.iter().chain(&gd.y_clique) {
            in_z[w] = false;
        }
        for w in [Some(s_x), Some(s_y), s_u].into_iter().flatten() {
            in_z[w] = true;
        }
        z.push((0..d.n()).filter(|&w| in_z[w]).collect());

        let ex = host.edge(hx);
        let mut ey = host.edge(hy);
        if ex == ey && case != GadgetCase::Intact {
            // Parallel flat edges: move y to a fresh right end first, which
            // keeps the line graph and gives y an end b3 of its own.
            side.push(Side::Right);
            ey = (ey.0, side.len() - 1);
        }
        match case {
            GadgetCase::Intact => {}
            GadgetCase::FlatEdgeDeleted => ey = certificate::split_apart(&mut side, ex, ey),
            GadgetCase::ExtraVertex => {
                // b3 is the end of y not shared with x.
                let b3_left = ey.0 != ex.0;
                let pendant = if b3_left {
                    side.push(Side::Right);
                    (ey.0, side.len() - 1)
                } else {
                    side.push(Side::Left);
                    (side.len() - 1, ey.1)
                };
                line.push((pendant, s_u.expect("extra vertex exists")));
            }
        }
        line.push((ex, s_x));
        line.push((ey, s_y));
        traces.push(GadgetTrace { s_x, s_y, swapped, u, s_u, case });
    }

    line.sort_unstable_by_key(|&(_, v)| v);
    let zh: Vec<usize> = line.iter().map(|&(_, v)| v).collect();
    debug_assert_eq!(zh, z.last().expect("nonempty").as_slice());
    let reduced_root = BipartiteRoot::new(side, line.into_iter().map(|(e, _)| e).collect())?;
    reduced_root
        .validate(&g.induced(&zh))
        .map_err(|e| Error::InvalidCertificate(format!("reduced root does not match G[Z_h]: {e}")))?;
    Ok(ReductionTrace { gadgets: traces, z, reduced_root })
}

/// A kernel of a clique-acyclic orientation of the augmented line graph
/// described by `cert`.
pub fn solve_augmented_line_graph(d: &SuperOrientation, cert: &AugmentationCertificate) -> Result<VertexSet> {
    solve_augmented_line_graph_traced(d, cert).map(|(k, _)| k)
}

pub fn solve_augmented_line_graph_traced(
    d: &SuperOrientation,
    cert: &AugmentationCertificate,
) -> Result<(VertexSet, ReductionTrace)> {
    d.require_orientation()?;
    cert.validate(d.underlying())?;
    let trace = reduce_augmentations(d, cert)?;
    let zh = trace.final_set().as_slice();
    let local = solve_line_bipartite(&d.induced(zh), &trace.reduced_root)?;
    let kernel = local.map_through(zh);
    match verify_kernel(d, &kernel)? {
        v if v.is_kernel() => Ok((kernel, trace)),
        verdict => Err(Error::VerificationFailed { verdict }),
    }
}

/// Supplies augmentation certificates for atoms.
pub trait CertificateProvider {
    /// A certificate for `d = D[vertices]`, in the local indices of `d`.
    fn certificate(&self, d: &SuperOrientation, vertices: &[usize]) -> Result<Option<AugmentationCertificate>>;
}

/// Certificates with no augmentation, from root reconstruction.
#[derive(Debug, Clone, Copy, Default)]
pub struct ReconstructRoots;

impl CertificateProvider for ReconstructRoots {
    fn certificate(&self, d: &SuperOrientation, _: &[usize]) -> Result<Option<AugmentationCertificate>> {
        Ok(reconstruct_bipartite_root(d.underlying()).map(AugmentationCertificate::plain))
    }
}

/// One certificate for the whole input graph, restricted to each atom.
#[derive(Debug, Clone)]
pub struct Covering(pub AugmentationCertificate);

impl CertificateProvider for Covering {
    fn certificate(&self, d: &SuperOrientation, vertices: &[usize]) -> Result<Option<AugmentationCertificate>> {
        let cert = self.0.restrict(vertices)?;
        cert.validate(d.underlying())?;
        Ok(Some(cert))
    }
}

/// Which path solved each atom.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClawfreeStats {
    pub decomposition: DecompositionStats,
    pub brute_force: usize,
    pub augmented: usize,
}

struct ClawfreeAtom<'a> {
    provider: &'a dyn CertificateProvider,
    brute_force: Cell<usize>,
    augmented: Cell<usize>,
}

impl AtomSolver for ClawfreeAtom<'_> {
    /// The result is the one of "brute force with bound nine, else the
    /// certificate". With a certificate at hand, the matching kernel is
    /// computed first: all kernels of an orientation of a claw-free graph
    /// have the same size, so brute force succeeds exactly when that size is
    /// at most nine, and can then be bounded by it.
    fn solve_atom(&self, d: &SuperOrientation, vertices: &[usize]) -> Result<VertexSet> {
        match self.provider.certificate(d, vertices)? {
            Some(cert) => {
                let k = solve_augmented_line_graph(d, &cert)?;
                if k.len() > DEFAULT_STABILITY_BOUND {
                    self.augmented.set(self.augmented.get() + 1);
                    return Ok(k);
                }
                self.brute_force.set(self.brute_force.get() + 1);
                find_kernel_bounded_stability(d, k.len())
                    .ok_or_else(|| Error::AtomFailed(format!("no kernel of size {} found by brute force", k.len())))
            }
            None => {
                self.brute_force.set(self.brute_force.get() + 1);
                find_kernel_bounded_stability(d, DEFAULT_STABILITY_BOUND)
                    .ok_or_else(|| Error::CertificateRequired { vertices: vertices.to_vec() })
            }
        }
    }
}

/// A kernel of a clique-acyclic orientation of a claw-free perfect graph.
///
/// Claw-freeness and the absence of directed triangles are checked;
/// perfection is not.
pub fn solve_clawfree_orientation(d: &SuperOrientation, provider: &dyn CertificateProvider) -> Result<VertexSet> {
    solve_clawfree_orientation_with_stats(d, provider).map(|(k, _)| k)
}

pub fn solve_clawfree_orientation_with_stats(
    d: &SuperOrientation,
    provider: &dyn CertificateProvider,
) -> Result<(VertexSet, ClawfreeStats)> {
    d.require_orientation()?;
    if let ClawCheck::Claw { center, leaves } = check_claw_free(d.underlying()) {
        return Err(Error::Claw { center, leaves });
    }
    if let Some(t) = directed_triangle(d) {
        return Err(Error::NotCliqueAcyclic { cycle: t.to_vec() });
    }
    let atom = ClawfreeAtom { provider, brute_force: Cell::new(0), augmented: Cell::new(0) };
    let (k, decomposition) = Decomposer::new(&atom, EliminationStrategy::MinimalFill).solve(d)?;
    let stats = ClawfreeStats { decomposition, brute_force: atom.brute_force.get(), augmented: atom.augmented.get() };
    Ok((k, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{EdgeDirection, UndirectedGraph};
    use crate::matching::parse_root;
    use crate::oracle::{enumerate_kernels, DEFAULT_MAX_N};

    /// Host: line graph of the path `a - b - c - d` plus a pendant edge, so
    /// host vertices `0 = ab, 1 = bc, 2 = cd, 3 = ce`; `{0, 1}` is flat.
    fn host() -> BipartiteRoot {
        // a=0 (L), b=1 (R), c=2 (L), d=3 (R), e=4 (R).
        parse_root("left 0 2\nright 1 3 4\nedge 0 0 1\nedge 1 2 1\nedge 2 2 3\nedge 3 2 4\n").unwrap()
    }

    /// `X = {0, 1}`, `Y = {2, 3}` with one cross edge `1 - 2`; host vertices
    /// 2, 3 become graph vertices 4, 5.
    fn cert() -> AugmentationCertificate {
        AugmentationCertificate {
            host_root: host(),
            host_to_graph: vec![None, None, Some(4), Some(5)],
            gadgets: vec![Gadget { x: 0, y: 1, x_clique: vec![0, 1], y_clique: vec![2, 3], cross: vec![(1, 2)] }],
        }
    }

    fn oriented(arcs: &[(usize, usize)]) -> SuperOrientation {
        let g = cert().replay(6).unwrap();
        SuperOrientation::from_graph(&g, |u, v| {
            if arcs.contains(&(u, v)) {
                EdgeDirection::Forward
            } else if arcs.contains(&(v, u)) {
                EdgeDirection::Backward
            } else if u < v {
                EdgeDirection::Forward
            } else {
                EdgeDirection::Backward
            }
        })
    }

    #[test]
    fn no_gadgets_means_no_change() {
        let root = host();
        let g = root.line_graph();
        let d = SuperOrientation::from_graph(&g, |_, _| EdgeDirection::Forward);
        let trace = reduce_augmentations(&d, &AugmentationCertificate::plain(root.clone())).unwrap();
        assert_eq!(trace.z, vec![VertexSet::from_iter(0..4)]);
        assert_eq!(trace.reduced_root.line_graph(), g);
        assert_eq!(
            solve_augmented_line_graph(&d, &AugmentationCertificate::plain(root.clone())).unwrap(),
            solve_line_bipartite(&d, &root).unwrap()
        );
    }

    #[test]
    fn extra_vertex_case() {
        // Default arcs go to larger indices: s_X = 1, s_Y = 3, and 1 -> 2
        // (cross) with 3 not adjacent to 1. (s_X, s_Y) is not an arc, and
        // neither is (s_Y, s_X), so the flat edge is deleted.
        let d = oriented(&[]);
        let (k, trace) = solve_augmented_line_graph_traced(&d, &cert()).unwrap();
        let t = &trace.gadgets[0];
        assert_eq!((t.s_x, t.s_y, t.swapped), (1, 3, false));
        assert_eq!(t.case, GadgetCase::FlatEdgeDeleted);
        assert_eq!(t.s_u, Some(3));
        assert!(enumerate_kernels(&d, DEFAULT_MAX_N).unwrap().contains(&k));

        // Make 2 the sink of Y (3 -> 2): then 2 -> 1 gives (s_Y, s_X), and
        // U = {3} has sink 3, a third vertex.
        let d = oriented(&[(3, 2), (2, 1)]);
        let (k, trace) = solve_augmented_line_graph_traced(&d, &cert()).unwrap();
        let t = &trace.gadgets[0];
        assert_eq!((t.s_x, t.s_y, t.s_u), (1, 2, Some(3)));
        assert_eq!(t.case, GadgetCase::ExtraVertex);
        assert_eq!(trace.final_set(), &VertexSet::from([1, 2, 3, 4, 5]));
        assert!(enumerate_kernels(&d, DEFAULT_MAX_N).unwrap().contains(&k));
    }

    #[test]
    fn swap_when_sinks_point_x_to_y() {
        // s_X = 1, s_Y = 2 with 1 -> 2: labels are exchanged.
        let d = oriented(&[(3, 2), (1, 2)]);
        let (k, trace) = solve_augmented_line_graph_traced(&d, &cert()).unwrap();
        let t = &trace.gadgets[0];
        assert!(t.swapped);
        assert_eq!((t.s_x, t.s_y), (2, 1));
        // U = X \ N(2) = {0}, with sink 0.
        assert_eq!(t.s_u, Some(0));
        assert_eq!(t.case, GadgetCase::ExtraVertex);
        assert!(enumerate_kernels(&d, DEFAULT_MAX_N).unwrap().contains(&k));
    }

    #[test]
    fn every_kernel_of_the_reduction_lifts() {
        for arcs in [vec![], vec![(3, 2), (2, 1)], vec![(3, 2), (1, 2)], vec![(1, 0), (2, 1)]] {
            let d = oriented(&arcs);
            let trace = reduce_augmentations(&d, &cert()).unwrap();
            let zh = trace.final_set().as_slice();
            for k in enumerate_kernels(&d.induced(zh), DEFAULT_MAX_N).unwrap() {
                assert!(verify_kernel(&d, &k.map_through(zh)).unwrap().is_kernel());
            }
        }
    }

    #[test]
    fn singleton_gadget_reproduces_host() {
        // X = {a}, Y = {b} with arc b -> a: G equals the host graph.
        let cert = AugmentationCertificate {
            host_root: host(),
            host_to_graph: vec![None, None, Some(2), Some(3)],
            gadgets: vec![Gadget { x: 0, y: 1, x_clique: vec![0], y_clique: vec![1], cross: vec![(0, 1)] }],
        };
        let g = cert.replay(4).unwrap();
        assert_eq!(g, host().line_graph());
        let d = SuperOrientation::from_graph(&g, |u, v| {
            if (u, v) == (0, 1) {
                EdgeDirection::Backward
            } else {
                EdgeDirection::Forward
            }
        });
        let trace = reduce_augmentations(&d, &cert).unwrap();
        assert_eq!(trace.gadgets[0].case, GadgetCase::Intact);
        assert_eq!(trace.final_set(), &VertexSet::from_iter(0..4));
    }

    #[test]
    fn clawfree_solver_paths() {
        let d = oriented(&[(3, 2), (2, 1)]);
        let k = solve_clawfree_orientation(&d, &Covering(cert())).unwrap();
        assert!(enumerate_kernels(&d, DEFAULT_MAX_N).unwrap().contains(&k));
        // Without a certificate the atoms are small enough for brute force.
        assert_eq!(solve_clawfree_orientation(&d, &ReconstructRoots).unwrap(), k);

        let claw = SuperOrientation::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(solve_clawfree_orientation(&claw, &ReconstructRoots), Err(Error::Claw { center: 0, .. })));
        let c3 = SuperOrientation::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(solve_clawfree_orientation(&c3, &ReconstructRoots), Err(Error::NotCliqueAcyclic { .. })));
    }

    #[test]
    fn line_graph_of_a_path() {
        let g = UndirectedGraph::path(7);
        let d =
            SuperOrientation::from_graph(
                &g,
                |u, _| if u % 2 == 0 { EdgeDirection::Forward } else { EdgeDirection::Backward },
            );
        let k = solve_clawfree_orientation(&d, &ReconstructRoots).unwrap();
        assert!(enumerate_kernels(&d, DEFAULT_MAX_N).unwrap().contains(&k));
    }
}

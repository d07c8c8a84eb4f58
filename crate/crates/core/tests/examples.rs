//! Small hand-checked instances with frozen expected outputs, through the
//! public API only.

use kernels_core::chordal::parse_representation;
use kernels_core::matching::{gale_shapley, parse_root, preferences_from_orientation};
use kernels_core::oracle::{acyclic_kernel, DEFAULT_MAX_N};
use kernels_core::*;

fn arcs(n: usize, a: &[(usize, usize)]) -> SuperOrientation {
    SuperOrientation::new(n, a.iter().copied()).unwrap()
}

fn triangle() -> SuperOrientation {
    arcs(3, &[(0, 1), (1, 2), (2, 0)])
}

fn square() -> SuperOrientation {
    arcs(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
}

fn set<const N: usize>(vs: [usize; N]) -> VertexSet {
    VertexSet::from(vs)
}

#[test]
fn verify_kernel_examples() {
    assert_eq!(verify_kernel(&arcs(2, &[(0, 1)]), &set([1])).unwrap(), KernelVerdict::Kernel);
    // 1 -> 2 is the only arc out of 1, and 2 is outside the set.
    assert_eq!(verify_kernel(&triangle(), &set([0])).unwrap(), KernelVerdict::NotAbsorbed(1));
    assert_eq!(verify_kernel(&square(), &set([1, 3])).unwrap(), KernelVerdict::Kernel);
    assert_eq!(verify_kernel(&square(), &set([0, 1])).unwrap(), KernelVerdict::NotStable(0, 1));
    assert!(verify_kernel(&square(), &set([4])).is_err());
}

#[test]
fn clique_sink_examples() {
    let both = SuperOrientation::from_graph(&UndirectedGraph::complete(3), |_, _| EdgeDirection::Both);
    assert_eq!(clique_sinks(&both, &set([0, 1, 2])).unwrap(), set([0, 1, 2]));
    assert_eq!(clique_sinks(&triangle(), &set([0, 1, 2])).unwrap(), VertexSet::new());
    let transitive = arcs(3, &[(0, 1), (0, 2), (1, 2)]);
    assert_eq!(clique_sinks(&transitive, &set([0, 1, 2])).unwrap(), set([2]));
    assert_eq!(clique_sinks(&square(), &set([0, 2])), Err(Error::NotAClique(0, 2)));
}

#[test]
fn clique_acyclicity_examples() {
    assert_eq!(check_clique_acyclic(&triangle(), None).unwrap(), CliqueAcyclicity::Cycle(vec![0, 1, 2]));
    let linear = SuperOrientation::from_graph(&UndirectedGraph::complete(5), |_, _| EdgeDirection::Forward);
    assert!(check_clique_acyclic(&linear, None).unwrap().is_acyclic());

    let k4 = arcs(4, &[(0, 1), (1, 0), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]);
    let evidence = recognize_chordal(k4.underlying());
    assert_eq!(check_clique_acyclic(&k4, Some(&evidence)).unwrap(), CliqueAcyclicity::Cycle(vec![1, 2, 3]));
    assert_eq!(check_clique_acyclic(&k4, None), Err(Error::Undecidable));
}

#[test]
fn chordality_examples() {
    assert_eq!(recognize_chordal(&UndirectedGraph::cycle(4)), ChordalEvidence::Hole(vec![0, 1, 2, 3]));
    let tree = UndirectedGraph::new(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
    assert!(recognize_chordal(&tree).is_chordal());
    let k5 = recognize_chordal(&UndirectedGraph::complete(5));
    assert_eq!(k5.structure().unwrap().cliques, vec![vec![0, 1, 2, 3, 4]]);
}

#[test]
fn claw_and_flat_edge_examples() {
    let star = UndirectedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert_eq!(check_claw_free(&star), ClawCheck::Claw { center: 0, leaves: [1, 2, 3] });
    assert!(check_claw_free(&UndirectedGraph::cycle(5)).is_claw_free());
    assert_eq!(find_flat_edges(&UndirectedGraph::path(3)), vec![(0, 1), (1, 2)]);
    assert!(find_flat_edges(&UndirectedGraph::complete(3)).is_empty());
    assert_eq!(find_flat_edges(&UndirectedGraph::cycle(4)).len(), 4);
}

#[test]
fn oracle_examples() {
    assert!(enumerate_kernels(&triangle(), DEFAULT_MAX_N).unwrap().is_empty());
    assert_eq!(enumerate_kernels(&square(), DEFAULT_MAX_N).unwrap(), vec![set([0, 2]), set([1, 3])]);
    assert_eq!(enumerate_kernels(&arcs(1, &[]), DEFAULT_MAX_N).unwrap(), vec![set([0])]);
    assert_eq!(find_kernel_bounded_stability(&triangle(), 9), None);
    assert_eq!(find_kernel_bounded_stability(&square(), 2), Some(set([0, 2])));
    assert_eq!(find_kernel_bounded_stability(&square(), 1), None);
    let big = SuperOrientation::new(21, []).unwrap();
    assert!(matches!(enumerate_kernels(&big, DEFAULT_MAX_N), Err(Error::TooLarge { n: 21, max: 20 })));
}

#[test]
fn cutset_examples() {
    let split = find_cutset_split(&UndirectedGraph::path(3)).unwrap();
    assert_eq!(split.cutset, set([1]));
    assert_eq!(split.piece.len() + split.rest.len(), 2);
    assert!(find_cutset_split(&UndirectedGraph::complete(4)).is_none());

    let diamond = UndirectedGraph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    let split = find_cutset_split(&diamond).unwrap();
    assert_eq!(split.cutset, set([1, 2]));
    let mut private: Vec<usize> = split.piece.iter().chain(split.rest.iter()).collect();
    private.sort_unstable();
    assert_eq!(private, vec![0, 3]);
}

#[test]
fn combination_by_hand() {
    // 0 -> 1 <- 2 split at C = {1}, B = {0}.
    let d = arcs(3, &[(0, 1), (2, 1)]);
    let split = CutsetSplit { cutset: set([1]), piece: set([0]), rest: set([2]) };
    let rec = |vs: &[usize]| {
        let local = solve_chordal_super(&d.induced(vs))?;
        Ok(local.iter().map(|v| vs[v]).collect())
    };
    let atom = |sub: &SuperOrientation, _: &[usize]| solve_chordal_super(sub);
    let (c, stats) = combine_kernels(&d, &split, &atom, rec).unwrap();
    assert_eq!(c.kernel, set([1]));
    assert_eq!((c.chosen, c.stable_index, c.through_cutset, c.used_fallback), (1, 2, true, false));
    assert_eq!(stats.atom_calls, 2);
}

#[test]
fn decomposition_examples() {
    assert_eq!(solve_chordal_super(&arcs(4, &[(0, 1), (2, 3)])).unwrap(), set([1, 3]));
    let both = SuperOrientation::from_graph(&UndirectedGraph::complete(3), |_, _| EdgeDirection::Both);
    assert_eq!(solve_chordal_super(&both).unwrap(), set([0]));
    assert!(matches!(solve_chordal_super(&triangle()), Err(Error::NotCliqueAcyclic { .. })));
    assert!(matches!(solve_chordal_super(&square()), Err(Error::NotChordal { .. })));
}

#[test]
fn chordal_orientation_examples() {
    assert_eq!(solve_chordal_orientation(&triangle()).unwrap(), None);
    assert_eq!(solve_chordal_orientation(&arcs(3, &[(0, 1), (2, 1)])).unwrap(), Some(set([1])));
}

#[test]
fn acyclic_orientations_match_the_iterated_sink_kernel() {
    for seed in 0..100 {
        let params =
            GenParams::new(GenClass::ChordalOrientation, 12, 0.5, seed).with_orientation(OrientationKind::Acyclic);
        let d = generate(&params).unwrap().digraph;
        let expected = acyclic_kernel(&d).unwrap();
        assert_eq!(solve_chordal_super(&d).unwrap(), expected, "seed {seed}");
        assert_eq!(solve_chordal_orientation(&d).unwrap(), Some(expected), "seed {seed}");
    }
}

#[test]
fn circular_arc_examples() {
    let c5 = arcs(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
    let rep5 = parse_representation("circle 10\narc 0 0 2\narc 1 2 4\narc 2 4 6\narc 3 6 8\narc 4 8 10\n").unwrap();
    assert_eq!(solve_circular_arc_orientation(&c5, &rep5).unwrap(), None);

    let rep4 = parse_representation("circle 8\narc 0 0 2\narc 1 2 4\narc 2 4 6\narc 3 6 8\n").unwrap();
    let k = solve_circular_arc_orientation(&square(), &rep4).unwrap().unwrap();
    assert!(enumerate_kernels(&square(), DEFAULT_MAX_N).unwrap().contains(&k));

    // Intervals: no arc wraps, and the answer is the chordal one.
    let d = arcs(3, &[(0, 1), (2, 1)]);
    let rep = parse_representation("interval 0 0 1\ninterval 1 1 2\ninterval 2 2 3\n").unwrap();
    assert_eq!(solve_circular_arc_orientation(&d, &rep).unwrap(), solve_chordal_orientation(&d).unwrap());
}

#[test]
fn matching_examples() {
    let star = parse_root("left 0\nright 1 2 3\nedge 0 0 1\nedge 1 0 2\nedge 2 0 3\n").unwrap();
    let transitive = arcs(3, &[(0, 1), (0, 2), (1, 2)]);
    let prefs = preferences_from_orientation(&transitive, &star).unwrap();
    assert_eq!(prefs.strict_list(0), vec![2, 1, 0]);
    assert_eq!(prefs.layers(0).len(), 3);
    assert!(matches!(preferences_from_orientation(&triangle(), &star), Err(Error::NotCliqueAcyclic { .. })));

    let k22 = parse_root("left 0 2\nright 1 3\nedge 0 0 1\nedge 1 2 1\nedge 2 2 3\nedge 3 0 3\n").unwrap();
    let prefs = preferences_from_orientation(&square(), &k22).unwrap();
    let k = gale_shapley(&square(), &prefs).unwrap();
    assert_eq!(k, set([0, 2]));
}

#[test]
fn root_reconstruction_examples() {
    let c4 = reconstruct_bipartite_root(&UndirectedGraph::cycle(4)).unwrap();
    assert_eq!(c4.root_vertex_count(), 4);
    c4.validate(&UndirectedGraph::cycle(4)).unwrap();
    let claw = UndirectedGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert!(reconstruct_bipartite_root(&claw).is_none());
    let k2 = reconstruct_bipartite_root(&UndirectedGraph::complete(2)).unwrap();
    assert_eq!(k2.root_vertex_count(), 2);
    assert_eq!(k2.edge(0), k2.edge(1));
}

#[test]
fn de_examples() {
    let path_square = UndirectedGraph::new(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
    let d = SuperOrientation::from_graph(&path_square, |_, _| EdgeDirection::Forward);
    let k = solve_de_super(&d).unwrap();
    assert!(enumerate_kernels(&d, DEFAULT_MAX_N).unwrap().contains(&k));
    assert_eq!(solve_de_super(&arcs(3, &[(0, 1), (0, 2), (1, 2)])).unwrap(), set([2]));
}

#[test]
fn clawfree_examples() {
    // Line graph of a path: a path, solved without any certificate.
    let d = SuperOrientation::from_graph(&UndirectedGraph::path(6), |_, _| EdgeDirection::Forward);
    let k = solve_clawfree_orientation(&d, &ReconstructRoots).unwrap();
    assert_eq!(k, acyclic_kernel(&d).unwrap());
    assert!(matches!(
        solve_clawfree_orientation(&arcs(4, &[(0, 1), (0, 2), (0, 3)]), &ReconstructRoots),
        Err(Error::Claw { center: 0, .. })
    ));
    let bidirected = arcs(2, &[(0, 1), (1, 0)]);
    assert!(matches!(solve_clawfree_orientation(&bidirected, &ReconstructRoots), Err(Error::NotAnOrientation(..))));
}

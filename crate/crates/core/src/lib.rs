//! Kernels of super-orientations of chordal, DE, claw-free perfect and
//! circular-arc graphs.
//!
//! A kernel of a digraph is a vertex set that is stable (no two members are
//! adjacent) and absorbing (every other vertex has an arc into it). The
//! solvers here are built on two reductions: splitting along clique-cutsets
//! ([`decomposition`]) and collapsing augmented flat edges ([`clawfree`]).

pub mod checks;
pub mod chordal;
pub mod chordality;
pub mod clawfree;
pub mod decomposition;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod kernel;
pub mod matching;
pub mod oracle;
pub mod vertex_set;

pub use checks::{check_claw_free, check_clique_acyclic, find_flat_edges, ClawCheck, CliqueAcyclicity};
pub use chordal::{
    solve_chordal_orientation, solve_chordal_super, solve_chordal_super_with_stats, solve_circular_arc_orientation,
    GeometricRepresentation, RepresentationKind,
};
pub use chordality::{recognize_chordal, ChordalEvidence, ChordalStructure};
pub use clawfree::{
    solve_augmented_line_graph, solve_clawfree_orientation, solve_clawfree_orientation_with_stats,
    AugmentationCertificate, CertificateProvider, Covering, Gadget, ReconstructRoots,
};
pub use decomposition::{
    combine_kernels, find_cutset_split, solve_by_decomposition, AtomSolver, CutsetSplit, Decomposer, DecompositionStats,
};
pub use error::{Error, Result};
pub use generators::{generate, Attachment, GenClass, GenParams, Generated, OrientationKind};
pub use graph::{EdgeDirection, SuperOrientation, UndirectedGraph};
pub use kernel::{clique_sinks, verify_kernel, KernelVerdict};
pub use matching::{
    reconstruct_bipartite_root, solve_de_super, solve_de_super_with_stats, solve_line_bipartite, BipartiteRoot,
};
pub use oracle::{enumerate_kernels, find_kernel_bounded_stability};
pub use vertex_set::VertexSet;

//! Kernels by clique-cutset decomposition.
//!
//! Let `C` be a clique-cutset of `D`, `B` a component of `D - C` whose piece
//! `D[B ∪ C]` has no clique-cutset, and `B'` the remaining vertices. With
//! `X_1 = ∅`, the atom solver computes
//!
//! ```text
//! K_i     = kernel of D[B ∪ (C \ X_i)]        for i = 1 ..= |C| + 1
//! X_{i+1} = C ∩ (X_i ∪ K_i)
//! ```
//!
//! and a recursive call computes a kernel `K` of `D[B' ∪ X_{|C|+1}]`. The
//! sets `X_i` grow inside `C`, so some `k <= |C| + 1` has `X_k = X_{k+1}`,
//! and then `C ∩ K_k = ∅`. If `K` misses `C`, `K ∪ K_k` is a kernel of `D`;
//! otherwise, for the smallest `v ∈ C ∩ K` and the first `ℓ` with `v ∈ K_ℓ`,
//! `K ∪ K_ℓ` is.
//!
//! [`solve_by_decomposition`] applies this recursively, with an explicit work
//! stack so that recursion depth is not bounded by the call stack.

mod cutset;

pub use cutset::{find_cutset_split, CutsetSplit, EliminationStrategy};

use crate::error::{Error, Result};
use crate::graph::{components_within, SuperOrientation};
use crate::kernel::{sinks_of, verdict_within, KernelVerdict};
use crate::vertex_set::VertexSet;

/// Computes kernels of the cutset-free pieces (and their induced
/// subdigraphs) of the class being decomposed.
pub trait AtomSolver {
    /// `d` is an induced subdigraph of the digraph being decomposed; local
    /// vertex `i` is `vertices[i]` there. Returns a kernel of `d` in local
    /// indices.
    fn solve_atom(&self, d: &SuperOrientation, vertices: &[usize]) -> Result<VertexSet>;
}

impl<F> AtomSolver for F
where
    F: Fn(&SuperOrientation, &[usize]) -> Result<VertexSet>,
{
    fn solve_atom(&self, d: &SuperOrientation, vertices: &[usize]) -> Result<VertexSet> {
        self(d, vertices)
    }
}

/// Atom solver for cliques: the smallest-index sink.
#[derive(Debug, Clone, Copy, Default)]
pub struct SinkAtom;

impl AtomSolver for SinkAtom {
    fn solve_atom(&self, d: &SuperOrientation, vertices: &[usize]) -> Result<VertexSet> {
        let all: Vec<usize> = (0..d.n()).collect();
        if let Some((u, v)) = d.underlying().non_adjacent_pair(&all) {
            return Err(Error::NotAClique(vertices[u], vertices[v]));
        }
        match sinks_of(d, &all).first() {
            Some(s) => Ok(VertexSet::from([s])),
            None => Err(Error::NoSink { vertices: vertices.to_vec() }),
        }
    }
}

/// Counters collected while decomposing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecompositionStats {
    pub atom_calls: usize,
    pub cutsets: usize,
    /// Levels where the index prescribed by the combination rule failed
    /// verification and the scan over all indices was used instead.
    pub fallbacks: usize,
    pub component_splits: usize,
    pub largest_cutset: usize,
}

/// Result of one combination step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Combination {
    pub kernel: VertexSet,
    /// The 1-based index `i` such that the result is `K ∪ K_i`.
    pub chosen: usize,
    /// The smallest 1-based `k` with `X_k = X_{k+1}`.
    pub stable_index: usize,
    /// Whether `K` met the cutset (the `ℓ` branch).
    pub through_cutset: bool,
    pub used_fallback: bool,
}

/// Kernels `K_1 ..= K_{|C|+1}` of the piece and the sets `X_1 ..= X_{|C|+2}`.
struct PieceKernels {
    cutset: Vec<usize>,
    kernels: Vec<Vec<usize>>,
    xs: Vec<Vec<usize>>,
}

impl PieceKernels {
    fn compute(
        d: &SuperOrientation,
        piece: &[usize],
        cutset: &[usize],
        atom: &dyn AtomSolver,
        stats: &mut DecompositionStats,
    ) -> Result<Self> {
        let mut kernels = Vec::with_capacity(cutset.len() + 1);
        let mut xs = vec![Vec::new()];
        for i in 0..=cutset.len() {
            let x = &xs[i];
            let mut verts: Vec<usize> =
                piece.iter().copied().chain(cutset.iter().copied().filter(|c| !x.contains(c))).collect();
            verts.sort_unstable();
            let local = solve_atom_checked(d, &verts, atom, stats)?;
            let mut next: Vec<usize> = cutset.iter().copied().filter(|c| x.contains(c) || local.contains(c)).collect();
            next.sort_unstable();
            assert!(x.iter().all(|c| next.contains(c)), "X_i must be non-decreasing");
            kernels.push(local);
            xs.push(next);
        }
        Ok(PieceKernels { cutset: cutset.to_vec(), kernels, xs })
    }

    /// `B' ∪ X_{|C|+1}`.
    fn recursion_vertices(&self, rest: &[usize]) -> Vec<usize> {
        let mut v: Vec<usize> = rest.iter().copied().chain(self.xs[self.cutset.len()].iter().copied()).collect();
        v.sort_unstable();
        v
    }

    fn stable_index(&self) -> Option<usize> {
        (0..=self.cutset.len()).find(|&i| self.xs[i] == self.xs[i + 1]).map(|i| i + 1)
    }

    /// Picks `K ∪ K_i` per the combination rule and verifies it on
    /// `D[members]`, scanning every index if the prescribed one fails.
    fn select(
        &self,
        d: &SuperOrientation,
        members: &[usize],
        rec: &[usize],
        stats: &mut DecompositionStats,
    ) -> Result<Combination> {
        let stable_index =
            self.stable_index().ok_or_else(|| Error::AtomFailed("no index with X_k = X_{k+1}".into()))?;
        assert!(
            self.kernels[stable_index - 1].iter().all(|v| !self.cutset.contains(v)),
            "K_k must avoid the cutset when X_k = X_{{k+1}}"
        );
        let meet = self.cutset.iter().copied().filter(|c| rec.binary_search(c).is_ok()).min();
        let chosen = match meet {
            None => stable_index,
            Some(v) => {
                1 + (0..self.cutset.len())
                    .find(|&l| self.kernels[l].contains(&v))
                    .ok_or_else(|| Error::AtomFailed(format!("cutset vertex {v} of K is in no K_l")))?
            }
        };

        let mut in_set = vec![false; d.n()];
        let mut attempt = |i: usize| -> (Vec<usize>, KernelVerdict) {
            let mut set: Vec<usize> = rec.iter().chain(self.kernels[i - 1].iter()).copied().collect();
            set.sort_unstable();
            set.dedup();
            for &v in &set {
                in_set[v] = true;
            }
            let verdict = verdict_within(d, members, &in_set, &set);
            for &v in &set {
                in_set[v] = false;
            }
            (set, verdict)
        };

        let (set, verdict) = attempt(chosen);
        if verdict.is_kernel() {
            return Ok(Combination {
                kernel: VertexSet::from_sorted(set),
                chosen,
                stable_index,
                through_cutset: meet.is_some(),
                used_fallback: false,
            });
        }
        stats.fallbacks += 1;
        for i in 1..=self.cutset.len() + 1 {
            let (set, v) = attempt(i);
            if v.is_kernel() {
                return Ok(Combination {
                    kernel: VertexSet::from_sorted(set),
                    chosen: i,
                    stable_index,
                    through_cutset: meet.is_some(),
                    used_fallback: true,
                });
            }
        }
        Err(Error::VerificationFailed { verdict })
    }
}

fn solve_atom_checked(
    d: &SuperOrientation,
    verts: &[usize],
    atom: &dyn AtomSolver,
    stats: &mut DecompositionStats,
) -> Result<Vec<usize>> {
    let sub = d.induced(verts);
    stats.atom_calls += 1;
    let local = atom.solve_atom(&sub, verts)?;
    if let Some(v) = local.iter().find(|&v| v >= sub.n()) {
        return Err(Error::AtomFailed(format!("atom returned out-of-range vertex {v}")));
    }
    let mut in_set = vec![false; sub.n()];
    for v in &local {
        in_set[v] = true;
    }
    let all: Vec<usize> = (0..sub.n()).collect();
    let verdict = verdict_within(&sub, &all, &in_set, local.as_slice());
    if !verdict.is_kernel() {
        return Err(Error::AtomFailed(format!("atom output {local} on {verts:?}: {verdict}")));
    }
    Ok(local.iter().map(|v| verts[v]).collect())
}

/// One combination step on the whole of `d`: kernels of the piece from
/// `atom`, a kernel of `D[B' ∪ X_{|C|+1}]` from `rec` (given and returning
/// vertices of `d`), and the combined kernel.
pub fn combine_kernels(
    d: &SuperOrientation,
    split: &CutsetSplit,
    atom: &dyn AtomSolver,
    mut rec: impl FnMut(&[usize]) -> Result<VertexSet>,
) -> Result<(Combination, DecompositionStats)> {
    validate_split(d, split)?;
    let mut stats = DecompositionStats { cutsets: 1, largest_cutset: split.cutset.len(), ..Default::default() };
    let pk = PieceKernels::compute(d, split.piece.as_slice(), split.cutset.as_slice(), atom, &mut stats)?;
    let rec_vertices = pk.recursion_vertices(split.rest.as_slice());
    let k = rec(&rec_vertices)?;
    if k.iter().any(|v| rec_vertices.binary_search(&v).is_err()) {
        return Err(Error::AtomFailed("recursive kernel leaves its subdigraph".into()));
    }
    let members: Vec<usize> = (0..d.n()).collect();
    let combination = pk.select(d, &members, k.as_slice(), &mut stats)?;
    Ok((combination, stats))
}

fn validate_split(d: &SuperOrientation, split: &CutsetSplit) -> Result<()> {
    let g = d.underlying();
    let n = d.n();
    let mut owner = vec![0u8; n];
    for (tag, part) in [(1u8, &split.piece), (2, &split.cutset), (3, &split.rest)] {
        for v in part {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if owner[v] != 0 {
                return Err(Error::InvalidParameter(format!("vertex {v} is in two parts of the split")));
            }
            owner[v] = tag;
        }
    }
    if let Some(v) = owner.iter().position(|&t| t == 0) {
        return Err(Error::InvalidParameter(format!("vertex {v} is in no part of the split")));
    }
    if split.piece.is_empty() {
        return Err(Error::InvalidParameter("empty piece".into()));
    }
    if let Some((u, v)) = g.non_adjacent_pair(split.cutset.as_slice()) {
        return Err(Error::NotAClique(u, v));
    }
    for u in &split.piece {
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| owner[v] == 3) {
            return Err(Error::InvalidParameter(format!("edge {{{u}, {v}}} crosses the cutset")));
        }
    }
    Ok(())
}

/// Solves `d` by recursive clique-cutset decomposition, recomputing a minimal
/// elimination ordering at every level.
pub fn solve_by_decomposition(d: &SuperOrientation, atom: &dyn AtomSolver) -> Result<VertexSet> {
    Decomposer::new(atom, EliminationStrategy::MinimalFill).solve(d).map(|(k, _)| k)
}

/// Recursive decomposition driver.
pub struct Decomposer<'a> {
    atom: &'a dyn AtomSolver,
    strategy: EliminationStrategy,
}

enum Task {
    Solve(Vec<usize>),
    Union(usize),
    /// Pending combination; `added` is `B ∪ (C \ X_{|C|+1})`, the members
    /// of this level missing from the recursive call.
    Combine {
        added: Vec<usize>,
        pieces: PieceKernels,
    },
}

/// A solved subproblem: its kernel and its (sorted) vertex set.
struct Solved {
    kernel: Vec<usize>,
    members: Vec<usize>,
}

impl<'a> Decomposer<'a> {
    pub fn new(atom: &'a dyn AtomSolver, strategy: EliminationStrategy) -> Self {
        Decomposer { atom, strategy }
    }

    /// Disconnected digraphs are solved componentwise; a connected one without
    /// a clique-cutset goes to the atom solver; otherwise one combination step
    /// is taken around the recursive call.
    pub fn solve(&self, d: &SuperOrientation) -> Result<(VertexSet, DecompositionStats)> {
        let n = d.n();
        let g = d.underlying();
        let mut stats = DecompositionStats::default();
        let mut tasks = vec![Task::Solve((0..n).collect())];
        let mut results: Vec<Solved> = Vec::new();
        let mut mask = vec![false; n];

        while let Some(task) = tasks.pop() {
            match task {
                Task::Solve(members) => {
                    if members.is_empty() {
                        results.push(Solved { kernel: Vec::new(), members });
                        continue;
                    }
                    for &v in &members {
                        mask[v] = true;
                    }
                    let comps = components_within(g, &members, &mask);
                    let split =
                        if comps.len() == 1 { cutset::split_within(g, &members, &mask, &self.strategy) } else { None };
                    for &v in &members {
                        mask[v] = false;
                    }
                    if comps.len() > 1 {
                        stats.component_splits += 1;
                        tasks.push(Task::Union(comps.len()));
                        tasks.extend(comps.into_iter().map(Task::Solve));
                        continue;
                    }
                    match split {
                        None => {
                            let kernel = solve_atom_checked(d, &members, self.atom, &mut stats)?;
                            results.push(Solved { kernel, members });
                        }
                        Some(split) => {
                            stats.cutsets += 1;
                            stats.largest_cutset = stats.largest_cutset.max(split.cutset.len());
                            let pieces = PieceKernels::compute(
                                d,
                                split.piece.as_slice(),
                                split.cutset.as_slice(),
                                self.atom,
                                &mut stats,
                            )?;
                            let rec = pieces.recursion_vertices(split.rest.as_slice());
                            debug_assert!(rec.len() < members.len());
                            let added = members.into_iter().filter(|v| rec.binary_search(v).is_err()).collect();
                            tasks.push(Task::Combine { added, pieces });
                            tasks.push(Task::Solve(rec));
                        }
                    }
                }
                Task::Union(count) => {
                    let parts = results.split_off(results.len() - count);
                    let mut kernel = Vec::new();
                    let mut members = Vec::new();
                    for part in parts {
                        kernel.extend(part.kernel);
                        members.extend(part.members);
                    }
                    kernel.sort_unstable();
                    members.sort_unstable();
                    results.push(Solved { kernel, members });
                }
                Task::Combine { added, pieces } => {
                    let rec = results.pop().expect("recursive result");
                    let mut members = rec.members;
                    members.extend(added);
                    members.sort_unstable();
                    let combination = pieces.select(d, &members, &rec.kernel, &mut stats)?;
                    results.push(Solved { kernel: combination.kernel.into_vec(), members });
                }
            }
        }

        let kernel = VertexSet::from_sorted(results.pop().map(|s| s.kernel).unwrap_or_default());
        let all: Vec<usize> = (0..n).collect();
        let mut in_set = vec![false; n];
        for v in &kernel {
            in_set[v] = true;
        }
        match verdict_within(d, &all, &in_set, kernel.as_slice()) {
            KernelVerdict::Kernel => Ok((kernel, stats)),
            verdict => Err(Error::VerificationFailed { verdict }),
        }
    }
}

//! Exponential-time ground truth.
//!
//! Both searches walk stable sets in lexicographic order (a set precedes its
//! extensions) and report the sets that absorb every other vertex. Only
//! stable sets are visited: every kernel is a maximal stable set, since a
//! vertex outside a kernel is absorbed and therefore adjacent to it.
//!
//! A branch is cut only when some vertex already passed over is unabsorbed
//! and none of its out-neighbors can still be added.

use crate::error::{Error, Result};
use crate::graph::SuperOrientation;
use crate::vertex_set::VertexSet;

pub const DEFAULT_MAX_N: usize = 20;

/// Default stability bound for the bounded brute force used on atoms.
pub const DEFAULT_STABILITY_BOUND: usize = 9;

/// All kernels of `d` in lexicographic order. Fails if `d` has more than
/// `max_n` vertices.
pub fn enumerate_kernels(d: &SuperOrientation, max_n: usize) -> Result<Vec<VertexSet>> {
    if d.n() > max_n {
        return Err(Error::TooLarge { n: d.n(), max: max_n });
    }
    let mut search = Search::new(d, usize::MAX, false);
    search.run(0);
    Ok(search.found)
}

/// The lexicographically first kernel with at most `bound` vertices, if any.
pub fn find_kernel_bounded_stability(d: &SuperOrientation, bound: usize) -> Option<VertexSet> {
    let mut search = Search::new(d, bound, true);
    search.run(0);
    search.found.into_iter().next()
}

/// The unique kernel of an acyclic digraph, built from the sinks upward: a
/// vertex joins exactly when none of its out-neighbors did. `None` if `d` has
/// a directed cycle (a bidirected pair counts as one).
pub fn acyclic_kernel(d: &SuperOrientation) -> Option<VertexSet> {
    let n = d.n();
    let mut remaining_out: Vec<usize> = (0..n).map(|v| d.out_neighbors(v).len()).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&v| remaining_out[v] == 0).collect();
    let mut in_kernel = vec![false; n];
    let mut done = 0;
    while let Some(v) = ready.pop() {
        done += 1;
        in_kernel[v] = !d.out_neighbors(v).iter().any(|&w| in_kernel[w]);
        for &u in d.in_neighbors(v) {
            remaining_out[u] -= 1;
            if remaining_out[u] == 0 {
                ready.push(u);
            }
        }
    }
    (done == n).then(|| (0..n).filter(|&v| in_kernel[v]).collect())
}

struct Search<'a> {
    d: &'a SuperOrientation,
    bound: usize,
    first_only: bool,
    chosen: Vec<usize>,
    /// Number of chosen neighbors (chosen vertices count themselves).
    blocked: Vec<usize>,
    /// Number of chosen out-neighbors.
    absorbed: Vec<usize>,
    found: Vec<VertexSet>,
}

impl<'a> Search<'a> {
    fn new(d: &'a SuperOrientation, bound: usize, first_only: bool) -> Self {
        let n = d.n();
        Search {
            d,
            bound,
            first_only,
            chosen: Vec::new(),
            blocked: vec![0; n],
            absorbed: vec![0; n],
            found: Vec::new(),
        }
    }

    fn done(&self) -> bool {
        self.first_only && !self.found.is_empty()
    }

    fn is_kernel(&self) -> bool {
        (0..self.d.n()).all(|v| self.absorbed[v] > 0 || self.chosen.contains(&v))
    }

    /// `u` is unabsorbed and no out-neighbor at index `>= from` is free.
    fn hopeless(&self, u: usize, from: usize) -> bool {
        self.absorbed[u] == 0
            && !self.chosen.contains(&u)
            && !self.d.out_neighbors(u).iter().any(|&w| w >= from && self.blocked[w] == 0)
    }

    fn run(&mut self, next: usize) {
        if self.is_kernel() {
            self.found.push(VertexSet::from_sorted(self.chosen.clone()));
            return;
        }
        if self.chosen.len() >= self.bound || (0..next).any(|u| self.hopeless(u, next)) {
            return;
        }
        for x in next..self.d.n() {
            if self.blocked[x] == 0 {
                self.push(x);
                self.run(x + 1);
                self.pop(x);
                if self.done() {
                    return;
                }
            }
            // Later siblings all leave `x` out.
            if self.hopeless(x, x + 1) {
                return;
            }
        }
    }

    fn push(&mut self, x: usize) {
        self.chosen.push(x);
        self.blocked[x] += 1;
        for &w in self.d.underlying().neighbors(x) {
            self.blocked[w] += 1;
        }
        for &w in self.d.in_neighbors(x) {
            self.absorbed[w] += 1;
        }
    }

    fn pop(&mut self, x: usize) {
        self.chosen.pop();
        self.blocked[x] -= 1;
        for &w in self.d.underlying().neighbors(x) {
            self.blocked[w] -= 1;
        }
        for &w in self.d.in_neighbors(x) {
            self.absorbed[w] -= 1;
        }
    }
}

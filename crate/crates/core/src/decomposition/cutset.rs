//! Clique-cutset search by Tarjan's decomposition scheme: walk a minimal
//! elimination ordering and stop at the first vertex whose higher-numbered
//! neighborhood in the filled graph is a clique that separates it.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::graph::UndirectedGraph;
use crate::vertex_set::VertexSet;

/// A clique-cutset `cutset` with the remaining vertices split into `piece`
/// (one component, whose closed piece has no clique-cutset) and `rest`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutsetSplit {
    pub cutset: VertexSet,
    pub piece: VertexSet,
    pub rest: VertexSet,
}

/// How the elimination ordering is obtained at each level.
#[derive(Debug, Clone)]
pub enum EliminationStrategy {
    /// Recompute a minimal elimination ordering (MCS-M) for every subgraph.
    MinimalFill,
    /// A perfect elimination ordering of the whole graph, given as positions
    /// (`position[v]` is the index of `v`). Restricting it to any vertex
    /// subset is again perfect, so it is computed once.
    Perfect(Vec<usize>),
}

/// Finds a clique-cutset of the connected graph `g`, or `None` if `g` has no
/// clique-cutset.
pub fn find_cutset_split(g: &UndirectedGraph) -> Option<CutsetSplit> {
    let members: Vec<usize> = (0..g.n()).collect();
    let mask = vec![true; g.n()];
    split_within(g, &members, &mask, &EliminationStrategy::MinimalFill)
}

/// Same as [`find_cutset_split`] on the subgraph induced by `members`
/// (sorted; `mask[v]` true exactly on members), which must be connected.
pub(crate) fn split_within(
    g: &UndirectedGraph,
    members: &[usize],
    mask: &[bool],
    strategy: &EliminationStrategy,
) -> Option<CutsetSplit> {
    if members.len() < 3 {
        return None;
    }
    let (order, madj) = match strategy {
        EliminationStrategy::MinimalFill => {
            let local = g.induced(members);
            let (order, madj) = mcs_m(&local);
            let order: Vec<usize> = order.into_iter().map(|v| members[v]).collect();
            let madj: Vec<Vec<usize>> = madj.into_iter().map(|l| l.into_iter().map(|v| members[v]).collect()).collect();
            (order, Madj::Local { members, lists: madj })
        }
        EliminationStrategy::Perfect(position) => {
            let mut order = members.to_vec();
            order.sort_unstable_by_key(|&v| position[v]);
            (order, Madj::Perfect { g, mask, position })
        }
    };

    let mut in_cutset = vec![false; g.n()];
    for v in order {
        let mut cutset = madj.of(v);
        if cutset.is_empty() || !g.is_clique(&cutset) {
            continue;
        }
        cutset.sort_unstable();
        for &c in &cutset {
            in_cutset[c] = true;
        }
        let component = component_avoiding(g, v, mask, &in_cutset);
        for &c in &cutset {
            in_cutset[c] = false;
        }
        if component.len() + cutset.len() < members.len() {
            let piece: VertexSet = component.into_iter().collect();
            let cut = VertexSet::from_sorted(cutset);
            let rest = members.iter().copied().filter(|&u| !piece.contains(u) && !cut.contains(u)).collect();
            return Some(CutsetSplit { cutset: cut, piece, rest });
        }
    }
    None
}

enum Madj<'a> {
    Local { members: &'a [usize], lists: Vec<Vec<usize>> },
    Perfect { g: &'a UndirectedGraph, mask: &'a [bool], position: &'a [usize] },
}

impl Madj<'_> {
    fn of(&self, v: usize) -> Vec<usize> {
        match self {
            Madj::Local { members, lists } => {
                let i = members.binary_search(&v).expect("member");
                lists[i].clone()
            }
            Madj::Perfect { g, mask, position } => {
                g.neighbors(v).iter().copied().filter(|&w| mask[w] && position[w] > position[v]).collect()
            }
        }
    }
}

fn component_avoiding(g: &UndirectedGraph, start: usize, mask: &[bool], blocked: &[bool]) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut comp = Vec::new();
    while let Some(v) = queue.pop_front() {
        comp.push(v);
        for &w in g.neighbors(v) {
            if mask[w] && !blocked[w] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    comp
}

/// MCS-M (Berry, Blair, Heggernes and Peyton): a minimal elimination
/// ordering together with, for each vertex, its neighbors in the filled graph
/// that are eliminated later.
///
/// Returns `(order, madj)` with `order[0]` eliminated first.
pub(crate) fn mcs_m(g: &UndirectedGraph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let k = g.n();
    let mut weight = vec![0usize; k];
    let mut numbered = vec![false; k];
    let mut order = vec![0; k];
    let mut madj = vec![Vec::new(); k];
    let mut best = vec![i64::MAX; k];
    for slot in (0..k).rev() {
        let v = (0..k)
            .filter(|&u| !numbered[u])
            .max_by_key(|&u| (weight[u], Reverse(u)))
            .expect("an unnumbered vertex remains");
        numbered[v] = true;
        order[slot] = v;

        // best[u]: smallest possible maximum weight over the interior of a
        // path v ... u through unnumbered vertices (-1 for a direct edge).
        best.iter_mut().for_each(|b| *b = i64::MAX);
        let mut heap = BinaryHeap::new();
        for &u in g.neighbors(v) {
            if !numbered[u] {
                best[u] = -1;
                heap.push(Reverse((-1i64, u)));
            }
        }
        while let Some(Reverse((b, x))) = heap.pop() {
            if b > best[x] {
                continue;
            }
            let through = b.max(weight[x] as i64);
            for &y in g.neighbors(x) {
                if !numbered[y] && through < best[y] {
                    best[y] = through;
                    heap.push(Reverse((through, y)));
                }
            }
        }
        let reached: Vec<usize> = (0..k).filter(|&u| !numbered[u] && best[u] < weight[u] as i64).collect();
        for u in reached {
            weight[u] += 1;
            madj[u].push(v);
        }
    }
    (order, madj)
}

//! Chordal graph recognition by maximum cardinality search, with a perfect
//! elimination ordering, maximal cliques and a clique tree as the positive
//! certificate and an induced hole as the negative one.

use std::collections::VecDeque;

use crate::graph::UndirectedGraph;

/// Certificate returned by [`recognize_chordal`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalEvidence {
    Chordal(ChordalStructure),
    /// An induced cycle of length at least four.
    Hole(Vec<usize>),
}

impl ChordalEvidence {
    pub fn structure(&self) -> Option<&ChordalStructure> {
        match self {
            ChordalEvidence::Chordal(s) => Some(s),
            ChordalEvidence::Hole(_) => None,
        }
    }

    pub fn is_chordal(&self) -> bool {
        self.structure().is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalStructure {
    /// Perfect elimination ordering: `peo[0]` is eliminated first, and the
    /// neighbors of each vertex that come later in the ordering form a clique.
    pub peo: Vec<usize>,
    /// `position[v]` is the index of `v` in `peo`.
    pub position: Vec<usize>,
    /// Maximal cliques, each sorted.
    pub cliques: Vec<Vec<usize>>,
    /// Edges between indices of `cliques`; a spanning forest with one tree per
    /// connected component, satisfying the running intersection property.
    pub clique_tree: Vec<(usize, usize)>,
}

impl ChordalStructure {
    /// Neighbors of `v` that come after it in the elimination ordering.
    pub fn later_neighbors(&self, g: &UndirectedGraph, v: usize) -> Vec<usize> {
        let p = self.position[v];
        g.neighbors(v).iter().copied().filter(|&w| self.position[w] > p).collect()
    }
}

pub fn recognize_chordal(g: &UndirectedGraph) -> ChordalEvidence {
    let peo = mcs_elimination_order(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        position[v] = i;
    }
    match peo_violation(g, &peo, &position) {
        Some((v, x, y)) => ChordalEvidence::Hole(
            find_hole_at(g, v, x, y)
                .unwrap_or_else(|| find_any_hole(g).expect("a failed elimination ordering implies a hole")),
        ),
        None => {
            let (cliques, clique_tree) = cliques_and_tree(g, &peo, &position);
            ChordalEvidence::Chordal(ChordalStructure { peo, position, cliques, clique_tree })
        }
    }
}

/// Reverse of a maximum cardinality search visit order. Ties go to the
/// smallest label bucket entry pushed last, which is deterministic.
fn mcs_elimination_order(g: &UndirectedGraph) -> Vec<usize> {
    let n = g.n();
    let mut label = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    buckets[0] = (0..n).rev().collect();
    let mut high = 0;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = loop {
            match buckets[high].pop() {
                Some(v) if !visited[v] && label[v] == high => break v,
                Some(_) => {}
                None => high -= 1,
            }
        };
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                label[w] += 1;
                buckets[label[w]].push(w);
                high = high.max(label[w]);
            }
        }
    }
    order.reverse();
    order
}

/// Checks that `order` is a perfect elimination ordering. On failure returns
/// `(v, x, y)` where `x` and `y` are non-adjacent later neighbors of `v`.
pub fn peo_violation(g: &UndirectedGraph, order: &[usize], position: &[usize]) -> Option<(usize, usize, usize)> {
    // Each vertex's later neighbors minus its parent must be adjacent to the
    // parent (the earliest later neighbor).
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| position[w] > position[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) else {
            continue;
        };
        if let Some(&w) = later.iter().find(|&&w| w != parent && !g.has_edge(parent, w)) {
            return Some((v, parent.min(w), parent.max(w)));
        }
    }
    None
}

/// An induced cycle through `x - v - y` (x, y non-adjacent neighbors of v),
/// via a shortest `x`-`y` path avoiding the rest of `N[v]`.
fn find_hole_at(g: &UndirectedGraph, v: usize, x: usize, y: usize) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = w != x && w != y;
    }
    let mut prev = vec![usize::MAX; n];
    let mut queue = VecDeque::from([x]);
    prev[x] = x;
    while let Some(a) = queue.pop_front() {
        if a == y {
            break;
        }
        for &b in g.neighbors(a) {
            if !blocked[b] && prev[b] == usize::MAX {
                prev[b] = a;
                queue.push_back(b);
            }
        }
    }
    if prev[y] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut path = vec![y];
    let mut c = y;
    while c != x {
        c = prev[c];
        path.push(c);
    }
    path.reverse();
    cycle.extend(path);
    Some(canonical_cycle(cycle))
}

fn find_any_hole(g: &UndirectedGraph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if !g.has_edge(x, y) {
                    if let Some(h) = find_hole_at(g, v, x, y) {
                        return Some(h);
                    }
                }
            }
        }
    }
    None
}

/// Rotates a cycle to start at its smallest vertex, continuing toward the
/// smaller of that vertex's two cycle neighbors.
pub(crate) fn canonical_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    let len = cycle.len();
    if len == 0 {
        return cycle;
    }
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(start);
    if len > 2 && cycle[len - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

fn cliques_and_tree(g: &UndirectedGraph, peo: &[usize], position: &[usize]) -> (Vec<Vec<usize>>, Vec<(usize, usize)>) {
    let n = g.n();
    let later_count: Vec<usize> =
        (0..n).map(|v| g.neighbors(v).iter().filter(|&&w| position[w] > position[v]).count()).collect();
    let parent: Vec<Option<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().copied().filter(|&w| position[w] > position[v]).min_by_key(|&w| position[w]))
        .collect();

    // {p} ∪ later(p) is not maximal iff some child u of p has
    // |later(u)| = |later(p)| + 1, in which case it sits inside u's clique.
    let mut absorbed_by: Vec<Option<usize>> = vec![None; n];
    for &u in peo {
        if let Some(p) = parent[u] {
            if absorbed_by[p].is_none() && later_count[u] == later_count[p] + 1 {
                absorbed_by[p] = Some(u);
            }
        }
    }

    let mut clique_of = vec![usize::MAX; n];
    let mut cliques = Vec::new();
    for &v in peo {
        clique_of[v] = match absorbed_by[v] {
            Some(u) => clique_of[u],
            None => {
                let mut c: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| position[w] > position[v]).collect();
                c.push(v);
                c.sort_unstable();
                cliques.push(c);
                cliques.len() - 1
            }
        };
    }

    let mut tree = Vec::new();
    for &w in peo {
        if let Some(p) = parent[w] {
            if absorbed_by[p] != Some(w) {
                let (a, b) = (clique_of[w], clique_of[p]);
                tree.push((a.min(b), a.max(b)));
            }
        }
    }
    tree.sort_unstable();
    (cliques, tree)
}

/// True if the neighborhood of `v` within `mask` is a clique.
pub(crate) fn is_simplicial_within(g: &UndirectedGraph, v: usize, mask: &[bool]) -> bool {
    let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| mask[w]).collect();
    g.is_clique(&nb)
}

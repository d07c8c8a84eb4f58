//! Seeded instance generators.
//!
//! Every instance is a pure function of `(class, n, density, seed,
//! orientation)`. Randomness comes from `ChaCha8Rng::seed_from_u64(seed)`
//! (rand_chacha), named in the header of every emitted file as
//! `rng=chacha8`.
//!
//! Recipes:
//!
//! * `chordal-super`, `chordal-orientation`: vertices are added one at a time,
//!   each adjacent to a random subset of an earlier clique, then relabelled
//!   at random.
//! * `circular-arc`: random arcs on a circle of length `n`, with quarter-unit
//!   coordinates.
//! * `line-bipartite`: line graph of a random bipartite multigraph.
//! * `augmented-line`: a host as above in which some edges are replaced by
//!   three-edge paths, whose flat edge pairs are then augmented with small
//!   random cobipartite gadgets.
//! * `clawfree-glued`: the same, on a host made of two bipartite multigraphs
//!   sharing one root vertex, so that its star is a clique-cutset.
//! * `de`: vertical paths in a random rooted tree, adjacent when they share
//!   a tree edge.
//!
//! For `augmented-line`, `clawfree-glued` and `de`, `n` is an upper bound.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chordal::{write_representation, GeometricRepresentation, RepresentationKind};
use crate::clawfree::{AugmentationCertificate, Gadget};
use crate::error::{Error, Result};
use crate::format::write_instance;
use crate::graph::{EdgeDirection, SuperOrientation, UndirectedGraph};
use crate::matching::{write_root, BipartiteRoot, Side};

pub const RNG_NAME: &str = "chacha8";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenClass {
    ChordalSuper,
    ChordalOrientation,
    CircularArc,
    LineBipartite,
    AugmentedLine,
    De,
    ClawfreeGlued,
}

impl GenClass {
    pub const ALL: [GenClass; 7] = [
        GenClass::ChordalSuper,
        GenClass::ChordalOrientation,
        GenClass::CircularArc,
        GenClass::LineBipartite,
        GenClass::AugmentedLine,
        GenClass::De,
        GenClass::ClawfreeGlued,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenClass::ChordalSuper => "chordal-super",
            GenClass::ChordalOrientation => "chordal-orientation",
            GenClass::CircularArc => "circular-arc",
            GenClass::LineBipartite => "line-bipartite",
            GenClass::AugmentedLine => "augmented-line",
            GenClass::De => "de",
            GenClass::ClawfreeGlued => "clawfree-glued",
        }
    }

    pub fn default_orientation(self) -> OrientationKind {
        match self {
            GenClass::ChordalSuper | GenClass::LineBipartite | GenClass::De => {
                OrientationKind::Super { bidirected: 0.3 }
            }
            GenClass::ChordalOrientation | GenClass::CircularArc => OrientationKind::Random,
            GenClass::AugmentedLine | GenClass::ClawfreeGlued => OrientationKind::CliqueAcyclic,
        }
    }
}

impl fmt::Display for GenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown generator class `{s}`")))
    }
}

/// How edges of the generated graph are turned into arcs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OrientationKind {
    /// Each edge gets an independent random direction.
    Random,
    /// Arcs point up a random linear order.
    Acyclic,
    /// Random directions that never close a directed triangle (hence no
    /// one-way cycle in any clique); falls back to `Acyclic` if the greedy
    /// pass gets stuck eight times.
    CliqueAcyclic,
    /// `CliqueAcyclic`, then each arc is made bidirected with the given
    /// probability. Bidirecting only removes one-way arcs, so clique
    /// acyclicity is kept.
    Super { bidirected: f64 },
}

impl fmt::Display for OrientationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientationKind::Random => f.write_str("random"),
            OrientationKind::Acyclic => f.write_str("acyclic"),
            OrientationKind::CliqueAcyclic => f.write_str("clique-acyclic"),
            OrientationKind::Super { bidirected } => write!(f, "super:{bidirected}"),
        }
    }
}

impl FromStr for OrientationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(OrientationKind::Random),
            "acyclic" => Ok(OrientationKind::Acyclic),
            "clique-acyclic" => Ok(OrientationKind::CliqueAcyclic),
            _ => {
                let p = s
                    .strip_prefix("super:")
                    .and_then(|p| p.parse::<f64>().ok())
                    .filter(|p| (0.0..=1.0).contains(p))
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown orientation `{s}`")))?;
                Ok(OrientationKind::Super { bidirected: p })
            }
        }
    }
}

/// Vertical paths in a rooted tree: `parent[t]` for tree nodes (`None` at the
/// root), and for each graph vertex the path from `top` down to `bottom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePaths {
    pub parent: Vec<Option<usize>>,
    pub paths: Vec<(usize, usize)>,
}

impl TreePaths {
    pub fn to_text(&self) -> String {
        let mut out = String::from("tree");
        for p in &self.parent {
            match p {
                Some(p) => out.push_str(&format!(" {p}")),
                None => out.push_str(" -"),
            }
        }
        out.push('\n');
        for (v, (top, bottom)) in self.paths.iter().enumerate() {
            out.push_str(&format!("path {v} {top} {bottom}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Attachment {
    None,
    Representation(GeometricRepresentation),
    Root(BipartiteRoot),
    Certificate(AugmentationCertificate),
    Paths(TreePaths),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Generated {
    pub digraph: SuperOrientation,
    pub attachment: Attachment,
    /// Comment lines describing the parameters.
    pub header: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    pub class: GenClass,
    pub n: usize,
    pub density: f64,
    pub seed: u64,
    pub orientation: OrientationKind,
}

impl GenParams {
    pub fn new(class: GenClass, n: usize, density: f64, seed: u64) -> Self {
        GenParams { class, n, density, seed, orientation: class.default_orientation() }
    }

    pub fn with_orientation(mut self, orientation: OrientationKind) -> Self {
        self.orientation = orientation;
        self
    }
}

impl Generated {
    /// File suffixes and contents: the instance, then the attachment if any.
    /// Text files start with the header comments.
    pub fn files(&self) -> Vec<(&'static str, String)> {
        let comments = || self.header.iter().map(|h| format!("# {h}\n")).collect::<String>();
        let mut out = vec![("instance", write_instance(&self.digraph, &self.header))];
        match &self.attachment {
            Attachment::None => {}
            Attachment::Representation(rep) => out.push(("rep", comments() + &write_representation(rep))),
            Attachment::Root(root) => out.push(("root", comments() + &write_root(root))),
            Attachment::Certificate(cert) => out.push(("cert.json", cert.to_json())),
            Attachment::Paths(paths) => out.push(("paths", comments() + &paths.to_text())),
        }
        out
    }
}

pub fn generate(params: &GenParams) -> Result<Generated> {
    let GenParams { class, n, density, seed, orientation } = *params;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::InvalidParameter(format!("density {density} is outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (graph, attachment) = match class {
        GenClass::ChordalSuper | GenClass::ChordalOrientation => {
            (random_chordal(n, density, &mut rng), Attachment::None)
        }
        GenClass::CircularArc => {
            let rep = random_arcs(n, density, &mut rng);
            (rep.intersection_graph(), Attachment::Representation(rep))
        }
        GenClass::LineBipartite => {
            let root = random_root(n, density, &mut rng);
            (root.line_graph(), Attachment::Root(root))
        }
        GenClass::AugmentedLine | GenClass::ClawfreeGlued => {
            let cert = random_augmentation(n, density, class == GenClass::ClawfreeGlued, &mut rng);
            let g = cert.replay(graph_size(&cert)).expect("generated certificates replay");
            (g, Attachment::Certificate(cert))
        }
        GenClass::De => {
            let (g, paths) = random_tree_paths(n, density, &mut rng);
            (g, Attachment::Paths(paths))
        }
    };
    let digraph = orient(&graph, orientation, &mut rng);
    let header = vec![format!(
        "generator class={class} n={n} density={density} seed={seed} orientation={orientation} rng={RNG_NAME}"
    )];
    Ok(Generated { digraph, attachment, header })
}

fn graph_size(cert: &AugmentationCertificate) -> usize {
    cert.host_to_graph.iter().flatten().count()
        + cert.gadgets.iter().map(|g| g.x_clique.len() + g.y_clique.len()).sum::<usize>()
}

pub fn orient(g: &UndirectedGraph, kind: OrientationKind, rng: &mut ChaCha8Rng) -> SuperOrientation {
    match kind {
        OrientationKind::Random => SuperOrientation::from_graph(g, |_, _| {
            if rng.gen_bool(0.5) {
                EdgeDirection::Forward
            } else {
                EdgeDirection::Backward
            }
        }),
        OrientationKind::Acyclic => linear_order(g, rng),
        OrientationKind::CliqueAcyclic => triangle_free_orientation(g, rng),
        OrientationKind::Super { bidirected } => {
            let d = triangle_free_orientation(g, rng);
            let mut arcs = Vec::with_capacity(d.arc_count() * 2);
            for (u, v) in d.arcs() {
                arcs.push((u, v));
                if rng.gen_bool(bidirected) {
                    arcs.push((v, u));
                }
            }
            SuperOrientation::new(g.n(), arcs).expect("arcs of an orientation")
        }
    }
}

fn linear_order(g: &UndirectedGraph, rng: &mut ChaCha8Rng) -> SuperOrientation {
    let mut rank: Vec<usize> = (0..g.n()).collect();
    rank.shuffle(rng);
    SuperOrientation::from_graph(
        g,
        |u, v| if rank[u] < rank[v] { EdgeDirection::Forward } else { EdgeDirection::Backward },
    )
}

fn triangle_free_orientation(g: &UndirectedGraph, rng: &mut ChaCha8Rng) -> SuperOrientation {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    'attempt: for _ in 0..8 {
        edges.shuffle(rng);
        let mut out = vec![FixedBitSet::with_capacity(n); n];
        let mut inn = vec![FixedBitSet::with_capacity(n); n];
        let mut arcs = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            // a -> b closes a triangle if some w has b -> w -> a.
            let closes = |a: usize, b: usize| out[b].intersection(&inn[a]).next().is_some();
            let (a, b) = if rng.gen_bool(0.5) { (u, v) } else { (v, u) };
            let (a, b) = if !closes(a, b) {
                (a, b)
            } else if !closes(b, a) {
                (b, a)
            } else {
                continue 'attempt;
            };
            out[a].insert(b);
            inn[b].insert(a);
            arcs.push((a, b));
        }
        return SuperOrientation::new(n, arcs).expect("one arc per edge");
    }
    linear_order(g, rng)
}

fn random_chordal(n: usize, density: f64, rng: &mut ChaCha8Rng) -> UndirectedGraph {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut edges = Vec::new();
    for v in 0..n {
        if v > 0 && !rng.gen_bool(0.05) {
            let idx = rng.gen_range(0..cliques.len());
            let base = &cliques[idx];
            let mut attach: Vec<usize> = base.iter().copied().filter(|_| rng.gen_bool(density.max(0.05))).collect();
            if attach.is_empty() {
                attach.push(*base.choose(rng).expect("cliques are nonempty"));
            }
            edges.extend(attach.iter().map(|&u| (u, v)));
            // A full attachment grows the clique instead of adding a new one.
            if attach.len() == base.len() {
                cliques[idx].push(v);
            } else {
                attach.push(v);
                cliques.push(attach);
            }
        } else {
            cliques.push(vec![v]);
        }
    }
    relabel(n, edges, rng)
}

fn relabel(n: usize, edges: Vec<(usize, usize)>, rng: &mut ChaCha8Rng) -> UndirectedGraph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    UndirectedGraph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).expect("a relabelled simple graph")
}

fn random_arcs(n: usize, density: f64, rng: &mut ChaCha8Rng) -> GeometricRepresentation {
    // Quarter units on a circle of length n.
    let q = 4 * n as i64;
    let max_len = ((density * q as f64 / 3.0) as i64).max(1);
    let spans = (0..n)
        .map(|_| {
            let s = rng.gen_range(0..q);
            let len = rng.gen_range(0..=max_len);
            (Ratio::new(s, 4), Ratio::new(s + len, 4))
        })
        .collect();
    GeometricRepresentation::new(RepresentationKind::CircularArc, Some(Ratio::from_integer(n as i64)), spans)
        .expect("arcs on a positive circle")
}

/// A bipartite multigraph with `m` edges on roughly `m (1 - density)` root
/// vertices.
fn random_root(m: usize, density: f64, rng: &mut ChaCha8Rng) -> BipartiteRoot {
    let per_side = (((1.0 - density) * m as f64 / 2.0).round() as usize + 1).max(1);
    let mut side = vec![Side::Left; per_side];
    side.extend(std::iter::repeat_n(Side::Right, per_side));
    let edges = (0..m).map(|_| (rng.gen_range(0..per_side), per_side + rng.gen_range(0..per_side))).collect();
    BipartiteRoot::new(side, edges).expect("left-to-right edges")
}

/// Replaces root edge `e = (a, b)` by the path `a - r - l - b`; returns the
/// three new edges in path order.
fn subdivide_twice(side: &mut Vec<Side>, (a, b): (usize, usize)) -> [(usize, usize); 3] {
    side.push(Side::Right);
    let r = side.len() - 1;
    side.push(Side::Left);
    let l = side.len() - 1;
    [(a, r), (l, r), (l, b)]
}

fn random_augmentation(n: usize, density: f64, glued: bool, rng: &mut ChaCha8Rng) -> AugmentationCertificate {
    // Host edges: about 60% of the budget, at least 3.
    let m = (n * 3 / 5).max(3);
    let (mut side, mut edges) = if glued {
        glued_root(m, density, rng)
    } else {
        let r = random_root(m, density, rng);
        ((0..r.root_vertex_count()).map(|b| r.side(b)).collect::<Vec<_>>(), (0..m).map(|v| r.edge(v)).collect())
    };

    // Make flat pairs by subdividing some edges twice, within budget.
    let mut budget = n.saturating_sub(edges.len());
    let mut candidates = Vec::new();
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.shuffle(rng);
    for e in order {
        if budget < 2 || !rng.gen_bool(0.5) {
            continue;
        }
        let [p, q, r] = subdivide_twice(&mut side, edges[e]);
        edges[e] = p;
        edges.push(q);
        edges.push(r);
        budget -= 2;
        candidates.push(if rng.gen_bool(0.5) { (e, edges.len() - 2) } else { (edges.len() - 2, edges.len() - 1) });
    }
    let root = BipartiteRoot::new(side, edges).expect("subdivision keeps sides");
    let host = root.line_graph();

    // Pairwise non-adjacent flat edges, then gadgets within the budget.
    let mut chosen: Vec<(usize, usize)> = Vec::new();
    for (x, y) in candidates {
        let touches =
            chosen.iter().any(|&(a, b)| [a, b].iter().any(|&w| [x, y].iter().any(|&z| w == z || host.has_edge(w, z))));
        if !touches && crate::checks::is_flat(&host, x, y) {
            chosen.push((x, y));
        }
    }
    let mut sizes = Vec::new();
    for _ in &chosen {
        let (sx, sy) = (rng.gen_range(1..=3usize), rng.gen_range(1..=3usize));
        let grow = (sx + sy).saturating_sub(2);
        if grow > budget {
            sizes.push((1, 1));
        } else {
            budget -= grow;
            sizes.push((sx, sy));
        }
    }

    let hn = host.n();
    let total = hn + sizes.iter().map(|&(a, b)| a + b - 2).sum::<usize>();
    let mut ids: Vec<usize> = (0..total).collect();
    ids.shuffle(rng);
    let mut next = ids.into_iter();
    let mut host_to_graph = vec![None; hn];
    let is_gadget = |h: usize| chosen.iter().any(|&(x, y)| h == x || h == y);
    for (h, slot) in host_to_graph.iter_mut().enumerate() {
        if !is_gadget(h) {
            *slot = next.next();
        }
    }
    let gadgets = chosen
        .iter()
        .zip(&sizes)
        .map(|(&(x, y), &(sx, sy))| {
            let x_clique: Vec<usize> = next.by_ref().take(sx).collect();
            let y_clique: Vec<usize> = next.by_ref().take(sy).collect();
            let mut cross: Vec<(usize, usize)> = x_clique
                .iter()
                .flat_map(|&a| y_clique.iter().map(move |&b| (a, b)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            if cross.is_empty() {
                cross.push((*x_clique.choose(rng).expect("nonempty"), *y_clique.choose(rng).expect("nonempty")));
            }
            Gadget { x, y, x_clique, y_clique, cross }
        })
        .collect();
    AugmentationCertificate { host_root: root, host_to_graph, gadgets }
}

/// Two bipartite multigraphs sharing left root vertex 0, each with at least
/// one edge away from it.
fn glued_root(m: usize, density: f64, rng: &mut ChaCha8Rng) -> (Vec<Side>, Vec<(usize, usize)>) {
    let m1 = (m / 2).max(2);
    let m2 = m.saturating_sub(m1).max(2);
    let mut side = vec![Side::Left];
    let mut edges = Vec::new();
    for part in [m1, m2] {
        let k = (((1.0 - density) * part as f64 / 2.0).round() as usize).max(1);
        let mut lefts = vec![0];
        lefts.extend(side.len()..side.len() + k);
        side.extend(std::iter::repeat_n(Side::Left, k));
        let rights: Vec<usize> = (side.len()..side.len() + k).collect();
        side.extend(std::iter::repeat_n(Side::Right, k));
        edges.push((0, rights[0]));
        edges.push((lefts[1], rights[0]));
        for _ in 2..part {
            edges.push((*lefts.choose(rng).expect("nonempty"), *rights.choose(rng).expect("nonempty")));
        }
    }
    (side, edges)
}

fn random_tree_paths(n: usize, density: f64, rng: &mut ChaCha8Rng) -> (UndirectedGraph, TreePaths) {
    let t = (n / 2 + 2).max(2);
    let parent: Vec<Option<usize>> = (0..t).map(|i| if i == 0 { None } else { Some(rng.gen_range(0..i)) }).collect();
    let depth = {
        let mut d = vec![0usize; t];
        for i in 1..t {
            d[i] = d[parent[i].expect("non-root")] + 1;
        }
        d
    };
    let max_len = ((density * 6.0).round() as usize).max(1);
    let mut paths = Vec::with_capacity(n);
    let mut arc_sets: Vec<Vec<usize>> = Vec::with_capacity(n);
    for _ in 0..n {
        let bottom = rng.gen_range(1..t);
        let len = rng.gen_range(1..=max_len.min(depth[bottom]));
        let mut arcs = Vec::with_capacity(len);
        let mut w = bottom;
        for _ in 0..len {
            arcs.push(w);
            w = parent[w].expect("len is at most the depth");
        }
        arcs.sort_unstable();
        paths.push((w, bottom));
        arc_sets.push(arcs);
    }
    // Paths sharing a tree edge (named by its lower end) are adjacent.
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); t];
    for (v, arcs) in arc_sets.iter().enumerate() {
        for &a in arcs {
            through[a].push(v);
        }
    }
    let edges = through
        .iter()
        .flat_map(|vs| vs.iter().enumerate().flat_map(move |(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v))));
    let g = UndirectedGraph::from_edges_dedup(n, edges).expect("path indices in range");
    (g, TreePaths { parent, paths })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::{check_claw_free, directed_triangle};
    use crate::chordality::recognize_chordal;
    use crate::matching::reconstruct_bipartite_root;

    #[test]
    fn deterministic() {
        for class in GenClass::ALL {
            let p = GenParams::new(class, 12, 0.4, 7);
            assert_eq!(generate(&p).unwrap(), generate(&p).unwrap());
        }
    }

    #[test]
    fn files_are_byte_identical() {
        for class in GenClass::ALL {
            let p = GenParams::new(class, 10, 0.5, 99);
            let a = generate(&p).unwrap().files();
            assert_eq!(a, generate(&p).unwrap().files());
            assert!(a[0].1.starts_with("# generator class="));
            let back = crate::format::parse_instance(&a[0].1).unwrap();
            assert_eq!(back, generate(&p).unwrap().digraph);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate(&GenParams::new(GenClass::De, 0, 0.5, 1)).is_err());
        assert!(generate(&GenParams::new(GenClass::De, 4, 1.5, 1)).is_err());
    }

    #[test]
    fn single_vertex() {
        let g = generate(&GenParams::new(GenClass::ChordalSuper, 1, 0.3, 5)).unwrap();
        assert_eq!(g.digraph.n(), 1);
        assert_eq!(g.digraph.arc_count(), 0);
    }

    #[test]
    fn classes_hold() {
        for seed in 0..40 {
            for class in GenClass::ALL {
                let gen = generate(&GenParams::new(class, 12, 0.4, seed)).unwrap();
                let d = &gen.digraph;
                let g = d.underlying();
                match class {
                    GenClass::ChordalSuper | GenClass::ChordalOrientation => assert!(recognize_chordal(g).is_chordal()),
                    _ => {}
                }
                if let OrientationKind::CliqueAcyclic = class.default_orientation() {
                    assert!(directed_triangle(d).is_none());
                }
                match &gen.attachment {
                    Attachment::Representation(rep) => rep.validate(g).unwrap(),
                    Attachment::Root(root) => root.validate(g).unwrap(),
                    Attachment::Certificate(cert) => {
                        cert.validate(g).unwrap();
                        assert!(check_claw_free(g).is_claw_free());
                    }
                    Attachment::Paths(p) => assert_eq!(p.paths.len(), g.n()),
                    Attachment::None => {}
                }
                if class == GenClass::LineBipartite {
                    assert!(reconstruct_bipartite_root(g).is_some());
                }
                if matches!(class, GenClass::AugmentedLine | GenClass::ClawfreeGlued | GenClass::De) {
                    assert!(g.n() <= 12);
                } else {
                    assert_eq!(g.n(), 12);
                }
            }
        }
    }

    #[test]
    fn augmentations_happen() {
        let with_gadgets = (0..50)
            .filter(|&s| {
                let gen = generate(&GenParams::new(GenClass::AugmentedLine, 14, 0.4, s)).unwrap();
                matches!(gen.attachment, Attachment::Certificate(ref c) if !c.gadgets.is_empty())
            })
            .count();
        assert!(with_gadgets > 25, "only {with_gadgets} of 50 instances have a gadget");
    }

    #[test]
    fn line_bipartite_four_edges() {
        let gen = generate(&GenParams::new(GenClass::LineBipartite, 4, 0.5, 3)).unwrap();
        let Attachment::Root(root) = gen.attachment else { panic!("root expected") };
        root.validate(gen.digraph.underlying()).unwrap();
    }
}

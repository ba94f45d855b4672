//! Generators for the hardness gadget family: buttes, highlands, and the
//! multicolor-clique reduction with witness ridge sets and explicit path
//! decompositions, plus an AND-composition for gluing instances together.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomp::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::oracle::MulticolorInstance;

/// Refuse to build reduction graphs beyond this many vertices.
pub const REDUCTION_VERTEX_CAP: u128 = 50_000_000;

/// Incremental graph assembly with contiguous vertex ids starting at 1.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    n: usize,
    edges: Vec<Edge>,
}

impl GraphBuilder {
    pub fn new() -> GraphBuilder {
        GraphBuilder::default()
    }

    pub fn fresh_vertex(&mut self) -> VertexId {
        self.n += 1;
        self.n
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) {
        debug_assert!(a >= 1 && a <= self.n && b >= 1 && b <= self.n);
        self.edges.push(Edge::new(a, b));
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// A repeated edge is a construction bug, not something to dedup away.
    pub fn build(self) -> Result<Graph> {
        let mut sorted = self.edges.clone();
        sorted.sort_unstable();
        let before = sorted.len();
        sorted.dedup();
        if sorted.len() != before {
            return Err(Error::structural("generator produced a duplicate edge"));
        }
        Graph::new(self.n, self.edges)
    }
}

/// Two-terminal gadget: `h` internally disjoint length-2 paths (shortcuts)
/// and `q` length-(h+2) paths (ridgeways) between the same endpoints.
#[derive(Debug, Clone)]
pub struct Butte {
    s: VertexId,
    t: VertexId,
    h: usize,
    q: usize,
    shortcut_interiors: Vec<VertexId>,
    ridgeway_interiors: Vec<Vec<VertexId>>,
}

impl Butte {
    pub fn s(&self) -> VertexId {
        self.s
    }

    pub fn t(&self) -> VertexId {
        self.t
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn shortcut_interiors(&self) -> &[VertexId] {
        &self.shortcut_interiors
    }

    /// One interior list per ridgeway, in path order from `s`; length h+1.
    pub fn ridgeway_interiors(&self) -> &[Vec<VertexId>] {
        &self.ridgeway_interiors
    }

    /// Both edges of every shortcut, the s-side edge first.
    pub fn shortcut_edges(&self) -> Vec<[Edge; 2]> {
        self.shortcut_interiors
            .iter()
            .map(|&x| [Edge::new(self.s, x), Edge::new(x, self.t)])
            .collect()
    }

    /// All edges of every ridgeway, in path order from `s`; length h+2 each.
    pub fn ridgeway_edges(&self) -> Vec<Vec<Edge>> {
        self.ridgeway_interiors
            .iter()
            .map(|row| {
                let mut path = Vec::with_capacity(row.len() + 1);
                let mut prev = self.s;
                for &r in row {
                    path.push(Edge::new(prev, r));
                    prev = r;
                }
                path.push(Edge::new(prev, self.t));
                path
            })
            .collect()
    }

    /// The s-side edge of every shortcut. Removing all of them ("ridging")
    /// forces every crossing onto a ridgeway, stretching the traversal from
    /// 2 to h+2; removing any strict subset leaves an intact shortcut.
    pub fn ridge_edges(&self) -> Vec<Edge> {
        self.shortcut_interiors
            .iter()
            .map(|&x| Edge::new(self.s, x))
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        2 + self.h + self.q * (self.h + 1)
    }

    pub fn edge_count(&self) -> usize {
        2 * self.h + self.q * (self.h + 2)
    }

    /// Every interior vertex: shortcuts first, then ridgeways row by row.
    pub fn interiors(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.shortcut_interiors
            .iter()
            .copied()
            .chain(self.ridgeway_interiors.iter().flatten().copied())
    }
}

/// Appends a butte between the existing vertices `s` and `t`.
pub fn make_butte(
    b: &mut GraphBuilder,
    s: VertexId,
    t: VertexId,
    h: usize,
    q: usize,
) -> Result<Butte> {
    if h < 1 || q < 1 {
        return Err(Error::argument("a butte needs h >= 1 and q >= 1"));
    }
    if s == t {
        return Err(Error::argument("butte endpoints must differ"));
    }
    let mut shortcut_interiors = Vec::with_capacity(h);
    for _ in 0..h {
        let x = b.fresh_vertex();
        b.add_edge(s, x);
        b.add_edge(x, t);
        shortcut_interiors.push(x);
    }
    let mut ridgeway_interiors = Vec::with_capacity(q);
    for _ in 0..q {
        let mut row = Vec::with_capacity(h + 1);
        let mut prev = s;
        for _ in 0..h + 1 {
            let r = b.fresh_vertex();
            b.add_edge(prev, r);
            prev = r;
            row.push(r);
        }
        b.add_edge(prev, t);
        ridgeway_interiors.push(row);
    }
    Ok(Butte {
        s,
        t,
        h,
        q,
        shortcut_interiors,
        ridgeway_interiors,
    })
}

/// Standalone butte graph with s = 1 and t = 2.
pub fn butte_graph(h: usize, q: usize) -> Result<(Graph, Butte)> {
    let mut b = GraphBuilder::new();
    let s = b.fresh_vertex();
    let t = b.fresh_vertex();
    let butte = make_butte(&mut b, s, t, h, q)?;
    Ok((b.build()?, butte))
}

/// Chain of x low buttes (heights x²+1 .. x²+x) followed by y high buttes
/// (heights in [x⁴, x⁴+x−1]), every butte with x⁴+x² ridgeways, consecutive
/// buttes sharing a junction vertex.
#[derive(Debug, Clone)]
pub struct Highland {
    x: usize,
    y: usize,
    buttes: Vec<Butte>,
}

impl Highland {
    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn z(&self) -> usize {
        self.x + self.y
    }

    pub fn buttes(&self) -> &[Butte] {
        &self.buttes
    }

    /// Butte at 1-based chain position.
    pub fn butte(&self, position: usize) -> &Butte {
        &self.buttes[position - 1]
    }

    pub fn s(&self) -> VertexId {
        self.buttes[0].s()
    }

    pub fn t(&self) -> VertexId {
        self.buttes[self.buttes.len() - 1].t()
    }

    /// Junction above position p: top(0) = s, top(z) = t.
    pub fn top(&self, p: usize) -> VertexId {
        if p == 0 {
            self.s()
        } else {
            self.buttes[p - 1].t()
        }
    }

    /// Top of the last low butte.
    pub fn center(&self) -> VertexId {
        self.top(self.x)
    }

    /// Every crossing pays 2 per fresh butte, so this is the fresh s-t span.
    pub fn fresh_distance(&self) -> usize {
        2 * self.z()
    }
}

pub fn ridgeway_count(x: usize) -> usize {
    x.pow(4) + x * x
}

pub fn high_height_range(x: usize) -> (usize, usize) {
    (x.pow(4), x.pow(4) + x - 1)
}

/// Appends a highland between the existing vertices `s` and `t`.
pub fn make_highland(
    b: &mut GraphBuilder,
    s: VertexId,
    t: VertexId,
    x: usize,
    high_heights: &[usize],
) -> Result<Highland> {
    if x < 1 {
        return Err(Error::argument("a highland needs x >= 1"));
    }
    let y = high_heights.len();
    if y < 1 {
        return Err(Error::argument("a highland needs at least one high butte"));
    }
    let (lo, hi) = high_height_range(x);
    for &h in high_heights {
        if h < lo || h > hi {
            return Err(Error::argument(format!(
                "high butte height {h} outside [{lo}, {hi}] for x = {x}"
            )));
        }
    }
    let q = ridgeway_count(x);
    let z = x + y;
    let mut buttes = Vec::with_capacity(z);
    let mut cur = s;
    for p in 1..=z {
        let next = if p == z { t } else { b.fresh_vertex() };
        let h = if p <= x {
            x * x + p
        } else {
            high_heights[p - x - 1]
        };
        buttes.push(make_butte(b, cur, next, h, q)?);
        cur = next;
    }
    Ok(Highland { x, y, buttes })
}

/// Standalone highland graph with s = 1 and t = 2.
pub fn highland_graph(x: usize, high_heights: &[usize]) -> Result<(Graph, Highland)> {
    let mut b = GraphBuilder::new();
    let s = b.fresh_vertex();
    let t = b.fresh_vertex();
    let hl = make_highland(&mut b, s, t, x, high_heights)?;
    Ok((b.build()?, hl))
}

/// What a reduction-graph vertex stands for. Positions and paths are 1-based;
/// `pair` names the ordered highland (color, color) except for valley
/// interiors, where it is the unordered color pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexRole {
    Source,
    Sink,
    Junction {
        pair: (usize, usize),
        index: usize,
    },
    Shortcut {
        pair: (usize, usize),
        position: usize,
        path: usize,
    },
    Ridgeway {
        pair: (usize, usize),
        position: usize,
        path: usize,
        offset: usize,
    },
    Valley {
        pair: (usize, usize),
        level: usize,
        offset: usize,
    },
}

/// A length-bounded cut instance encoding a multicolor clique question:
/// a budget-size cut enforcing distance > l exists exactly when the source
/// instance has a clique with one vertex per color.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub s: VertexId,
    pub t: VertexId,
    pub l: u32,
    pub budget: usize,
    /// One highland per ordered color pair, all sharing s and t.
    pub highlands: BTreeMap<(usize, usize), Highland>,
    /// Edges linking same-level low tops of same-color highlands.
    pub low_valley_edges: Vec<Edge>,
    /// (unordered pair, level) -> interior vertices of the linking path.
    pub high_valleys: BTreeMap<((usize, usize), usize), Vec<VertexId>>,
    /// (color, vertex) -> the low buttes standing for that vertex.
    pub vertex_butte: BTreeMap<(usize, usize), Vec<((usize, usize), usize)>>,
    /// (unordered pair, edge index) -> the two high buttes standing for it.
    pub edge_butte: BTreeMap<((usize, usize), usize), Vec<((usize, usize), usize)>>,
    pub instance: MulticolorInstance,
    roles: Vec<Option<VertexRole>>,
}

impl ReductionOutput {
    pub fn butte(&self, pair: (usize, usize), position: usize) -> Option<&Butte> {
        let hl = self.highlands.get(&pair)?;
        if position >= 1 && position <= hl.z() {
            Some(hl.butte(position))
        } else {
            None
        }
    }

    pub fn role(&self, v: VertexId) -> &VertexRole {
        self.roles[v].as_ref().expect("vertex has a role")
    }
}

/// The colors j != i in ascending order.
fn others(k: usize, i: usize) -> impl Iterator<Item = usize> {
    (1..=k).filter(move |&j| j != i)
}

/// Height of the high butte at 1-based edge index `l` in the ordered
/// highland (i, j): n⁴ + n − (the edge's endpoint on color i's side).
fn high_heights_for(
    inst: &MulticolorInstance,
    i: usize,
    j: usize,
) -> Vec<usize> {
    let n = inst.class_size();
    let (lo, hi) = (i.min(j), i.max(j));
    inst.pair_edges(lo, hi)
        .iter()
        .map(|&(u, v)| {
            let mine = if i < j { u } else { v };
            n.pow(4) + n - mine
        })
        .collect()
}

pub fn reduce_clique_to_mlbc(inst: &MulticolorInstance) -> Result<ReductionOutput> {
    let k = inst.colors();
    let n = inst.class_size();
    let m = inst.edges_per_pair();
    if m < 1 {
        return Err(Error::argument(
            "the reduction needs at least one edge per color pair",
        ));
    }

    // Exact vertex count, checked before anything is allocated.
    let q = ridgeway_count(n) as u128;
    let mut estimate: u128 = 2;
    for i in 1..=k {
        for j in others(k, i) {
            for l in 1..=n {
                let h = (n * n + l) as u128;
                estimate += h + q * (h + 1);
            }
            for &h in &high_heights_for(inst, i, j) {
                estimate += h as u128 + q * (h as u128 + 1);
            }
            estimate += (n + m - 1) as u128; // junctions
        }
    }
    estimate += (k * (k - 1) / 2) as u128 * (m.saturating_sub(1) * n.saturating_sub(2)) as u128;
    if estimate > REDUCTION_VERTEX_CAP {
        return Err(Error::Resource {
            message: "reduction graph size".into(),
            needed: estimate,
            cap: REDUCTION_VERTEX_CAP,
        });
    }

    let mut b = GraphBuilder::new();
    let s = b.fresh_vertex();
    let t = b.fresh_vertex();

    let mut highlands = BTreeMap::new();
    for i in 1..=k {
        for j in others(k, i) {
            let highs = high_heights_for(inst, i, j);
            let hl = make_highland(&mut b, s, t, n, &highs)?;
            highlands.insert((i, j), hl);
        }
    }

    // Low valleys: same-level low tops of color i's highlands, consecutive
    // in ascending j, linked by single edges.
    let mut low_valley_edges = Vec::new();
    for i in 1..=k {
        let js: Vec<usize> = others(k, i).collect();
        for pair in js.windows(2) {
            let a = &highlands[&(i, pair[0])];
            let c = &highlands[&(i, pair[1])];
            for l in 1..n {
                b.add_edge(a.top(l), c.top(l));
                low_valley_edges.push(Edge::new(a.top(l), c.top(l)));
            }
        }
    }

    // High valleys: level-matched high tops of the two highlands of an
    // unordered pair, linked by paths of length n−1.
    let mut high_valleys = BTreeMap::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let a = &highlands[&(i, j)];
            let c = &highlands[&(j, i)];
            for l in 1..m {
                let (from, to) = (a.top(n + l), c.top(n + l));
                let mut interiors = Vec::with_capacity(n.saturating_sub(2));
                let mut prev = from;
                for _ in 0..n.saturating_sub(2) {
                    let w = b.fresh_vertex();
                    b.add_edge(prev, w);
                    prev = w;
                    interiors.push(w);
                }
                b.add_edge(prev, to);
                high_valleys.insert(((i, j), l), interiors);
            }
        }
    }

    let graph = b.build()?;
    debug_assert_eq!(graph.n() as u128, estimate);

    let mut vertex_butte = BTreeMap::new();
    for i in 1..=k {
        for v in 1..=n {
            let spots: Vec<((usize, usize), usize)> =
                others(k, i).map(|j| ((i, j), v)).collect();
            vertex_butte.insert((i, v), spots);
        }
    }
    let mut edge_butte = BTreeMap::new();
    for i in 1..=k {
        for j in i + 1..=k {
            for l in 1..=m {
                edge_butte.insert(((i, j), l), vec![((i, j), n + l), ((j, i), n + l)]);
            }
        }
    }

    let mut roles: Vec<Option<VertexRole>> = vec![None; graph.n() + 1];
    roles[s] = Some(VertexRole::Source);
    roles[t] = Some(VertexRole::Sink);
    for (&pair, hl) in &highlands {
        for p in 1..hl.z() {
            roles[hl.top(p)] = Some(VertexRole::Junction { pair, index: p });
        }
        for (pi, butte) in hl.buttes().iter().enumerate() {
            let position = pi + 1;
            for (xi, &x) in butte.shortcut_interiors().iter().enumerate() {
                roles[x] = Some(VertexRole::Shortcut {
                    pair,
                    position,
                    path: xi + 1,
                });
            }
            for (ri, row) in butte.ridgeway_interiors().iter().enumerate() {
                for (oi, &r) in row.iter().enumerate() {
                    roles[r] = Some(VertexRole::Ridgeway {
                        pair,
                        position,
                        path: ri + 1,
                        offset: oi + 1,
                    });
                }
            }
        }
    }
    for (&(pair, level), interiors) in &high_valleys {
        for (oi, &w) in interiors.iter().enumerate() {
            roles[w] = Some(VertexRole::Valley {
                pair,
                level,
                offset: oi + 1,
            });
        }
    }
    assert!(
        roles[1..].iter().all(|r| r.is_some()),
        "every reduction vertex has a role"
    );

    let l = 2 * (n + m) + n.pow(4) + n * n + n - 1;
    let budget = k * (k - 1) * (n.pow(4) + n * n + n);
    Ok(ReductionOutput {
        graph,
        s,
        t,
        l: l as u32,
        budget,
        highlands,
        low_valley_edges,
        high_valleys,
        vertex_butte,
        edge_butte,
        instance: inst.clone(),
        roles,
    })
}

/// Ridge edges of every butte standing for the clique's vertices and edges:
/// per ordered pair (i, j), the low butte of vertex i's pick and both high
/// buttes of the picked cross edge. Exactly `budget` edges; removing them
/// pushes dist(s, t) to l+1.
pub fn ridge_set_for_clique(out: &ReductionOutput, clique: &[usize]) -> Result<Vec<Edge>> {
    let inst = &out.instance;
    let k = inst.colors();
    let n = inst.class_size();
    if clique.len() != k {
        return Err(Error::argument(format!(
            "clique needs one vertex per color, got {} of {k}",
            clique.len()
        )));
    }
    for (i, &v) in clique.iter().enumerate() {
        if v < 1 || v > n {
            return Err(Error::argument(format!(
                "clique vertex {v} for color {} out of range",
                i + 1
            )));
        }
    }
    // 1-based edge index per unordered pair.
    let mut picked = BTreeMap::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let e = (clique[i - 1], clique[j - 1]);
            let pos = inst
                .pair_edges(i, j)
                .iter()
                .position(|&cand| cand == e)
                .ok_or_else(|| {
                    Error::argument(format!(
                        "not a clique: no edge ({}, {}) between colors {i} and {j}",
                        e.0, e.1
                    ))
                })?;
            picked.insert((i, j), pos + 1);
        }
    }
    let mut cut = Vec::with_capacity(out.budget);
    for (&(i, j), hl) in &out.highlands {
        cut.extend(hl.butte(clique[i - 1]).ridge_edges());
        let pos = picked[&(i.min(j), i.max(j))];
        cut.extend(hl.butte(n + pos).ridge_edges());
    }
    cut.sort_unstable();
    debug_assert_eq!(cut.len(), out.budget);
    Ok(cut)
}

/// Path decomposition of a standalone butte graph: one bag per shortcut
/// interior plus a window walk along every ridgeway, all over {s, t}.
pub fn butte_path_decomposition(g: &Graph, b: &Butte) -> Result<TreeDecomposition> {
    let mut bags = Vec::new();
    for &x in b.shortcut_interiors() {
        bags.push(vec![b.s(), b.t(), x]);
    }
    for row in b.ridgeway_interiors() {
        for w in row.windows(2) {
            bags.push(vec![b.s(), b.t(), w[0], w[1]]);
        }
    }
    let chain = (0..bags.len() - 1).map(|i| (i, i + 1)).collect();
    TreeDecomposition::new(g.n(), bags, chain)
}

/// Path decomposition of a standalone highland graph: the butte schemes
/// chained in position order (consecutive buttes share their junction).
pub fn highland_path_decomposition(g: &Graph, hl: &Highland) -> Result<TreeDecomposition> {
    let mut bags = Vec::new();
    for b in hl.buttes() {
        for &x in b.shortcut_interiors() {
            bags.push(vec![b.s(), b.t(), x]);
        }
        for row in b.ridgeway_interiors() {
            for w in row.windows(2) {
                bags.push(vec![b.s(), b.t(), w[0], w[1]]);
            }
        }
    }
    let chain = (0..bags.len() - 1).map(|i| (i, i + 1)).collect();
    TreeDecomposition::new(g.n(), bags, chain)
}

/// Emits the bags of one stage: the stage set plus a sliding window over the
/// interior walk. Window size is padded so every full bag reaches exactly
/// `target` vertices, making the overall width independent of instance size;
/// consecutive windows overlap, so walk-adjacent vertices share a bag.
fn push_stage_bags(
    bags: &mut Vec<Vec<VertexId>>,
    stage: &BTreeSet<VertexId>,
    walk: &[VertexId],
    target: usize,
) {
    let base: Vec<VertexId> = stage.iter().copied().collect();
    debug_assert!(walk.iter().all(|v| !stage.contains(v)));
    if walk.is_empty() {
        bags.push(base);
        return;
    }
    let w = target.saturating_sub(base.len()).max(2).min(walk.len());
    let mut end = w;
    loop {
        let mut bag = base.clone();
        bag.extend_from_slice(&walk[end - w..end]);
        bags.push(bag);
        if end == walk.len() {
            break;
        }
        end = (end + w - 1).min(walk.len());
    }
}

/// Path decomposition of a reduction graph. Every bag carries the hub set
/// (s, t, and all highland centers); low levels are swept color by color
/// with that level's junctions staged, high levels pair by pair with both
/// highlands' junctions staged. Width depends only on the color count.
pub fn reduction_path_decomposition(out: &ReductionOutput) -> Result<TreeDecomposition> {
    let k = out.instance.colors();
    let n = out.instance.class_size();
    let m = out.instance.edges_per_pair();
    let mut hub: BTreeSet<VertexId> = BTreeSet::new();
    hub.insert(out.s);
    hub.insert(out.t);
    for hl in out.highlands.values() {
        hub.insert(hl.center());
    }
    let target = hub.len() + (2 * (k - 1)).max(4) + 3;

    let mut bags = Vec::new();
    for i in 1..=k {
        for l in 1..=n {
            let mut stage = hub.clone();
            let mut walk = Vec::new();
            for j in others(k, i) {
                let hl = &out.highlands[&(i, j)];
                stage.insert(hl.top(l - 1));
                stage.insert(hl.top(l));
                walk.extend(hl.butte(l).interiors());
            }
            push_stage_bags(&mut bags, &stage, &walk, target);
        }
    }
    for i in 1..=k {
        for j in i + 1..=k {
            for p in n + 1..=n + m {
                let a = &out.highlands[&(i, j)];
                let c = &out.highlands[&(j, i)];
                let mut stage = hub.clone();
                stage.extend([a.top(p - 1), a.top(p), c.top(p - 1), c.top(p)]);
                let mut walk: Vec<VertexId> = a.butte(p).interiors().collect();
                walk.extend(c.butte(p).interiors());
                if let Some(interiors) = out.high_valleys.get(&((i, j), p - n)) {
                    walk.extend(interiors.iter().copied());
                }
                push_stage_bags(&mut bags, &stage, &walk, target);
            }
        }
    }
    let chain = (0..bags.len() - 1).map(|i| (i, i + 1)).collect();
    TreeDecomposition::new(out.graph.n(), bags, chain)
}

/// Disjoint union of two-terminal instances with all sources identified to
/// s = 1 and all sinks to t = 2, plus the chained path decomposition (one
/// bag per part). Cut sizes add across parts for every length bound, since
/// parts share only the two terminals.
#[derive(Debug, Clone)]
pub struct Composition {
    pub graph: Graph,
    pub s: VertexId,
    pub t: VertexId,
    pub decomposition: TreeDecomposition,
}

pub fn and_compose(parts: &[(Graph, VertexId, VertexId)]) -> Result<Composition> {
    if parts.is_empty() {
        return Err(Error::argument("nothing to compose"));
    }
    let n0 = parts[0].0.n();
    let mut st_edges = 0usize;
    for (g, s, t) in parts {
        if g.n() != n0 {
            return Err(Error::argument(format!(
                "parts must have equal vertex counts, got {} and {n0}",
                g.n()
            )));
        }
        if *s < 1 || *s > g.n() || *t < 1 || *t > g.n() || s == t {
            return Err(Error::argument(format!("bad terminals ({s}, {t})")));
        }
        if g.has_edge(*s, *t) {
            st_edges += 1;
        }
    }
    if st_edges > 1 {
        return Err(Error::argument(
            "at most one part may contain the terminal edge: identification would merge them",
        ));
    }

    let mut b = GraphBuilder::new();
    let s = b.fresh_vertex();
    let t = b.fresh_vertex();
    let mut bags = Vec::with_capacity(parts.len());
    for (g, ps, pt) in parts {
        let mut map = vec![0; g.n() + 1];
        map[*ps] = s;
        map[*pt] = t;
        for v in g.vertices() {
            if map[v] == 0 {
                map[v] = b.fresh_vertex();
            }
        }
        for e in g.edges() {
            b.add_edge(map[e.u], map[e.v]);
        }
        let bag: Vec<VertexId> = g.vertices().map(|v| map[v]).collect();
        bags.push(bag);
    }
    let chain = (0..bags.len() - 1).map(|i| (i, i + 1)).collect();
    let n = b.n();
    let graph = b.build()?;
    let decomposition = TreeDecomposition::new(n, bags, chain)?;
    Ok(Composition {
        graph,
        s,
        t,
        decomposition,
    })
}

/// Seeded random multicolor instance: m distinct cross edges per color pair.
/// With `plant`, a uniformly chosen clique's edges are forced in first.
pub fn random_multicolor_instance(
    k: usize,
    n: usize,
    m: usize,
    plant: bool,
    seed: u64,
) -> Result<MulticolorInstance> {
    if m > n * n {
        return Err(Error::argument(format!(
            "cannot place {m} distinct edges in an {n} x {n} class pair"
        )));
    }
    if m < 1 {
        return Err(Error::argument("need at least one edge per color pair"));
    }
    if k < 2 {
        return Err(Error::argument("need at least two colors"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let clique: Option<Vec<usize>> = if plant {
        Some((0..k).map(|_| rng.gen_range(1..=n)).collect())
    } else {
        None
    };
    let mut edges = BTreeMap::new();
    for i in 1..=k {
        for j in i + 1..=k {
            let mut cells: Vec<(usize, usize)> = (1..=n)
                .flat_map(|u| (1..=n).map(move |v| (u, v)))
                .collect();
            let mut chosen = Vec::with_capacity(m);
            if let Some(c) = &clique {
                let forced = (c[i - 1], c[j - 1]);
                cells.retain(|&cell| cell != forced);
                chosen.push(forced);
            }
            while chosen.len() < m {
                let idx = rng.gen_range(0..cells.len());
                chosen.push(cells.swap_remove(idx));
            }
            edges.insert((i, j), chosen);
        }
    }
    MulticolorInstance::new(k, n, edges)
}

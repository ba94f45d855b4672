//! Undirected simple graphs with 1-based vertex ids, the `.gr` text format,
//! and the distance primitives everything else is built on.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Undirected edge, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
}

impl Edge {
    /// Panics on a self-loop; loops are rejected at every input boundary, so
    /// hitting one here is a bug in the caller.
    pub fn new(a: VertexId, b: VertexId) -> Edge {
        assert!(a != b, "self-loop {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.u, self.v)
    }
}

/// Hop count between two vertices. `Infinite` means no path; the derived
/// order places it above every finite value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_at_least(self, bound: u32) -> bool {
        match self {
            Distance::Finite(d) => d >= bound,
            Distance::Infinite => true,
        }
    }

    pub fn plus(self, other: Distance) -> Distance {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => {
                Distance::Finite(a.saturating_add(b))
            }
            _ => Distance::Infinite,
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Simple undirected graph. Vertices are `1..=n`; the edge list is sorted
/// and duplicate-free. Labels are optional provenance notes used by the
/// instance generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<VertexId>>,
    labels: BTreeMap<VertexId, String>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for e in edges {
            if e.u < 1 || e.v > n {
                return Err(Error::argument(format!(
                    "edge {e} out of range for n = {n}"
                )));
            }
            set.insert(e);
        }
        let edges: Vec<Edge> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n + 1];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adj,
            labels: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.n
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        a != b && self.edges.binary_search(&Edge::new(a, b)).is_ok()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Copy with the given edges removed; vertex set unchanged.
    pub fn without_edges(&self, cut: &[Edge]) -> Graph {
        let banned: BTreeSet<Edge> = cut.iter().copied().collect();
        let kept = self.edges.iter().copied().filter(|e| !banned.contains(e));
        let mut g = Graph::new(self.n, kept).expect("subgraph of a valid graph");
        g.labels = self.labels.clone();
        g
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(&v).map(|s| s.as_str())
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, String> {
        &self.labels
    }
}

/// Parse the `.gr` text format: a `p tw <n> <m>` header, one `<u> <v>` line
/// per edge, `c` comment lines anywhere. Duplicate edge lines collapse.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut edge_lines = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            if header.is_some() {
                return Err(Error::parse(lineno, "duplicate problem line"));
            }
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 3 || parts[0] != "tw" {
                return Err(Error::parse(lineno, format!("bad problem line '{line}'")));
            }
            let n = parts[1]
                .parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("bad vertex count '{}'", parts[1])))?;
            let m = parts[2]
                .parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("bad edge count '{}'", parts[2])))?;
            header = Some((n, m));
            continue;
        }
        let (n, _) = header
            .ok_or_else(|| Error::parse(lineno, "edge line before problem line"))?;
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::parse(lineno, format!("bad edge line '{line}'")));
        }
        let u = parts[0]
            .parse::<usize>()
            .map_err(|_| Error::parse(lineno, format!("bad vertex id '{}'", parts[0])))?;
        let v = parts[1]
            .parse::<usize>()
            .map_err(|_| Error::parse(lineno, format!("bad vertex id '{}'", parts[1])))?;
        if u == v {
            return Err(Error::parse(lineno, format!("self-loop at vertex {u}")));
        }
        if u < 1 || u > n || v < 1 || v > n {
            return Err(Error::parse(
                lineno,
                format!("vertex out of range in '{line}' (n = {n})"),
            ));
        }
        edges.push(Edge::new(u, v));
        edge_lines += 1;
    }
    let (n, m) = header.ok_or_else(|| Error::parse(1, "missing problem line"))?;
    if edge_lines != m {
        return Err(Error::parse(
            1,
            format!("header announces {m} edges, found {edge_lines}"),
        ));
    }
    Graph::new(n, edges)
}

/// Canonical `.gr` text: header, then edges in sorted order. Parsing the
/// output reproduces the graph, and equal graphs serialize identically.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("p tw {} {}\n", g.n(), g.m()));
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u, e.v));
    }
    out
}

/// Hop distances from `src` to every vertex; index 0 is padding.
pub fn bfs_distances(g: &Graph, src: VertexId) -> Vec<Distance> {
    let mut dist = vec![Distance::Infinite; g.n() + 1];
    if src < 1 || src > g.n() {
        return dist;
    }
    dist[src] = Distance::Finite(0);
    let mut queue = VecDeque::from([src]);
    while let Some(x) = queue.pop_front() {
        let dx = match dist[x] {
            Distance::Finite(d) => d,
            Distance::Infinite => unreachable!(),
        };
        for &y in g.neighbors(x) {
            if dist[y] == Distance::Infinite {
                dist[y] = Distance::Finite(dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

/// All-pairs hop distances via Floyd-Warshall; `n x n`, 1-based on both axes.
pub struct Apsp {
    n: usize,
    d: Vec<u32>,
}

const APSP_INF: u32 = u32::MAX / 2;

impl Apsp {
    pub fn get(&self, a: VertexId, b: VertexId) -> Distance {
        let d = self.d[(a - 1) * self.n + (b - 1)];
        if d >= APSP_INF {
            Distance::Infinite
        } else {
            Distance::Finite(d)
        }
    }
}

pub fn all_pairs_distances(g: &Graph) -> Apsp {
    let n = g.n();
    let mut d = vec![APSP_INF; n * n];
    for i in 0..n {
        d[i * n + i] = 0;
    }
    for e in g.edges() {
        d[(e.u - 1) * n + (e.v - 1)] = 1;
        d[(e.v - 1) * n + (e.u - 1)] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i * n + k];
            if dik >= APSP_INF {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k * n + j];
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
    Apsp { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_graph(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| Edge::new(i, i + 1))).unwrap()
    }

    fn cycle_graph(n: usize) -> Graph {
        let mut e: Vec<Edge> = (1..n).map(|i| Edge::new(i, i + 1)).collect();
        e.push(Edge::new(n, 1));
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn edge_normalizes_order() {
        assert_eq!(Edge::new(5, 2), Edge::new(2, 5));
        assert_eq!(Edge::new(5, 2).u, 2);
    }

    #[test]
    fn distance_order_and_bounds() {
        assert!(Distance::Infinite > Distance::Finite(u32::MAX));
        assert!(Distance::Finite(3) < Distance::Finite(4));
        assert!(Distance::Infinite.is_at_least(u32::MAX));
        assert!(Distance::Finite(4).is_at_least(4));
        assert!(!Distance::Finite(3).is_at_least(4));
        assert_eq!(
            Distance::Finite(2).plus(Distance::Finite(3)),
            Distance::Finite(5)
        );
        assert_eq!(
            Distance::Finite(2).plus(Distance::Infinite),
            Distance::Infinite
        );
    }

    #[test]
    fn graph_dedups_and_sorts() {
        let g = Graph::new(
            3,
            [Edge::new(2, 1), Edge::new(1, 2), Edge::new(3, 2)],
        )
        .unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.edges(), &[Edge::new(1, 2), Edge::new(2, 3)]);
        assert_eq!(g.neighbors(2), &[1, 3]);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn graph_rejects_out_of_range() {
        assert!(Graph::new(3, [Edge::new(1, 4)]).is_err());
    }

    #[test]
    fn bfs_on_path() {
        let g = path_graph(5);
        let d = bfs_distances(&g, 1);
        assert_eq!(d[1], Distance::Finite(0));
        assert_eq!(d[5], Distance::Finite(4));
    }

    #[test]
    fn bfs_disconnected() {
        let g = Graph::new(4, [Edge::new(1, 2)]).unwrap();
        let d = bfs_distances(&g, 1);
        assert_eq!(d[2], Distance::Finite(1));
        assert_eq!(d[3], Distance::Infinite);
        assert_eq!(d[4], Distance::Infinite);
    }

    #[test]
    fn cycle_distances() {
        // Opposite corners of a 6-cycle are 3 apart.
        let g = cycle_graph(6);
        let d = bfs_distances(&g, 1);
        assert_eq!(d[4], Distance::Finite(3));
        assert_eq!(d[2], Distance::Finite(1));
        assert_eq!(d[6], Distance::Finite(1));
    }

    #[test]
    fn apsp_matches_bfs() {
        for g in [path_graph(6), cycle_graph(7), {
            let mut e = vec![
                Edge::new(1, 2),
                Edge::new(2, 3),
                Edge::new(3, 4),
                Edge::new(1, 3),
            ];
            e.push(Edge::new(5, 6));
            Graph::new(6, e).unwrap()
        }] {
            let apsp = all_pairs_distances(&g);
            for s in g.vertices() {
                let bfs = bfs_distances(&g, s);
                for t in g.vertices() {
                    assert_eq!(apsp.get(s, t), bfs[t], "s={s} t={t}");
                }
            }
        }
    }

    #[test]
    fn without_edges_removes() {
        let g = cycle_graph(4);
        let h = g.without_edges(&[Edge::new(1, 2)]);
        assert_eq!(h.m(), 3);
        assert_eq!(bfs_distances(&h, 1)[2], Distance::Finite(3));
        let split = g.without_edges(&[Edge::new(1, 2), Edge::new(3, 4)]);
        assert_eq!(split.m(), 2);
        assert_eq!(bfs_distances(&split, 1)[2], Distance::Infinite);
    }

    #[test]
    fn parse_roundtrip() {
        let text = "c example\np tw 4 3\n1 2\n2 3\n3 4\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        let canon = write_graph(&g);
        let g2 = parse_graph(&canon).unwrap();
        assert_eq!(g, g2);
        assert_eq!(write_graph(&g2), canon);
    }

    #[test]
    fn parse_collapses_duplicates() {
        let g = parse_graph("p tw 3 3\n1 2\n2 1\n2 3\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match parse_graph("p tw 3 1\n1 5\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_graph("p tw 3 1\n1 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_graph("1 2\np tw 3 1\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_graph("p tw 3 2\n1 2\n").is_err());
    }
}

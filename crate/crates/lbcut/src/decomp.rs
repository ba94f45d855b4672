//! Tree decompositions: the `.td` text format, a validity checker, a
//! min-degree construction heuristic, and terminal injection (growing bags
//! along tree paths until one bag holds every terminal).

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

/// Bags indexed from 0 internally (the `.td` format is 1-based), connected
/// by tree edges. Construction enforces tree shape and vertex ranges; the
/// covering properties relative to a concrete graph are checked separately
/// by [`validate_decomposition`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeDecomposition {
    n: usize,
    bags: Vec<Vec<VertexId>>,
    tree_edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl TreeDecomposition {
    pub fn new(
        n: usize,
        bags: Vec<Vec<VertexId>>,
        tree_edges: Vec<(usize, usize)>,
    ) -> Result<TreeDecomposition> {
        if bags.is_empty() {
            return Err(Error::argument("a decomposition needs at least one bag"));
        }
        let b = bags.len();
        let mut bags = bags;
        for bag in bags.iter_mut() {
            bag.sort_unstable();
            bag.dedup();
            if let Some(&v) = bag.last() {
                if v > n || bag[0] < 1 {
                    return Err(Error::argument(format!(
                        "bag vertex out of range for n = {n}"
                    )));
                }
            }
        }
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(tree_edges.len());
        for &(a, c) in &tree_edges {
            if a >= b || c >= b || a == c {
                return Err(Error::argument(format!("bad tree edge ({a}, {c})")));
            }
            edges.push((a.min(c), a.max(c)));
        }
        edges.sort_unstable();
        edges.dedup();
        if edges.len() != b - 1 {
            return Err(Error::argument(format!(
                "{} tree edges cannot connect {} bags",
                edges.len(),
                b
            )));
        }
        let mut adj = vec![Vec::new(); b];
        for &(a, c) in &edges {
            adj[a].push(c);
            adj[c].push(a);
        }
        // b-1 edges and connectivity together rule out cycles.
        let mut seen = vec![false; b];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        if reached != b {
            return Err(Error::argument("tree edges do not connect all bags"));
        }
        Ok(TreeDecomposition {
            n,
            bags,
            tree_edges: edges,
            adj,
        })
    }

    pub fn single_bag(n: usize) -> TreeDecomposition {
        let bag: Vec<VertexId> = (1..=n).collect();
        TreeDecomposition::new(n, vec![bag], vec![]).expect("single bag")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, i: usize) -> &[VertexId] {
        &self.bags[i]
    }

    pub fn bags(&self) -> &[Vec<VertexId>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    fn bag_contains(&self, i: usize, v: VertexId) -> bool {
        self.bags[i].binary_search(&v).is_ok()
    }

    /// Tree path between two bags, endpoints included.
    pub fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.bags.len()];
        let mut queue = VecDeque::from([from]);
        parent[from] = from;
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &y in &self.adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![to];
        let mut cur = to;
        while cur != from {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }
}

/// One failed decomposition condition, with its witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    VertexNotCovered(VertexId),
    EdgeNotCovered(Edge),
    OccurrenceDisconnected(VertexId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexNotCovered(v) => write!(f, "vertex {v} appears in no bag"),
            Violation::EdgeNotCovered(e) => write!(f, "edge {e} fits in no bag"),
            Violation::OccurrenceDisconnected(v) => {
                write!(f, "bags containing vertex {v} do not form a subtree")
            }
        }
    }
}

/// Check the covering conditions: every vertex in some bag, every edge
/// inside some bag, and each vertex's bags forming a connected subtree.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> Vec<Violation> {
    let mut violations = Vec::new();
    let n = g.n();
    // Bags per vertex, sorted by construction order.
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, bag) in td.bags().iter().enumerate() {
        for &v in bag {
            if v <= n {
                occ[v].push(i);
            }
        }
    }
    for v in 1..=n {
        if occ[v].is_empty() {
            violations.push(Violation::VertexNotCovered(v));
        }
    }
    for e in g.edges() {
        let (few, other) = if occ[e.u].len() <= occ[e.v].len() {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        if !occ[few].iter().any(|&i| td.bag_contains(i, other)) {
            violations.push(Violation::EdgeNotCovered(*e));
        }
    }
    // A vertex's bags induce a forest inside the tree; they are connected
    // exactly when (#bags) - (#tree edges with the vertex on both ends) = 1.
    let mut shared = vec![0usize; n + 1];
    for &(a, b) in td.tree_edges() {
        let (ba, bb) = (td.bag(a), td.bag(b));
        let (mut i, mut j) = (0, 0);
        while i < ba.len() && j < bb.len() {
            match ba[i].cmp(&bb[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if ba[i] <= n {
                        shared[ba[i]] += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    for v in 1..=n {
        if !occ[v].is_empty() && occ[v].len() != shared[v] + 1 {
            violations.push(Violation::OccurrenceDisconnected(v));
        }
    }
    violations
}

/// Min-degree elimination: repeatedly remove a minimum-degree vertex
/// (smallest id on ties), record the bag {v} with its then-neighbors, and
/// fill the neighborhood into a clique. Best-effort width, deterministic.
pub fn heuristic_decomposition(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(0, vec![vec![]], vec![]).expect("empty");
    }
    let mut adj: Vec<std::collections::BTreeSet<VertexId>> = vec![Default::default(); n + 1];
    for e in g.edges() {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    let mut alive: Vec<bool> = vec![true; n + 1];
    let mut order: Vec<VertexId> = Vec::with_capacity(n);
    let mut bag_of: Vec<Vec<VertexId>> = Vec::with_capacity(n);
    let mut elim_pos = vec![usize::MAX; n + 1];
    for step in 0..n {
        let v = (1..=n)
            .filter(|&x| alive[x])
            .min_by_key(|&x| (adj[x].len(), x))
            .expect("an alive vertex");
        let neigh: Vec<VertexId> = adj[v].iter().copied().collect();
        let mut bag = neigh.clone();
        bag.push(v);
        bag.sort_unstable();
        bag_of.push(bag);
        order.push(v);
        elim_pos[v] = step;
        for i in 0..neigh.len() {
            for j in i + 1..neigh.len() {
                adj[neigh[i]].insert(neigh[j]);
                adj[neigh[j]].insert(neigh[i]);
            }
        }
        for &u in &neigh {
            adj[u].remove(&v);
        }
        alive[v] = false;
        adj[v].clear();
    }
    // Attach each bag to the bag of its first-eliminated neighbor; bags with
    // no later neighbor (component ends) chain to the next elimination step.
    let mut edges = Vec::new();
    for step in 0..n {
        let v = order[step];
        let later = bag_of[step]
            .iter()
            .filter(|&&u| u != v)
            .map(|&u| elim_pos[u])
            .min();
        match later {
            Some(p) => edges.push((step, p)),
            None if step + 1 < n => edges.push((step, step + 1)),
            None => {}
        }
    }
    TreeDecomposition::new(n, bag_of, edges).expect("elimination tree")
}

/// Smallest-index bag containing every terminal.
pub fn root_bag(td: &TreeDecomposition, terminals: &[VertexId]) -> Result<usize> {
    (0..td.bag_count())
        .find(|&i| terminals.iter().all(|&t| td.bag_contains(i, t)))
        .ok_or_else(|| Error::argument("no bag contains all terminals"))
}

/// Grow bags so that some bag holds every terminal: pick the bag already
/// holding the most terminals (smallest index on ties), then walk each
/// missing terminal in from its nearest occurrence along the tree path.
/// Returns the decomposition unchanged when a bag already qualifies.
pub fn inject_terminals(
    td: &TreeDecomposition,
    terminals: &[VertexId],
) -> Result<TreeDecomposition> {
    for &t in terminals {
        if t < 1 || t > td.n() {
            return Err(Error::argument(format!("terminal {t} out of range")));
        }
    }
    if root_bag(td, terminals).is_ok() {
        return Ok(td.clone());
    }
    let target = (0..td.bag_count())
        .max_by_key(|&i| {
            let hit = terminals.iter().filter(|&&t| td.bag_contains(i, t)).count();
            (hit, usize::MAX - i)
        })
        .expect("at least one bag");
    // BFS from the target once; per missing terminal pick the nearest
    // occurrence (smallest index on ties).
    let b = td.bag_count();
    let mut dist = vec![usize::MAX; b];
    let mut parent = vec![usize::MAX; b];
    dist[target] = 0;
    parent[target] = target;
    let mut queue = VecDeque::from([target]);
    while let Some(x) = queue.pop_front() {
        for &y in td.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut bags: Vec<Vec<VertexId>> = td.bags().to_vec();
    for &t in terminals {
        if td.bag_contains(target, t) {
            continue;
        }
        let from = (0..b)
            .filter(|&i| td.bag_contains(i, t))
            .min_by_key(|&i| (dist[i], i))
            .ok_or_else(|| Error::argument(format!("terminal {t} appears in no bag")))?;
        let mut cur = from;
        loop {
            if !bags[cur].contains(&t) {
                bags[cur].push(t);
            }
            if cur == target {
                break;
            }
            cur = parent[cur];
        }
    }
    TreeDecomposition::new(td.n(), bags, td.tree_edges().to_vec())
}

/// Parse the PACE-style `.td` format: `s td <#bags> <max bag size> <n>`
/// header, `b <id> <vertices...>` lines (ids 1-based, each exactly once),
/// then one line per tree edge.
pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<VertexId>>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("s ") {
            if header.is_some() {
                return Err(Error::parse(lineno, "duplicate solution line"));
            }
            let parts: Vec<&str> = rest.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "td" {
                return Err(Error::parse(lineno, format!("bad solution line '{line}'")));
            }
            let nums: Vec<usize> = parts[1..]
                .iter()
                .map(|p| p.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::parse(lineno, format!("bad solution line '{line}'")))?;
            if nums[0] == 0 {
                return Err(Error::parse(lineno, "bag count must be positive"));
            }
            header = Some((nums[0], nums[1], nums[2]));
            bags = vec![None; nums[0]];
            continue;
        }
        let (nbags, _, n) =
            header.ok_or_else(|| Error::parse(lineno, "content before solution line"))?;
        if let Some(rest) = line.strip_prefix("b ") {
            let mut it = rest.split_whitespace();
            let id: usize = it
                .next()
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::parse(lineno, format!("bad bag line '{line}'")))?;
            if id < 1 || id > nbags {
                return Err(Error::parse(lineno, format!("bag id {id} out of range")));
            }
            if bags[id - 1].is_some() {
                return Err(Error::parse(lineno, format!("bag {id} declared twice")));
            }
            let mut content = Vec::new();
            for p in it {
                let v: usize = p
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad vertex '{p}'")))?;
                if v < 1 || v > n {
                    return Err(Error::parse(
                        lineno,
                        format!("bag vertex {v} out of range (n = {n})"),
                    ));
                }
                content.push(v);
            }
            bags[id - 1] = Some(content);
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::parse(lineno, format!("bad line '{line}'")));
        }
        let a: usize = parts[0]
            .parse()
            .map_err(|_| Error::parse(lineno, format!("bad bag id '{}'", parts[0])))?;
        let c: usize = parts[1]
            .parse()
            .map_err(|_| Error::parse(lineno, format!("bad bag id '{}'", parts[1])))?;
        if a < 1 || a > nbags || c < 1 || c > nbags {
            return Err(Error::parse(lineno, format!("tree edge ({a}, {c}) out of range")));
        }
        if a == c {
            return Err(Error::parse(lineno, format!("tree edge ({a}, {c}) is a loop")));
        }
        edges.push((a - 1, c - 1));
    }
    let (nbags, max_size, n) = header.ok_or_else(|| Error::parse(1, "missing solution line"))?;
    let mut resolved = Vec::with_capacity(nbags);
    for (i, bag) in bags.into_iter().enumerate() {
        resolved.push(bag.ok_or_else(|| Error::parse(1, format!("bag {} missing", i + 1)))?);
    }
    let actual_max = resolved.iter().map(|b| b.len()).max().unwrap_or(0);
    if actual_max != max_size {
        return Err(Error::parse(
            1,
            format!("header announces max bag size {max_size}, found {actual_max}"),
        ));
    }
    TreeDecomposition::new(n, resolved, edges).map_err(|e| match e {
        Error::Argument(msg) => Error::parse(1, msg),
        other => other,
    })
}

/// Canonical `.td` text; parsing it reproduces the decomposition.
pub fn write_td(td: &TreeDecomposition) -> String {
    let max_size = td.bags().iter().map(|b| b.len()).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", td.bag_count(), max_size, td.n());
    for (i, bag) in td.bags().iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        for v in bag {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    for &(a, b) in td.tree_edges() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

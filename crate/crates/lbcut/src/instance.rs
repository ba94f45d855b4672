//! Cut instances: a graph, a terminal set, and per-pair distance
//! requirements. Covers both the single-pair form (keep s and t at distance
//! at least L+1) and the general multi-terminal form.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, parse_graph, write_graph, Edge, Graph, VertexId};

/// Requirement that `dist(u, v) >= bound` after the cut. Stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Constraint {
    pub u: VertexId,
    pub v: VertexId,
    pub bound: u32,
}

#[derive(Clone, Debug)]
pub struct CutInstance {
    pub graph: Graph,
    terminals: Vec<VertexId>,
    /// Complete over terminal pairs; unmentioned pairs sit at the vacuous
    /// bound 1.
    bounds: BTreeMap<(VertexId, VertexId), u32>,
    /// Upper bound on every constraint entry (table entries live in
    /// `[1, lim]`). Always `>= max bound`.
    pub lim: u32,
}

impl CutInstance {
    /// Single-pair instance: after the cut, every s-t path must have more
    /// than `l` edges, i.e. `dist(s, t) >= l + 1`.
    pub fn single_pair(graph: Graph, s: VertexId, t: VertexId, l: u32) -> Result<CutInstance> {
        if l < 1 {
            return Err(Error::argument("length bound must be at least 1"));
        }
        CutInstance::multi(graph, vec![s, t], &[(s, t, l + 1)], Some(l + 1))
    }

    /// Multi-terminal instance. `explicit` lists per-pair bounds; omitted
    /// pairs default to 1. `limit` defaults to the largest bound.
    pub fn multi(
        graph: Graph,
        terminals: Vec<VertexId>,
        explicit: &[(VertexId, VertexId, u32)],
        limit: Option<u32>,
    ) -> Result<CutInstance> {
        if terminals.len() < 2 {
            return Err(Error::argument("need at least two terminals"));
        }
        let mut sorted = terminals.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != terminals.len() {
            return Err(Error::argument("terminals must be distinct"));
        }
        for &t in &sorted {
            if t < 1 || t > graph.n() {
                return Err(Error::argument(format!(
                    "terminal {t} out of range for n = {}",
                    graph.n()
                )));
            }
        }
        let mut bounds = BTreeMap::new();
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                bounds.insert((sorted[i], sorted[j]), 1u32);
            }
        }
        for &(a, b, bound) in explicit {
            if a == b {
                return Err(Error::argument(format!("constraint on a single vertex {a}")));
            }
            let key = if a < b { (a, b) } else { (b, a) };
            if !bounds.contains_key(&key) {
                return Err(Error::argument(format!(
                    "constraint on non-terminal pair ({a}, {b})"
                )));
            }
            if bound < 1 {
                return Err(Error::argument(format!(
                    "bound for ({a}, {b}) must be at least 1"
                )));
            }
            bounds.insert(key, bound);
        }
        let max_bound = bounds.values().copied().max().unwrap_or(1);
        let lim = match limit {
            Some(l) if l < max_bound => {
                return Err(Error::argument(format!(
                    "limit {l} is below the largest bound {max_bound}"
                )));
            }
            Some(l) => l,
            None => max_bound,
        };
        Ok(CutInstance {
            graph,
            terminals: sorted,
            bounds,
            lim,
        })
    }

    pub fn terminals(&self) -> &[VertexId] {
        &self.terminals
    }

    pub fn bound(&self, a: VertexId, b: VertexId) -> u32 {
        let key = if a < b { (a, b) } else { (b, a) };
        *self.bounds.get(&key).unwrap_or(&1)
    }

    /// Terminal pairs with their bounds, in (u, v) lexicographic order.
    pub fn constraints(&self) -> Vec<Constraint> {
        self.bounds
            .iter()
            .map(|(&(u, v), &bound)| Constraint { u, v, bound })
            .collect()
    }

    /// True when the bounds form a metric-like system: for terminals x, y, z,
    /// `bound(x, z) <= bound(x, y) + bound(y, z)`. The solver accepts inputs
    /// that fail this; the flag only feeds diagnostics.
    pub fn bounds_are_triangle(&self) -> bool {
        let s = &self.terminals;
        for i in 0..s.len() {
            for j in 0..s.len() {
                for k in 0..s.len() {
                    if i != j && j != k && i != k {
                        let direct = self.bound(s[i], s[k]);
                        let via = self.bound(s[i], s[j]) + self.bound(s[j], s[k]);
                        if direct > via {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Check whether removing `cut` satisfies every pair bound. BFS from each
/// terminal in the pruned graph. Errors if `cut` lists an edge the graph
/// does not contain.
pub fn verify_cut(inst: &CutInstance, cut: &[Edge]) -> Result<bool> {
    for e in cut {
        if !inst.graph.contains(*e) {
            return Err(Error::argument(format!("cut edge {e} not in the graph")));
        }
    }
    let pruned = inst.graph.without_edges(cut);
    let terms = inst.terminals();
    for (i, &s) in terms.iter().enumerate() {
        let dist = bfs_distances(&pruned, s);
        for &t in &terms[i + 1..] {
            if !dist[t].is_at_least(inst.bound(s, t)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
struct ConstraintJson {
    u: usize,
    v: usize,
    bound: u32,
}

#[derive(Serialize, Deserialize)]
struct InstanceJson {
    graph_file: String,
    terminals: Vec<usize>,
    #[serde(default)]
    constraints: Vec<ConstraintJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    limit: Option<u32>,
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn load_graph_file(path: &Path) -> Result<Graph> {
    parse_graph(&read_text(path)?)
}

pub fn save_graph_file(path: &Path, g: &Graph) -> Result<()> {
    write_text(path, &write_graph(g))
}

/// Load an instance description; `graph_file` is resolved relative to the
/// instance file's directory.
pub fn load_instance_file(path: &Path) -> Result<CutInstance> {
    let text = read_text(path)?;
    let parsed: InstanceJson = serde_json::from_str(&text)
        .map_err(|e| Error::parse(e.line(), format!("instance json: {e}")))?;
    let graph_path = match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() => dir.join(&parsed.graph_file),
        _ => PathBuf::from(&parsed.graph_file),
    };
    let graph = load_graph_file(&graph_path)?;
    let explicit: Vec<(VertexId, VertexId, u32)> = parsed
        .constraints
        .iter()
        .map(|c| (c.u, c.v, c.bound))
        .collect();
    CutInstance::multi(graph, parsed.terminals, &explicit, parsed.limit)
}

/// Write an instance description next to an already-written graph file.
/// `graph_file` is stored as given (normally a bare file name).
pub fn save_instance_file(path: &Path, inst: &CutInstance, graph_file: &str) -> Result<()> {
    let json = InstanceJson {
        graph_file: graph_file.to_string(),
        terminals: inst.terminals().to_vec(),
        constraints: inst
            .constraints()
            .into_iter()
            .map(|c| ConstraintJson {
                u: c.u,
                v: c.v,
                bound: c.bound,
            })
            .collect(),
        limit: Some(inst.lim),
    };
    let mut text = serde_json::to_string_pretty(&json).expect("instance json");
    text.push('\n');
    write_text(path, &text)
}

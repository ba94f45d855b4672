//! Reference implementations used to cross-check the table-based solver:
//! a brute-force cut search, a brute-force multicolor clique search, and an
//! exhaustive generator of small connected graphs up to isomorphism.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::instance::{verify_cut, CutInstance};

/// Largest edge count the exhaustive cut search accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Smallest cut meeting every distance bound, found by trying edge subsets
/// in order of cardinality and, within a cardinality, lexicographically by
/// sorted edge list. The first hit is therefore the unique minimum-size,
/// lexicographically least cut. Refuses graphs with more than `cap` edges.
pub fn brute_force_mlbmc(inst: &CutInstance, cap: usize) -> Result<(usize, Vec<Edge>)> {
    let m = inst.graph.m();
    if m > cap {
        return Err(Error::Resource {
            message: "exhaustive cut search".into(),
            needed: 1u128 << m.min(127),
            cap: 1u128 << cap.min(127),
        });
    }
    let edges = inst.graph.edges();
    for k in 0..=m {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let cut: Vec<Edge> = pick.iter().map(|&i| edges[i]).collect();
            if verify_cut(inst, &cut)? {
                return Ok((k, cut));
            }
            // Advance to the next k-combination in lexicographic order.
            let mut advanced = false;
            let mut i = k;
            while i > 0 {
                i -= 1;
                if pick[i] != i + m - k {
                    pick[i] += 1;
                    for j in i + 1..k {
                        pick[j] = pick[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    unreachable!("removing every edge satisfies any bound");
}

/// Single-pair variant: smallest cut forcing dist(s, t) > l.
pub fn brute_force_mlbc(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    l: u32,
    cap: usize,
) -> Result<(usize, Vec<Edge>)> {
    let inst = CutInstance::single_pair(g.clone(), s, t, l)?;
    brute_force_mlbmc(&inst, cap)
}

/// A k-partite graph with `n` vertices per color class and exactly `m`
/// edges between every pair of classes. Vertices are named (color, index)
/// with both coordinates starting at 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MulticolorInstance {
    k: usize,
    n: usize,
    m: usize,
    /// Keyed by color pair (i, j) with i < j; lists sorted and distinct.
    edges: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
}

#[derive(Serialize, Deserialize)]
struct MulticolorJson {
    colors: usize,
    class_size: usize,
    edges_per_pair: usize,
    edges: Vec<PairEdges>,
}

#[derive(Serialize, Deserialize)]
struct PairEdges {
    low: usize,
    high: usize,
    pairs: Vec<(usize, usize)>,
}

impl MulticolorInstance {
    /// `edges[(i, j)]` holds the cross edges between classes i and j as
    /// (index in i, index in j) pairs. Every class pair must appear with
    /// the same number of distinct edges.
    pub fn new(
        k: usize,
        n: usize,
        edges: BTreeMap<(usize, usize), Vec<(usize, usize)>>,
    ) -> Result<MulticolorInstance> {
        if k < 2 {
            return Err(Error::argument("need at least two colors"));
        }
        if n < 1 {
            return Err(Error::argument("color classes cannot be empty"));
        }
        let mut m = None;
        for i in 1..=k {
            for j in i + 1..=k {
                let list = edges
                    .get(&(i, j))
                    .ok_or_else(|| Error::argument(format!("missing edges for pair ({i}, {j})")))?;
                match m {
                    None => m = Some(list.len()),
                    Some(prev) if prev != list.len() => {
                        return Err(Error::argument(format!(
                            "pair ({i}, {j}) has {} edges, expected {prev}",
                            list.len()
                        )))
                    }
                    _ => {}
                }
                let mut sorted = list.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != list.len() {
                    return Err(Error::argument(format!("pair ({i}, {j}) repeats an edge")));
                }
                for &(u, v) in list {
                    if u < 1 || u > n || v < 1 || v > n {
                        return Err(Error::argument(format!(
                            "edge ({u}, {v}) out of range for class size {n}"
                        )));
                    }
                }
            }
        }
        let m = m.expect("k >= 2 forces at least one pair");
        if m == 0 {
            return Err(Error::argument("every color pair needs at least one edge"));
        }
        if edges.len() != k * (k - 1) / 2 {
            return Err(Error::argument("edge map mentions an unknown color pair"));
        }
        let mut canon = edges;
        for list in canon.values_mut() {
            list.sort_unstable();
        }
        Ok(MulticolorInstance {
            k,
            n,
            m,
            edges: canon,
        })
    }

    pub fn colors(&self) -> usize {
        self.k
    }

    pub fn class_size(&self) -> usize {
        self.n
    }

    pub fn edges_per_pair(&self) -> usize {
        self.m
    }

    /// Cross edges between classes i and j (either order), sorted.
    pub fn pair_edges(&self, i: usize, j: usize) -> &[(usize, usize)] {
        assert!(i != j, "a color pair needs two distinct colors");
        &self.edges[&(i.min(j), i.max(j))]
    }

    pub fn has_edge(&self, i: usize, u: usize, j: usize, v: usize) -> bool {
        let key = if i < j { (u, v) } else { (v, u) };
        self.pair_edges(i, j).binary_search(&key).is_ok()
    }

    pub fn to_json(&self) -> String {
        let doc = MulticolorJson {
            colors: self.k,
            class_size: self.n,
            edges_per_pair: self.m,
            edges: self
                .edges
                .iter()
                .map(|(&(low, high), pairs)| PairEdges {
                    low,
                    high,
                    pairs: pairs.clone(),
                })
                .collect(),
        };
        let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<MulticolorInstance> {
        let doc: MulticolorJson =
            serde_json::from_str(text).map_err(|e| Error::parse(1, e.to_string()))?;
        let mut edges = BTreeMap::new();
        for pe in doc.edges {
            if edges.insert((pe.low, pe.high), pe.pairs).is_some() {
                return Err(Error::argument(format!(
                    "pair ({}, {}) listed twice",
                    pe.low, pe.high
                )));
            }
        }
        let inst = MulticolorInstance::new(doc.colors, doc.class_size, edges)?;
        if inst.m != doc.edges_per_pair {
            return Err(Error::argument(format!(
                "header says {} edges per pair, lists hold {}",
                doc.edges_per_pair, inst.m
            )));
        }
        Ok(inst)
    }
}

/// Lexicographically smallest choice of one vertex per color inducing a
/// complete multipartite selection (every cross pair an edge), or None.
/// Refuses searches beyond `cap` candidate tuples.
pub fn find_multicolor_clique(
    inst: &MulticolorInstance,
    cap: u64,
) -> Result<Option<Vec<usize>>> {
    let (k, n) = (inst.colors(), inst.class_size());
    let mut tuples = 1u64;
    for _ in 0..k {
        tuples = tuples.saturating_mul(n as u64);
        if tuples > cap {
            return Err(Error::Resource {
                message: "clique tuple scan".into(),
                needed: (n as u128).pow(k as u32),
                cap: cap as u128,
            });
        }
    }
    // Depth-first over partial tuples, checking each new vertex against
    // all earlier choices; ascending order keeps the first hit lex-least.
    let mut choice: Vec<usize> = Vec::with_capacity(k);
    fn descend(inst: &MulticolorInstance, choice: &mut Vec<usize>) -> bool {
        let i = choice.len() + 1;
        if i > inst.colors() {
            return true;
        }
        'next: for v in 1..=inst.class_size() {
            for (j, &u) in choice.iter().enumerate() {
                if !inst.has_edge(j + 1, u, i, v) {
                    continue 'next;
                }
            }
            choice.push(v);
            if descend(inst, choice) {
                return true;
            }
            choice.pop();
        }
        false
    }
    if descend(inst, &mut choice) {
        Ok(Some(choice))
    } else {
        Ok(None)
    }
}

/// Connected graphs on vertices 1..=n, one per isomorphism class: for each
/// class the representative whose sorted edge list is lexicographically
/// least, returned sorted by edge count then edge list.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n >= 1 && n <= 7, "exhaustive enumeration is for tiny n");
    let all_pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let np = all_pairs.len();
    let pair_bit: BTreeMap<(usize, usize), usize> = all_pairs
        .iter()
        .enumerate()
        .map(|(b, &p)| (p, b))
        .collect();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    let mut ids: Vec<usize> = (1..=n).collect();
    permute(&mut ids, 0, &mut perms);
    let mut reps: Vec<(usize, u64)> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    'mask: for mask in 0u64..(1 << np) {
        // Connectivity over all n vertices.
        let mut adj = vec![Vec::new(); n + 1];
        for (b, &(u, v)) in all_pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut seen_v = vec![false; n + 1];
        let mut stack = vec![1];
        seen_v[1] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen_v[y] {
                    seen_v[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != n {
            continue;
        }
        // Keep the mask only if it is minimal within its orbit.
        let mut canon = mask;
        for perm in &perms {
            let mut image = 0u64;
            for (b, &(u, v)) in all_pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    let (pu, pv) = (perm[u - 1], perm[v - 1]);
                    image |= 1 << pair_bit[&(pu.min(pv), pu.max(pv))];
                }
            }
            if image < mask {
                continue 'mask;
            }
            canon = canon.min(image);
        }
        if seen.insert(canon) {
            reps.push((mask.count_ones() as usize, mask));
        }
    }
    reps.sort_unstable();
    reps.into_iter()
        .map(|(_, mask)| {
            let edges = all_pairs
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &(u, v))| Edge::new(u, v));
            Graph::new(n, edges).expect("valid by construction")
        })
        .collect()
}

fn permute(ids: &mut Vec<usize>, at: usize, out: &mut Vec<Vec<usize>>) {
    if at == ids.len() {
        out.push(ids.clone());
        return;
    }
    for i in at..ids.len() {
        ids.swap(at, i);
        permute(ids, at + 1, out);
        ids.swap(at, i);
    }
}

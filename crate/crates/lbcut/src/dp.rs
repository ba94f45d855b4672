//! The solver core. Every node of a modified nice decomposition gets a
//! table mapping each triangle-satisfying length vector over its bag to
//! the cheapest subset of the node's edge share whose removal enforces
//! those pairwise distance lower bounds (distances capped at the limit).
//! Leaves exhaust their edge subsets; joins add tables pointwise (their
//! edge shares are disjoint); forgets minimize over the one-vertex
//! extensions of each key; introduces copy through contraction, since the
//! new vertex owns no edges below the join above it. The root table then
//! answers any terminal-pair demand, triangle-consistent or not.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::decomp::{
    heuristic_decomposition, inject_terminals, validate_decomposition, TreeDecomposition,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::instance::{verify_cut, CutInstance};
use crate::lenvec::{pair_count, pair_index, Bound, KeySpace, LengthVector};
use crate::nice::{make_nice, NiceDecomposition, NodeKind};

/// Default ceiling on the raw key projection lim^(bag pairs) per bag.
pub const DEFAULT_TABLE_CAP: u128 = 10_000_000;
/// Default ceiling on edges owned by a single leaf (subsets are exhausted).
pub const DEFAULT_LEAF_CAP: usize = 20;

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Refuse when lim^(bag pairs) exceeds this for any bag.
    pub table_cap: u128,
    /// Refuse when a leaf owns more than this many edges; at most 31.
    pub leaf_cap: usize,
    /// Worker threads; results are identical for any count.
    pub threads: usize,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions {
            table_cap: DEFAULT_TABLE_CAP,
            leaf_cap: DEFAULT_LEAF_CAP,
            threads: 1,
        }
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct SolveStats {
    pub nodes: usize,
    pub table_entries: u64,
    pub elapsed_ms: u64,
    /// Width of the nice decomposition the tables were computed over.
    pub width: usize,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub size: usize,
    pub cut: Vec<Edge>,
    /// The winning key of the root table.
    pub root_vector: LengthVector,
    pub stats: SolveStats,
}

enum BackStore {
    /// Per key: the edge-index mask of the chosen removal subset.
    Leaf(Vec<u32>),
    /// Per key: the child key index of the chosen extension.
    Forget(Vec<u32>),
    /// Joins and introduces rebuild their witnesses from the key alone.
    None,
}

pub struct DPTable {
    support: Arc<[VertexId]>,
    keys: Arc<KeySpace>,
    sizes: Vec<u32>,
    back: BackStore,
}

impl DPTable {
    pub fn support(&self) -> &[VertexId] {
        &self.support
    }

    pub fn keys(&self) -> &KeySpace {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn size_at(&self, idx: usize) -> u32 {
        self.sizes[idx]
    }

    pub fn vector_at(&self, idx: usize) -> LengthVector {
        LengthVector::new(
            self.support.clone(),
            self.keys.entry(idx).to_vec(),
            self.keys.lim(),
        )
        .expect("stored keys are valid")
    }
}

/// All tables of one run, indexed by nice node.
pub struct DPForest {
    nice: NiceDecomposition,
    lim: Bound,
    tables: Vec<DPTable>,
    pub table_entries: u64,
}

impl DPForest {
    pub fn nice(&self) -> &NiceDecomposition {
        &self.nice
    }

    pub fn lim(&self) -> Bound {
        self.lim
    }

    pub fn table(&self, node: usize) -> &DPTable {
        &self.tables[node]
    }
}

fn saturating_pow(base: u128, exp: usize) -> u128 {
    let mut out = 1u128;
    for _ in 0..exp {
        out = out.saturating_mul(base);
    }
    out
}

fn check_options(opts: &SolveOptions) -> Result<()> {
    if opts.leaf_cap > 31 {
        return Err(Error::argument("leaf cap cannot exceed 31 edges"));
    }
    if opts.threads < 1 {
        return Err(Error::argument("need at least one thread"));
    }
    Ok(())
}

/// Visit the k-subsets of 0..m in (cardinality, lexicographic) order.
fn for_each_subset(m: usize, mut f: impl FnMut(&[usize])) {
    for k in 0..=m {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            f(&pick);
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
}

/// Exhaust the removal subsets of a leaf's edges. Each subset yields the
/// capped distance profile of the leaf graph minus the subset; a profile
/// is kept unless an earlier one already covers it pointwise, so for any
/// key the first kept profile dominating it carries the minimum size and,
/// within that size, the lexicographically least edge list.
fn leaf_table(
    support: &Arc<[VertexId]>,
    edges: &[Edge],
    keys: &Arc<KeySpace>,
) -> DPTable {
    let k = support.len();
    let kp = pair_count(k);
    let lim = keys.lim();
    let local: Vec<(usize, usize)> = edges
        .iter()
        .map(|e| {
            (
                support.binary_search(&e.u).expect("edge inside bag"),
                support.binary_search(&e.v).expect("edge inside bag"),
            )
        })
        .collect();
    let m = local.len();
    let mut kept: Vec<(Vec<Bound>, u32, u32)> = Vec::new();
    let mut adj = vec![Vec::new(); k];
    let mut dist = vec![0u32; k];
    let mut queue = Vec::with_capacity(k);
    for_each_subset(m, |pick| {
        let mask: u32 = pick.iter().fold(0, |acc, &i| acc | 1 << i);
        for a in adj.iter_mut() {
            a.clear();
        }
        for (i, &(u, v)) in local.iter().enumerate() {
            if mask >> i & 1 == 0 {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut profile = vec![0 as Bound; kp];
        for src in 0..k {
            dist.iter_mut().for_each(|d| *d = u32::MAX);
            dist[src] = 0;
            queue.clear();
            queue.push(src);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for &y in &adj[x] {
                    if dist[y] == u32::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push(y);
                    }
                }
            }
            for dst in src + 1..k {
                profile[pair_index(k, src, dst)] = dist[dst].min(lim as u32) as Bound;
            }
        }
        if !kept
            .iter()
            .any(|(q, _, _)| q.iter().zip(&profile).all(|(a, b)| a >= b))
        {
            kept.push((profile, pick.len() as u32, mask));
        }
    });
    let filled: Vec<(u32, u32)> = (0..keys.len())
        .into_par_iter()
        .map(|idx| {
            let b = keys.entry(idx);
            let (_, size, mask) = kept
                .iter()
                .find(|(q, _, _)| q.iter().zip(b).all(|(a, w)| a >= w))
                .expect("removing every edge covers any key");
            (*size, *mask)
        })
        .collect();
    let (sizes, masks) = filled.into_iter().unzip();
    DPTable {
        support: support.clone(),
        keys: keys.clone(),
        sizes,
        back: BackStore::Leaf(masks),
    }
}

fn join_table(support: &Arc<[VertexId]>, a: &DPTable, b: &DPTable) -> DPTable {
    assert_eq!(a.sizes.len(), b.sizes.len(), "join children share keys");
    let sizes = a
        .sizes
        .par_iter()
        .zip(b.sizes.par_iter())
        .map(|(x, y)| x + y)
        .collect();
    DPTable {
        support: support.clone(),
        keys: a.keys.clone(),
        sizes,
        back: BackStore::None,
    }
}

/// Positions tying a child keyspace to its one-vertex-smaller parent:
/// where each parent entry lands in the child array, plus the child-only
/// slots in array order with, per slot, the earlier slots it must satisfy
/// the triangle conditions with (through the connecting parent entry).
struct ExtensionPlan {
    fixed_to_child: Vec<usize>,
    slots: Vec<SlotPlan>,
}

struct SlotPlan {
    child_pos: usize,
    cons: Vec<(usize, usize)>,
}

fn extension_plan(parent_k: usize, pos_v: usize) -> ExtensionPlan {
    let child_k = parent_k + 1;
    let lift = |i: usize| if i >= pos_v { i + 1 } else { i };
    let mut fixed_to_child = Vec::with_capacity(pair_count(parent_k));
    for i in 0..parent_k {
        for j in i + 1..parent_k {
            fixed_to_child.push(pair_index(child_k, lift(i), lift(j)));
        }
    }
    let mut slots = Vec::with_capacity(parent_k);
    for (slot, pi) in (0..parent_k).enumerate() {
        let ci = lift(pi);
        let child_pos = pair_index(child_k, ci.min(pos_v), ci.max(pos_v));
        let cons = (0..slot)
            .map(|earlier| (earlier, pair_index(parent_k, earlier, pi)))
            .collect();
        slots.push(SlotPlan { child_pos, cons });
    }
    ExtensionPlan {
        fixed_to_child,
        slots,
    }
}

/// Depth-first over the valid values of slot `depth` and beyond, keeping
/// the first (hence lexicographically least) child key of minimum size.
fn best_extension(
    depth: usize,
    plan: &ExtensionPlan,
    parent_key: &[Bound],
    lim: Bound,
    scratch: &mut [Bound],
    child_keys: &KeySpace,
    child_sizes: &[u32],
    best: &mut (u32, u32),
) {
    if depth == plan.slots.len() {
        let idx = child_keys
            .find(scratch)
            .expect("valid extensions are enumerated keys");
        if child_sizes[idx] < best.0 {
            *best = (child_sizes[idx], idx as u32);
        }
        return;
    }
    let slot = &plan.slots[depth];
    let mut lo = 1i32;
    let mut hi = lim as i32;
    for &(earlier, ppos) in &slot.cons {
        let d = parent_key[ppos] as i32;
        let e = scratch[plan.slots[earlier].child_pos] as i32;
        lo = lo.max((e - d).abs().max(d - e));
        hi = hi.min(e + d);
    }
    let mut val = lo;
    while val <= hi {
        scratch[slot.child_pos] = val as Bound;
        best_extension(
            depth + 1,
            plan,
            parent_key,
            lim,
            scratch,
            child_keys,
            child_sizes,
            best,
        );
        val += 1;
    }
}

/// Forgetting `v`: each parent key takes the minimum over its extensions
/// by `v` in the child table, remembering the winning child key.
fn forget_table(
    support: &Arc<[VertexId]>,
    keys: &Arc<KeySpace>,
    child: &DPTable,
    v: VertexId,
) -> DPTable {
    let parent_k = support.len();
    let pos_v = child
        .support
        .binary_search(&v)
        .expect("forgotten vertex in child bag");
    let plan = extension_plan(parent_k, pos_v);
    let lim = keys.lim();
    let child_pairs = pair_count(parent_k + 1);
    let filled: Vec<(u32, u32)> = (0..keys.len())
        .into_par_iter()
        .map_init(
            || vec![0 as Bound; child_pairs],
            |scratch, idx| {
                let b = keys.entry(idx);
                for (p, &cp) in plan.fixed_to_child.iter().enumerate() {
                    scratch[cp] = b[p];
                }
                let mut best = (u32::MAX, 0u32);
                best_extension(
                    0,
                    &plan,
                    b,
                    lim,
                    scratch,
                    &child.keys,
                    &child.sizes,
                    &mut best,
                );
                assert!(best.0 != u32::MAX, "the all-limit extension always exists");
                best
            },
        )
        .collect();
    let (sizes, backs) = filled.into_iter().unzip();
    DPTable {
        support: support.clone(),
        keys: keys.clone(),
        sizes,
        back: BackStore::Forget(backs),
    }
}

/// For child pair positions, where each lives in the parent array once
/// `pos_v` is spliced into the support.
fn contraction_map(child_k: usize, pos_v: usize) -> Vec<usize> {
    let parent_k = child_k + 1;
    let lift = |i: usize| if i >= pos_v { i + 1 } else { i };
    let mut map = Vec::with_capacity(pair_count(child_k));
    for i in 0..child_k {
        for j in i + 1..child_k {
            map.push(pair_index(parent_k, lift(i), lift(j)));
        }
    }
    map
}

/// Introducing `v`: the new vertex owns no edges in this subtree, so all
/// demands on it hold vacuously and each key copies its contraction.
fn introduce_table(
    support: &Arc<[VertexId]>,
    keys: &Arc<KeySpace>,
    child: &DPTable,
    v: VertexId,
) -> DPTable {
    let pos_v = support.binary_search(&v).expect("introduced vertex in bag");
    let map = contraction_map(child.support.len(), pos_v);
    let sizes: Vec<u32> = (0..keys.len())
        .into_par_iter()
        .map_init(
            || vec![0 as Bound; map.len()],
            |scratch, idx| {
                let b = keys.entry(idx);
                for (cp, &pp) in map.iter().enumerate() {
                    scratch[cp] = b[pp];
                }
                let ci = child
                    .keys
                    .find(scratch)
                    .expect("contractions of valid keys are valid");
                child.sizes[ci]
            },
        )
        .collect();
    DPTable {
        support: support.clone(),
        keys: keys.clone(),
        sizes,
        back: BackStore::None,
    }
}

fn compute_tables(
    nice: &NiceDecomposition,
    lim: Bound,
    opts: &SolveOptions,
) -> Result<(Vec<DPTable>, u64)> {
    // Guard before enumerating anything: the raw projection bounds every
    // keyspace, and leaves exhaust subsets of their edge share.
    for i in 0..nice.node_count() {
        let node = nice.node(i);
        let raw = saturating_pow(lim as u128, pair_count(node.bag().len()));
        if raw > opts.table_cap {
            return Err(Error::Resource {
                message: format!("key table for a bag of {} vertices", node.bag().len()),
                needed: raw,
                cap: opts.table_cap,
            });
        }
        if node.edges().len() > opts.leaf_cap {
            return Err(Error::Resource {
                message: format!("removal subsets of a leaf with {} edges", node.edges().len()),
                needed: saturating_pow(2, node.edges().len()),
                cap: saturating_pow(2, opts.leaf_cap),
            });
        }
    }
    let mut spaces: BTreeMap<usize, Arc<KeySpace>> = BTreeMap::new();
    let build_cap = opts.table_cap.min(u64::MAX as u128) as u64;
    let mut tables: Vec<Option<DPTable>> = (0..nice.node_count()).map(|_| None).collect();
    let mut entries = 0u64;
    for x in nice.postorder() {
        let node = nice.node(x);
        let k = node.bag().len();
        let keys = match spaces.get(&k) {
            Some(ks) => ks.clone(),
            None => {
                let ks = Arc::new(KeySpace::build(k, lim, build_cap)?);
                if ks.len() > u32::MAX as usize {
                    return Err(Error::Resource {
                        message: "key indices exceed 32 bits".into(),
                        needed: ks.len() as u128,
                        cap: u32::MAX as u128,
                    });
                }
                spaces.insert(k, ks.clone());
                ks
            }
        };
        let support: Arc<[VertexId]> = Arc::from(node.bag());
        let table = match node.kind() {
            NodeKind::Leaf => leaf_table(&support, node.edges(), &keys),
            NodeKind::Join => {
                let (a, b) = (node.children()[0], node.children()[1]);
                join_table(
                    &support,
                    tables[a].as_ref().expect("postorder"),
                    tables[b].as_ref().expect("postorder"),
                )
            }
            NodeKind::Forget(v) => {
                let c = node.children()[0];
                forget_table(&support, &keys, tables[c].as_ref().expect("postorder"), v)
            }
            NodeKind::Introduce(v) => {
                let c = node.children()[0];
                introduce_table(&support, &keys, tables[c].as_ref().expect("postorder"), v)
            }
        };
        entries += table.len() as u64;
        tables[x] = Some(table);
    }
    Ok((
        tables.into_iter().map(|t| t.expect("all filled")).collect(),
        entries,
    ))
}

/// Run the pipeline up to finished tables: validate or build the tree
/// decomposition, pull the terminals into one bag, convert to the
/// modified nice form, and fill every node's table.
pub fn build_forest(
    inst: &CutInstance,
    td: Option<&TreeDecomposition>,
    opts: &SolveOptions,
) -> Result<DPForest> {
    check_options(opts)?;
    if inst.lim > u16::MAX as u32 {
        return Err(Error::argument(format!(
            "length limit {} is too large for the table keys",
            inst.lim
        )));
    }
    let lim = inst.lim as Bound;
    let g = &inst.graph;
    let base = match td {
        Some(given) => {
            let violations = validate_decomposition(g, given);
            if let Some(first) = violations.first() {
                return Err(Error::argument(format!(
                    "invalid tree decomposition ({} problem{}): {first}",
                    violations.len(),
                    if violations.len() == 1 { "" } else { "s" },
                )));
            }
            given.clone()
        }
        None => heuristic_decomposition(g),
    };
    let base = inject_terminals(&base, inst.terminals())?;
    let nice = make_nice(g, &base, inst.terminals())?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| Error::argument(format!("thread pool: {e}")))?;
    let (tables, table_entries) = pool.install(|| compute_tables(&nice, lim, opts))?;
    Ok(DPForest {
        nice,
        lim,
        tables,
        table_entries,
    })
}

/// Smallest root entry whose key dominates every terminal-pair demand;
/// ties go to the lexicographically least key. The demands themselves
/// need not satisfy the triangle conditions.
pub fn root_query(forest: &DPForest, inst: &CutInstance) -> Result<(u32, usize)> {
    let table = forest.table(forest.nice.root());
    let sup = table.support();
    let k = sup.len();
    let mut checks = Vec::new();
    for c in inst.constraints() {
        let iu = sup
            .binary_search(&c.u)
            .map_err(|_| Error::structural(format!("terminal {} missing from root bag", c.u)))?;
        let iv = sup
            .binary_search(&c.v)
            .map_err(|_| Error::structural(format!("terminal {} missing from root bag", c.v)))?;
        checks.push((pair_index(k, iu.min(iv), iu.max(iv)), c.bound));
    }
    let mut best: Option<(u32, usize)> = None;
    for idx in 0..table.len() {
        let entry = table.keys.entry(idx);
        if checks.iter().all(|&(p, bd)| entry[p] as u32 >= bd) {
            let s = table.sizes[idx];
            if best.map_or(true, |(bs, _)| s < bs) {
                best = Some((s, idx));
            }
        }
    }
    best.ok_or_else(|| Error::structural("no root key meets the demands"))
}

/// Walk the winning key back down the tree, collecting each leaf's chosen
/// removal subset. The leaf shares partition the edges, so the pieces
/// concatenate into the final cut.
pub fn reconstruct(forest: &DPForest, root_key: usize) -> Result<Vec<Edge>> {
    let mut cut = Vec::new();
    let mut stack = vec![(forest.nice.root(), root_key)];
    while let Some((x, key)) = stack.pop() {
        let node = forest.nice.node(x);
        let table = &forest.tables[x];
        match node.kind() {
            NodeKind::Leaf => {
                let mask = match &table.back {
                    BackStore::Leaf(masks) => masks[key],
                    _ => return Err(Error::structural("leaf table lost its masks")),
                };
                for (i, e) in node.edges().iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        cut.push(*e);
                    }
                }
            }
            NodeKind::Join => {
                stack.push((node.children()[0], key));
                stack.push((node.children()[1], key));
            }
            NodeKind::Forget(_) => {
                let child_key = match &table.back {
                    BackStore::Forget(backs) => backs[key] as usize,
                    _ => return Err(Error::structural("forget table lost its choices")),
                };
                stack.push((node.children()[0], child_key));
            }
            NodeKind::Introduce(v) => {
                let c = node.children()[0];
                let child = &forest.tables[c];
                let pos_v = table.support.binary_search(&v).expect("introduced in bag");
                let map = contraction_map(child.support.len(), pos_v);
                let entry = table.keys.entry(key);
                let contracted: Vec<Bound> = map.iter().map(|&pp| entry[pp]).collect();
                let child_key = child
                    .keys
                    .find(&contracted)
                    .ok_or_else(|| Error::structural("contraction left the keyspace"))?;
                stack.push((c, child_key));
            }
        }
    }
    cut.sort_unstable();
    Ok(cut)
}

/// Exact minimum multi-cut: every terminal pair's distance must reach its
/// bound after the cut. Pass a tree decomposition or let the min-degree
/// heuristic build one. The returned cut is re-verified against the graph
/// before it is handed back.
pub fn solve_mlbmc(
    inst: &CutInstance,
    td: Option<&TreeDecomposition>,
    opts: &SolveOptions,
) -> Result<Solution> {
    let start = Instant::now();
    let forest = build_forest(inst, td, opts)?;
    let (size, key_idx) = root_query(&forest, inst)?;
    let cut = reconstruct(&forest, key_idx)?;
    if cut.len() != size as usize {
        return Err(Error::structural(format!(
            "table claims {size} edges, reconstruction produced {}",
            cut.len()
        )));
    }
    if !verify_cut(inst, &cut)? {
        return Err(Error::structural(
            "reconstructed cut fails distance verification",
        ));
    }
    let root_vector = forest.table(forest.nice.root()).vector_at(key_idx);
    Ok(Solution {
        size: size as usize,
        cut,
        root_vector,
        stats: SolveStats {
            nodes: forest.nice.node_count(),
            table_entries: forest.table_entries,
            elapsed_ms: start.elapsed().as_millis() as u64,
            width: forest.nice.width(),
        },
    })
}

/// Exact minimum cut pushing dist(s, t) beyond `l`.
pub fn solve_mlbc(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    l: u32,
    td: Option<&TreeDecomposition>,
    opts: &SolveOptions,
) -> Result<Solution> {
    let inst = CutInstance::single_pair(g.clone(), s, t, l)?;
    solve_mlbmc(&inst, td, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_force_mlbmc, connected_graphs};

    fn cycle(n: usize) -> Graph {
        let mut e: Vec<Edge> = (1..n).map(|i| Edge::new(i, i + 1)).collect();
        e.push(Edge::new(n, 1));
        Graph::new(n, e).unwrap()
    }

    #[test]
    fn path_needs_one_edge() {
        let g = Graph::new(3, [Edge::new(1, 2), Edge::new(2, 3)]).unwrap();
        let sol = solve_mlbc(&g, 1, 3, 2, None, &SolveOptions::default()).unwrap();
        assert_eq!(sol.size, 1);
        // The root scan settles on the lexicographically least feasible
        // key (1,3,2), whose demand lands on the subtree owning edge
        // (2,3); removing (1,2) is equally optimal but not the witness.
        assert_eq!(sol.cut, vec![Edge::new(2, 3)]);
        assert!(sol.root_vector.get(1, 3).unwrap() >= 3);
        assert!(sol.stats.nodes >= 1);
    }

    #[test]
    fn six_cycle_matches_oracle() {
        let g = cycle(6);
        for l in [3, 5] {
            let sol = solve_mlbc(&g, 1, 4, l, None, &SolveOptions::default()).unwrap();
            assert_eq!(sol.size, 2, "bound {l}");
            let inst = CutInstance::single_pair(g.clone(), 1, 4, l).unwrap();
            let (oracle_size, _) = brute_force_mlbmc(&inst, 20).unwrap();
            assert_eq!(sol.size, oracle_size);
            assert!(verify_cut(&inst, &sol.cut).unwrap());
        }
    }

    #[test]
    fn diamond_with_chord() {
        let g = Graph::new(
            4,
            [
                Edge::new(1, 2),
                Edge::new(2, 4),
                Edge::new(1, 3),
                Edge::new(3, 4),
                Edge::new(2, 3),
            ],
        )
        .unwrap();
        let sol = solve_mlbc(&g, 1, 4, 2, None, &SolveOptions::default()).unwrap();
        assert_eq!(sol.size, 2);
    }

    #[test]
    fn star_multicut() {
        let g = Graph::new(4, [Edge::new(1, 4), Edge::new(2, 4), Edge::new(3, 4)]).unwrap();
        let inst = CutInstance::multi(
            g,
            vec![1, 2, 3],
            &[(1, 2, 3), (1, 3, 3), (2, 3, 3)],
            None,
        )
        .unwrap();
        let sol = solve_mlbmc(&inst, None, &SolveOptions::default()).unwrap();
        assert_eq!(sol.size, 2);
        assert!(verify_cut(&inst, &sol.cut).unwrap());
    }

    #[test]
    fn non_triangle_demands() {
        // Demands (4, 1, 1) violate the triangle condition; the root scan
        // must still find the optimum.
        let g = Graph::new(3, [Edge::new(1, 2), Edge::new(1, 3), Edge::new(2, 3)]).unwrap();
        let inst = CutInstance::multi(
            g,
            vec![1, 2, 3],
            &[(1, 2, 4), (1, 3, 1), (2, 3, 1)],
            None,
        )
        .unwrap();
        let sol = solve_mlbmc(&inst, None, &SolveOptions::default()).unwrap();
        let (oracle_size, _) = brute_force_mlbmc(&inst, 20).unwrap();
        assert_eq!(sol.size, oracle_size);
        assert_eq!(sol.size, 2);
        assert!(verify_cut(&inst, &sol.cut).unwrap());
    }

    #[test]
    fn provided_td_and_threads_agree() {
        let g = cycle(6);
        let td = heuristic_decomposition(&g);
        let seq = solve_mlbc(&g, 1, 4, 3, Some(&td), &SolveOptions::default()).unwrap();
        let par = solve_mlbc(
            &g,
            1,
            4,
            3,
            Some(&td),
            &SolveOptions {
                threads: 3,
                ..SolveOptions::default()
            },
        )
        .unwrap();
        assert_eq!(seq.size, par.size);
        assert_eq!(seq.cut, par.cut);
        assert_eq!(seq.root_vector, par.root_vector);
        let auto = solve_mlbc(&g, 1, 4, 3, None, &SolveOptions::default()).unwrap();
        assert_eq!(auto.size, seq.size);
    }

    #[test]
    fn rejects_bad_decomposition() {
        let g = cycle(4);
        // Misses vertex 4 and its edges.
        let td = TreeDecomposition::new(4, vec![vec![1, 2, 3]], vec![]).unwrap();
        match solve_mlbc(&g, 1, 3, 2, Some(&td), &SolveOptions::default()) {
            Err(Error::Argument(msg)) => assert!(msg.contains("invalid tree decomposition")),
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn resource_caps_refuse() {
        let mut edges = Vec::new();
        for i in 1..=4 {
            for j in i + 1..=4 {
                edges.push(Edge::new(i, j));
            }
        }
        let g = Graph::new(4, edges).unwrap();
        let tiny_tables = SolveOptions {
            table_cap: 10,
            ..SolveOptions::default()
        };
        match solve_mlbc(&g, 1, 4, 2, None, &tiny_tables) {
            Err(e) if e.is_resource() => {}
            other => panic!("expected table refusal, got {other:?}"),
        }
        let tiny_leaves = SolveOptions {
            leaf_cap: 2,
            ..SolveOptions::default()
        };
        match solve_mlbc(&g, 1, 4, 2, None, &tiny_leaves) {
            Err(e) if e.is_resource() => {}
            other => panic!("expected leaf refusal, got {other:?}"),
        }
        assert!(solve_mlbc(&g, 1, 4, 2, None, &SolveOptions { leaf_cap: 40, ..SolveOptions::default() }).is_err());
    }

    #[test]
    fn table_laws_on_small_run() {
        let inst = CutInstance::single_pair(cycle(5), 1, 3, 3).unwrap();
        let forest = build_forest(&inst, None, &SolveOptions::default()).unwrap();
        let nice = forest.nice();
        for x in 0..nice.node_count() {
            let t = forest.table(x);
            // All-ones demands nothing.
            assert_eq!(t.size_at(0), 0, "node {x}");
            // Domination is monotone.
            for i in 0..t.len() {
                for j in 0..t.len() {
                    let (a, b) = (t.keys().entry(i), t.keys().entry(j));
                    if a.iter().zip(b).all(|(x, y)| x <= y) {
                        assert!(t.size_at(i) <= t.size_at(j));
                    }
                }
            }
            // Joins add their children pointwise.
            if nice.node(x).kind() == NodeKind::Join {
                let (a, b) = (nice.node(x).children()[0], nice.node(x).children()[1]);
                for i in 0..t.len() {
                    assert_eq!(
                        t.size_at(i),
                        forest.table(a).size_at(i) + forest.table(b).size_at(i)
                    );
                }
            }
        }
    }

    #[test]
    fn exhaustive_four_vertex_check() {
        // Every connected 4-vertex graph, every ordered terminal pair,
        // bounds 1..=3, solver versus oracle.
        let opts = SolveOptions::default();
        for g in connected_graphs(4) {
            for s in 1..=4 {
                for t in 1..=4 {
                    if s == t {
                        continue;
                    }
                    for l in 1..=3u32 {
                        let sol = solve_mlbc(&g, s, t, l, None, &opts).unwrap();
                        let inst = CutInstance::single_pair(g.clone(), s, t, l).unwrap();
                        let (oracle_size, _) = brute_force_mlbmc(&inst, 20).unwrap();
                        assert_eq!(sol.size, oracle_size, "graph {g:?} s={s} t={t} l={l}");
                        assert!(verify_cut(&inst, &sol.cut).unwrap());
                    }
                }
            }
        }
    }
}

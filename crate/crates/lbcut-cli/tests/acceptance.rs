//! Release checklist: one test per numbered criterion, so the harness output
//! reads as a pass/fail line per criterion. Everything here goes through the
//! public library API or the installed binary — no test-only back doors.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lbcut::decomp::{heuristic_decomposition, inject_terminals, validate_decomposition};
use lbcut::dp::{build_forest, solve_mlbc, solve_mlbmc, DPForest, SolveOptions};
use lbcut::graph::bfs_distances;
use lbcut::hardgen::{
    and_compose, butte_graph, butte_path_decomposition, highland_graph,
    random_multicolor_instance, reduce_clique_to_mlbc, reduction_path_decomposition,
    ridge_set_for_clique,
};
use lbcut::instance::{save_graph_file, verify_cut};
use lbcut::lenvec::{count_vectors, enumerate_vectors, satisfies_triangle, Bound};
use lbcut::nice::NodeKind;
use lbcut::oracle::{
    brute_force_mlbc, brute_force_mlbmc, connected_graphs, find_multicolor_clique,
    MulticolorInstance, DEFAULT_ORACLE_CAP,
};
use lbcut::{CutInstance, Distance, Edge, Graph, VertexId};

fn dist(g: &Graph, s: VertexId, t: VertexId) -> Distance {
    bfs_distances(g, s)[t]
}

/// Random connected graph: a random attachment tree plus `extra` chords.
fn random_connected(rng: &mut ChaCha8Rng, n: usize, extra: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 2..=n {
        edges.push(Edge::new(rng.gen_range(1..v), v));
    }
    for _ in 0..extra {
        let u = rng.gen_range(1..=n);
        let v = rng.gen_range(1..=n);
        if u != v {
            edges.push(Edge::new(u, v));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Triangle 1-2-3 with later vertices attached to a random existing edge,
/// optionally minus one random edge when its removal keeps the graph
/// connected. Width stays at most two, so three-terminal tables stay small.
fn random_partial_two_tree(rng: &mut ChaCha8Rng, n: usize, delete: bool) -> Graph {
    let mut pairs: Vec<(VertexId, VertexId)> = vec![(1, 2), (1, 3), (2, 3)];
    for v in 4..=n {
        let (a, b) = pairs[rng.gen_range(0..pairs.len())];
        pairs.push((a, v));
        pairs.push((b, v));
    }
    let edges: Vec<Edge> = pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect();
    let mut g = Graph::new(n, edges).unwrap();
    if delete {
        let e = g.edges()[rng.gen_range(0..g.m())];
        let h = g.without_edges(&[e]);
        if bfs_distances(&h, 1)
            .iter()
            .skip(1)
            .all(|d| *d != Distance::Infinite)
        {
            g = h;
        }
    }
    g
}

/// Product of all connected graphs on at most five vertices, every ordered
/// terminal pair, and every bound in 1..=4.
fn for_each_exhaustive_instance(mut f: impl FnMut(&CutInstance)) -> usize {
    let mut visited = 0;
    for n in 1..=5 {
        for g in connected_graphs(n) {
            for s in 1..=n {
                for t in 1..=n {
                    if s == t {
                        continue;
                    }
                    for l in 1..=4 {
                        let inst = CutInstance::single_pair(g.clone(), s, t, l).unwrap();
                        f(&inst);
                        visited += 1;
                    }
                }
            }
        }
    }
    visited
}

/// Raw key-table bound for the decomposition the solver will actually use:
/// heuristic bags, terminals pulled into one bag. Instances past `cap` are
/// reshuffled by the corpus builders below so the suite stays desk-scale.
fn raw_table_bound(g: &Graph, terminals: &[VertexId], lim: u32) -> u128 {
    let td = heuristic_decomposition(g);
    let td = inject_terminals(&td, terminals).unwrap();
    let bag = td.width() + 1;
    let pairs = bag * bag.saturating_sub(1) / 2;
    (lim as u128).saturating_pow(pairs as u32)
}

const CORPUS_TABLE_CAP: u128 = 2_000_000;

/// 200 seeded single-pair instances (n <= 7, m <= 12, L <= 5) plus 50 seeded
/// three-terminal instances with entries <= 4. Deterministic: criteria 2 and
/// 4 must see the same corpus.
fn randomized_corpus() -> (Vec<CutInstance>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x02C0_4705);
    let mut corpus = Vec::new();
    let mut rerolls = 0;
    while corpus.len() < 200 {
        let n = rng.gen_range(3..=7);
        let extra = rng.gen_range(0..=(12 - (n - 1)));
        let g = random_connected(&mut rng, n, extra);
        assert!(g.m() <= 12);
        let s = rng.gen_range(1..=n);
        let mut t = rng.gen_range(1..=n);
        if t == s {
            t = if s == n { 1 } else { s + 1 };
        }
        let l = rng.gen_range(1..=5);
        let terminals = [s.min(t), s.max(t)];
        if raw_table_bound(&g, &terminals, l + 1) > CORPUS_TABLE_CAP {
            rerolls += 1;
            continue;
        }
        corpus.push(CutInstance::single_pair(g, s, t, l).unwrap());
    }
    let mut multi = 0;
    while multi < 50 {
        let n = rng.gen_range(4..=7);
        let delete = rng.gen_bool(0.5);
        let g = random_partial_two_tree(&mut rng, n, delete);
        let bounds = if multi % 5 == 0 {
            // skewed entries that violate the triangle inequality as given
            (4, 1, 1)
        } else {
            (
                rng.gen_range(1..=4),
                rng.gen_range(1..=4),
                rng.gen_range(1..=4),
            )
        };
        let lim = bounds.0.max(bounds.1).max(bounds.2);
        if raw_table_bound(&g, &[1, 2, 3], lim) > CORPUS_TABLE_CAP {
            rerolls += 1;
            continue;
        }
        let inst = CutInstance::multi(
            g,
            vec![1, 2, 3],
            &[(1, 2, bounds.0), (1, 3, bounds.1), (2, 3, bounds.2)],
            None,
        )
        .unwrap();
        corpus.push(inst);
        multi += 1;
    }
    (corpus, rerolls)
}

#[test]
fn criterion_01_exhaustive_oracle_equivalence() {
    let opts = SolveOptions::default();
    let solved = for_each_exhaustive_instance(|inst| {
        let sol = solve_mlbmc(inst, None, &opts).unwrap();
        let (oracle_size, _) = brute_force_mlbmc(inst, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(
            sol.size,
            oracle_size,
            "solver disagrees with oracle on n={} m={} bounds={:?}",
            inst.graph.n(),
            inst.graph.m(),
            inst.constraints()
        );
        assert_eq!(sol.cut.len(), sol.size);
        assert!(verify_cut(inst, &sol.cut).unwrap());
    });
    assert_eq!(solved, 2024, "exhaustive family shrank or grew");
    println!("criterion 1: {solved} exhaustive instances match the oracle exactly");
}

#[test]
fn criterion_02_randomized_oracle_equivalence() {
    let opts = SolveOptions::default();
    let (corpus, rerolls) = randomized_corpus();
    assert_eq!(corpus.len(), 250);
    for inst in &corpus {
        let sol = solve_mlbmc(inst, None, &opts).unwrap();
        let (oracle_size, _) = brute_force_mlbmc(inst, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(
            sol.size,
            oracle_size,
            "solver disagrees with oracle on n={} m={} bounds={:?}",
            inst.graph.n(),
            inst.graph.m(),
            inst.constraints()
        );
        assert!(verify_cut(inst, &sol.cut).unwrap());
    }
    println!(
        "criterion 2: 200 single-pair + 50 three-terminal random instances match \
         the oracle exactly (oversized candidates reshuffled: {rerolls})"
    );
}

#[test]
fn criterion_03_disjoint_union_additivity() {
    let opts = SolveOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x03AD_D171);
    // The attachment tree always wires 2 to 1, so drop that edge and keep
    // the part only when it stays connected.
    let part = |rng: &mut ChaCha8Rng| -> Option<Graph> {
        let n = rng.gen_range(3..=6);
        let extra = rng.gen_range(1..=4);
        let g = random_connected(rng, n, extra);
        let g = if g.has_edge(1, 2) {
            g.without_edges(&[Edge::new(1, 2)])
        } else {
            g
        };
        bfs_distances(&g, 1)
            .iter()
            .skip(1)
            .all(|d| *d != Distance::Infinite)
            .then_some(g)
    };
    let mut done = 0;
    while done < 50 {
        // Two connected parts overlapping in exactly the terminals 1 and 2;
        // neither may use the edge {1,2} or the union would merge copies.
        let Some(g1) = part(&mut rng) else { continue };
        let Some(pattern) = part(&mut rng) else {
            continue;
        };
        let n1 = g1.n();
        let relabel = |w: VertexId| if w <= 2 { w } else { w + n1 - 2 };
        let mut edges: Vec<Edge> = g1.edges().to_vec();
        edges.extend(
            pattern
                .edges()
                .iter()
                .map(|e| Edge::new(relabel(e.u), relabel(e.v))),
        );
        let union = Graph::new(n1 + pattern.n() - 2, edges).unwrap();
        let l = rng.gen_range(1..=4);
        if raw_table_bound(&union, &[1, 2], l + 1) > CORPUS_TABLE_CAP {
            continue;
        }
        let a = solve_mlbc(&g1, 1, 2, l, None, &opts).unwrap().size;
        let b = solve_mlbc(&pattern, 1, 2, l, None, &opts).unwrap().size;
        let whole = solve_mlbc(&union, 1, 2, l, None, &opts).unwrap().size;
        assert_eq!(
            whole,
            a + b,
            "union cut is not the sum of part cuts (n={} l={l})",
            union.n()
        );
        done += 1;
    }
    println!("criterion 3: 50 edge-disjoint unions cut exactly additively");
}

/// Table-law checks for one filled forest. Returns the number of comparable
/// key pairs exercised for the monotonicity law.
fn check_table_laws(forest: &DPForest) -> u64 {
    let mut compared = 0;
    let nice = forest.nice();
    for node in 0..nice.node_count() {
        let table = forest.table(node);
        let len = table.len();
        assert!(len > 0, "every key table has at least the all-ones key");

        // The lexicographically least key is all-ones: no cut needed.
        let least = table.vector_at(0);
        assert!(least.entries().iter().all(|&e| e == 1));
        assert_eq!(table.size_at(0), 0, "the all-ones requirement costs zero");

        // Weaker requirements never cost more.
        let step = (len / 48).max(1);
        let sampled: Vec<usize> = (0..len).step_by(step).chain([len - 1]).collect();
        for (pos, &i) in sampled.iter().enumerate() {
            let vi = table.vector_at(i);
            for &j in &sampled[pos + 1..] {
                let vj = table.vector_at(j);
                if vi.dominates(&vj).unwrap() {
                    assert!(
                        table.size_at(i) <= table.size_at(j),
                        "node {node}: dominated key is cheaper"
                    );
                    compared += 1;
                } else if vj.dominates(&vi).unwrap() {
                    assert!(
                        table.size_at(j) <= table.size_at(i),
                        "node {node}: dominated key is cheaper"
                    );
                    compared += 1;
                }
            }
        }

        // Join tables are the pointwise sums of their children's tables.
        if nice.node(node).kind() == NodeKind::Join {
            let ch = nice.node(node).children();
            assert_eq!(ch.len(), 2);
            let (a, b) = (forest.table(ch[0]), forest.table(ch[1]));
            assert_eq!(a.len(), len);
            assert_eq!(b.len(), len);
            for &i in &sampled {
                assert_eq!(
                    table.size_at(i),
                    a.size_at(i) + b.size_at(i),
                    "node {node}: join is not a pointwise sum at key {i}"
                );
            }
        }
    }
    compared
}

#[test]
fn criterion_04_table_laws() {
    let opts = SolveOptions::default();
    let mut compared = 0u64;
    let mut forests = 0u64;
    for_each_exhaustive_instance(|inst| {
        let forest = build_forest(inst, None, &opts).unwrap();
        compared += check_table_laws(&forest);
        forests += 1;
    });
    let (corpus, _) = randomized_corpus();
    for inst in &corpus {
        let forest = build_forest(inst, None, &opts).unwrap();
        compared += check_table_laws(&forest);
        forests += 1;
    }
    assert!(
        compared >= 10_000,
        "only {compared} comparable key pairs sampled"
    );
    println!(
        "criterion 4: monotonicity ({compared} key pairs), all-ones zero, and \
         join sums hold over {forests} forests"
    );
}

#[test]
fn criterion_05_vector_enumeration_counts() {
    let mut checked = 0;
    for k in 0..=4usize {
        let support: Vec<VertexId> = (1..=k).collect();
        let pairs = k * k.saturating_sub(1) / 2;
        for lim in 1..=4 as Bound {
            let enumerated = enumerate_vectors(&support, lim).unwrap().count() as u64;

            // Brute force: walk every bound tuple and keep the metric ones.
            let mut brute = 0u64;
            let mut digits = vec![0usize; pairs];
            loop {
                let entries: Vec<Bound> = digits.iter().map(|&d| d as Bound + 1).collect();
                if satisfies_triangle(&entries, k) {
                    brute += 1;
                }
                let mut pos = 0;
                loop {
                    if pos == pairs {
                        break;
                    }
                    digits[pos] += 1;
                    if digits[pos] < lim as usize {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == pairs {
                    break;
                }
            }

            assert_eq!(enumerated, brute, "count mismatch at k={k} lim={lim}");
            assert_eq!(count_vectors(k, lim).unwrap(), brute);
            if k == 3 && lim == 3 {
                assert_eq!(enumerated, 24);
            }
            checked += 1;
        }
    }
    println!("criterion 5: {checked} (support, limit) enumerations match brute-force filters");
}

#[test]
fn criterion_06_gadget_arithmetic() {
    let (g, b) = butte_graph(3, 4).unwrap();
    assert_eq!(g.n(), 21);
    assert_eq!(g.m(), 26);
    assert_eq!(dist(&g, b.s(), b.t()), Distance::Finite(2));
    let ridge = b.ridge_edges();
    assert_eq!(ridge.len(), 3);
    assert_eq!(
        dist(&g.without_edges(&ridge), b.s(), b.t()),
        Distance::Finite(5),
        "ridging a butte must raise its traversal to h + 2"
    );

    // Both legal ridging pairs of the two-low/one-high highland: low butte i
    // against the high butte of height 2^4 + 2 - i.
    for (i, height) in [(1usize, 17usize), (2, 16)] {
        let (g, hl) = highland_graph(2, &[height]).unwrap();
        assert_eq!(hl.fresh_distance(), 6);
        assert_eq!(dist(&g, hl.s(), hl.t()), Distance::Finite(6));
        let mut cut = hl.butte(i).ridge_edges();
        cut.extend(hl.butte(3).ridge_edges());
        assert_eq!(cut.len(), 22, "ridging cost must be X^4 + X^2 + X");
        assert_eq!(
            dist(&g.without_edges(&cut), hl.s(), hl.t()),
            Distance::Finite(28),
            "ridged distance must be 2(X+Y) + X^4 + X^2 + X"
        );
    }
    println!("criterion 6: butte and highland counts and distances are exact");
}

#[test]
fn criterion_07_reduction_forward() {
    let combos = [
        (2usize, 1usize, 1usize),
        (2, 2, 1),
        (2, 2, 2),
        (3, 1, 1),
        (3, 2, 1),
        (3, 2, 2),
    ];
    for round in 0..20 {
        let (k, n, m) = combos[round % combos.len()];
        let mcc = random_multicolor_instance(k, n, m, true, 700 + round as u64).unwrap();
        let clique = find_multicolor_clique(&mcc, 1 << 40)
            .unwrap()
            .expect("planted instances always contain a clique");
        let out = reduce_clique_to_mlbc(&mcc).unwrap();
        assert_eq!(
            dist(&out.graph, out.s, out.t),
            Distance::Finite(2 * (n + m) as u32),
            "fresh distance must be twice the butte-chain length"
        );
        let ridge = ridge_set_for_clique(&out, &clique).unwrap();
        let budget = k * (k - 1) * (n.pow(4) + n * n + n);
        assert_eq!(ridge.len(), budget);
        assert_eq!(out.budget, budget);
        assert_eq!(
            dist(&out.graph.without_edges(&ridge), out.s, out.t),
            Distance::Finite(out.l + 1),
            "a planted clique's ridges must lengthen s-t to exactly L + 1"
        );
        let inst = CutInstance::single_pair(out.graph.clone(), out.s, out.t, out.l).unwrap();
        assert!(verify_cut(&inst, &ridge).unwrap());
    }
    println!("criterion 7: 20 planted reductions hit budget and L + 1 exactly");
}

/// Three-color instances on two-vertex classes built so that no multicolor
/// clique exists, each `edges[pair]` list holding `m` distinct pairs.
fn no_clique_instances() -> Vec<MulticolorInstance> {
    let build = |e12: &[(usize, usize)], e13: &[(usize, usize)], e23: &[(usize, usize)]| {
        let mut edges = BTreeMap::new();
        edges.insert((1, 2), e12.to_vec());
        edges.insert((1, 3), e13.to_vec());
        edges.insert((2, 3), e23.to_vec());
        MulticolorInstance::new(3, 2, edges).unwrap()
    };
    vec![
        // Picking edge (1,2) forces v1=1, v2=2; edge (1,1) on pair (1,3)
        // forces v3=1; but (2,1) is missing from pair (2,3).
        build(&[(1, 2)], &[(1, 1)], &[(2, 2)]),
        // Both (1,2)- and (1,3)-edges force agreement, the (2,3)-edges
        // force disagreement.
        build(&[(1, 1), (2, 2)], &[(1, 1), (2, 2)], &[(1, 2), (2, 1)]),
    ]
}

#[test]
fn criterion_08_reduction_reverse() {
    let mut selections_tried = 0;
    for mcc in no_clique_instances() {
        assert_eq!(
            find_multicolor_clique(&mcc, 1 << 40).unwrap(),
            None,
            "these instances are built clique-free"
        );
        let out = reduce_clique_to_mlbc(&mcc).unwrap();
        let (k, n, m) = (mcc.colors(), mcc.class_size(), mcc.edges_per_pair());
        assert_eq!(k, 3);

        // Every clique-shaped ridge selection: one low butte per color, one
        // high butte pair per color pair.
        let mut vertex_pick = vec![1usize; k];
        loop {
            let mut edge_pick = vec![1usize; 3];
            loop {
                let mut cut: BTreeSet<Edge> = BTreeSet::new();
                for i in 1..=k {
                    for j in 1..=k {
                        if i == j {
                            continue;
                        }
                        let pair_slot = match (i.min(j), i.max(j)) {
                            (1, 2) => 0,
                            (1, 3) => 1,
                            _ => 2,
                        };
                        let low = out.butte((i, j), vertex_pick[i - 1]).unwrap();
                        let high = out.butte((i, j), n + edge_pick[pair_slot]).unwrap();
                        cut.extend(low.ridge_edges());
                        cut.extend(high.ridge_edges());
                    }
                }
                let cut: Vec<Edge> = cut.into_iter().collect();
                let on_budget = cut.len() == out.budget;
                let long_enough =
                    dist(&out.graph.without_edges(&cut), out.s, out.t).is_at_least(out.l + 1);
                assert!(
                    !(on_budget && long_enough),
                    "clique-shaped selection {vertex_pick:?}/{edge_pick:?} is a \
                     budget cut despite the instance having no clique"
                );
                selections_tried += 1;

                let mut pos = 0;
                while pos < 3 {
                    edge_pick[pos] += 1;
                    if edge_pick[pos] <= m {
                        break;
                    }
                    edge_pick[pos] = 1;
                    pos += 1;
                }
                if pos == 3 {
                    break;
                }
            }
            let mut pos = 0;
            while pos < k {
                vertex_pick[pos] += 1;
                if vertex_pick[pos] <= n {
                    break;
                }
                vertex_pick[pos] = 1;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
    }
    assert_eq!(selections_tried, 8 + 64);
    println!(
        "criterion 8: {selections_tried} clique-shaped selections on clique-free \
         instances all miss budget or distance"
    );
}

#[test]
fn criterion_09_decomposition_widths() {
    let mut widths = Vec::new();
    for n in [2usize, 3, 4] {
        for m in [1usize, 2] {
            let mcc = random_multicolor_instance(2, n, m, true, 900).unwrap();
            let out = reduce_clique_to_mlbc(&mcc).unwrap();
            let td = reduction_path_decomposition(&out).unwrap();
            assert!(
                validate_decomposition(&out.graph, &td).is_empty(),
                "reduction decomposition invalid at n={n} m={m}"
            );
            widths.push(td.width());
        }
    }
    assert!(
        widths.windows(2).all(|w| w[0] == w[1]),
        "width must not depend on class size or edge count: {widths:?}"
    );

    let (g, b) = butte_graph(3, 4).unwrap();
    let td = butte_path_decomposition(&g, &b).unwrap();
    assert!(validate_decomposition(&g, &td).is_empty());
    assert!(td.width() <= 3, "butte width {} exceeds 3", td.width());
    println!(
        "criterion 9: reduction width fixed at {} over six instance sizes; \
         butte width {} <= 3",
        widths[0],
        td.width()
    );
}

#[test]
fn criterion_10_and_composition() {
    // A 3-edge path and a 4-cycle between the same terminals; both on four
    // vertices as composition requires.
    let path = Graph::new(4, vec![Edge::new(1, 3), Edge::new(3, 4), Edge::new(4, 2)]).unwrap();
    let diamond = Graph::new(
        4,
        vec![
            Edge::new(1, 3),
            Edge::new(3, 2),
            Edge::new(1, 4),
            Edge::new(4, 2),
        ],
    )
    .unwrap();
    let l = 3;
    let parts = [(path.clone(), 1, 2), (diamond.clone(), 1, 2)];
    let comp = and_compose(&parts).unwrap();

    let (a, _) = brute_force_mlbc(&path, 1, 2, l, DEFAULT_ORACLE_CAP).unwrap();
    let (b, _) = brute_force_mlbc(&diamond, 1, 2, l, DEFAULT_ORACLE_CAP).unwrap();
    let (whole, _) = brute_force_mlbc(&comp.graph, comp.s, comp.t, l, DEFAULT_ORACLE_CAP).unwrap();
    assert_eq!((a, b), (1, 2));
    assert_eq!(whole, a + b, "composed cut must be the sum over parts");

    let sol = solve_mlbc(
        &comp.graph,
        comp.s,
        comp.t,
        l,
        Some(&comp.decomposition),
        &SolveOptions::default(),
    )
    .unwrap();
    assert_eq!(sol.size, whole);

    assert!(validate_decomposition(&comp.graph, &comp.decomposition).is_empty());
    assert!(
        comp.decomposition.width() <= 4 + 1,
        "composition width {} exceeds max part order + 1",
        comp.decomposition.width()
    );
    println!(
        "criterion 10: composed optimum {whole} = {a} + {b}; emitted decomposition \
         valid at width {}",
        comp.decomposition.width()
    );
}

fn run(binary: &str, args: &[&str]) -> Output {
    let out = Command::new(binary)
        .args(args)
        .output()
        .expect("binary spawns");
    assert!(
        out.status.success(),
        "lbcut {:?} failed:\n{}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn read(path: &Path) -> Vec<u8> {
    std::fs::read(path).unwrap_or_else(|e| panic!("read {}: {e}", path.display()))
}

#[test]
fn criterion_11_byte_identical_reruns() {
    let bin = env!("CARGO_BIN_EXE_lbcut");
    let dir = tempfile::tempdir().unwrap();
    let root = dir.path();
    let p = |name: &str| root.join(name);
    let s = |path: &Path| path.to_str().unwrap().to_string();

    // Generator determinism: a planted reduction bundle, twice.
    for sub in ["g1", "g2"] {
        run(
            bin,
            &[
                "gen",
                "reduction",
                "--k",
                "2",
                "--n",
                "2",
                "--m",
                "1",
                "--seed",
                "11",
                "--plant",
                "--td",
                "--out-dir",
                &s(&p(sub)),
                "--name",
                "r",
            ],
        );
    }
    for file in [
        "r.gr",
        "r.instance.json",
        "r.td",
        "r.mcc.json",
        "r.witness.json",
    ] {
        assert_eq!(
            read(&p("g1").join(file)),
            read(&p("g2").join(file)),
            "{file} differs between identical generator runs"
        );
    }

    // Solver determinism: same artifact twice, then with a thread pool.
    let c6 = Graph::new(
        6,
        (1..=6).map(|v| Edge::new(v, v % 6 + 1)).collect::<Vec<_>>(),
    )
    .unwrap();
    save_graph_file(&p("c6.gr"), &c6).unwrap();
    let solve_args = |out: &str, threads: &str| {
        vec![
            "solve".to_string(),
            "--graph".to_string(),
            s(&p("c6.gr")),
            "-s".to_string(),
            "1".to_string(),
            "-t".to_string(),
            "4".to_string(),
            "-L".to_string(),
            "3".to_string(),
            "--format".to_string(),
            "json".to_string(),
            "--threads".to_string(),
            threads.to_string(),
            "--out".to_string(),
            s(&p(out)),
        ]
    };
    let runs: Vec<Output> = [("o1.json", "1"), ("o2.json", "1"), ("o3.json", "3")]
        .iter()
        .map(|(out, threads)| {
            let args = solve_args(out, threads);
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            run(bin, &args)
        })
        .collect();
    assert_eq!(runs[0].stdout, runs[1].stdout, "solve rerun differs");
    assert_eq!(
        runs[0].stdout, runs[2].stdout,
        "--threads 3 output differs from single-threaded"
    );
    assert_eq!(read(&p("o1.json")), read(&p("o2.json")));
    assert_eq!(read(&p("o1.json")), read(&p("o3.json")));

    // Instance-generator determinism without a bundle.
    for out in ["m1.json", "m2.json"] {
        run(
            bin,
            &[
                "gen", "mcc", "--k", "2", "--n", "3", "--m", "2", "--seed", "5", "--plant",
                "--out", &s(&p(out)),
            ],
        );
    }
    assert_eq!(read(&p("m1.json")), read(&p("m2.json")));

    // Bench determinism over a small corpus.
    std::fs::create_dir(p("corpus")).unwrap();
    run(
        bin,
        &[
            "gen",
            "butte",
            "--h",
            "3",
            "--q",
            "4",
            "--out-dir",
            &s(&p("corpus")),
            "--name",
            "butte",
        ],
    );
    let bench_outs: Vec<Output> = ["b1.json", "b2.json"]
        .iter()
        .map(|out| {
            run(
                bin,
                &[
                    "bench",
                    "--corpus",
                    &s(&p("corpus")),
                    "--out",
                    &s(&p(out)),
                ],
            )
        })
        .collect();
    assert_eq!(read(&p("b1.json")), read(&p("b2.json")));
    // Stdout tables carry wall-clock timings, so only the reports must match.
    assert!(!bench_outs[0].stdout.is_empty());

    println!("criterion 11: generator, solver, and bench artifacts are byte-identical across reruns");
}

//! Nice tree decompositions in a modified form: besides the usual
//! leaf/introduce/forget/join shape, every introduce node hangs under a
//! join whose other child is a leaf with the identical bag, and the graph
//! edges are partitioned across the leaf nodes. The extra leaves guarantee
//! that every edge fits into some leaf bag, so the partition always exists.

use std::collections::VecDeque;

use crate::decomp::{root_bag, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NodeKind {
    Leaf,
    Introduce(VertexId),
    Forget(VertexId),
    Join,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NiceNode {
    kind: NodeKind,
    bag: Vec<VertexId>,
    children: Vec<usize>,
    /// Graph edges owned by this node; nonempty only for leaves.
    edges: Vec<Edge>,
}

impl NiceNode {
    pub fn kind(&self) -> NodeKind {
        self.kind
    }

    pub fn bag(&self) -> &[VertexId] {
        &self.bag
    }

    pub fn children(&self) -> &[usize] {
        &self.children
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NiceDecomposition {
    nodes: Vec<NiceNode>,
    root: usize,
}

impl NiceDecomposition {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, i: usize) -> &NiceNode {
        &self.nodes[i]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Children-before-parent order, computed without recursion.
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((x, expanded)) = stack.pop() {
            if expanded {
                out.push(x);
            } else {
                stack.push((x, true));
                for &c in self.nodes[x].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|nd| nd.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }
}

/// Convert a tree decomposition into the modified nice form, rooted at the
/// smallest-index bag containing every terminal (grow bags with
/// [`crate::decomp::inject_terminals`] first if no bag qualifies). Between
/// a bag and its child, vertices are forgotten then introduced in
/// ascending order; multi-child bags are joined left to right.
pub fn make_nice(
    g: &Graph,
    td: &TreeDecomposition,
    terminals: &[VertexId],
) -> Result<NiceDecomposition> {
    let root_td = root_bag(td, terminals)?;
    let b = td.bag_count();
    let mut parent = vec![usize::MAX; b];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); b];
    let mut order = Vec::with_capacity(b);
    let mut queue = VecDeque::from([root_td]);
    parent[root_td] = root_td;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &y in td.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                children[x].push(y);
                queue.push_back(y);
            }
        }
    }
    for kids in children.iter_mut() {
        kids.sort_unstable();
    }

    let mut nodes: Vec<NiceNode> = Vec::new();
    let push = |nodes: &mut Vec<NiceNode>, kind, bag: Vec<VertexId>, ch: Vec<usize>| {
        nodes.push(NiceNode {
            kind,
            bag,
            children: ch,
            edges: Vec::new(),
        });
        nodes.len() - 1
    };
    let mut top = vec![usize::MAX; b];
    for &x in order.iter().rev() {
        let bag_x = td.bag(x);
        if children[x].is_empty() {
            top[x] = push(&mut nodes, NodeKind::Leaf, bag_x.to_vec(), vec![]);
            continue;
        }
        let mut tops = Vec::with_capacity(children[x].len());
        for &c in &children[x] {
            let mut cur = top[c];
            let mut cur_bag = nodes[cur].bag.clone();
            for &v in td.bag(c) {
                if !bag_x.contains(&v) {
                    cur_bag.retain(|&w| w != v);
                    cur = push(&mut nodes, NodeKind::Forget(v), cur_bag.clone(), vec![cur]);
                }
            }
            for &v in bag_x {
                if !td.bag(c).contains(&v) {
                    cur_bag.push(v);
                    cur_bag.sort_unstable();
                    let intro =
                        push(&mut nodes, NodeKind::Introduce(v), cur_bag.clone(), vec![cur]);
                    let sib = push(&mut nodes, NodeKind::Leaf, cur_bag.clone(), vec![]);
                    cur = push(&mut nodes, NodeKind::Join, cur_bag.clone(), vec![intro, sib]);
                }
            }
            tops.push(cur);
        }
        let mut acc = tops[0];
        for &t in &tops[1..] {
            acc = push(&mut nodes, NodeKind::Join, bag_x.to_vec(), vec![acc, t]);
        }
        top[x] = acc;
    }

    let mut nice = NiceDecomposition {
        nodes,
        root: top[root_td],
    };
    assign_edges(g, &mut nice)?;
    Ok(nice)
}

/// Give every graph edge to the smallest-index leaf whose bag holds both
/// endpoints. The modified shape guarantees such a leaf exists.
fn assign_edges(g: &Graph, nice: &mut NiceDecomposition) -> Result<()> {
    let n = g.n();
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (i, nd) in nice.nodes.iter().enumerate() {
        if nd.kind == NodeKind::Leaf {
            for &v in &nd.bag {
                occ[v].push(i);
            }
        }
    }
    for e in g.edges() {
        let (a, b) = (&occ[e.u], &occ[e.v]);
        let (mut i, mut j) = (0, 0);
        let mut home = None;
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    home = Some(a[i]);
                    break;
                }
            }
        }
        let home = home
            .ok_or_else(|| Error::structural(format!("edge {e} fits in no leaf bag")))?;
        nice.nodes[home].edges.push(*e);
    }
    Ok(())
}

/// Verify every structural invariant: tree shape, node arities, the bag
/// relations of each kind, the join-with-leaf-sibling rule for introduces,
/// decomposition validity for the graph, the leaf edge partition, and the
/// root bag holding all terminals.
pub fn check_nice(g: &Graph, nice: &NiceDecomposition, terminals: &[VertexId]) -> Result<()> {
    let count = nice.node_count();
    let fail = |msg: String| Err(Error::structural(msg));
    let mut parent = vec![usize::MAX; count];
    for (i, nd) in nice.nodes.iter().enumerate() {
        let mut sorted = nd.bag.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted != nd.bag {
            return fail(format!("node {i}: bag not sorted and distinct"));
        }
        if nd.bag.iter().any(|&v| v < 1 || v > g.n()) {
            return fail(format!("node {i}: bag vertex out of range"));
        }
        for &c in &nd.children {
            if c >= count {
                return fail(format!("node {i}: child {c} out of range"));
            }
            if parent[c] != usize::MAX {
                return fail(format!("node {c} has two parents"));
            }
            parent[c] = i;
        }
    }
    if nice.root >= count || parent[nice.root] != usize::MAX {
        return fail("root missing or has a parent".into());
    }
    let post = nice.postorder();
    if post.len() != count {
        return fail("nodes unreachable from the root".into());
    }
    for (i, nd) in nice.nodes.iter().enumerate() {
        let kid_bag = |c: usize| -> &[VertexId] { &nice.nodes[c].bag };
        match nd.kind {
            NodeKind::Leaf => {
                if !nd.children.is_empty() {
                    return fail(format!("leaf {i} has children"));
                }
            }
            NodeKind::Introduce(v) => {
                if nd.children.len() != 1 {
                    return fail(format!("introduce {i} needs exactly one child"));
                }
                let cb = kid_bag(nd.children[0]);
                if cb.contains(&v) || !nd.bag.contains(&v) || cb.len() + 1 != nd.bag.len() {
                    return fail(format!("introduce {i}: bag is not child + {v}"));
                }
                if !cb.iter().all(|w| nd.bag.contains(w)) {
                    return fail(format!("introduce {i}: child bag not contained"));
                }
                let p = parent[i];
                if p == usize::MAX || nice.nodes[p].kind != NodeKind::Join {
                    return fail(format!("introduce {i}: parent is not a join"));
                }
                let sibling = nice.nodes[p]
                    .children
                    .iter()
                    .copied()
                    .find(|&c| c != i)
                    .unwrap_or(usize::MAX);
                if sibling == usize::MAX
                    || nice.nodes[sibling].kind != NodeKind::Leaf
                    || nice.nodes[sibling].bag != nd.bag
                {
                    return fail(format!("introduce {i}: no same-bag leaf sibling"));
                }
            }
            NodeKind::Forget(v) => {
                if nd.children.len() != 1 {
                    return fail(format!("forget {i} needs exactly one child"));
                }
                let cb = kid_bag(nd.children[0]);
                if !cb.contains(&v) || nd.bag.contains(&v) || cb.len() != nd.bag.len() + 1 {
                    return fail(format!("forget {i}: bag is not child - {v}"));
                }
                if !nd.bag.iter().all(|w| cb.contains(w)) {
                    return fail(format!("forget {i}: bag not contained in child"));
                }
            }
            NodeKind::Join => {
                if nd.children.len() != 2 {
                    return fail(format!("join {i} needs exactly two children"));
                }
                for &c in &nd.children {
                    if kid_bag(c) != nd.bag.as_slice() {
                        return fail(format!("join {i}: child {c} bag differs"));
                    }
                }
            }
        }
        if nd.kind != NodeKind::Leaf && !nd.edges.is_empty() {
            return fail(format!("non-leaf {i} owns edges"));
        }
    }
    // The nice nodes must remain a tree decomposition of the graph.
    let mut occ_count = vec![0usize; g.n() + 1];
    let mut shared = vec![0usize; g.n() + 1];
    for nd in &nice.nodes {
        for &v in &nd.bag {
            occ_count[v] += 1;
        }
    }
    for (i, nd) in nice.nodes.iter().enumerate() {
        for &c in &nd.children {
            for &v in &nice.nodes[i].bag {
                if nice.nodes[c].bag.contains(&v) {
                    shared[v] += 1;
                }
            }
        }
    }
    for v in g.vertices() {
        if occ_count[v] == 0 {
            return fail(format!("vertex {v} in no bag"));
        }
        if occ_count[v] != shared[v] + 1 {
            return fail(format!("bags containing vertex {v} are disconnected"));
        }
    }
    // Leaf edges partition the graph's edges and respect their bags.
    let mut seen = std::collections::BTreeSet::new();
    for (i, nd) in nice.nodes.iter().enumerate() {
        for e in &nd.edges {
            if !nd.bag.contains(&e.u) || !nd.bag.contains(&e.v) {
                return fail(format!("leaf {i} owns edge {e} outside its bag"));
            }
            if !g.has_edge(e.u, e.v) {
                return fail(format!("leaf {i} owns unknown edge {e}"));
            }
            if !seen.insert(*e) {
                return fail(format!("edge {e} owned twice"));
            }
        }
    }
    if seen.len() != g.m() {
        return fail(format!("{} of {} edges assigned to leaves", seen.len(), g.m()));
    }
    let rb = &nice.nodes[nice.root].bag;
    for &t in terminals {
        if !rb.contains(&t) {
            return fail(format!("terminal {t} missing from the root bag"));
        }
    }
    Ok(())
}

//! 3-edge cuts of a cubic graph: brute-force oracle plus the tree of cuts.
//!
//! For 3-edge-connected cubic graphs the cactus representation of minimum
//! cuts degenerates to a tree T whose leaves are the graph vertices (via
//! phi) and whose tree edges correspond bijectively to the 3-edge cuts.

use std::collections::BTreeSet;
use std::fmt;

use crate::cutscan::{CutScan, ScanError};
use crate::dsu::Dsu;
use crate::graph::{CubicGraph, EdgeId, VertexId};

/// Exponential-oracle guard: bipartition enumeration stops here.
pub const BRUTE_GUARD: usize = 22;

/// A 3-edge cut in canonical form: `side` is the side not containing
/// vertex 0, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeCut {
    pub side: Vec<VertexId>,
    pub cut_edges: [EdgeId; 3],
}

impl EdgeCut {
    pub fn is_trivial(&self, n: usize) -> bool {
        self.side.len() == 1 || self.side.len() == n - 1
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CutFamily {
    pub cuts: BTreeSet<EdgeCut>,
}

impl CutFamily {
    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn trivial_count(&self, n: usize) -> usize {
        self.cuts.iter().filter(|c| c.is_trivial(n)).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CutError {
    TooLarge { n: usize, guard: usize },
    Disconnected,
    NotThreeEdgeConnected,
    UnknownEdge { index: usize },
}

impl fmt::Display for CutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutError::TooLarge { n, guard } => {
                write!(f, "graph with {} vertices exceeds the brute-force guard {}", n, guard)
            }
            CutError::Disconnected => write!(f, "graph is disconnected"),
            CutError::NotThreeEdgeConnected => write!(f, "graph is not 3-edge-connected"),
            CutError::UnknownEdge { index } => write!(f, "no tree edge with index {}", index),
        }
    }
}

impl std::error::Error for CutError {}

/// Every 3-edge cut by exhaustive bipartition scan. Exact and exponential;
/// this is the oracle everything else is checked against.
pub fn enumerate_3cuts_bruteforce(g: &CubicGraph) -> Result<CutFamily, CutError> {
    let n = g.n();
    if n > BRUTE_GUARD {
        return Err(CutError::TooLarge { n, guard: BRUTE_GUARD });
    }
    if !crate::graph::edge_connectivity_at_least(g, 1) {
        return Err(CutError::Disconnected);
    }
    let mut fam = CutFamily::default();
    for mask in 1u32..(1u32 << (n - 1)) {
        let inside = |v: usize| v > 0 && (mask >> (v - 1)) & 1 == 1;
        let mut cross = [0usize; 3];
        let mut k = 0;
        for e in g.edges() {
            if inside(e.u) != inside(e.v) {
                if k == 3 {
                    k = 4;
                    break;
                }
                cross[k] = e.id;
                k += 1;
            }
        }
        if k == 3 {
            cross.sort_unstable();
            let side: Vec<VertexId> = (1..n).filter(|&v| inside(v)).collect();
            fam.cuts.insert(EdgeCut { side, cut_edges: cross });
        }
    }
    Ok(fam)
}

/// Minimum cut size by the same exhaustive scan (0 when disconnected).
pub fn min_cut_bruteforce(g: &CubicGraph) -> Result<usize, CutError> {
    let n = g.n();
    if n > BRUTE_GUARD {
        return Err(CutError::TooLarge { n, guard: BRUTE_GUARD });
    }
    let mut best = usize::MAX;
    for mask in 1u32..(1u32 << (n - 1)) {
        let inside = |v: usize| v > 0 && (mask >> (v - 1)) & 1 == 1;
        let c = g.edges().iter().filter(|e| inside(e.u) != inside(e.v)).count();
        best = best.min(c);
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(VertexId),
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    /// the 3-edge cut this tree edge induces, ascending
    pub cut_edges: [EdgeId; 3],
}

/// The tree of 3-edge cuts. Nodes 0..n-1 are the leaves (phi is the
/// identity onto them); empty (internal) nodes follow. Tree edges are in
/// canonical order (sorted by their cut triple).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CactusModel {
    pub nodes: Vec<NodeKind>,
    pub tree_edges: Vec<TreeEdge>,
    /// node -> (neighbor, tree edge index)
    pub adj: Vec<Vec<(usize, usize)>>,
    /// vertex -> leaf node id
    pub phi: Vec<usize>,
    pub root: usize,
    /// node -> (parent, connecting tree edge index); None for the root
    pub parent: Vec<Option<(usize, usize)>>,
    /// node -> children, ascending
    pub children: Vec<Vec<usize>>,
}

impl CactusModel {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.tree_edges.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.phi.len()
    }

    pub fn internal_count(&self) -> usize {
        self.nodes.len() - self.phi.len()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adj[node].len()
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        matches!(self.nodes[node], NodeKind::Leaf(_))
    }

    /// Star (single internal node) iff the graph has no nontrivial 3-cut,
    /// i.e. it is internally 4-edge-connected.
    pub fn is_star(&self) -> bool {
        self.internal_count() <= 1
    }

    pub fn nontrivial_cut_count(&self) -> usize {
        self.edge_count() - self.leaf_count()
    }

    /// Nodes in breadth-first order from the root (parents first).
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.nodes.len());
        order.push(self.root);
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            order.extend_from_slice(&self.children[v]);
        }
        order
    }
}

/// Builds the tree of cuts. The scanner lists every 3-edge cut once with a
/// side oracle; for each graph edge, the cuts containing it form a chain
/// (ordered by side size toward one endpoint) that walks the tree path
/// between the endpoint leaves, so uniting consecutive facing slots of
/// each chain recovers the tree nodes without materializing any cut side.
pub fn build_cactus(g: &CubicGraph) -> Result<CactusModel, CutError> {
    let n = g.n();
    if n == 2 {
        // theta graph: two leaves joined by the single (trivial) cut
        let cut = {
            let mut ids = g.incident_ids(0);
            ids.sort_unstable();
            ids
        };
        return Ok(CactusModel {
            nodes: vec![NodeKind::Leaf(0), NodeKind::Leaf(1)],
            tree_edges: vec![TreeEdge { a: 0, b: 1, cut_edges: cut }],
            adj: vec![vec![(1, 0)], vec![(0, 0)]],
            phi: vec![0, 1],
            root: 0,
            parent: vec![None, Some((0, 0))],
            children: vec![vec![1], vec![]],
        });
    }

    let view = g.edge_view();
    let scan = CutScan::run(n, &view).map_err(|e| match e {
        ScanError::Disconnected => CutError::Disconnected,
        ScanError::NotThreeEdgeConnected => CutError::NotThreeEdgeConnected,
    })?;
    let k = scan.cuts().len();
    assert!(k >= n, "every vertex star is a 3-cut");
    assert!(k <= 2 * n - 3, "cut count exceeds the tree-of-cuts bound");

    // trivial cut of each vertex: the triple sharing a common endpoint
    let mut trivial_of = vec![usize::MAX; n];
    for ci in 0..k {
        if let Some(v) = common_endpoint(g, &scan.cuts()[ci].edges) {
            assert_eq!(trivial_of[v], usize::MAX, "two trivial cuts at one vertex");
            trivial_of[v] = ci;
            let sz = scan.side_size(ci);
            assert!(sz == 1 || sz == n - 1);
            assert_eq!(scan.side_contains(ci, v), sz == 1);
        }
    }
    assert!(
        trivial_of.iter().all(|&c| c != usize::MAX),
        "a vertex star is missing from the cut list"
    );

    // chains: cuts containing each edge, ordered by side size toward u
    let mut buckets: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.m()];
    let edge_index = |id: EdgeId| -> usize {
        g.edges().binary_search_by_key(&id, |e| e.id).expect("cut edge not in graph")
    };
    for ci in 0..k {
        for &id in &scan.cuts()[ci].edges {
            let ei = edge_index(id);
            let e = &g.edges()[ei];
            let toward_u = if scan.side_contains(ci, e.u) {
                scan.side_size(ci)
            } else {
                n - scan.side_size(ci)
            };
            buckets[ei].push((toward_u, ci));
        }
    }

    // slot s of cut ci: 2*ci + s, s = 0 for the stored side, 1 for its
    // complement; facing slots of consecutive chain cuts are one tree node
    let mut dsu = Dsu::new(2 * k);
    let slot_toward = |ci: usize, v: VertexId| -> usize {
        2 * ci + if scan.side_contains(ci, v) { 0 } else { 1 }
    };
    for (ei, bucket) in buckets.iter_mut().enumerate() {
        bucket.sort_unstable();
        let e = &g.edges()[ei];
        assert!(bucket.windows(2).all(|w| w[0].0 < w[1].0), "cut chain sizes not strict");
        let first = bucket.first().expect("edge missing from every cut");
        let last = bucket.last().unwrap();
        assert_eq!((first.0, first.1), (1, trivial_of[e.u]), "chain must start at the u star");
        assert_eq!((last.0, last.1), (n - 1, trivial_of[e.v]), "chain must end at the v star");
        for w in bucket.windows(2) {
            let (_, c1) = w[0];
            let (_, c2) = w[1];
            let far1 = (2 * c1) + (1 - (slot_toward(c1, e.u) - 2 * c1));
            let near2 = slot_toward(c2, e.u);
            dsu.union(far1, near2);
        }
    }
    assert_eq!(dsu.classes(), k + 1, "cut slots must glue into a tree");

    // canonical node ids: leaves first (leaf of vertex v is node v), then
    // internal nodes in order of first appearance over sorted cut triples
    let mut node_of = vec![usize::MAX; 2 * k];
    for v in 0..n {
        let rep = dsu.find(slot_toward(trivial_of[v], v));
        assert_eq!(node_of[rep], usize::MAX, "leaf slots of two vertices coincide");
        node_of[rep] = v;
    }
    let mut cut_order: Vec<usize> = (0..k).collect();
    cut_order.sort_by_key(|&ci| scan.cuts()[ci].edges);
    let mut next_id = n;
    for &ci in &cut_order {
        for s in [0usize, 1] {
            let rep = dsu.find(2 * ci + s);
            if node_of[rep] == usize::MAX {
                node_of[rep] = next_id;
                next_id += 1;
            }
        }
    }

    let mut nodes: Vec<NodeKind> = (0..n).map(NodeKind::Leaf).collect();
    nodes.extend(std::iter::repeat(NodeKind::Empty).take(next_id - n));
    let mut tree_edges = Vec::with_capacity(k);
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); next_id];
    for &ci in &cut_order {
        let a = node_of[dsu.find(2 * ci)];
        let b = node_of[dsu.find(2 * ci + 1)];
        assert_ne!(a, b, "cut with both slots on one node");
        let idx = tree_edges.len();
        tree_edges.push(TreeEdge { a, b, cut_edges: scan.cuts()[ci].edges });
        adj[a].push((b, idx));
        adj[b].push((a, idx));
    }

    // root: internal node of maximum degree, ties to the lowest id
    let root = (n..next_id)
        .max_by_key(|&x| (adj[x].len(), std::cmp::Reverse(x)))
        .expect("a graph on 4 or more vertices always has an internal node");

    let mut parent: Vec<Option<(usize, usize)>> = vec![None; next_id];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); next_id];
    let mut seen = vec![false; next_id];
    seen[root] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &(w, ei) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                parent[w] = Some((v, ei));
                children[v].push(w);
                queue.push_back(w);
            }
        }
    }
    assert_eq!(reached, next_id, "cut tree is disconnected");
    for ch in &mut children {
        ch.sort_unstable();
    }

    Ok(CactusModel {
        nodes,
        tree_edges,
        adj,
        phi: (0..n).collect(),
        root,
        parent,
        children,
    })
}

/// The unique vertex on all three edges, if any. In a simple cubic graph
/// a triple has a common endpoint iff it is a vertex star.
fn common_endpoint(g: &CubicGraph, triple: &[EdgeId; 3]) -> Option<VertexId> {
    let e0 = g.edge_by_id(triple[0])?;
    let e1 = g.edge_by_id(triple[1])?;
    let e2 = g.edge_by_id(triple[2])?;
    for cand in [e0.u, e0.v] {
        if e1.touches(cand) && e2.touches(cand) {
            return Some(cand);
        }
    }
    None
}

/// The cut induced by one tree edge: vertices whose leaves fall on one
/// side of T minus that edge, canonicalized to exclude vertex 0.
pub fn tree_edge_cut(m: &CactusModel, g: &CubicGraph, tree_edge: usize) -> Result<EdgeCut, CutError> {
    if tree_edge >= m.tree_edges.len() {
        return Err(CutError::UnknownEdge { index: tree_edge });
    }
    let te = &m.tree_edges[tree_edge];
    // leaves on the a-side of T - te
    let mut seen = vec![false; m.nodes.len()];
    seen[te.a] = true;
    let mut stack = vec![te.a];
    let mut side_a = Vec::new();
    while let Some(x) = stack.pop() {
        if let NodeKind::Leaf(v) = m.nodes[x] {
            side_a.push(v);
        }
        for &(w, ei) in &m.adj[x] {
            if ei != tree_edge && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    side_a.sort_unstable();
    let side = if side_a.binary_search(&0).is_ok() {
        (0..g.n()).filter(|v| side_a.binary_search(v).is_err()).collect()
    } else {
        side_a
    };
    Ok(EdgeCut { side, cut_edges: te.cut_edges })
}

/// The full induced family (quadratic; intended for oracle comparisons).
pub fn induced_cut_family(m: &CactusModel, g: &CubicGraph) -> CutFamily {
    let mut fam = CutFamily::default();
    for i in 0..m.tree_edges.len() {
        fam.cuts.insert(tree_edge_cut(m, g, i).expect("index in range"));
    }
    fam
}

#[derive(Clone, Debug)]
pub struct CactusReport {
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Validates a model against its graph. Structural invariants and the
/// per-tree-edge cut property are checked at every scale (the latter via
/// leaf-path counting, no sides materialized); for n within the brute
/// guard the induced family is compared against the oracle exactly.
pub fn validate_cactus(m: &CactusModel, g: &CubicGraph) -> CactusReport {
    let mut failures = validate_scalable(m, g);

    // exact family equality within the oracle guard
    if failures.is_empty() && g.n() <= BRUTE_GUARD {
        match enumerate_3cuts_bruteforce(g) {
            Ok(want) => {
                let got = induced_cut_family(m, g);
                if got != want {
                    let missing = want.cuts.difference(&got.cuts).next();
                    let extra = got.cuts.difference(&want.cuts).next();
                    failures.push(format!(
                        "induced family differs from brute force (missing: {:?}, extra: {:?})",
                        missing.map(|c| c.cut_edges),
                        extra.map(|c| c.cut_edges)
                    ));
                }
            }
            Err(e) => failures.push(format!("brute-force oracle unavailable: {}", e)),
        }
    }

    CactusReport { pass: failures.is_empty(), failures }
}

/// The near-linear layers of [`validate_cactus`]: structure, the tree
/// size bound, and the per-tree-edge cut property. No brute-force
/// comparison, so safe to run on every decomposition at any scale.
pub(crate) fn validate_scalable(m: &CactusModel, g: &CubicGraph) -> Vec<String> {
    let mut failures = Vec::new();
    let n = g.n();
    let nn = m.nodes.len();

    // structural layer
    if m.tree_edges.len() + 1 != nn {
        failures.push(format!("{} tree edges for {} nodes, want node count - 1", m.tree_edges.len(), nn));
    }
    if m.phi.len() != n {
        failures.push(format!("phi covers {} vertices, graph has {}", m.phi.len(), n));
    }
    let mut leaf_seen = vec![false; nn];
    for v in 0..n.min(m.phi.len()) {
        let l = m.phi[v];
        if l >= nn || m.nodes[l] != NodeKind::Leaf(v) {
            failures.push(format!("phi({}) does not name that vertex's leaf", v));
        } else if leaf_seen[l] {
            failures.push(format!("phi maps two vertices to node {}", l));
        } else {
            leaf_seen[l] = true;
        }
    }
    let leaf_total = m.nodes.iter().filter(|k| matches!(k, NodeKind::Leaf(_))).count();
    if leaf_total != n {
        failures.push(format!("{} leaf nodes for {} vertices", leaf_total, n));
    }
    for x in 0..nn {
        match m.nodes[x] {
            NodeKind::Leaf(_) => {
                if m.adj[x].len() != 1 {
                    failures.push(format!("leaf node {} has degree {}", x, m.adj[x].len()));
                }
            }
            NodeKind::Empty => {
                if m.adj[x].len() < 3 {
                    failures.push(format!("empty node {} has degree {} < 3", x, m.adj[x].len()));
                }
            }
        }
    }
    if m.tree_edges.len() > 2 * n - 3 {
        failures.push(format!("{} tree edges exceeds 2n-3 = {}", m.tree_edges.len(), 2 * n - 3));
    }
    {
        let mut triples: Vec<_> = m.tree_edges.iter().map(|t| t.cut_edges).collect();
        triples.sort_unstable();
        if triples.windows(2).any(|w| w[0] == w[1]) {
            failures.push("two tree edges carry the same cut".to_string());
        }
    }
    // connectivity + parent/children consistency
    let mut seen = vec![false; nn];
    let mut stack = vec![m.root];
    seen[m.root] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &(w, _) in &m.adj[v] {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    if reached != nn {
        failures.push(format!("tree reaches {} of {} nodes from the root", reached, nn));
    }
    if !failures.is_empty() {
        return failures;
    }

    // every tree edge must cross exactly the 3 graph edges it claims
    let pairs: Vec<(usize, usize, EdgeId)> =
        g.edges().iter().map(|e| (m.phi[e.u], m.phi[e.v], e.id)).collect();
    let sums = crossing_sums(m, &pairs);
    for x in 0..nn {
        if let Some((_, ei)) = m.parent[x] {
            let s = &sums[x];
            let t = &m.tree_edges[ei].cut_edges;
            let want = PathSums {
                cnt: 3,
                p1: t.iter().map(|&i| i as i128).sum(),
                p2: t.iter().map(|&i| (i as i128).pow(2)).sum(),
                p3: t.iter().map(|&i| (i as i128).pow(3)).sum(),
            };
            if *s != want {
                failures.push(format!(
                    "tree edge {} claims cut {:?} but crosses {} edges (power sums differ)",
                    ei, t, s.cnt
                ));
            }
        }
    }

    failures
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct PathSums {
    pub cnt: i64,
    pub p1: i128,
    pub p2: i128,
    pub p3: i128,
}

/// For every non-root node x: how many of the given leaf-to-leaf paths
/// cross the tree edge (x, parent), with power sums of their labels.
/// Offline Tarjan LCA plus subtree accumulation; near-linear.
pub(crate) fn crossing_sums(m: &CactusModel, pairs: &[(usize, usize, EdgeId)]) -> Vec<PathSums> {
    let nn = m.nodes.len();
    let lcas = lca_batch(m, pairs);
    let mut acc = vec![PathSums::default(); nn];
    for (i, &(a, b, id)) in pairs.iter().enumerate() {
        let l = lcas[i];
        let h = id as i128;
        for (node, w) in [(a, 1i128), (b, 1), (l, -2)] {
            let e = &mut acc[node];
            e.cnt += w as i64;
            e.p1 += w * h;
            e.p2 += w * h * h;
            e.p3 += w * h * h * h;
        }
    }
    let order = m.bfs_order();
    for &x in order.iter().rev() {
        if let Some((p, _)) = m.parent[x] {
            let add = acc[x].clone();
            let e = &mut acc[p];
            e.cnt += add.cnt;
            e.p1 += add.p1;
            e.p2 += add.p2;
            e.p3 += add.p3;
        }
    }
    // acc[x] is now the subtree sum: the data for x's parent edge
    acc
}

fn lca_batch(m: &CactusModel, pairs: &[(usize, usize, EdgeId)]) -> Vec<usize> {
    let nn = m.nodes.len();
    let mut by_node: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nn];
    let mut ans = vec![usize::MAX; pairs.len()];
    for (i, &(a, b, _)) in pairs.iter().enumerate() {
        if a == b {
            ans[i] = a;
        } else {
            by_node[a].push((i, b));
            by_node[b].push((i, a));
        }
    }
    let mut dsu = Dsu::new(nn);
    let mut anc: Vec<usize> = (0..nn).collect();
    let mut black = vec![false; nn];
    let mut cursor = vec![0usize; nn];
    let mut stack = vec![m.root];
    while let Some(&v) = stack.last() {
        if cursor[v] < m.children[v].len() {
            let ch = m.children[v][cursor[v]];
            cursor[v] += 1;
            stack.push(ch);
        } else {
            stack.pop();
            black[v] = true;
            for &(qi, other) in &by_node[v] {
                if black[other] && ans[qi] == usize::MAX {
                    ans[qi] = anc[dsu.find(other)];
                }
            }
            if let Some(&p) = stack.last() {
                dsu.union(p, v);
                let r = dsu.find(p);
                anc[r] = p;
            }
        }
    }
    ans
}

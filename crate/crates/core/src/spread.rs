//! Well-spread perfect matchings: matchings that meet every 3-edge cut in
//! exactly one edge.
//!
//! The tree of cuts turns this into local work. Each internal tree node
//! stands for a quotient of the graph: contract every child's side to a
//! vertex and (below the root) the rest of the graph to a hub. These
//! pieces are small cubic graphs whose edges keep their original ids, and
//! a perfect matching of the root piece can be grown downward, one piece
//! at a time, into a perfect matching of the whole graph that crosses
//! every tree cut exactly once.

use crate::cuts::{self, build_cactus, CactusModel, CutError, NodeKind};
use crate::dsu::Dsu;
use crate::graph::{CubicGraph, Edge, EdgeId, VertexId};
use crate::matching::{self, MatchError};
use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;

#[derive(Debug)]
pub enum SpreadError {
    /// The input failed cut discovery (disconnected or below 3-edge-connected).
    Cut(CutError),
    /// A supplied model does not describe the graph.
    ModelMismatch { failures: Vec<String> },
    Matching(MatchError),
}

impl fmt::Display for SpreadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpreadError::Cut(e) => write!(f, "{}", e),
            SpreadError::ModelMismatch { failures } => {
                write!(f, "model does not match the graph: {}", failures.join("; "))
            }
            SpreadError::Matching(e) => write!(f, "{}", e),
        }
    }
}

impl Error for SpreadError {}

impl From<MatchError> for SpreadError {
    fn from(e: MatchError) -> Self {
        SpreadError::Matching(e)
    }
}

/// One internal, non-root node of the tree of cuts, with the quotient
/// piece built for it. Piece vertices 0..hub-1 are the node's children in
/// tree order; vertex `hub` is the contracted outside. Edges keep the ids
/// they have in the input graph.
#[derive(Clone, Debug)]
pub struct NodeRecord {
    /// tree node this record belongs to
    pub node: usize,
    /// union-find representative of the node's side at decomposition time
    pub part_rep: VertexId,
    /// vertices of the input graph on the node's side
    pub part_size: usize,
    /// the 3-edge cut of the tree edge toward the parent, ascending
    pub cut: [EdgeId; 3],
    pub piece: CubicGraph,
    /// index of the hub vertex in `piece` (= number of children)
    pub hub: usize,
}

/// Result of cutting the graph along every tree edge. `records` is in
/// postorder (children before parents); `final_graph` is the root piece,
/// the whole graph with each root child contracted to one vertex.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub records: Vec<NodeRecord>,
    pub final_graph: CubicGraph,
}

/// A 3-edge cut that a claimed well-spread matching meets the wrong
/// number of times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub cut_edges: [EdgeId; 3],
    /// size of the cut side not containing vertex 0
    pub side_size: usize,
    /// how many matching edges lie in the cut (want exactly 1)
    pub intersection: usize,
}

/// Builds the quotient pieces for a validated model, bottom up.
pub fn decompose(g: &CubicGraph, m: &CactusModel) -> Result<Decomposition, SpreadError> {
    let failures = cuts::validate_scalable(m, g);
    if !failures.is_empty() {
        return Err(SpreadError::ModelMismatch { failures });
    }
    let n = g.n();
    if m.internal_count() == 0 {
        // theta: both tree nodes are leaves, nothing to contract
        return Ok(Decomposition { records: Vec::new(), final_graph: g.clone() });
    }

    let mut records: Vec<NodeRecord> = Vec::with_capacity(m.internal_count() - 1);
    let mut rec_of_node = vec![usize::MAX; m.nodes.len()];
    let mut dsu = Dsu::new(n);
    // scratch shared across nodes; epoch-stamped / reset via touched lists
    let mut seen_edge = vec![u32::MAX; g.m()];
    let mut rep_to_piece = vec![usize::MAX; n];
    let mut final_graph: Option<CubicGraph> = None;

    let mut order = Vec::with_capacity(m.nodes.len());
    {
        // iterative postorder: children (already ascending) before parents
        let mut stack = vec![(m.root, 0usize)];
        while let Some(&mut (x, ref mut cur)) = stack.last_mut() {
            if *cur < m.children[x].len() {
                let c = m.children[x][*cur];
                *cur += 1;
                stack.push((c, 0));
            } else {
                order.push(x);
                stack.pop();
            }
        }
    }

    for (epoch, &x) in order.iter().enumerate() {
        if m.is_leaf(x) {
            continue;
        }
        let hub = m.children[x].len();
        let mut child_reps = Vec::with_capacity(hub);
        let mut cand: Vec<usize> = Vec::new();
        for &ch in &m.children[x] {
            let (cut, rep): ([EdgeId; 3], VertexId) = match m.nodes[ch] {
                NodeKind::Leaf(v) => (g.incident_ids(v), v),
                NodeKind::Empty => {
                    let r = &records[rec_of_node[ch]];
                    (r.cut, r.part_rep)
                }
            };
            child_reps.push(dsu.find(rep));
            for id in cut {
                let i = g.edge_index(id).expect("cut edges come from the graph");
                if seen_edge[i] != epoch as u32 {
                    seen_edge[i] = epoch as u32;
                    cand.push(i);
                }
            }
        }
        cand.sort_unstable();
        for (i, &r) in child_reps.iter().enumerate() {
            rep_to_piece[r] = i;
        }

        let is_root = x == m.root;
        let mut piece_edges = Vec::with_capacity(cand.len());
        let mut cut = Vec::new();
        for &i in &cand {
            let e = &g.edges()[i];
            let pu = rep_to_piece[dsu.find(e.u)];
            let pv = rep_to_piece[dsu.find(e.v)];
            // a candidate leaves the side of whichever child cut lists it,
            // so its ends land in two different blobs
            assert_ne!(pu, pv, "candidate edge {} joins a blob to itself", e.id);
            let (pu, pv) = (pu.min(hub), pv.min(hub));
            if pu == hub || pv == hub {
                assert!(!is_root, "root candidates stay inside the graph");
                cut.push(e.id);
            }
            piece_edges.push(Edge { id: e.id, u: pu, v: pv });
        }
        for &r in &child_reps {
            rep_to_piece[r] = usize::MAX;
        }
        for w in child_reps.windows(2) {
            dsu.union(w[0], w[1]);
        }
        let rep = dsu.find(child_reps[0]);

        if is_root {
            final_graph =
                Some(CubicGraph::from_edges(hub, piece_edges).expect("root piece of a valid model is cubic"));
        } else {
            let piece = CubicGraph::from_edges(hub + 1, piece_edges).expect("piece of a valid model is cubic");
            cut.sort_unstable();
            assert_eq!(cut.len(), 3, "a non-root side is bounded by a 3-edge cut");
            rec_of_node[x] = records.len();
            records.push(NodeRecord {
                node: x,
                part_rep: rep,
                part_size: dsu.class_size(rep),
                cut: [cut[0], cut[1], cut[2]],
                piece,
                hub,
            });
        }
    }

    Ok(Decomposition { records, final_graph: final_graph.expect("the root is an internal node") })
}

/// Grows a perfect matching of the root piece into a well-spread perfect
/// matching of the whole graph, expanding contracted sides parents first.
/// Each record's cut already holds exactly one matched edge when the
/// record is reached; the piece matching is forced through that edge.
pub fn assemble(g: &CubicGraph, d: &Decomposition) -> Result<Vec<EdgeId>, SpreadError> {
    let mut m: BTreeSet<EdgeId> = matching::perfect_matching(&d.final_graph)?.into_iter().collect();
    for rec in d.records.iter().rev() {
        let mut through = rec.cut.iter().filter(|id| m.contains(id));
        let e = *through.next().expect("an expanded blob is matched across its cut");
        assert!(through.next().is_none(), "a blob is matched across its cut once");
        m.extend(matching::perfect_matching_containing(&rec.piece, e)?);
    }
    let out: Vec<EdgeId> = m.into_iter().collect();
    debug_assert!(matching::is_perfect_matching(g, &out));
    Ok(out)
}

/// A perfect matching meeting every 3-edge cut of `g` in exactly one edge.
pub fn well_spread_matching(g: &CubicGraph) -> Result<Vec<EdgeId>, SpreadError> {
    let m = build_cactus(g).map_err(SpreadError::Cut)?;
    let d = decompose(g, &m)?;
    assemble(g, &d)
}

/// Every tree cut the edge set `ids` does not meet exactly once, in tree
/// edge order. Ids that are not edges of `g` are ignored here; perfectness
/// is a separate check.
pub fn well_spread_violations(g: &CubicGraph, m: &CactusModel, ids: &[EdgeId]) -> Vec<Violation> {
    let pairs: Vec<(usize, usize, EdgeId)> = ids
        .iter()
        .filter_map(|&id| g.edge_by_id(id).map(|e| (m.phi[e.u], m.phi[e.v], id)))
        .collect();
    let sums = cuts::crossing_sums(m, &pairs);
    let mut child_of_edge = vec![usize::MAX; m.tree_edges.len()];
    for x in 0..m.nodes.len() {
        if let Some((_, ei)) = m.parent[x] {
            child_of_edge[ei] = x;
        }
    }
    let mut out = Vec::new();
    for (ei, te) in m.tree_edges.iter().enumerate() {
        let crossings = sums[child_of_edge[ei]].cnt;
        if crossings != 1 {
            let side = cuts::tree_edge_cut(m, g, ei).expect("tree edge index in range");
            out.push(Violation {
                cut_edges: te.cut_edges,
                side_size: side.side.len(),
                intersection: crossings as usize,
            });
        }
    }
    out
}

/// True iff `ids` is a perfect matching meeting every 3-edge cut exactly once.
pub fn is_well_spread(g: &CubicGraph, m: &CactusModel, ids: &[EdgeId]) -> bool {
    matching::is_perfect_matching(g, ids) && well_spread_violations(g, m, ids).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::enumerate_3cuts_bruteforce;
    use crate::gen;
    use crate::matching::enumerate_perfect_matchings;

    fn brute_well_spread(g: &CubicGraph) -> Vec<Vec<EdgeId>> {
        let fam = enumerate_3cuts_bruteforce(g).unwrap();
        enumerate_perfect_matchings(g)
            .unwrap()
            .into_iter()
            .filter(|m| {
                fam.cuts.iter().all(|c| {
                    m.iter().filter(|&&id| c.cut_edges.contains(&id)).count() == 1
                })
            })
            .collect()
    }

    fn check(g: &CubicGraph) -> Vec<EdgeId> {
        let model = build_cactus(g).unwrap();
        let got = well_spread_matching(g).unwrap();
        assert!(is_well_spread(g, &model, &got), "result not well-spread");
        got
    }

    #[test]
    fn star_graphs_decompose_to_themselves() {
        for g in [gen::k4(), gen::petersen(), gen::prism(4)] {
            let model = build_cactus(&g).unwrap();
            let d = decompose(&g, &model).unwrap();
            assert!(d.records.is_empty());
            assert_eq!(d.final_graph, g);
            check(&g);
        }
    }

    #[test]
    fn theta_has_no_records() {
        let g = CubicGraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let model = build_cactus(&g).unwrap();
        let d = decompose(&g, &model).unwrap();
        assert!(d.records.is_empty());
        let m = assemble(&g, &d).unwrap();
        assert_eq!(m.len(), 1);
        assert!(is_well_spread(&g, &model, &m));
    }

    #[test]
    fn prism_decomposition_shape() {
        let g = gen::prism(3);
        let model = build_cactus(&g).unwrap();
        let d = decompose(&g, &model).unwrap();
        assert_eq!(d.records.len(), 1);
        let r = &d.records[0];
        assert_eq!(r.cut, [6, 7, 8]);
        assert_eq!(r.part_size, 3);
        assert_eq!(r.hub, 3);
        assert_eq!(r.piece.n(), 4);
        let mut ids: Vec<_> = r.piece.edges().iter().map(|e| e.id).collect();
        ids.sort_unstable();
        assert_eq!(ids, vec![3, 4, 5, 6, 7, 8]);
        let mut fids: Vec<_> = d.final_graph.edges().iter().map(|e| e.id).collect();
        fids.sort_unstable();
        assert_eq!(fids, vec![0, 1, 2, 6, 7, 8]);
        assert_eq!(d.final_graph.n(), 4);

        let m = check(&g);
        // exactly one rung, one edge per triangle
        assert_eq!(m.iter().filter(|&&id| id >= 6).count(), 1);
    }

    #[test]
    fn truncated_k4_has_four_pieces() {
        let g = gen::truncate(&gen::k4());
        let model = build_cactus(&g).unwrap();
        let d = decompose(&g, &model).unwrap();
        assert_eq!(d.records.len(), 4);
        for r in &d.records {
            assert_eq!(r.piece.n(), 4);
        }
        // the root is one of the five internals (all have degree 4); the
        // other three triangles are sides of size 3, the far node bundles them
        let mut sizes: Vec<_> = d.records.iter().map(|r| r.part_size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![3, 3, 3, 9]);
        assert_eq!(d.final_graph.n(), 4);
        check(&g);
    }

    #[test]
    fn rungs_alone_are_perfect_but_not_well_spread() {
        let g = gen::prism(3);
        let model = build_cactus(&g).unwrap();
        let rungs = vec![6, 7, 8];
        assert!(matching::is_perfect_matching(&g, &rungs));
        assert!(!is_well_spread(&g, &model, &rungs));
        let violations = well_spread_violations(&g, &model, &rungs);
        assert!(violations.contains(&Violation {
            cut_edges: [6, 7, 8],
            side_size: 3,
            intersection: 3,
        }));
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let mut cases = vec![
            gen::k4(),
            gen::prism(3),
            gen::prism(4),
            gen::petersen(),
            gen::truncate(&gen::k4()),
            gen::truncate(&gen::prism(3)),
        ];
        for n in [8, 12, 16, 20] {
            for seed in 0..6 {
                cases.push(gen::random(n, 1000 * n as u64 + seed));
            }
        }
        for g in &cases {
            let all = brute_well_spread(g);
            assert!(!all.is_empty(), "n = {}: no well-spread matching exists?", g.n());
            let got = check(g);
            assert!(all.contains(&got), "n = {}: result not in the brute-force set", g.n());
        }
    }

    #[test]
    fn large_random_instances() {
        for seed in [1, 2] {
            let g = gen::random(1000, seed);
            let model = build_cactus(&g).unwrap();
            let d = decompose(&g, &model).unwrap();
            let m = assemble(&g, &d).unwrap();
            assert!(is_well_spread(&g, &model, &m));
        }
    }

    #[test]
    fn deterministic() {
        let g = gen::random(600, 7);
        assert_eq!(well_spread_matching(&g).unwrap(), well_spread_matching(&g).unwrap());
    }

    #[test]
    fn tampered_model_is_rejected() {
        let g = gen::prism(3);
        let mut model = build_cactus(&g).unwrap();
        let ei = model.tree_edges.iter().position(|t| t.cut_edges == [6, 7, 8]).unwrap();
        model.tree_edges[ei].cut_edges = [5, 7, 8];
        match decompose(&g, &model) {
            Err(SpreadError::ModelMismatch { failures }) => assert!(!failures.is_empty()),
            other => panic!("want ModelMismatch, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn thin_inputs_are_rejected() {
        // two K4-minus-an-edge blocks tied by a 2-edge cut
        let thin = CubicGraph::build(
            8,
            &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (0, 4), (1, 5)],
        )
        .unwrap();
        match well_spread_matching(&thin) {
            Err(SpreadError::Cut(CutError::NotThreeEdgeConnected)) => {}
            other => panic!("want a cut error, got {:?}", other.map(|_| ())),
        }

        // two disjoint copies of the complete graph on four vertices
        let split = CubicGraph::build(
            8,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        )
        .unwrap();
        match well_spread_matching(&split) {
            Err(SpreadError::Cut(CutError::Disconnected)) => {}
            other => panic!("want a cut error, got {:?}", other.map(|_| ())),
        }
    }
}

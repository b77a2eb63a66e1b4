//! Matchings over edge ids. Parallel edges are collapsed to a canonical
//! representative before the solvers run, then answers are mapped back,
//! so the theta graph and other multigraph inputs behave sensibly.

mod cardinality;
mod weighted;

use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{CubicGraph, EdgeId, VertexId};

/// Exhaustive perfect-matching enumeration stops here.
pub const ENUM_GUARD: usize = 36;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchError {
    NoPerfectMatching,
    NoPerfectMatchingThrough { edge: EdgeId },
    UnknownEdge { id: EdgeId },
    WeightsLengthMismatch { got: usize, want: usize },
    TooLarge { n: usize, guard: usize },
}

impl fmt::Display for MatchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchError::NoPerfectMatching => write!(f, "graph has no perfect matching"),
            MatchError::NoPerfectMatchingThrough { edge } => {
                write!(f, "no perfect matching contains edge {}", edge)
            }
            MatchError::UnknownEdge { id } => write!(f, "no edge with id {}", id),
            MatchError::WeightsLengthMismatch { got, want } => {
                write!(f, "{} weights for {} edges", got, want)
            }
            MatchError::TooLarge { n, guard } => {
                write!(f, "graph with {} vertices exceeds the enumeration guard {}", n, guard)
            }
        }
    }
}

impl std::error::Error for MatchError {}

/// One representative per vertex pair: the incident edge with the least
/// (weight, id). Entries come out sorted by pair.
fn simple_view(g: &CubicGraph, w: Option<&[i64]>) -> Vec<(VertexId, VertexId, i64, EdgeId)> {
    let mut best: BTreeMap<(VertexId, VertexId), (i64, EdgeId)> = BTreeMap::new();
    for (idx, e) in g.edges().iter().enumerate() {
        let key = (e.u.min(e.v), e.u.max(e.v));
        let cand = (w.map_or(0, |w| w[idx]), e.id);
        best.entry(key).and_modify(|cur| *cur = (*cur).min(cand)).or_insert(cand);
    }
    best.into_iter().map(|((u, v), (wt, id))| (u, v, wt, id)).collect()
}

fn mate_to_ids(
    mate: &[usize],
    pair_id: &BTreeMap<(VertexId, VertexId), EdgeId>,
    back: Option<&[VertexId]>,
) -> Vec<EdgeId> {
    let mut ids = Vec::with_capacity(mate.len() / 2);
    for (v, &m) in mate.iter().enumerate() {
        if m != usize::MAX && v < m {
            let (a, b) = match back {
                Some(map) => (map[v], map[m]),
                None => (v, m),
            };
            let key = (a.min(b), a.max(b));
            ids.push(*pair_id.get(&key).expect("matched pair must be an edge"));
        }
    }
    ids.sort_unstable();
    ids
}

/// A maximum matching, as sorted edge ids.
pub fn maximum_matching(g: &CubicGraph) -> Vec<EdgeId> {
    let view = simple_view(g, None);
    let mut adj = vec![Vec::new(); g.n()];
    let mut pair_id = BTreeMap::new();
    for &(u, v, _, id) in &view {
        adj[u].push(v);
        adj[v].push(u);
        pair_id.insert((u, v), id);
    }
    let mate = cardinality::maximum_matching_adj(g.n(), &adj);
    mate_to_ids(&mate, &pair_id, None)
}

pub fn perfect_matching(g: &CubicGraph) -> Result<Vec<EdgeId>, MatchError> {
    let ids = maximum_matching(g);
    if ids.len() * 2 == g.n() {
        Ok(ids)
    } else {
        Err(MatchError::NoPerfectMatching)
    }
}

/// A perfect matching through the given edge: delete its endpoints, match
/// the rest perfectly, put the edge back.
pub fn perfect_matching_containing(g: &CubicGraph, id: EdgeId) -> Result<Vec<EdgeId>, MatchError> {
    let e = g.edge_by_id(id).ok_or(MatchError::UnknownEdge { id })?;
    let (eu, ev) = (e.u, e.v);
    let n = g.n();
    let mut back = Vec::with_capacity(n - 2);
    let mut fwd = vec![usize::MAX; n];
    for v in 0..n {
        if v != eu && v != ev {
            fwd[v] = back.len();
            back.push(v);
        }
    }
    let view = simple_view(g, None);
    let mut adj = vec![Vec::new(); n - 2];
    let mut pair_id = BTreeMap::new();
    for &(u, v, _, pid) in &view {
        pair_id.insert((u, v), pid);
        if fwd[u] != usize::MAX && fwd[v] != usize::MAX {
            adj[fwd[u]].push(fwd[v]);
            adj[fwd[v]].push(fwd[u]);
        }
    }
    let mate = cardinality::maximum_matching_adj(n - 2, &adj);
    let matched = mate.iter().filter(|&&x| x != usize::MAX).count();
    if matched != n - 2 {
        return Err(MatchError::NoPerfectMatchingThrough { edge: id });
    }
    let mut ids = mate_to_ids(&mate, &pair_id, Some(&back));
    ids.push(id);
    ids.sort_unstable();
    Ok(ids)
}

/// A perfect matching of minimum total weight; `w` runs parallel to
/// `g.edges()`.
pub fn min_weight_perfect_matching(g: &CubicGraph, w: &[i64]) -> Result<Vec<EdgeId>, MatchError> {
    if w.len() != g.m() {
        return Err(MatchError::WeightsLengthMismatch { got: w.len(), want: g.m() });
    }
    let view = simple_view(g, Some(w));
    let top = view.iter().map(|&(_, _, wt, _)| wt).max().expect("cubic graphs have edges");
    // flip to a maximization problem with positive weights
    let edges: Vec<(usize, usize, i64)> =
        view.iter().map(|&(u, v, wt, _)| (u, v, top + 1 - wt)).collect();
    let mate = weighted::max_weight_matching(g.n(), &edges, true);
    if mate.iter().any(|&x| x == usize::MAX) {
        return Err(MatchError::NoPerfectMatching);
    }
    let pair_id: BTreeMap<(VertexId, VertexId), EdgeId> =
        view.iter().map(|&(u, v, _, id)| ((u, v), id)).collect();
    Ok(mate_to_ids(&mate, &pair_id, None))
}

/// Sorted, duplicate-free, existing ids covering every vertex exactly once.
pub fn is_perfect_matching(g: &CubicGraph, ids: &[EdgeId]) -> bool {
    if ids.windows(2).any(|w| w[0] >= w[1]) {
        return false;
    }
    let mut cover = vec![0u8; g.n()];
    for &id in ids {
        match g.edge_by_id(id) {
            Some(e) => {
                cover[e.u] += 1;
                cover[e.v] += 1;
            }
            None => return false,
        }
    }
    cover.iter().all(|&c| c == 1)
}

/// Every perfect matching, each sorted, the list itself sorted. Branches
/// on the lowest uncovered vertex, so parallel edges yield distinct
/// matchings. Exponential; guarded.
pub fn enumerate_perfect_matchings(g: &CubicGraph) -> Result<Vec<Vec<EdgeId>>, MatchError> {
    let n = g.n();
    if n > ENUM_GUARD {
        return Err(MatchError::TooLarge { n, guard: ENUM_GUARD });
    }
    let mut out = Vec::new();
    let mut covered = vec![false; n];
    let mut current = Vec::new();
    fn rec(
        g: &CubicGraph,
        covered: &mut [bool],
        current: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        let v = match covered.iter().position(|&c| !c) {
            Some(v) => v,
            None => {
                let mut m = current.clone();
                m.sort_unstable();
                out.push(m);
                return;
            }
        };
        for e in g.incident(v) {
            let w = e.other(v);
            if !covered[w] {
                covered[v] = true;
                covered[w] = true;
                current.push(e.id);
                rec(g, covered, current, out);
                current.pop();
                covered[v] = false;
                covered[w] = false;
            }
        }
    }
    rec(g, &mut covered, &mut current, &mut out);
    out.sort_unstable();
    Ok(out)
}

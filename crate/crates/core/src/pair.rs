//! Two perfect matchings with a small intersection.
//!
//! A well-spread matching M1 leaves enough slack that some perfect
//! matching M2 shares at most n/10 edges with it. M2 is found exactly:
//! give every M1 edge weight 1, everything else weight 0, and take a
//! minimum-weight perfect matching, whose weight is then the smallest
//! possible overlap. The bound is checked, never assumed; a violation is
//! surfaced with the full pair attached so the instance can be kept.

use crate::graph::{CubicGraph, EdgeId};
use crate::matching::min_weight_perfect_matching;
use crate::spread::{well_spread_matching, SpreadError};
use std::error::Error;
use std::fmt;

#[derive(Clone, Debug)]
pub struct MatchingPair {
    /// well-spread perfect matching
    pub m1: Vec<EdgeId>,
    /// perfect matching minimizing the overlap with m1
    pub m2: Vec<EdgeId>,
    /// m1 ∩ m2, ascending
    pub shared: Vec<EdgeId>,
    /// ⌊n/10⌋
    pub bound: usize,
}

#[derive(Debug)]
pub enum PairError {
    Spread(SpreadError),
    /// |m1 ∩ m2| > ⌊n/10⌋: a bug, or an instance worth keeping
    BoundViolated(MatchingPair),
}

impl fmt::Display for PairError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairError::Spread(e) => write!(f, "{}", e),
            PairError::BoundViolated(p) => write!(
                f,
                "matchings share {} edges, over the bound {}",
                p.shared.len(),
                p.bound
            ),
        }
    }
}

impl Error for PairError {}

impl From<SpreadError> for PairError {
    fn from(e: SpreadError) -> Self {
        PairError::Spread(e)
    }
}

/// Computes the pair. m2's weight under the 0/1 weighting is exactly the
/// minimum overlap any perfect matching can have with m1.
pub fn small_intersection_pair(g: &CubicGraph) -> Result<MatchingPair, PairError> {
    let m1 = well_spread_matching(g)?;
    let mut w = vec![0i64; g.m()];
    for &id in &m1 {
        w[g.edge_index(id).expect("matching edges come from the graph")] = 1;
    }
    let m2 = min_weight_perfect_matching(g, &w).map_err(|e| SpreadError::Matching(e))?;

    let mut shared = Vec::new();
    let mut i = 0;
    for &id in &m2 {
        while i < m1.len() && m1[i] < id {
            i += 1;
        }
        if i < m1.len() && m1[i] == id {
            shared.push(id);
        }
    }
    let weight: i64 = m2
        .iter()
        .map(|&id| w[g.edge_index(id).expect("solver returns graph edges")])
        .sum();
    assert_eq!(weight as usize, shared.len(), "overlap must equal m2's weight");

    let pair = MatchingPair { m1, m2, shared, bound: g.n() / 10 };
    if pair.shared.len() > pair.bound {
        return Err(PairError::BoundViolated(pair));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::matching::{enumerate_perfect_matchings, is_perfect_matching};

    fn brute_min_overlap(g: &CubicGraph, m1: &[EdgeId]) -> usize {
        enumerate_perfect_matchings(g)
            .unwrap()
            .iter()
            .map(|m| m.iter().filter(|id| m1.contains(id)).count())
            .min()
            .unwrap()
    }

    fn run(g: &CubicGraph) -> MatchingPair {
        let p = small_intersection_pair(g).unwrap();
        assert!(is_perfect_matching(g, &p.m1));
        assert!(is_perfect_matching(g, &p.m2));
        assert!(p.shared.len() <= p.bound);
        p
    }

    #[test]
    fn k4_pair_is_disjoint() {
        let p = run(&gen::k4());
        assert_eq!(p.bound, 0);
        assert!(p.shared.is_empty());
    }

    #[test]
    fn petersen_pair_shares_exactly_one() {
        let p = run(&gen::petersen());
        assert_eq!(p.bound, 1);
        assert_eq!(p.shared.len(), 1);
    }

    #[test]
    fn prisms_and_theta_are_disjoint() {
        for g in [
            CubicGraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap(),
            gen::prism(3),
            gen::prism(4),
        ] {
            let p = run(&g);
            assert!(p.shared.is_empty(), "n = {}: shared {:?}", g.n(), p.shared);
        }
    }

    #[test]
    fn overlap_is_the_brute_force_minimum() {
        let mut cases = vec![gen::k4(), gen::prism(3), gen::prism(4), gen::prism(5), gen::petersen(), gen::truncate(&gen::k4())];
        for n in [8, 10, 12] {
            for seed in 0..5 {
                cases.push(gen::random(n, 31 * n as u64 + seed));
            }
        }
        for g in &cases {
            let p = run(g);
            assert_eq!(
                p.shared.len(),
                brute_min_overlap(g, &p.m1),
                "n = {}: overlap above the brute-force minimum",
                g.n()
            );
        }
    }

    #[test]
    fn bound_holds_on_larger_instances() {
        for (n, seed) in [(50, 9u64), (128, 4), (1000, 1)] {
            let g = gen::random(n, seed);
            let p = run(&g);
            assert!(p.shared.len() <= n / 10, "n = {}: {} shared", n, p.shared.len());
        }
    }

    #[test]
    fn deterministic() {
        let g = gen::random(200, 12);
        let a = small_intersection_pair(&g).unwrap();
        let b = small_intersection_pair(&g).unwrap();
        assert_eq!(a.m1, b.m1);
        assert_eq!(a.m2, b.m2);
        assert_eq!(a.shared, b.shared);
    }
}

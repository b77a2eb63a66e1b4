//! Deterministic instance generators.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{CubicGraph, EdgeId, VertexId};

/// Complete graph on four vertices, edges in lexicographic order.
pub fn k4() -> CubicGraph {
    CubicGraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Circular prism C_k x K_2. Edge ids: the a-cycle 0..k-1, the b-cycle
/// k..2k-1, then the rungs 2k..3k-1.
pub fn prism(k: usize) -> CubicGraph {
    assert!(k >= 3, "prism needs a cycle of length at least 3");
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        edges.push((i, (i + 1) % k));
    }
    for i in 0..k {
        edges.push((k + i, k + (i + 1) % k));
    }
    for i in 0..k {
        edges.push((i, k + i));
    }
    CubicGraph::build(2 * k, &edges).unwrap()
}

/// The Petersen graph: outer 5-cycle (ids 0-4), inner pentagram (5-9),
/// spokes (10-14).
pub fn petersen() -> CubicGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    for i in 0..5 {
        edges.push((i, 5 + i));
    }
    CubicGraph::build(10, &edges).unwrap()
}

/// Vertex truncation: each vertex becomes a triangle on corners 3v+j,
/// where j is the rank of the incident edge in ascending id order.
/// Triangle edges come first (ids 0..3n-1), then one edge per original
/// edge in ascending id order. Triples n and preserves 3-edge-connectivity.
pub fn truncate(g: &CubicGraph) -> CubicGraph {
    let n = g.n();
    let mut edges = Vec::with_capacity(3 * n + g.m());
    for v in 0..n {
        let c = 3 * v;
        edges.push((c, c + 1));
        edges.push((c + 1, c + 2));
        edges.push((c, c + 2));
    }
    for e in g.edges() {
        edges.push((3 * e.u + rank_at(g, e.u, e.id), 3 * e.v + rank_at(g, e.v, e.id)));
    }
    CubicGraph::build(3 * n, &edges).expect("truncation of a cubic graph is cubic")
}

fn rank_at(g: &CubicGraph, v: VertexId, id: EdgeId) -> usize {
    g.incident_ids(v).iter().position(|&x| x == id).expect("edge not incident to v")
}

/// Random 3-edge-connected cubic graph on n vertices (n even, >= 4):
/// start from K4 and repeatedly subdivide two distinct edges, joining the
/// two new vertices. Each step preserves simplicity and
/// 3-edge-connectivity, and the edge list is a deterministic function of
/// the seed.
pub fn random(n: usize, seed: u64) -> CubicGraph {
    assert!(n >= 4 && n % 2 == 0, "cubic graphs have even order >= 4");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut nv = 4;
    while nv < n {
        let m = edges.len();
        let i = rng.gen_range(0..m);
        let j = loop {
            let j = rng.gen_range(0..m);
            if j != i {
                break j;
            }
        };
        let (lo, hi) = (i.min(j), i.max(j));
        let x = nv;
        let y = nv + 1;
        // split hi first so lo's slot is still valid
        let (a, b) = edges[hi];
        edges[hi] = (a, y);
        edges.push((y, b));
        let (c, d) = edges[lo];
        edges[lo] = (c, x);
        edges.push((x, d));
        edges.push((x, y));
        nv += 2;
    }
    let g = CubicGraph::build(n, &edges).expect("insertion keeps the graph cubic");
    assert!(
        crate::graph::edge_connectivity_at_least(&g, 3),
        "edge insertion must preserve 3-edge-connectivity"
    );
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn fixed_graphs_have_the_documented_layout() {
        let k = k4();
        assert_eq!((k.n(), k.m()), (4, 6));
        let p = prism(3);
        assert_eq!((p.n(), p.m()), (6, 9));
        assert_eq!({ let e = p.edge_by_id(6).unwrap(); (e.u, e.v) }, (0, 3));
        assert_eq!({ let e = p.edge_by_id(8).unwrap(); (e.u, e.v) }, (2, 5));
        let pet = petersen();
        assert_eq!((pet.n(), pet.m()), (10, 15));
        assert!(pet.has_edge_between(0, 5) && pet.has_edge_between(5, 7) && pet.has_edge_between(4, 0));
    }

    #[test]
    fn truncation_triples_order() {
        let t = truncate(&k4());
        assert_eq!((t.n(), t.m()), (12, 18));
        // corners of vertex v form a triangle
        for v in 0..4 {
            assert!(t.has_edge_between(3 * v, 3 * v + 1));
            assert!(t.has_edge_between(3 * v + 1, 3 * v + 2));
            assert!(t.has_edge_between(3 * v, 3 * v + 2));
        }
        assert!(crate::graph::edge_connectivity_at_least(&t, 3));
        // truncating the theta graph yields the triangular prism
        let theta = CubicGraph::build(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let tp = truncate(&theta);
        assert_eq!((tp.n(), tp.m()), (6, 9));
        assert!(crate::graph::edge_connectivity_at_least(&tp, 3));
    }

    #[test]
    fn random_is_deterministic_simple_and_three_connected() {
        for &(n, seed) in &[(4usize, 0u64), (10, 7), (26, 3), (60, 9)] {
            let g1 = random(n, seed);
            let g2 = random(n, seed);
            assert_eq!(g1.n(), n);
            let v1: Vec<_> = g1.edges().iter().map(|e| (e.u, e.v)).collect();
            let v2: Vec<_> = g2.edges().iter().map(|e| (e.u, e.v)).collect();
            assert_eq!(v1, v2);
            let norm: BTreeSet<(usize, usize)> =
                v1.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            assert_eq!(norm.len(), g1.m(), "parallel edges in a generated graph");
        }
    }

    #[test]
    fn different_seeds_differ() {
        let a = random(20, 1);
        let b = random(20, 2);
        let va: Vec<_> = a.edges().iter().map(|e| (e.u, e.v)).collect();
        let vb: Vec<_> = b.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_ne!(va, vb);
    }
}

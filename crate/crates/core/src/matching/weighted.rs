//! Maximum weight matching in general graphs, after Galil's survey of
//! Edmonds' blossom method and Joris van Rantwijk's reference
//! implementation. Dual variables are premultiplied by two so everything
//! stays integral; the optimum is certified against the dual solution
//! before returning.

use std::cmp::max;

pub(crate) type Weight = i64;

const NONE: usize = usize::MAX;

/// Mate vector of a maximum weight matching: mate[v] is v's partner or
/// usize::MAX. With `max_cardinality` only matchings of maximum size
/// compete. Edges must be loop-free with at most one edge per pair.
pub(crate) fn max_weight_matching(
    n: usize,
    edges: &[(usize, usize, Weight)],
    max_cardinality: bool,
) -> Vec<usize> {
    if n == 0 || edges.is_empty() {
        return vec![NONE; n];
    }
    Solver::new(n, edges, max_cardinality).solve()
}

/// Vertices are 0..n-1; nontrivial blossoms occupy slots n..2n-1. Edge
/// endpoints are numbered so that 2k and 2k+1 belong to edge k. Labels:
/// 0 free, 1 means S, 2 means T; 5 is an S breadcrumb during tracing.
struct Solver<'a> {
    n: usize,
    edges: &'a [(usize, usize, Weight)],
    maxcard: bool,
    /// endpoint -> attached vertex
    endpoint: Vec<usize>,
    /// vertex -> remote endpoints of its edges
    neighbors: Vec<Vec<usize>>,
    /// vertex -> remote endpoint of its matched edge
    mate: Vec<usize>,
    label: Vec<u8>,
    /// labeled blossom -> remote endpoint it was labeled through
    label_end: Vec<usize>,
    /// vertex -> its top-level blossom
    in_blossom: Vec<usize>,
    parent: Vec<usize>,
    childs: Vec<Vec<usize>>,
    /// blossom -> its base vertex
    base: Vec<usize>,
    /// childs[b][i] connects to childs[b][i+1] through endps[b][i]
    endps: Vec<Vec<usize>>,
    /// least-slack edge candidates for delta2/delta3
    best_edge: Vec<usize>,
    blossom_best_edges: Vec<Vec<usize>>,
    unused: Vec<usize>,
    /// vertex duals (times two) then blossom duals
    dual: Vec<Weight>,
    allowed: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(n: usize, edges: &'a [(usize, usize, Weight)], maxcard: bool) -> Self {
        let m = edges.len();
        let maxweight = edges.iter().map(|e| e.2).max().unwrap().max(0);
        let mut neighbors = vec![Vec::new(); n];
        let mut endpoint = Vec::with_capacity(2 * m);
        for (k, &(i, j, _)) in edges.iter().enumerate() {
            assert!(i != j && i < n && j < n);
            endpoint.push(i);
            endpoint.push(j);
            neighbors[i].push(2 * k + 1);
            neighbors[j].push(2 * k);
        }
        let mut dual = vec![maxweight; n];
        dual.extend(std::iter::repeat(0).take(n));
        let mut base: Vec<usize> = (0..n).collect();
        base.extend(std::iter::repeat(NONE).take(n));
        Solver {
            n,
            edges,
            maxcard,
            endpoint,
            neighbors,
            mate: vec![NONE; n],
            label: vec![0; 2 * n],
            label_end: vec![NONE; 2 * n],
            in_blossom: (0..n).collect(),
            parent: vec![NONE; 2 * n],
            childs: vec![Vec::new(); 2 * n],
            base,
            endps: vec![Vec::new(); 2 * n],
            best_edge: vec![NONE; 2 * n],
            blossom_best_edges: vec![Vec::new(); 2 * n],
            unused: (n..2 * n).collect(),
            dual,
            allowed: vec![false; m],
            queue: Vec::new(),
        }
    }

    /// 2 * slack of edge k (meaningless inside a blossom).
    fn slack(&self, k: usize) -> Weight {
        let (i, j, wt) = self.edges[k];
        self.dual[i] + self.dual[j] - 2 * wt
    }

    fn leaves(&self, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if b < self.n {
            out.push(b);
        } else {
            let mut stack = vec![b];
            while let Some(t) = stack.pop() {
                for &c in &self.childs[t] {
                    if c < self.n {
                        out.push(c);
                    } else {
                        stack.push(c);
                    }
                }
            }
        }
        out
    }

    /// Label the top-level blossom of w, reached through remote endpoint p.
    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.in_blossom[w];
        assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.label_end[w] = p;
        self.label_end[b] = p;
        self.best_edge[w] = NONE;
        self.best_edge[b] = NONE;
        if t == 1 {
            // S-blossom: scan its vertices
            let lv = self.leaves(b);
            self.queue.extend(lv);
        } else if t == 2 {
            // T-blossom: its base's mate becomes an S-vertex
            let bv = self.base[b];
            assert!(self.mate[bv] != NONE);
            let mb = self.mate[bv];
            let ep = self.endpoint[mb];
            self.assign_label(ep, 1, mb ^ 1);
        }
    }

    /// Trace back from two S-vertices; the base of the new blossom, or
    /// NONE if the paths end at different roots (an augmenting path).
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut found = NONE;
        let mut v = v;
        let mut w = w;
        while v != NONE || w != NONE {
            let mut b = self.in_blossom[v];
            if self.label[b] & 4 != 0 {
                found = self.base[b];
                break;
            }
            assert_eq!(self.label[b], 1);
            path.push(b);
            self.label[b] = 5;
            assert_eq!(self.label_end[b], self.mate[self.base[b]]);
            if self.label_end[b] == NONE {
                // this path's root; stop walking it
                v = NONE;
            } else {
                v = self.endpoint[self.label_end[b]];
                b = self.in_blossom[v];
                assert_eq!(self.label[b], 2);
                assert!(self.label_end[b] != NONE);
                v = self.endpoint[self.label_end[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        found
    }

    /// Shrink the odd cycle through edge k and base into a new S-blossom.
    fn add_blossom(&mut self, base_v: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.in_blossom[base_v];
        let mut bv = self.in_blossom[v];
        let mut bw = self.in_blossom[w];

        let b = self.unused.pop().expect("blossom slots cannot run out");
        self.base[b] = base_v;
        self.parent[b] = NONE;
        self.parent[bb] = b;

        let mut childs = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.parent[bv] = b;
            childs.push(bv);
            endps.push(self.label_end[bv]);
            assert!(
                self.label[bv] == 2
                    || (self.label[bv] == 1 && self.label_end[bv] == self.mate[self.base[bv]])
            );
            assert!(self.label_end[bv] != NONE);
            v = self.endpoint[self.label_end[bv]];
            bv = self.in_blossom[v];
        }
        childs.push(bb);
        childs.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.parent[bw] = b;
            childs.push(bw);
            endps.push(self.label_end[bw] ^ 1);
            assert!(
                self.label[bw] == 2
                    || (self.label[bw] == 1 && self.label_end[bw] == self.mate[self.base[bw]])
            );
            assert!(self.label_end[bw] != NONE);
            w = self.endpoint[self.label_end[bw]];
            bw = self.in_blossom[w];
        }
        self.childs[b] = childs;
        self.endps[b] = endps;

        assert_eq!(self.label[bb], 1);
        self.label[b] = 1;
        self.label_end[b] = self.label_end[bb];
        self.dual[b] = 0;

        for v in self.leaves(b) {
            if self.label[self.in_blossom[v]] == 2 {
                // reached T-vertices turn S inside the new blossom
                self.queue.push(v);
            }
            self.in_blossom[v] = b;
        }

        // merge least-slack edge lists of the children
        let mut best_to = vec![NONE; 2 * self.n];
        for ci in 0..self.childs[b].len() {
            let bv = self.childs[b][ci];
            let lists: Vec<Vec<usize>> = if self.blossom_best_edges[bv].is_empty() {
                self.leaves(bv)
                    .iter()
                    .map(|&v| self.neighbors[v].iter().map(|p| p / 2).collect())
                    .collect()
            } else {
                vec![self.blossom_best_edges[bv].clone()]
            };
            for list in lists {
                for k in list {
                    let (mut i, mut j, _) = self.edges[k];
                    if self.in_blossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let _ = i;
                    let bj = self.in_blossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (best_to[bj] == NONE || self.slack(k) < self.slack(best_to[bj]))
                    {
                        best_to[bj] = k;
                    }
                }
            }
            self.blossom_best_edges[bv] = Vec::new();
            self.best_edge[bv] = NONE;
        }
        self.blossom_best_edges[b] = best_to.into_iter().filter(|&k| k != NONE).collect();
        self.best_edge[b] = NONE;
        for i in 0..self.blossom_best_edges[b].len() {
            let k = self.blossom_best_edges[b][i];
            if self.best_edge[b] == NONE || self.slack(k) < self.slack(self.best_edge[b]) {
                self.best_edge[b] = k;
            }
        }
    }

    /// Undo a top-level blossom, relabeling its children if this happens
    /// mid-stage on a T-blossom.
    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for i in 0..self.childs[b].len() {
            let s = self.childs[b][i];
            self.parent[s] = NONE;
            if s < self.n {
                self.in_blossom[s] = s;
            } else if endstage && self.dual[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                for v in self.leaves(s) {
                    self.in_blossom[v] = s;
                }
            }
        }
        if !endstage && self.label[b] == 2 {
            assert!(self.label_end[b] != NONE);
            let entry_child = self.in_blossom[self.endpoint[self.label_end[b] ^ 1]];
            let mut j = self.childs[b].iter().position(|&r| r == entry_child).unwrap() as i64;
            let (jstep, endptrick): (i64, usize) = if j & 1 != 0 {
                j -= self.childs[b].len() as i64;
                (1, 0)
            } else {
                (-1, 1)
            };
            // walk from the entry child to the base, relabeling
            let mut p = self.label_end[b];
            while j != 0 {
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = at(&self.endps[b], j - endptrick as i64) ^ endptrick;
                self.label[self.endpoint[q ^ 1]] = 0;
                let ep = self.endpoint[p ^ 1];
                self.assign_label(ep, 2, p);
                self.allowed[at(&self.endps[b], j - endptrick as i64) / 2] = true;
                j += jstep;
                p = at(&self.endps[b], j - endptrick as i64) ^ endptrick;
                self.allowed[p / 2] = true;
                j += jstep;
            }
            // the base child keeps label T without propagating to its mate
            let bv = at(&self.childs[b], j);
            self.label[self.endpoint[p ^ 1]] = 2;
            self.label[bv] = 2;
            self.label_end[self.endpoint[p ^ 1]] = p;
            self.label_end[bv] = p;
            self.best_edge[bv] = NONE;
            j += jstep;
            while at(&self.childs[b], j) != entry_child {
                let bv = at(&self.childs[b], j);
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let mut v = NONE;
                for t in self.leaves(bv) {
                    v = t;
                    if self.label[v] != 0 {
                        break;
                    }
                }
                if v != NONE && self.label[v] != 0 {
                    assert_eq!(self.label[v], 2);
                    assert_eq!(self.in_blossom[v], bv);
                    self.label[v] = 0;
                    self.label[self.endpoint[self.mate[self.base[bv]]]] = 0;
                    let le = self.label_end[v];
                    self.assign_label(v, 2, le);
                }
                j += jstep;
            }
        }
        self.label[b] = 0;
        self.label_end[b] = NONE;
        self.base[b] = NONE;
        self.best_edge[b] = NONE;
        self.childs[b] = Vec::new();
        self.endps[b] = Vec::new();
        self.blossom_best_edges[b] = Vec::new();
        self.unused.push(b);
    }

    /// Flip matched edges inside blossom b so that vertex v becomes its base.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.parent[t] != b {
            t = self.parent[t];
        }
        if t >= self.n {
            self.augment_blossom(t, v);
        }
        let i = self.childs[b].iter().position(|&r| r == t).unwrap();
        let mut j = i as i64;
        let (jstep, endptrick): (i64, usize) = if i & 1 != 0 {
            j -= self.childs[b].len() as i64;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let t = at(&self.childs[b], j);
            let p = at(&self.endps[b], j - endptrick as i64) ^ endptrick;
            if t >= self.n {
                let ep = self.endpoint[p];
                self.augment_blossom(t, ep);
            }
            j += jstep;
            let t = at(&self.childs[b], j);
            if t >= self.n {
                let ep = self.endpoint[p ^ 1];
                self.augment_blossom(t, ep);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.childs[b].rotate_left(i);
        self.endps[b].rotate_left(i);
        self.base[b] = self.base[self.childs[b][0]];
        assert_eq!(self.base[b], v);
    }

    /// Augment along the path through edge k joining two S-rooted trees.
    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for &(s0, p0) in &[(v, 2 * k + 1), (w, 2 * k)] {
            let mut s = s0;
            let mut p = p0;
            loop {
                let bs = self.in_blossom[s];
                assert_eq!(self.label[bs], 1);
                assert_eq!(self.label_end[bs], self.mate[self.base[bs]]);
                if bs >= self.n {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.label_end[bs] == NONE {
                    break;
                }
                let t = self.endpoint[self.label_end[bs]];
                let bt = self.in_blossom[t];
                assert_eq!(self.label[bt], 2);
                assert!(self.label_end[bt] != NONE);
                s = self.endpoint[self.label_end[bt]];
                let j = self.endpoint[self.label_end[bt] ^ 1];
                assert_eq!(self.base[bt], t);
                if bt >= self.n {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.label_end[bt];
                p = self.label_end[bt] ^ 1;
            }
        }
    }

    /// Complementary slackness against the final duals; panics if the
    /// matching is not optimal.
    fn verify_optimum(&self) {
        let offset = if self.maxcard {
            max(0, -*self.dual[..self.n].iter().min().unwrap())
        } else {
            0
        };
        assert!(self.dual[..self.n].iter().all(|&d| d + offset >= 0));
        assert!(self.dual[self.n..].iter().all(|&d| d >= 0));
        for k in 0..self.edges.len() {
            let (i, j, wt) = self.edges[k];
            let mut s = self.dual[i] + self.dual[j] - 2 * wt;
            let mut ib = vec![i];
            let mut jb = vec![j];
            while self.parent[*ib.last().unwrap()] != NONE {
                ib.push(self.parent[*ib.last().unwrap()]);
            }
            while self.parent[*jb.last().unwrap()] != NONE {
                jb.push(self.parent[*jb.last().unwrap()]);
            }
            ib.reverse();
            jb.reverse();
            for (&bi, &bj) in ib.iter().zip(jb.iter()) {
                if bi != bj {
                    break;
                }
                s += 2 * self.dual[bi];
            }
            assert!(s >= 0, "negative slack on edge {}", k);
            let matched = self.mate[i] != NONE && self.mate[i] / 2 == k;
            let matched_j = self.mate[j] != NONE && self.mate[j] / 2 == k;
            if matched || matched_j {
                assert!(matched && matched_j);
                assert_eq!(s, 0, "matched edge {} has nonzero slack", k);
            }
        }
        for v in 0..self.n {
            assert!(self.mate[v] != NONE || self.dual[v] + offset == 0);
        }
        for b in self.n..2 * self.n {
            if self.base[b] != NONE && self.dual[b] > 0 {
                assert_eq!(self.endps[b].len() % 2, 1);
                for (ix, &p) in self.endps[b].iter().enumerate() {
                    if ix % 2 == 1 {
                        assert_eq!(self.mate[self.endpoint[p]], p ^ 1);
                        assert_eq!(self.mate[self.endpoint[p ^ 1]], p);
                    }
                }
            }
        }
    }

    fn solve(mut self) -> Vec<usize> {
        let n = self.n;
        for _ in 0..n {
            // a stage: find one augmenting path
            self.label.iter_mut().for_each(|x| *x = 0);
            self.best_edge.iter_mut().for_each(|x| *x = NONE);
            for be in &mut self.blossom_best_edges[n..] {
                be.clear();
            }
            self.allowed.iter_mut().for_each(|x| *x = false);
            self.queue.clear();
            for v in 0..n {
                if self.mate[v] == NONE && self.label[self.in_blossom[v]] == 0 {
                    self.assign_label(v, 1, NONE);
                }
            }
            let mut augmented = false;
            loop {
                // a substage: scan, then pump slack out of the duals
                while !self.queue.is_empty() && !augmented {
                    let v = self.queue.pop().unwrap();
                    assert_eq!(self.label[self.in_blossom[v]], 1);
                    for pi in 0..self.neighbors[v].len() {
                        let p = self.neighbors[v][pi];
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.in_blossom[v] == self.in_blossom[w] {
                            continue;
                        }
                        let mut kslack = 0;
                        if !self.allowed[k] {
                            kslack = self.slack(k);
                            if kslack <= 0 {
                                self.allowed[k] = true;
                            }
                        }
                        if self.allowed[k] {
                            if self.label[self.in_blossom[w]] == 0 {
                                self.assign_label(w, 2, p ^ 1);
                            } else if self.label[self.in_blossom[w]] == 1 {
                                let base = self.scan_blossom(v, w);
                                if base != NONE {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if self.label[w] == 0 {
                                assert_eq!(self.label[self.in_blossom[w]], 2);
                                self.label[w] = 2;
                                self.label_end[w] = p ^ 1;
                            }
                        } else if self.label[self.in_blossom[w]] == 1 {
                            let b = self.in_blossom[v];
                            if self.best_edge[b] == NONE
                                || kslack < self.slack(self.best_edge[b])
                            {
                                self.best_edge[b] = k;
                            }
                        } else if self.label[w] == 0
                            && (self.best_edge[w] == NONE
                                || kslack < self.slack(self.best_edge[w]))
                        {
                            self.best_edge[w] = k;
                        }
                    }
                }
                if augmented {
                    break;
                }

                // no augmenting path: compute the dual adjustment
                let mut delta_type = -1;
                let mut delta: Weight = 0;
                let mut delta_edge = 0;
                let mut delta_blossom = 0;
                if !self.maxcard {
                    delta_type = 1;
                    delta = *self.dual[..n].iter().min().unwrap();
                }
                for v in 0..n {
                    if self.label[self.in_blossom[v]] == 0 && self.best_edge[v] != NONE {
                        let d = self.slack(self.best_edge[v]);
                        if delta_type == -1 || d < delta {
                            delta = d;
                            delta_type = 2;
                            delta_edge = self.best_edge[v];
                        }
                    }
                }
                for b in 0..2 * n {
                    if self.parent[b] == NONE && self.label[b] == 1 && self.best_edge[b] != NONE
                    {
                        let d = self.slack(self.best_edge[b]) / 2;
                        if delta_type == -1 || d < delta {
                            delta = d;
                            delta_type = 3;
                            delta_edge = self.best_edge[b];
                        }
                    }
                }
                for b in n..2 * n {
                    if self.base[b] != NONE
                        && self.parent[b] == NONE
                        && self.label[b] == 2
                        && (delta_type == -1 || self.dual[b] < delta)
                    {
                        delta = self.dual[b];
                        delta_type = 4;
                        delta_blossom = b;
                    }
                }
                if delta_type == -1 {
                    // max-cardinality optimum; settle duals for verification
                    assert!(self.maxcard);
                    delta_type = 1;
                    delta = max(0, *self.dual[..n].iter().min().unwrap());
                }

                for v in 0..n {
                    match self.label[self.in_blossom[v]] {
                        0 => {}
                        1 => self.dual[v] -= delta,
                        2 => self.dual[v] += delta,
                        l => panic!("vertex in a blossom with label {}", l),
                    }
                }
                for b in n..2 * n {
                    if self.base[b] != NONE && self.parent[b] == NONE {
                        match self.label[b] {
                            0 => {}
                            1 => self.dual[b] += delta,
                            2 => self.dual[b] -= delta,
                            l => panic!("blossom with label {}", l),
                        }
                    }
                }

                match delta_type {
                    1 => break, // optimum reached
                    2 => {
                        self.allowed[delta_edge] = true;
                        let (mut i, j, _) = self.edges[delta_edge];
                        if self.label[self.in_blossom[i]] == 0 {
                            i = j;
                        }
                        assert_eq!(self.label[self.in_blossom[i]], 1);
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowed[delta_edge] = true;
                        let (i, _, _) = self.edges[delta_edge];
                        assert_eq!(self.label[self.in_blossom[i]], 1);
                        self.queue.push(i);
                    }
                    4 => self.expand_blossom(delta_blossom, false),
                    t => panic!("delta type {}", t),
                }
            }
            if !augmented {
                break;
            }
            // expand S-blossoms whose dual fell to zero
            for b in n..2 * n {
                if self.parent[b] == NONE
                    && self.base[b] != NONE
                    && self.label[b] == 1
                    && self.dual[b] == 0
                {
                    self.expand_blossom(b, true);
                }
            }
        }
        self.verify_optimum();
        let mut mate = vec![NONE; n];
        for v in 0..n {
            if self.mate[v] != NONE {
                mate[v] = self.endpoint[self.mate[v]];
            }
        }
        for v in 0..n {
            assert!(mate[v] == NONE || mate[mate[v]] == v);
        }
        mate
    }
}

/// Python-style indexing: negative j counts from the back.
fn at(v: &[usize], j: i64) -> usize {
    if j >= 0 {
        v[j as usize]
    } else {
        v[v.len() - (-j) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solve(edges: &[(usize, usize, Weight)], maxcard: bool) -> Vec<usize> {
        let n = edges.iter().map(|&(i, j, _)| i.max(j) + 1).max().unwrap_or(0);
        max_weight_matching(n, edges, maxcard)
    }

    const X: usize = NONE;

    #[test]
    fn trivial_cases() {
        assert_eq!(max_weight_matching(0, &[], false), Vec::<usize>::new());
        assert_eq!(solve(&[(0, 1, 1)], false), vec![1, 0]);
        assert_eq!(solve(&[(1, 2, 10), (2, 3, 11)], false), vec![X, X, 3, 2]);
        assert_eq!(
            solve(&[(1, 2, 5), (2, 3, 11), (3, 4, 5)], false),
            vec![X, X, 3, 2, X]
        );
        assert_eq!(
            solve(&[(1, 2, 5), (2, 3, 11), (3, 4, 5)], true),
            vec![X, 2, 1, 4, 3]
        );
    }

    #[test]
    fn negative_weights() {
        let e = [(1, 2, 2), (1, 3, -2), (2, 3, 1), (2, 4, -1), (3, 4, -6)];
        assert_eq!(solve(&e, false), vec![X, 2, 1, X, X]);
        assert_eq!(solve(&e, true), vec![X, 3, 4, 1, 2]);
    }

    #[test]
    fn blossoms_and_augmentation() {
        assert_eq!(
            solve(&[(1, 2, 8), (1, 3, 9), (2, 3, 10), (3, 4, 7)], false),
            vec![X, 2, 1, 4, 3]
        );
        assert_eq!(
            solve(&[(1, 2, 8), (1, 3, 9), (2, 3, 10), (3, 4, 7), (1, 6, 5), (4, 5, 6)], false),
            vec![X, 6, 3, 2, 5, 4, 1]
        );
        assert_eq!(
            solve(&[(1, 2, 9), (1, 3, 8), (2, 3, 10), (1, 4, 5), (4, 5, 4), (1, 6, 3)], false),
            vec![X, 6, 3, 2, 5, 4, 1]
        );
        assert_eq!(
            solve(&[(1, 2, 9), (1, 3, 8), (2, 3, 10), (1, 4, 5), (4, 5, 3), (3, 6, 4)], false),
            vec![X, 2, 1, 6, 5, 4, 3]
        );
    }

    #[test]
    fn nested_blossom_expansion() {
        assert_eq!(
            solve(
                &[(1, 2, 9), (1, 3, 9), (2, 3, 10), (2, 4, 8), (3, 5, 8), (4, 5, 10), (5, 6, 6)],
                false
            ),
            vec![X, 3, 4, 1, 2, 6, 5]
        );
        assert_eq!(
            solve(
                &[
                    (1, 2, 8),
                    (1, 3, 8),
                    (2, 3, 10),
                    (2, 4, 12),
                    (3, 5, 12),
                    (4, 5, 14),
                    (4, 6, 12),
                    (5, 7, 12),
                    (6, 7, 14),
                    (7, 8, 12)
                ],
                false
            ),
            vec![X, 2, 1, 5, 6, 3, 4, 8, 7]
        );
    }

    #[test]
    fn t_blossom_expansion() {
        assert_eq!(
            solve(
                &[(1, 2, 23), (1, 5, 22), (1, 6, 15), (2, 3, 25), (3, 4, 22), (4, 5, 25), (4, 8, 14), (5, 7, 13)],
                false
            ),
            vec![X, 6, 3, 2, 8, 7, 1, 5, 4]
        );
        assert_eq!(
            solve(
                &[(1, 2, 19), (1, 3, 20), (1, 8, 8), (2, 3, 25), (2, 4, 18), (3, 5, 18), (4, 5, 13), (4, 7, 7), (5, 6, 7)],
                false
            ),
            vec![X, 8, 3, 2, 7, 6, 5, 4, 1]
        );
    }

    #[test]
    fn nasty_t_relabel_cases() {
        assert_eq!(
            solve(
                &[(1, 2, 45), (1, 5, 45), (2, 3, 50), (3, 4, 45), (4, 5, 50), (1, 6, 30), (3, 9, 35), (4, 8, 35), (5, 7, 26), (9, 10, 5)],
                false
            ),
            vec![X, 6, 3, 2, 8, 7, 1, 5, 4, 10, 9]
        );
        assert_eq!(
            solve(
                &[(1, 2, 45), (1, 5, 45), (2, 3, 50), (3, 4, 45), (4, 5, 50), (1, 6, 30), (3, 9, 35), (4, 8, 26), (5, 7, 40), (9, 10, 5)],
                false
            ),
            vec![X, 6, 3, 2, 8, 7, 1, 5, 4, 10, 9]
        );
        assert_eq!(
            solve(
                &[(1, 2, 45), (1, 5, 45), (2, 3, 50), (3, 4, 45), (4, 5, 50), (1, 6, 30), (3, 9, 35), (4, 8, 28), (5, 7, 26), (9, 10, 5)],
                false
            ),
            vec![X, 6, 3, 2, 8, 7, 1, 5, 4, 10, 9]
        );
    }

    #[test]
    fn nested_nasty_expansion() {
        assert_eq!(
            solve(
                &[
                    (1, 2, 45),
                    (1, 7, 45),
                    (2, 3, 50),
                    (3, 4, 45),
                    (4, 5, 95),
                    (4, 6, 94),
                    (5, 6, 94),
                    (6, 7, 50),
                    (1, 8, 30),
                    (3, 11, 35),
                    (5, 9, 36),
                    (7, 10, 26),
                    (11, 12, 5)
                ],
                false
            ),
            vec![X, 8, 3, 2, 6, 9, 4, 10, 1, 5, 7, 12, 11]
        );
        assert_eq!(
            solve(
                &[
                    (1, 2, 40),
                    (1, 3, 40),
                    (2, 3, 60),
                    (2, 4, 55),
                    (3, 5, 55),
                    (4, 5, 50),
                    (1, 8, 15),
                    (5, 7, 30),
                    (7, 6, 10),
                    (8, 10, 10),
                    (4, 9, 30)
                ],
                false
            ),
            vec![X, 2, 1, 5, 9, 3, 7, 6, 10, 4, 8]
        );
    }

    #[test]
    fn brute_force_agreement_on_random_weighted_graphs() {
        use rand::{Rng, SeedableRng};

        fn brute_best(n: usize, edges: &[(usize, usize, Weight)], maxcard: bool) -> (usize, Weight) {
            // (cardinality, weight), lexicographic when maxcard
            fn rec(
                i: usize,
                edges: &[(usize, usize, Weight)],
                used: &mut u32,
                maxcard: bool,
            ) -> (usize, Weight) {
                if i == edges.len() {
                    return (0, 0);
                }
                let mut best = rec(i + 1, edges, used, maxcard);
                let (u, v, w) = edges[i];
                let bits = (1u32 << u) | (1u32 << v);
                if *used & bits == 0 {
                    *used |= bits;
                    let (c, wt) = rec(i + 1, edges, used, maxcard);
                    let cand = (c + 1, wt + w);
                    let better = if maxcard {
                        cand > best
                    } else {
                        cand.1 > best.1 || (cand.1 == best.1 && cand.0 > best.0)
                    };
                    if better {
                        best = cand;
                    }
                    *used &= !bits;
                }
                best
            }
            let _ = n;
            rec(0, edges, &mut 0, maxcard)
        }

        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4242);
        for trial in 0..120 {
            let n = rng.gen_range(2..9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v, rng.gen_range(-8i64..30)));
                    }
                }
            }
            if edges.is_empty() {
                continue;
            }
            for &maxcard in &[false, true] {
                let mate = max_weight_matching(n, &edges, maxcard);
                let mut got_c = 0;
                let mut got_w = 0;
                for &(u, v, w) in &edges {
                    if mate[u] == v {
                        got_c += 1;
                        got_w += w;
                    }
                }
                let (want_c, want_w) = brute_best(n, &edges, maxcard);
                if maxcard {
                    assert_eq!((got_c, got_w), (want_c, want_w), "trial {} {:?}", trial, edges);
                } else {
                    assert_eq!(got_w, want_w, "trial {} {:?}", trial, edges);
                }
            }
        }
    }
}

//! Maximum cardinality matching (Edmonds' blossom shrinking) on plain
//! adjacency lists. One BFS per free vertex after a Karp-Sipser seed; the
//! seed leaves a handful of vertices free on the sparse graphs we feed it,
//! so the quadratic worst case stays theoretical.

const NONE: usize = usize::MAX;

/// Returns the mate vector: mate[v] is v's partner or usize::MAX.
/// Deterministic: the seed peels vertices in queue order and guesses by
/// ascending index, the BFS processes vertices in queue order.
pub(crate) fn maximum_matching_adj(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut m = Matcher {
        adj,
        mate: karp_sipser_seed(n, adj),
        from: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        mark: vec![0; n],
        epoch: 0,
        in_blossom: vec![false; n],
        marked: Vec::new(),
        queue: Vec::new(),
    };
    for v in 0..n {
        if m.mate[v] == NONE {
            m.find_path(v);
        }
    }
    m.mate
}

/// Karp-Sipser seed. A degree-1 vertex must take its only edge, and a
/// degree-2 vertex can be spliced out by merging its two neighbour classes,
/// neither of which changes the maximum matching size; guesses only happen
/// once every live class has degree >= 3. The splices are replayed in
/// reverse afterwards to decide which of its two edges each spliced vertex
/// takes. Any output is a valid matching, so a poor guess costs a blossom
/// search later, never correctness.
fn karp_sipser_seed(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut ends = Vec::new();
    for u in 0..n {
        for &v in &adj[u] {
            if u < v {
                ends.push((u, v));
            }
        }
    }
    let mut lists = vec![Vec::new(); n];
    let mut deg = vec![0usize; n];
    for (e, &(u, v)) in ends.iter().enumerate() {
        lists[u].push(e);
        lists[v].push(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    let edead = vec![false; ends.len()];
    let mut p = Peel {
        ends,
        lists,
        deg,
        alive: vec![true; n],
        edead,
        into: vec![NONE; n],
        csize: vec![1; n],
        ones: Vec::new(),
        twos: Vec::new(),
        events: Vec::new(),
    };
    for v in 0..n {
        p.enqueue(v);
    }
    p.run();
    p.extract()
}

enum SeedEvent {
    /// edge e matched the two classes x and y
    Match { e: usize, x: usize, y: usize },
    /// degree-2 class v spliced out, its neighbours a and b merged into keep
    Splice {
        v: usize,
        ea: usize,
        eb: usize,
        a: usize,
        b: usize,
        keep: usize,
    },
}

/// Contracted-graph state for the seed. Vertex slots double as class
/// representatives: a splice folds the smaller class under the larger one
/// via `into`, and edges keep their original endpoints so a chain walk
/// recovers the current class of either side. No path compression: the
/// replay in extract() unwinds `into` entries one splice at a time, and
/// union by size keeps the chains logarithmic anyway.
struct Peel {
    ends: Vec<(usize, usize)>,
    lists: Vec<Vec<usize>>,
    deg: Vec<usize>,
    alive: Vec<bool>,
    edead: Vec<bool>,
    into: Vec<usize>,
    csize: Vec<usize>,
    ones: Vec<usize>,
    twos: Vec<usize>,
    events: Vec<SeedEvent>,
}

impl Peel {
    fn cur(&self, mut x: usize) -> usize {
        while self.into[x] != NONE {
            x = self.into[x];
        }
        x
    }

    /// the class on the far side of e, seen from class s
    fn other(&self, e: usize, s: usize) -> usize {
        let (x, y) = self.ends[e];
        let cx = self.cur(x);
        if cx == s {
            self.cur(y)
        } else {
            debug_assert_eq!(self.cur(y), s);
            cx
        }
    }

    fn enqueue(&mut self, v: usize) {
        match self.deg[v] {
            1 => self.ones.push(v),
            2 => self.twos.push(v),
            _ => {}
        }
    }

    /// queues hold stale entries; a pop only counts if the degree still matches
    fn pop_deg(&mut self, k: usize) -> Option<usize> {
        loop {
            let v = if k == 1 {
                self.ones.pop()
            } else {
                self.twos.pop()
            };
            match v {
                None => return None,
                Some(v) if self.alive[v] && self.deg[v] == k => return Some(v),
                Some(_) => {}
            }
        }
    }

    fn prune(&mut self, v: usize) {
        let edead = &self.edead;
        self.lists[v].retain(|&e| !edead[e]);
    }

    fn remove_class(&mut self, v: usize) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        let list = std::mem::take(&mut self.lists[v]);
        for e in list {
            if self.edead[e] {
                continue;
            }
            self.edead[e] = true;
            let o = self.other(e, v);
            debug_assert_ne!(o, v);
            self.deg[o] -= 1;
            self.enqueue(o);
        }
        self.deg[v] = 0;
    }

    fn match_pair(&mut self, e: usize, v: usize, u: usize) {
        self.events.push(SeedEvent::Match { e, x: v, y: u });
        self.remove_class(v);
        self.remove_class(u);
    }

    fn splice(&mut self, v: usize) {
        self.prune(v);
        debug_assert_eq!(self.lists[v].len(), 2);
        let (ea, eb) = (self.lists[v][0], self.lists[v][1]);
        let a = self.other(ea, v);
        let b = self.other(eb, v);
        if a == b {
            // parallel pair: v must match one of the two, the rest dies
            self.match_pair(ea, v, a);
            return;
        }
        // Splice v out and merge a with b. Size is preserved: a matching
        // uses at most one of ea, eb, and v can always take the free side.
        let keep = if self.csize[a] > self.csize[b] || (self.csize[a] == self.csize[b] && a < b) {
            a
        } else {
            b
        };
        let fold = if keep == a { b } else { a };
        self.events.push(SeedEvent::Splice { v, ea, eb, a, b, keep });
        self.alive[v] = false;
        self.deg[v] = 0;
        self.lists[v].clear();
        self.edead[ea] = true;
        self.edead[eb] = true;
        self.deg[a] -= 1;
        self.deg[b] -= 1;
        self.alive[fold] = false;
        let list = std::mem::take(&mut self.lists[fold]);
        for e in list {
            if self.edead[e] {
                continue;
            }
            let o = self.other(e, fold);
            if o == keep {
                // became a loop of the merged class
                self.edead[e] = true;
                self.deg[keep] -= 1;
            } else {
                self.lists[keep].push(e);
                self.deg[keep] += 1;
            }
        }
        self.deg[fold] = 0;
        self.csize[keep] += self.csize[fold];
        self.into[fold] = keep;
        self.enqueue(keep);
    }

    fn run(&mut self) {
        let n = self.alive.len();
        let mut cursor = 0;
        loop {
            if let Some(v) = self.pop_deg(1) {
                self.prune(v);
                debug_assert_eq!(self.lists[v].len(), 1);
                let e = self.lists[v][0];
                let u = self.other(e, v);
                self.match_pair(e, v, u);
                continue;
            }
            if let Some(v) = self.pop_deg(2) {
                self.splice(v);
                continue;
            }
            // every transition into degree 1 or 2 enqueues, so nothing
            // peelable is left; sweep to the next live class and guess
            while cursor < n && (!self.alive[cursor] || self.deg[cursor] == 0) {
                if self.alive[cursor] {
                    self.alive[cursor] = false; // isolated: stays free
                }
                cursor += 1;
            }
            if cursor == n {
                break;
            }
            let v = cursor;
            self.prune(v);
            let e = self.lists[v][0];
            let u = self.other(e, v);
            self.match_pair(e, v, u);
        }
    }

    /// Replays the event log backwards. A Match pins its edge; a Splice
    /// looks at which constituent class the merged class's matched edge
    /// really enters, hands it down, and matches the spliced vertex into
    /// the opposite side (side a when the class ended up unmatched).
    fn extract(mut self) -> Vec<usize> {
        let n = self.alive.len();
        let mut cur_mate = vec![NONE; n];
        let events = std::mem::take(&mut self.events);
        for ev in events.iter().rev() {
            match *ev {
                SeedEvent::Match { e, x, y } => {
                    debug_assert!(cur_mate[x] == NONE && cur_mate[y] == NONE);
                    cur_mate[x] = e;
                    cur_mate[y] = e;
                }
                SeedEvent::Splice { v, ea, eb, a, b, keep } => {
                    let fold = if keep == a { b } else { a };
                    let f = cur_mate[keep];
                    debug_assert_eq!(self.into[fold], keep);
                    self.into[fold] = NONE; // unmerge before resolving sides
                    if f == NONE {
                        cur_mate[a] = ea;
                        cur_mate[v] = ea;
                    } else {
                        let (x, y) = self.ends[f];
                        let cx = self.cur(x);
                        let side = if cx == a || cx == b {
                            cx
                        } else {
                            let cy = self.cur(y);
                            debug_assert!(cy == a || cy == b);
                            cy
                        };
                        let (em, rest) = if side == a { (eb, b) } else { (ea, a) };
                        cur_mate[keep] = NONE;
                        cur_mate[side] = f;
                        cur_mate[rest] = em;
                        cur_mate[v] = em;
                    }
                }
            }
        }
        // all splices unwound: slots are plain vertices again
        let mut mate = vec![NONE; n];
        for v in 0..n {
            let e = cur_mate[v];
            if e == NONE {
                continue;
            }
            let (x, y) = self.ends[e];
            assert!(v == x || v == y, "replay left an edge on a foreign vertex");
            mate[v] = if v == x { y } else { x };
        }
        for v in 0..n {
            assert!(
                mate[v] == NONE || mate[mate[v]] == v,
                "seed matching must be symmetric"
            );
        }
        mate
    }
}

struct Matcher<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    /// forest parent: the S-vertex an even vertex was discovered from
    from: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    mark: Vec<u32>,
    epoch: u32,
    in_blossom: Vec<bool>,
    marked: Vec<usize>,
    queue: Vec<usize>,
}

impl Matcher<'_> {
    fn find_path(&mut self, root: usize) -> bool {
        let n = self.adj.len();
        self.from.iter_mut().for_each(|x| *x = NONE);
        self.used.iter_mut().for_each(|x| *x = false);
        for v in 0..n {
            self.base[v] = v;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut qi = 0;
        while qi < self.queue.len() {
            let v = self.queue[qi];
            qi += 1;
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.from[self.mate[to]] != NONE) {
                    // odd cycle: shrink the blossom around the common base
                    let cur_base = self.lca(v, to);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur_base;
                            if !self.used[u] {
                                self.used[u] = true;
                                self.queue.push(u);
                            }
                        }
                    }
                    for &x in &self.marked {
                        self.in_blossom[x] = false;
                    }
                    self.marked.clear();
                } else if self.from[to] == NONE {
                    self.from[to] = v;
                    if self.mate[to] == NONE {
                        // augmenting path found; flip it
                        let mut u = to;
                        while u != NONE {
                            let pv = self.from[u];
                            let next = self.mate[pv];
                            self.mate[u] = pv;
                            self.mate[pv] = u;
                            u = next;
                        }
                        return true;
                    }
                    let w = self.mate[to];
                    self.used[w] = true;
                    self.queue.push(w);
                }
            }
        }
        false
    }

    /// First common blossom base of the two forest paths, found by
    /// stamping one path and walking the other until the stamp.
    fn lca(&mut self, a: usize, b: usize) -> usize {
        self.epoch += 1;
        let mut v = a;
        loop {
            v = self.base[v];
            self.mark[v] = self.epoch;
            if self.mate[v] == NONE {
                break;
            }
            v = self.from[self.mate[v]];
        }
        let mut u = b;
        loop {
            u = self.base[u];
            if self.mark[u] == self.epoch {
                return u;
            }
            u = self.from[self.mate[u]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let bv = self.base[v];
            let bm = self.base[self.mate[v]];
            for x in [bv, bm] {
                if !self.in_blossom[x] {
                    self.in_blossom[x] = true;
                    self.marked.push(x);
                }
            }
            self.from[v] = child;
            child = self.mate[v];
            v = self.from[self.mate[v]];
        }
    }
}

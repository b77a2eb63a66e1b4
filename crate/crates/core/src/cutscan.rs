//! All 3-edge cuts of a connected multigraph, found by DFS cover counts.
//!
//! Fix a DFS tree. A 3-edge cut contains one, two, or three tree edges:
//!
//! * one tree edge e_v: the other two cut edges are exactly the back edges
//!   covering e_v, so such cuts are the vertices with cover count 2;
//! * two tree edges e_v, e_w (w a strict ancestor of v, the cut side is the
//!   annulus sub(w) minus sub(v)): the back edges crossing the annulus are
//!   the symmetric difference of the two cover sets, so the pair qualifies
//!   iff that difference is a single back edge. A post-order sweep over a
//!   segment tree finds all partners of w in one subtree query, and the
//!   XOR of back-edge labels extracts the third edge;
//! * three tree edges: no back edge crosses, so the cut survives unchanged
//!   in the quotient taken by contracting every back edge. The quotient is
//!   scanned recursively; it stays 3-edge-connected, and since only tree
//!   edges survive its size at least (2/3)-shrinks per round, keeping the
//!   total work near-linear.
//!
//! Every cut is found at exactly one level (a cut emitted at level k loses
//! one of its edges as a loop in the quotient), so no deduplication is
//! needed; the driver still asserts distinctness.

use crate::dsu::Dsu;
use crate::graph::EdgeId;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ScanError {
    Disconnected,
    NotThreeEdgeConnected,
}

#[derive(Clone, Copy, Debug)]
enum Side {
    /// DFS subtree of the vertex, at the cut's level.
    Sub(usize),
    /// sub(shallow) minus sub(deep), at the cut's level.
    Ann { deep: usize, shallow: usize },
}

#[derive(Clone, Debug)]
pub(crate) struct ScanCut {
    /// The three edge ids, ascending.
    pub edges: [EdgeId; 3],
    level: usize,
    side: Side,
}

#[derive(Debug)]
struct Level {
    /// this level's vertex -> next level's vertex
    blob_of: Vec<usize>,
    tin: Vec<usize>,
    sz: Vec<usize>,
    /// subtree weights counted in original (level-0) vertices
    wsub: Vec<usize>,
}

#[derive(Debug)]
pub(crate) struct CutScan {
    levels: Vec<Level>,
    cuts: Vec<ScanCut>,
}

impl CutScan {
    /// Enumerates every 3-edge cut of the graph. Errors if the graph is
    /// disconnected or has a cut smaller than 3.
    pub fn run(n: usize, edges: &[(EdgeId, usize, usize)]) -> Result<CutScan, ScanError> {
        let mut scan = CutScan { levels: Vec::new(), cuts: Vec::new() };
        if n == 0 {
            return Err(ScanError::Disconnected);
        }
        let mut cur_n = n;
        let mut cur_edges: Vec<(EdgeId, usize, usize)> = edges.to_vec();
        let mut cur_weight: Vec<usize> = vec![1; n];
        while cur_n > 1 {
            let d = LevelDfs::build(cur_n, &cur_edges)?;
            for &v in &d.order[1..] {
                if d.c[v] <= 1 {
                    // c = 0 is a bridge, c = 1 a 2-cut {e_v, back edge}
                    return Err(ScanError::NotThreeEdgeConnected);
                }
            }
            let level = scan.levels.len();
            let wsub = d.accumulate(&cur_weight);
            scan.emit_t1(&d, level);
            let pairs = sweep_t2(&d, true)?;
            scan.emit_t2(&d, level, &pairs);
            let (next_n, next_edges, next_weight, blob_of) = d.quotient(&cur_weight);
            assert!(next_n < cur_n, "back-edge contraction must shrink the graph");
            scan.levels.push(Level { blob_of, tin: d.tin, sz: d.sz, wsub });
            cur_n = next_n;
            cur_edges = next_edges;
            cur_weight = next_weight;
        }
        scan.assert_distinct();
        Ok(scan)
    }

    pub fn cuts(&self) -> &[ScanCut] {
        &self.cuts
    }

    /// Number of original vertices on the cut's stored side.
    pub fn side_size(&self, cut: usize) -> usize {
        let c = &self.cuts[cut];
        let lv = &self.levels[c.level];
        match c.side {
            Side::Sub(v) => lv.wsub[v],
            Side::Ann { deep, shallow } => lv.wsub[shallow] - lv.wsub[deep],
        }
    }

    /// Whether original vertex v lies on the cut's stored side.
    pub fn side_contains(&self, cut: usize, v: usize) -> bool {
        let c = &self.cuts[cut];
        let mut x = v;
        for lv in &self.levels[..c.level] {
            x = lv.blob_of[x];
        }
        let lv = &self.levels[c.level];
        let in_sub = |s: usize, z: usize| lv.tin[s] <= lv.tin[z] && lv.tin[z] < lv.tin[s] + lv.sz[s];
        match c.side {
            Side::Sub(s) => in_sub(s, x),
            Side::Ann { deep, shallow } => in_sub(shallow, x) && !in_sub(deep, x),
        }
    }

    fn emit_t1(&mut self, d: &LevelDfs, level: usize) {
        let n = d.n;
        // nearest marked vertex weakly above, resolved root-down
        let mut jump = vec![0usize; n];
        let mut marked = vec![false; n];
        for &v in &d.order {
            if v != 0 && d.c[v] == 2 {
                marked[v] = true;
            }
            jump[v] = if marked[v] { v } else { jump[d.parent[v]] };
        }
        let mut slot = vec![[usize::MAX; 2]; n];
        let mut cnt = vec![0u8; n];
        for (bi, &(x, y, _)) in d.backedges.iter().enumerate() {
            let mut v = jump[x];
            while d.depth[v] > d.depth[y] {
                assert!(cnt[v] < 2, "cover bucket of a count-2 vertex overflowed");
                slot[v][cnt[v] as usize] = bi;
                cnt[v] += 1;
                v = jump[d.parent[v]];
            }
        }
        for &v in &d.order {
            if !marked[v] {
                continue;
            }
            assert_eq!(cnt[v], 2, "cover bucket of a count-2 vertex underfilled");
            let e0 = d.edges[d.parent_eidx[v]].0;
            let e1 = d.edges[d.backedges[slot[v][0]].2].0;
            let e2 = d.edges[d.backedges[slot[v][1]].2].0;
            self.cuts.push(ScanCut {
                edges: sorted3(e0, e1, e2),
                level,
                side: Side::Sub(v),
            });
        }
    }

    fn emit_t2(&mut self, d: &LevelDfs, level: usize, pairs: &[(usize, usize, usize)]) {
        for &(v, u, f) in pairs {
            let (fx, fy, feidx) = d.backedges[f];
            let in_sub = |s: usize, z: usize| d.tin[s] <= d.tin[z] && d.tin[z] < d.tin[s] + d.sz[s];
            let in_ann = |z: usize| in_sub(u, z) && !in_sub(v, z);
            assert!(
                in_ann(fx) != in_ann(fy),
                "extracted third edge does not cross the annulus"
            );
            let e0 = d.edges[d.parent_eidx[v]].0;
            let e1 = d.edges[d.parent_eidx[u]].0;
            let e2 = d.edges[feidx].0;
            self.cuts.push(ScanCut {
                edges: sorted3(e0, e1, e2),
                level,
                side: Side::Ann { deep: v, shallow: u },
            });
        }
    }

    fn assert_distinct(&self) {
        let mut seen = std::collections::BTreeSet::new();
        for c in &self.cuts {
            assert!(c.edges[0] < c.edges[1] && c.edges[1] < c.edges[2], "cut edges not distinct");
            assert!(seen.insert(c.edges), "duplicate cut emitted: {:?}", c.edges);
        }
    }
}

/// True iff the graph is connected and every edge cut has >= k edges,
/// for k <= 3. Cuts of size below 3 cross the DFS tree at most twice, so a
/// single level decides this without quotient recursion.
pub(crate) fn connectivity_at_least(n: usize, edges: &[(EdgeId, usize, usize)], k: usize) -> bool {
    debug_assert!(k <= 3);
    if n <= 1 {
        // no bipartitions, hence no cuts to be small
        return true;
    }
    if k == 0 {
        return true;
    }
    let d = match LevelDfs::build(n, edges) {
        Ok(d) => d,
        Err(_) => return false,
    };
    if k == 1 {
        return true;
    }
    let min_c = d.order[1..].iter().map(|&v| d.c[v]).min().unwrap();
    if min_c < (k as i64) - 1 {
        return false;
    }
    if k <= 2 {
        return true;
    }
    // k = 3: also reject two-tree-edge 2-cuts
    sweep_t2(&d, false).is_ok()
}

fn sorted3(a: EdgeId, b: EdgeId, c: EdgeId) -> [EdgeId; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// One DFS of one level: tree arrays, back edges, and the per-tree-edge
/// cover counts c(v) = |{back edges (x, y): x in sub(v), y strict ancestor
/// of v}| together with the XOR of their labels.
struct LevelDfs<'a> {
    n: usize,
    edges: &'a [(EdgeId, usize, usize)],
    parent: Vec<usize>,
    parent_eidx: Vec<usize>,
    tin: Vec<usize>,
    depth: Vec<usize>,
    order: Vec<usize>,
    postorder: Vec<usize>,
    sz: Vec<usize>,
    /// (deep endpoint, ancestor endpoint, edge index); label of back edge
    /// i is i + 1
    backedges: Vec<(usize, usize, usize)>,
    c: Vec<i64>,
    xr: Vec<u64>,
}

impl<'a> LevelDfs<'a> {
    fn build(n: usize, edges: &'a [(EdgeId, usize, usize)]) -> Result<Self, ScanError> {
        let m = edges.len();
        let mut off = vec![0usize; n + 1];
        for &(_, u, v) in edges {
            debug_assert_ne!(u, v, "loop edge reached the scanner");
            off[u + 1] += 1;
            off[v + 1] += 1;
        }
        for i in 0..n {
            off[i + 1] += off[i];
        }
        let mut csr = vec![0usize; 2 * m];
        let mut cursor = off.clone();
        for (ei, &(_, u, v)) in edges.iter().enumerate() {
            csr[cursor[u]] = ei;
            cursor[u] += 1;
            csr[cursor[v]] = ei;
            cursor[v] += 1;
        }

        let mut parent = vec![0usize; n];
        let mut parent_eidx = vec![usize::MAX; n];
        let mut tin = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut order = Vec::with_capacity(n);
        let mut postorder = Vec::with_capacity(n);
        let mut backedges = Vec::new();

        let mut t = 0usize;
        tin[0] = 0;
        t += 1;
        order.push(0);
        let mut stack: Vec<(usize, usize)> = vec![(0, off[0])];
        while let Some(&mut (v, ref mut cur)) = stack.last_mut() {
            if *cur < off[v + 1] {
                let ei = csr[*cur];
                *cur += 1;
                if ei == parent_eidx[v] {
                    continue;
                }
                let (_, a, b) = edges[ei];
                let w = if a == v { b } else { a };
                if tin[w] == usize::MAX {
                    tin[w] = t;
                    t += 1;
                    order.push(w);
                    parent[w] = v;
                    parent_eidx[w] = ei;
                    depth[w] = depth[v] + 1;
                    stack.push((w, off[w]));
                } else if tin[w] < tin[v] {
                    backedges.push((v, w, ei));
                }
                // tin[w] > tin[v]: the downward view of a back edge; skip
            } else {
                postorder.push(v);
                stack.pop();
            }
        }
        if t < n {
            return Err(ScanError::Disconnected);
        }

        let mut c = vec![0i64; n];
        let mut xr = vec![0u64; n];
        let mut sz = vec![1usize; n];
        for (bi, &(x, y, _)) in backedges.iter().enumerate() {
            let lbl = bi as u64 + 1;
            c[x] += 1;
            xr[x] ^= lbl;
            c[y] -= 1;
            xr[y] ^= lbl;
        }
        for &v in &postorder {
            if v != 0 {
                let p = parent[v];
                c[p] += c[v];
                xr[p] ^= xr[v];
                sz[p] += sz[v];
            }
        }
        Ok(LevelDfs {
            n,
            edges,
            parent,
            parent_eidx,
            tin,
            depth,
            order,
            postorder,
            sz,
            backedges,
            c,
            xr,
        })
    }

    /// Subtree sums of the given per-vertex weights.
    fn accumulate(&self, weight: &[usize]) -> Vec<usize> {
        let mut wsub = weight.to_vec();
        for &v in &self.postorder {
            if v != 0 {
                wsub[self.parent[v]] += wsub[v];
            }
        }
        wsub
    }

    /// Contracts every back edge. Returns the quotient and the vertex map.
    fn quotient(&self, weight: &[usize]) -> (usize, Vec<(EdgeId, usize, usize)>, Vec<usize>, Vec<usize>) {
        let n = self.n;
        let mut dsu = Dsu::new(n);
        for &(x, y, _) in &self.backedges {
            dsu.union(x, y);
        }
        let mut rep_map = vec![usize::MAX; n];
        let mut blob_of = vec![0usize; n];
        let mut next_n = 0usize;
        for v in 0..n {
            let r = dsu.find(v);
            if rep_map[r] == usize::MAX {
                rep_map[r] = next_n;
                next_n += 1;
            }
            blob_of[v] = rep_map[r];
        }
        let mut next_edges = Vec::new();
        for &(id, u, v) in self.edges {
            let (bu, bv) = (blob_of[u], blob_of[v]);
            if bu != bv {
                next_edges.push((id, bu, bv));
            }
        }
        let mut next_weight = vec![0usize; next_n];
        for v in 0..n {
            next_weight[blob_of[v]] += weight[v];
        }
        (next_n, next_edges, next_weight, blob_of)
    }
}

/// Finds all two-tree-edge cut pairs. At post(u) every slot of sub(u) holds
/// c(v) - 2 * |{back edges from sub(v) landing weakly below u}|, which
/// equals c(u) - |crossing back edges of the (v, u) annulus|; so partners
/// are the positions holding c(u) - 1, and a position holding c(u) would
/// certify a 2-cut. Returns (deep, shallow, third back edge) triples when
/// enumerating; Err if any 2-cut pair exists.
fn sweep_t2(d: &LevelDfs, enumerate: bool) -> Result<Vec<(usize, usize, usize)>, ScanError> {
    let n = d.n;
    if n <= 1 {
        return Ok(Vec::new());
    }

    // heavy-first order: every subtree occupies one contiguous block
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &v in &d.order[1..] {
        children[d.parent[v]].push(v);
    }
    let mut heavy = vec![usize::MAX; n];
    for v in 0..n {
        for &ch in &children[v] {
            if heavy[v] == usize::MAX || d.sz[ch] > d.sz[heavy[v]] {
                heavy[v] = ch;
            }
        }
    }
    let mut hpos = vec![0usize; n];
    let mut vert_at = vec![0usize; n];
    let mut head = vec![0usize; n];
    let mut np = 0usize;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        hpos[v] = np;
        vert_at[np] = v;
        np += 1;
        for &ch in children[v].iter().rev() {
            if ch != heavy[v] {
                stack.push(ch);
                head[ch] = ch;
            }
        }
        if heavy[v] != usize::MAX {
            stack.push(heavy[v]);
            head[heavy[v]] = head[v];
        }
    }

    let mut land: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (bi, &(_, y, _)) in d.backedges.iter().enumerate() {
        land[y].push(bi);
    }

    let mut st = SegTree::new(n);
    let mut out = Vec::new();
    let mut hits = Vec::new();
    for &u in &d.postorder {
        if u == 0 {
            continue;
        }
        st.add(hpos[u], hpos[u], d.c[u] - SENTINEL);
        for &bi in &land[u] {
            let (x, _, _) = d.backedges[bi];
            // -2 along the path from x up to, excluding, u
            let mut a = x;
            loop {
                if head[a] == head[u] {
                    if a != u {
                        st.add(hpos[u] + 1, hpos[a], -2);
                    }
                    break;
                }
                st.add(hpos[head[a]], hpos[a], -2);
                a = d.parent[head[a]];
            }
        }
        if d.sz[u] >= 2 {
            let (lo, hi) = (hpos[u] + 1, hpos[u] + d.sz[u] - 1);
            let mx = st.max(lo, hi);
            assert!(mx <= d.c[u], "annulus crossing count went negative");
            if mx == d.c[u] {
                return Err(ScanError::NotThreeEdgeConnected);
            }
            if enumerate && mx == d.c[u] - 1 {
                hits.clear();
                st.positions_eq(lo, hi, mx, &mut hits);
                for &pos in &hits {
                    let v = vert_at[pos];
                    let lbl = d.xr[v] ^ d.xr[u];
                    assert!(
                        lbl >= 1 && (lbl as usize) <= d.backedges.len(),
                        "third-edge label out of range"
                    );
                    out.push((v, u, lbl as usize - 1));
                }
            }
        }
    }
    Ok(out)
}

const SENTINEL: i64 = i64::MIN / 4;

/// Range-add, range-max segment tree over i64, with enumeration of all
/// positions holding a given value (callers ensure nothing exceeds it).
/// mx[node] is the true maximum of its segment; lz[node] is pending for
/// the children only, applied while descending, never pushed down.
struct SegTree {
    size: usize,
    mx: Vec<i64>,
    lz: Vec<i64>,
}

impl SegTree {
    fn new(n: usize) -> SegTree {
        let mut size = 1;
        while size < n.max(1) {
            size *= 2;
        }
        SegTree { size, mx: vec![SENTINEL; 2 * size], lz: vec![0; 2 * size] }
    }

    fn add(&mut self, l: usize, r: usize, v: i64) {
        if l > r {
            return;
        }
        self.add_rec(1, 0, self.size - 1, l, r, v);
    }

    fn add_rec(&mut self, node: usize, nl: usize, nr: usize, l: usize, r: usize, v: i64) {
        if r < nl || nr < l {
            return;
        }
        if l <= nl && nr <= r {
            self.mx[node] += v;
            self.lz[node] += v;
            return;
        }
        let mid = (nl + nr) / 2;
        self.add_rec(2 * node, nl, mid, l, r, v);
        self.add_rec(2 * node + 1, mid + 1, nr, l, r, v);
        self.mx[node] = self.mx[2 * node].max(self.mx[2 * node + 1]) + self.lz[node];
    }

    fn max(&self, l: usize, r: usize) -> i64 {
        debug_assert!(l <= r);
        self.max_rec(1, 0, self.size - 1, l, r, 0)
    }

    fn max_rec(&self, node: usize, nl: usize, nr: usize, l: usize, r: usize, acc: i64) -> i64 {
        if r < nl || nr < l {
            return i64::MIN;
        }
        if l <= nl && nr <= r {
            return self.mx[node] + acc;
        }
        let mid = (nl + nr) / 2;
        let acc = acc + self.lz[node];
        self.max_rec(2 * node, nl, mid, l, r, acc)
            .max(self.max_rec(2 * node + 1, mid + 1, nr, l, r, acc))
    }

    /// Pushes every position in [l, r] whose value equals `target`.
    fn positions_eq(&self, l: usize, r: usize, target: i64, out: &mut Vec<usize>) {
        if l > r {
            return;
        }
        self.pos_rec(1, 0, self.size - 1, l, r, target, 0, out);
    }

    fn pos_rec(
        &self,
        node: usize,
        nl: usize,
        nr: usize,
        l: usize,
        r: usize,
        target: i64,
        acc: i64,
        out: &mut Vec<usize>,
    ) {
        if r < nl || nr < l || self.mx[node] + acc < target {
            return;
        }
        if nl == nr {
            if self.mx[node] + acc == target {
                out.push(nl);
            }
            return;
        }
        let mid = (nl + nr) / 2;
        let acc = acc + self.lz[node];
        self.pos_rec(2 * node, nl, mid, l, r, target, acc, out);
        self.pos_rec(2 * node + 1, mid + 1, nr, l, r, target, acc, out);
    }
}

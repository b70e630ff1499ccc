//! Brute-force ground truth: rooted K2,t search and exact face-independent
//! roots.
//!
//! The minor search only looks at models in a normal form. Every rooted
//! K2,t model can be rewritten so that
//!
//! * the vertices of H = G - X1 - X2 adjacent to X1 are exactly the contact
//!   vertices C = {c_1, ..., c_t}, and the same holds for X2;
//! * satellite j is a path from c_j to a root whose other vertices have no
//!   neighbour in X1 or X2.
//!
//! Such a form is reached by trimming each satellite to a tripod around a
//! root, handing the two arms to the centers, and absorbing every unused
//! vertex adjacent to a center. In the normal form X2 is a whole component of
//! G - X1 - C. So it suffices to enumerate connected X1 and t-subsets C of its
//! neighbourhood, pick a component K of G - X1 - C seeing all of C, and route
//! disjoint paths from the non-root contacts to distinct roots outside
//! X1, C and K. That last step is a unit-capacity flow.

use std::time::{Duration, Instant};

use crate::embed::{Embedding, RootSet};
pub use crate::model::{verify_cover, verify_model, RootedK2tModel, Verdict};
use crate::error::{precondition, Result};
use crate::graph::Graph;

/// Largest graph the minor search accepts.
pub const MAX_SEARCH_VERTICES: usize = 64;
/// Largest root set for the exact independent-set search.
pub const MAX_EXACT_ROOTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult {
    Model(RootedK2tModel),
    /// The search space was exhausted.
    Absent,
    /// The budget ran out, or the graph is larger than the search accepts.
    Timeout,
}

impl OracleResult {
    pub fn is_model(&self) -> bool {
        matches!(self, OracleResult::Model(_))
    }
}

fn bit(v: usize) -> u64 {
    1u64 << v
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Vertex-split unit flow from contact vertices into `allowed`, ending at
/// roots inside `allowed`.
struct Flow {
    n: usize,
    // arcs: (to, cap), reverse arc is index ^ 1
    to: Vec<usize>,
    cap: Vec<u8>,
    adj: Vec<Vec<usize>>,
}

impl Flow {
    fn new(nodes: usize) -> Self {
        Flow { n: nodes, to: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    fn arc(&mut self, a: usize, b: usize) {
        self.adj[a].push(self.to.len());
        self.to.push(b);
        self.cap.push(1);
        self.adj[b].push(self.to.len());
        self.to.push(a);
        self.cap.push(0);
    }

    fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.adj[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = a;
                    if y == t {
                        let mut z = t;
                        while z != s {
                            let a = via[z];
                            self.cap[a] -= 1;
                            self.cap[a ^ 1] += 1;
                            z = self.to[a ^ 1];
                        }
                        return true;
                    }
                    queue.push_back(y);
                }
            }
        }
        false
    }
}

/// Disjoint paths from each start into `allowed`, each ending at a distinct
/// root of `allowed`. Returns the paths (start first) or `None`.
fn route_to_roots(adj: &[u64], starts: &[usize], allowed: u64, roots: u64) -> Option<Vec<Vec<usize>>> {
    if starts.is_empty() {
        return Some(Vec::new());
    }
    let n = adj.len();
    // node ids: 2v in, 2v+1 out, source 2n, sink 2n+1
    let (src, snk) = (2 * n, 2 * n + 1);
    let mut fl = Flow::new(2 * n + 2);
    for v in bits(allowed) {
        fl.arc(2 * v, 2 * v + 1);
        for w in bits(adj[v] & allowed) {
            fl.arc(2 * v + 1, 2 * w);
        }
        if roots & bit(v) != 0 {
            fl.arc(2 * v + 1, snk);
        }
    }
    for &c in starts {
        fl.arc(src, 2 * c + 1);
        for w in bits(adj[c] & allowed) {
            fl.arc(2 * c + 1, 2 * w);
        }
    }
    for _ in 0..starts.len() {
        if !fl.augment(src, snk) {
            return None;
        }
    }
    let mut paths = Vec::new();
    for &c in starts {
        let mut path = vec![c];
        let mut x = 2 * c + 1;
        loop {
            // follow a saturated forward arc out of the out-node
            let a = *fl.adj[x]
                .iter()
                .find(|&&a| a % 2 == 0 && fl.cap[a] == 0 && fl.to[a] != src)
                .expect("flow leaves every used vertex");
            let y = fl.to[a];
            if y == snk {
                break;
            }
            let v = y / 2;
            path.push(v);
            x = 2 * v + 1;
        }
        paths.push(path);
    }
    Some(paths)
}

struct Search<'a> {
    adj: Vec<u64>,
    roots: u64,
    all: u64,
    t: usize,
    g: &'a Graph,
    deadline: Instant,
    ticks: u64,
    timed_out: bool,
    found: Option<RootedK2tModel>,
}

impl Search<'_> {
    fn nbr(&self, set: u64) -> u64 {
        let mut m = 0;
        for v in bits(set) {
            m |= self.adj[v];
        }
        m & !set
    }

    fn component(&self, start: usize, within: u64) -> u64 {
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let grown = self.nbr(frontier) & within & !comp;
            comp |= grown;
            frontier = grown;
        }
        comp
    }

    /// Tries every contact set for a fixed first center. Returns true to stop.
    fn try_center(&mut self, x1: u64) -> bool {
        self.ticks += 1;
        if self.ticks % 512 == 0 && Instant::now() > self.deadline {
            self.timed_out = true;
            return true;
        }
        let n1 = self.nbr(x1);
        if (n1.count_ones() as usize) < self.t || ((self.roots & !x1).count_ones() as usize) < self.t {
            return false;
        }
        let cand: Vec<usize> = bits(n1).collect();
        let mut pick = Vec::with_capacity(self.t);
        self.choose(x1, &cand, 0, &mut pick)
    }

    fn choose(&mut self, x1: u64, cand: &[usize], from: usize, pick: &mut Vec<usize>) -> bool {
        if pick.len() == self.t {
            return self.check(x1, pick);
        }
        let need = self.t - pick.len();
        for i in from..cand.len() {
            if cand.len() - i < need {
                break;
            }
            pick.push(cand[i]);
            if self.choose(x1, cand, i + 1, pick) {
                return true;
            }
            pick.pop();
        }
        false
    }

    fn check(&mut self, x1: u64, contacts: &[usize]) -> bool {
        let cmask: u64 = contacts.iter().map(|&c| bit(c)).sum();
        let rest = self.all & !x1 & !cmask;
        let mut left = rest;
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            let k = self.component(s, rest);
            left &= !k;
            let seen = self.nbr(k);
            if seen & cmask != cmask {
                continue;
            }
            let w = rest & !k;
            let open: Vec<usize> = contacts.iter().copied().filter(|&c| self.roots & bit(c) == 0).collect();
            if open.iter().any(|&c| self.adj[c] & w == 0) {
                continue;
            }
            if let Some(paths) = route_to_roots(&self.adj, &open, w, self.roots & w) {
                let mut sats = Vec::new();
                let mut it = paths.into_iter();
                for &c in contacts {
                    if self.roots & bit(c) != 0 {
                        sats.push(vec![c]);
                    } else {
                        sats.push(it.next().expect("one path per open contact"));
                    }
                }
                let model = RootedK2tModel::new(self.g, [bits(x1).collect(), bits(k).collect()], sats)
                    .expect("normal form models are adjacent");
                self.found = Some(model);
                return true;
            }
        }
        false
    }

    /// Enumerates connected sets with smallest vertex `v0`, each once.
    fn grow(&mut self, set: u64, cand: u64, mut excl: u64) -> bool {
        if self.try_center(set) {
            return true;
        }
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            excl |= bit(v);
            let next = (c | (self.adj[v] & !excl & !set)) & !bit(v);
            if self.grow(set | bit(v), next, excl) {
                return true;
            }
        }
        false
    }
}

/// Exhaustive search for a rooted K2,t model within `budget`.
pub fn brute_force_rooted_k2t(g: &Graph, roots: &RootSet, t: usize, budget: Duration) -> OracleResult {
    let n = g.n();
    if n > MAX_SEARCH_VERTICES {
        return OracleResult::Timeout;
    }
    let rs: Vec<usize> = roots.iter().filter(|&r| r < n).collect();
    if rs.len() < t || n < t + 2 {
        return OracleResult::Absent;
    }
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().filter(|&&w| w != v).map(|&w| bit(w)).sum()).collect();
    let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
    let mut s = Search {
        adj,
        roots: rs.iter().map(|&r| bit(r)).sum(),
        all,
        t,
        g,
        deadline: Instant::now() + budget,
        ticks: 0,
        timed_out: false,
        found: None,
    };
    if t == 0 {
        // any edge gives two adjacent centers
        if let Some((u, w)) = g.edges().next() {
            return OracleResult::Model(RootedK2tModel::new(g, [vec![u], vec![w]], vec![]).expect("no satellites"));
        }
        return OracleResult::Absent;
    }
    for v0 in 0..n {
        let below = bit(v0) - 1;
        let excl = below | bit(v0);
        if s.grow(bit(v0), s.adj[v0] & !excl, excl) {
            break;
        }
    }
    match (s.found, s.timed_out) {
        (Some(m), _) => OracleResult::Model(m),
        (None, true) => OracleResult::Timeout,
        (None, false) => OracleResult::Absent,
    }
}

/// Pairs of roots sharing a face, as bitmasks over the positions in `rs`.
pub(crate) fn conflict_masks(emb: &Embedding, rs: &[usize]) -> Vec<u64> {
    let fs = emb.faces();
    let at = fs.faces_at_vertices(emb);
    let k = rs.len();
    let mut conf = vec![0u64; k];
    for a in 0..k {
        for b in a + 1..k {
            if at[rs[a]].iter().any(|f| at[rs[b]].contains(f)) {
                conf[a] |= bit(b);
                conf[b] |= bit(a);
            }
        }
    }
    conf
}

fn mis(conf: &[u64], cand: u64, cur: u64, best: &mut u64, target: u32) {
    if best.count_ones() >= target {
        return;
    }
    if cand == 0 {
        if cur.count_ones() > best.count_ones() {
            *best = cur;
        }
        return;
    }
    if cur.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    // a vertex with at most one candidate neighbour can always be taken
    let mut pivot = usize::MAX;
    let mut pivot_deg = 0;
    for v in bits(cand) {
        let d = (conf[v] & cand).count_ones();
        if d <= 1 {
            return mis(conf, cand & !bit(v) & !conf[v], cur | bit(v), best, target);
        }
        if d > pivot_deg {
            pivot = v;
            pivot_deg = d;
        }
    }
    mis(conf, cand & !bit(pivot) & !conf[pivot], cur | bit(pivot), best, target);
    mis(conf, cand & !bit(pivot), cur, best, target);
}

/// Largest independent set of the conflict masks, stopping early once
/// `target` members are found.
pub(crate) fn independent_up_to(conf: &[u64], target: usize) -> Vec<usize> {
    let k = conf.len();
    let all = if k == 64 { u64::MAX } else { bit(k) - 1 };
    let mut best = 0;
    mis(conf, all, 0, &mut best, target.min(64) as u32);
    bits(best).collect()
}

/// A largest set of roots no two of which lie on a common face. Refuses
/// more than [`MAX_EXACT_ROOTS`] roots.
pub fn max_face_independent_set(emb: &Embedding, roots: &RootSet) -> Result<Vec<usize>> {
    let rs: Vec<usize> = roots.iter().collect();
    if rs.len() > MAX_EXACT_ROOTS {
        return precondition(format!(
            "{} roots exceed the exact independent-set limit of {MAX_EXACT_ROOTS}",
            rs.len()
        ));
    }
    let conf = conflict_masks(emb, &rs);
    Ok(independent_up_to(&conf, usize::MAX).into_iter().map(|i| rs[i]).collect())
}

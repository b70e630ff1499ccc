//! Canonical ordering of a 3-connected plane graph by reverse shelling.

use crate::embed::{Dart, Embedding};
use crate::error::{failed, Result};

/// One shelling step: the vertices removed together (left to right), their
/// contour neighbours and the contour vertices they covered (left to right).
#[derive(Debug, Clone)]
pub(crate) struct Step {
    pub members: Vec<usize>,
    pub left: usize,
    pub right: usize,
    pub exposed: Vec<usize>,
}

pub(crate) struct Shelling {
    /// Steps in removal order; the first one removes the top vertex.
    pub steps: Vec<Step>,
    /// Outer path from the left base vertex to the right one.
    pub outer: Vec<usize>,
}

pub(crate) fn dart_between(emb: &Embedding, u: usize, w: usize) -> Option<Dart> {
    emb.rotation(u).iter().copied().find(|&d| emb.head(d) == w)
}

struct State<'a> {
    emb: &'a Embedding,
    removed: Vec<bool>,
    removed_nbrs: Vec<usize>,
    on_contour: Vec<bool>,
    contour: Vec<usize>,
    /// For outer vertices, the neighbour on the outer path towards the top.
    up: Vec<usize>,
}

impl State<'_> {
    fn right_dart(&self, j: usize) -> Dart {
        let c = self.contour[j];
        let w = if j + 1 < self.contour.len() { self.contour[j + 1] } else { self.contour[0] };
        dart_between(self.emb, c, w).expect("contour neighbours are adjacent")
    }

    /// Contour vertices that appear between positions `p` and `q` once the
    /// vertices strictly between them are removed, or `None` when the new
    /// boundary would not be a simple path.
    fn exposed(&self, p: usize, q: usize) -> Option<Vec<usize>> {
        let emb = self.emb;
        let target = self.contour[p];
        let gone = |x: usize| self.removed[x] || self.contour[p + 1..q].contains(&x);
        let mut r = self.right_dart(q);
        let mut seq = Vec::new();
        loop {
            let mut d = emb.next(r);
            let mut guard = 0;
            while gone(emb.head(d)) {
                d = emb.next(d);
                guard += 1;
                if guard > emb.degree(emb.tail(d)) {
                    return None;
                }
            }
            let w = emb.head(d);
            if w == target {
                break;
            }
            if self.on_contour[w] || seq.contains(&w) {
                return None;
            }
            seq.push(w);
            r = d ^ 1;
        }
        seq.reverse();
        Some(seq)
    }

    fn removable(&self, z: usize) -> bool {
        if self.removed_nbrs[z] == 0 {
            return false;
        }
        self.up[z] == usize::MAX || self.removed[self.up[z]]
    }

    fn current_degree(&self, z: usize) -> usize {
        self.emb.degree(z) - self.removed_nbrs[z]
    }

    fn remove(&mut self, p: usize, q: usize, exposed: Vec<usize>) -> Step {
        let members: Vec<usize> = self.contour[p + 1..q].to_vec();
        for &z in &members {
            self.removed[z] = true;
            self.on_contour[z] = false;
            for &d in self.emb.rotation(z) {
                self.removed_nbrs[self.emb.head(d)] += 1;
            }
        }
        for &x in &exposed {
            self.on_contour[x] = true;
        }
        let left = self.contour[p];
        let right = self.contour[q];
        let tail = self.contour.split_off(q);
        self.contour.truncate(p + 1);
        self.contour.extend_from_slice(&exposed);
        self.contour.extend(tail);
        Step { members, left, right, exposed }
    }
}

/// Shells the graph from the top vertex `vn` down to the base edge `v1 v2`.
/// The dart `v1 -> v2` must start the outer face walk with orientation `+1`.
/// Among valid steps the one with the smallest vertex wins.
pub(crate) fn shell(emb: &Embedding, v1: usize, v2: usize, vn: usize) -> Result<Shelling> {
    let n = emb.n();
    let d0 = dart_between(emb, v1, v2).expect("base vertices adjacent");
    let mut cyc = Vec::new();
    let (mut d, mut s) = (d0, 1);
    loop {
        cyc.push(emb.tail(d));
        (d, s) = emb.step(d, s);
        if d == d0 && s == 1 {
            break;
        }
    }
    // cyc = v1, v2, x1, ..., xk; the contour runs v1, xk, ..., x1, v2
    let mut contour = vec![v1];
    contour.extend(cyc[2..].iter().rev());
    contour.push(v2);
    let top = contour.iter().position(|&x| x == vn).expect("top vertex on the outer face");
    let mut up = vec![usize::MAX; n];
    for j in 1..contour.len() - 1 {
        if j < top {
            up[contour[j]] = contour[j + 1];
        } else if j > top {
            up[contour[j]] = contour[j - 1];
        }
    }
    let outer = contour.clone();
    let mut on_contour = vec![false; n];
    for &c in &contour {
        on_contour[c] = true;
    }
    let mut st = State {
        emb,
        removed: vec![false; n],
        removed_nbrs: vec![0; n],
        on_contour,
        contour,
        up,
    };
    let mut steps = Vec::new();
    let Some(ex) = st.exposed(top - 1, top + 1) else {
        return failed("the top vertex cannot start a canonical ordering");
    };
    steps.push(st.remove(top - 1, top + 1, ex));
    while st.contour.len() > 2 {
        // best candidate: (smallest member, p, q, exposed)
        let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
        let len = st.contour.len();
        let mut j = 1;
        while j < len - 1 {
            // maximal run of degree-two vertices starting here
            let mut end = j;
            while end < len - 1 && st.current_degree(st.contour[end]) == 2 {
                end += 1;
            }
            let run = end - j;
            let (a, b) = if run >= 1 { (j, end - 1) } else { (j, j) };
            let members = &st.contour[a..=b];
            let min = *members.iter().min().unwrap();
            let better = best.as_ref().map_or(true, |c| min < c.0);
            if better && members.iter().all(|&x| st.removable(x)) {
                if let Some(ex) = st.exposed(a - 1, b + 1) {
                    best = Some((min, a - 1, b + 1, ex));
                }
            }
            j += run.max(1);
        }
        let Some((_, p, q, ex)) = best else {
            return failed("no valid shelling step; the graph is not 3-connected plane");
        };
        steps.push(st.remove(p, q, ex));
    }
    if st.removed.iter().filter(|&&r| r).count() != n - 2 {
        return failed("shelling ended with interior vertices left");
    }
    Ok(Shelling { steps, outer })
}

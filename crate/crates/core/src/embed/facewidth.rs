//! Shortest noncontractible cycles and face-width.

use std::collections::VecDeque;

use super::{is_contractible, radial_graph, Cycle, Embedding, HomologyBasis};
use crate::error::Result;

/// Face-width of an embedding; spheres have no noose at all.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceWidth {
    Infinite,
    Finite { width: usize, noose: Vec<NooseStep> },
}

impl FaceWidth {
    pub fn value(&self) -> Option<usize> {
        match self {
            FaceWidth::Infinite => None,
            FaceWidth::Finite { width, .. } => Some(*width),
        }
    }

    /// True when the face-width is at least `k`.
    pub fn at_least(&self, k: usize) -> bool {
        self.value().map_or(true, |w| w >= k)
    }
}

impl std::fmt::Display for FaceWidth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FaceWidth::Infinite => write!(f, "inf"),
            FaceWidth::Finite { width, .. } => write!(f, "{width}"),
        }
    }
}

/// One element of a noose: it passes alternately through vertices and faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NooseStep {
    Vertex(usize),
    Face(usize),
}

/// Which cycles a shortest-cycle search accepts.
#[derive(Debug, Clone, Default)]
pub struct ShortestCycleQuery {
    /// Accept only cycles with a nonzero Z2 homology class.
    pub nonseparating: bool,
    /// Vertices the cycle must avoid.
    pub avoid: Vec<usize>,
    /// Search sources; every vertex when empty.
    pub sources: Vec<usize>,
}

/// Finds a shortest cycle that is noncontractible (or Z2-nonseparating when
/// requested). Every such shortest cycle is a fundamental cycle of a
/// breadth-first tree grown from one of its vertices, so it suffices to try
/// every source.
pub fn shortest_cycle_matching(emb: &Embedding, query: &ShortestCycleQuery) -> Result<Option<Cycle>> {
    let n = emb.n();
    let eg = emb.euler_genus();
    if eg == 0 {
        return Ok(None);
    }
    let hom = HomologyBasis::new(emb)?;
    let orientable = emb.is_orientable();
    let separating_is_trivial = eg == 1 || (eg == 2 && orientable);
    let mut blocked = vec![false; n];
    for &v in &query.avoid {
        blocked[v] = true;
    }
    let sources: Vec<usize> =
        if query.sources.is_empty() { (0..n).collect() } else { query.sources.clone() };
    let mut best: Option<Cycle> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n]; // dart from parent into the vertex
    let mut branch = vec![usize::MAX; n];
    let mut class = vec![0u64; n];
    let mut order = Vec::with_capacity(n);
    for &r in &sources {
        if blocked[r] {
            continue;
        }
        for &v in &order {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        order.clear();
        let limit = best.as_ref().map_or(usize::MAX, |c| c.len());
        dist[r] = 0;
        branch[r] = r;
        class[r] = 0;
        order.push(r);
        let mut q = VecDeque::from([r]);
        while let Some(u) = q.pop_front() {
            if 2 * dist[u] + 1 >= limit {
                continue;
            }
            for &d in emb.rotation(u) {
                let w = emb.head(d);
                if blocked[w] || dist[w] != usize::MAX {
                    continue;
                }
                dist[w] = dist[u] + 1;
                parent[w] = d;
                branch[w] = if u == r { w } else { branch[u] };
                class[w] = class[u] ^ hom.edge(d / 2);
                order.push(w);
                q.push_back(w);
            }
        }
        // candidate closing edges, shortest first
        let mut cands: Vec<(usize, usize)> = Vec::new();
        for &u in &order {
            for &d in emb.rotation(u) {
                let w = emb.head(d);
                if dist[w] == usize::MAX || parent[w] == d || parent[u] == (d ^ 1) {
                    continue;
                }
                // visit each edge once, from its first dart (loops from dart 2k)
                if u == w && d % 2 == 1 {
                    continue;
                }
                if u != w && (dist[u], u, d) > (dist[w], w, d ^ 1) {
                    continue;
                }
                let valid = u == r || w == r || branch[u] != branch[w];
                if !valid {
                    continue;
                }
                cands.push((dist[u] + dist[w] + 1, d));
            }
        }
        cands.sort_unstable();
        for (len, d) in cands {
            if best.as_ref().map_or(false, |c| len >= c.len()) {
                break;
            }
            let (u, w) = (emb.tail(d), emb.head(d));
            let c = class[u] ^ hom.edge(d / 2) ^ class[w];
            let accept = if c != 0 {
                true
            } else if query.nonseparating || separating_is_trivial {
                false
            } else {
                let cyc = build_cycle(emb, &parent, r, d);
                !is_contractible(emb, &cyc)?
            };
            if accept {
                best = Some(build_cycle(emb, &parent, r, d));
                break;
            }
        }
    }
    Ok(best)
}

fn build_cycle(emb: &Embedding, parent: &[usize], r: usize, d: usize) -> Cycle {
    let (u, w) = (emb.tail(d), emb.head(d));
    let mut up = Vec::new();
    let mut x = u;
    while x != r {
        let p = parent[x];
        up.push(p);
        x = emb.tail(p);
    }
    up.reverse();
    let mut cyc = up;
    cyc.push(d);
    let mut x = w;
    while x != r {
        let p = parent[x];
        cyc.push(p ^ 1);
        x = emb.tail(p);
    }
    cyc
}

/// Face-width via a shortest noncontractible cycle of the radial graph,
/// searched from the original vertices only.
pub fn face_width(emb: &Embedding) -> Result<FaceWidth> {
    if emb.euler_genus() == 0 {
        return Ok(FaceWidth::Infinite);
    }
    let radial = radial_graph(emb);
    let n = emb.n();
    let query = ShortestCycleQuery { sources: (0..n).collect(), ..Default::default() };
    let cyc = shortest_cycle_matching(&radial, &query)?
        .expect("a surface of positive genus has a noncontractible radial cycle");
    let noose = cyc
        .iter()
        .map(|&d| {
            let v = radial.tail(d);
            if v < n {
                NooseStep::Vertex(v)
            } else {
                NooseStep::Face(v - n)
            }
        })
        .collect();
    Ok(FaceWidth::Finite { width: cyc.len() / 2, noose })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::k4;

    #[test]
    fn sphere_is_infinite() {
        assert_eq!(face_width(&k4()).unwrap(), FaceWidth::Infinite);
    }

    #[test]
    fn projective_loop_width_one() {
        let e = Embedding::new(vec![[0, 0]], vec![-1], vec![vec![0, 1]]).unwrap();
        let fw = face_width(&e).unwrap();
        assert_eq!(fw.value(), Some(1));
    }

    #[test]
    fn torus_loop_is_shortest() {
        let e = Embedding::new(vec![[0, 0], [0, 0]], vec![1, 1], vec![vec![0, 2, 1, 3]]).unwrap();
        let c = shortest_cycle_matching(&e, &ShortestCycleQuery::default()).unwrap().unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(crate::embed::cycle_sign(&e, &c), 1);
        assert_eq!(face_width(&e).unwrap().value(), Some(1));
    }
}

//! Rotation systems with edge signatures.
//!
//! Edge `k` joins `ends[k] = [u, v]` and owns the darts `2k` (tail `u`) and
//! `2k + 1` (tail `v`). A face-tracing state is a dart together with an
//! orientation `s = ±1` expressed in the local frame of the dart's tail.

mod derived;
mod dual;
mod facewidth;
pub mod format;
mod homology;
mod polyhedral;
mod region;
mod surgery;

use std::sync::OnceLock;

pub use derived::{delete_edges, radial_graph, stellation, Stellation};
pub use dual::{dual, dual_of_dual_matches};
pub use facewidth::{
    face_width, shortest_cycle_matching, FaceWidth, NooseStep, ShortestCycleQuery,
};
pub use homology::HomologyBasis;
pub use polyhedral::check_polyhedral;
pub use region::{classify_region, is_nested_pair, Region};
pub use surgery::{cut_along, cycle_sign, is_contractible, Cuff, CutResult, Cycle, Piece};

use crate::error::{malformed, Result};
use crate::graph::Graph;

pub type Dart = usize;

/// A set of distinguished vertices, kept sorted and free of repeats.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct RootSet {
    roots: Vec<usize>,
}

impl RootSet {
    pub fn new(mut roots: Vec<usize>) -> Self {
        roots.sort_unstable();
        roots.dedup();
        RootSet { roots }
    }

    pub fn all(n: usize) -> Self {
        RootSet { roots: (0..n).collect() }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.roots
    }

    pub fn contains(&self, v: usize) -> bool {
        self.roots.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.roots.iter().copied()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &r in &self.roots {
            m[r] = true;
        }
        m
    }
}

/// Encodes a tracing state as `2d + (s < 0)`.
#[inline]
pub fn state(d: Dart, s: i8) -> usize {
    2 * d + usize::from(s < 0)
}

#[inline]
pub fn state_parts(x: usize) -> (Dart, i8) {
    (x / 2, if x % 2 == 0 { 1 } else { -1 })
}

/// An embedded multigraph given by a rotation system with signatures.
#[derive(Debug, Clone)]
pub struct Embedding {
    ends: Vec<[usize; 2]>,
    sig: Vec<i8>,
    rot: Vec<Vec<Dart>>,
    pos: Vec<usize>,
    roots: Option<RootSet>,
    faces: OnceLock<Faces>,
}

impl Embedding {
    /// Validates and builds an embedding. Every dart must appear exactly once,
    /// in the rotation of its own tail; isolated vertices are rejected.
    pub fn new(
        ends: Vec<[usize; 2]>,
        sig: Vec<i8>,
        rot: Vec<Vec<Dart>>,
    ) -> Result<Self> {
        let n = rot.len();
        let m = ends.len();
        if sig.len() != m {
            return malformed("signature count differs from edge count");
        }
        for (k, &[u, v]) in ends.iter().enumerate() {
            if u >= n || v >= n {
                return malformed(format!("edge {k} has an endpoint out of range"));
            }
            if sig[k] != 1 && sig[k] != -1 {
                return malformed(format!("edge {k} has signature {}", sig[k]));
            }
        }
        let mut pos = vec![usize::MAX; 2 * m];
        for (v, list) in rot.iter().enumerate() {
            if list.is_empty() {
                return malformed(format!("vertex {v} is isolated"));
            }
            for (i, &d) in list.iter().enumerate() {
                if d >= 2 * m {
                    return malformed(format!("dart {d} at vertex {v} does not exist"));
                }
                if pos[d] != usize::MAX {
                    return malformed(format!("dart {d} appears twice"));
                }
                if ends[d / 2][d % 2] != v {
                    return malformed(format!("dart {d} listed at vertex {v}, which is not its tail"));
                }
                pos[d] = i;
            }
        }
        if let Some(d) = pos.iter().position(|&p| p == usize::MAX) {
            return malformed(format!("dart {d} is missing from every rotation"));
        }
        Ok(Embedding { ends, sig, rot, pos, roots: None, faces: OnceLock::new() })
    }

    /// Orientable embedding of a simple graph from cyclic neighbour lists.
    pub fn from_neighbor_rotation(nbrs: &[Vec<usize>]) -> Result<Self> {
        let n = nbrs.len();
        let mut id = std::collections::HashMap::new();
        let mut ends = Vec::new();
        for (u, list) in nbrs.iter().enumerate() {
            for &v in list {
                if v >= n || v == u {
                    return malformed(format!("bad neighbour {v} of {u}"));
                }
                let key = (u.min(v), u.max(v));
                if !id.contains_key(&key) {
                    id.insert(key, ends.len());
                    ends.push([key.0, key.1]);
                }
            }
        }
        let mut rot = vec![Vec::new(); n];
        for (u, list) in nbrs.iter().enumerate() {
            for &v in list {
                let k = id[&(u.min(v), u.max(v))];
                rot[u].push(2 * k + usize::from(ends[k][0] != u));
            }
        }
        let m = ends.len();
        Embedding::new(ends, vec![1; m], rot)
    }

    pub fn with_roots(mut self, roots: RootSet) -> Self {
        self.roots = Some(roots);
        self
    }

    pub fn set_roots(&mut self, roots: Option<RootSet>) {
        self.roots = roots;
    }

    pub fn roots(&self) -> Option<&RootSet> {
        self.roots.as_ref()
    }

    /// Roots, or the empty set when none are attached.
    pub fn root_set(&self) -> RootSet {
        self.roots.clone().unwrap_or_default()
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, e: usize) -> [usize; 2] {
        self.ends[e]
    }

    pub fn sig(&self, e: usize) -> i8 {
        self.sig[e]
    }

    pub fn signatures(&self) -> &[i8] {
        &self.sig
    }

    #[inline]
    pub fn tail(&self, d: Dart) -> usize {
        self.ends[d / 2][d % 2]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> usize {
        self.ends[d / 2][1 - d % 2]
    }

    pub fn rotation(&self, v: usize) -> &[Dart] {
        &self.rot[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rot[v].len()
    }

    /// Position of dart `d` inside the rotation at its tail.
    pub fn position(&self, d: Dart) -> usize {
        self.pos[d]
    }

    #[inline]
    pub fn next(&self, d: Dart) -> Dart {
        let r = &self.rot[self.tail(d)];
        r[(self.pos[d] + 1) % r.len()]
    }

    #[inline]
    pub fn prev(&self, d: Dart) -> Dart {
        let r = &self.rot[self.tail(d)];
        r[(self.pos[d] + r.len() - 1) % r.len()]
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.ends[e][0] == self.ends[e][1]
    }

    /// One face-tracing step from state `(d, s)`.
    #[inline]
    pub fn step(&self, d: Dart, s: i8) -> (Dart, i8) {
        let s2 = s * self.sig[d / 2];
        let r = d ^ 1;
        if s2 > 0 {
            (self.next(r), s2)
        } else {
            (self.prev(r), s2)
        }
    }

    /// The same boundary walked in the opposite direction.
    #[inline]
    pub fn reverse_state(&self, d: Dart, s: i8) -> (Dart, i8) {
        (d ^ 1, -s * self.sig[d / 2])
    }

    /// The underlying simple graph (loops and parallel edges removed).
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n(), self.ends.iter().map(|&[u, v]| (u, v)))
    }

    pub fn faces(&self) -> &Faces {
        self.faces.get_or_init(|| Faces::trace(self))
    }

    pub fn face_count(&self) -> usize {
        self.faces().count()
    }

    /// Connected components as vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let g = Graph::from_edges(self.n(), self.ends.iter().map(|&[u, v]| (u, v)));
        g.components_without(&vec![false; self.n()])
    }

    /// Euler genus summed over connected components: `2c + |E| - |V| - |F|`.
    pub fn euler_genus(&self) -> i64 {
        let c = self.components().len() as i64;
        2 * c + self.m() as i64 - self.n() as i64 - self.face_count() as i64
    }

    /// Switch at `v`: reverse its rotation and negate its non-loop edges.
    /// The set of faces is unchanged.
    pub fn switch_vertex(&mut self, v: usize) {
        self.rot[v].reverse();
        let len = self.rot[v].len();
        for i in 0..len {
            let d = self.rot[v][i];
            self.pos[d] = i;
            if !self.is_loop(d / 2) {
                // a non-loop edge has exactly one dart at v
                self.sig[d / 2] = -self.sig[d / 2];
            }
        }
        self.faces = OnceLock::new();
    }

    /// Switches vertices along breadth-first spanning trees so that every tree
    /// edge gets signature +1. Returns the normalized embedding and the set of
    /// switched vertices.
    pub fn normalized(&self) -> (Embedding, Vec<bool>) {
        let n = self.n();
        let mut flip = vec![false; n];
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &d in &self.rot[u] {
                    let w = self.head(d);
                    if !seen[w] {
                        seen[w] = true;
                        // effective signature sig * f(u) * f(w) must be +1
                        let fu = if flip[u] { -1 } else { 1 };
                        flip[w] = self.sig[d / 2] * fu < 0;
                        queue.push_back(w);
                    }
                }
            }
        }
        let mut out = self.clone();
        for v in 0..n {
            if flip[v] {
                out.switch_vertex(v);
            }
        }
        (out, flip)
    }

    /// True when some sequence of switches makes every signature +1.
    pub fn is_orientable(&self) -> bool {
        self.normalized().0.sig.iter().all(|&s| s == 1)
    }

    /// The mirror image: every rotation reversed, signatures kept.
    pub fn mirrored(&self) -> Embedding {
        let rot = self.rot.iter().map(|r| r.iter().rev().copied().collect()).collect();
        let mut e = Embedding::new(self.ends.clone(), self.sig.clone(), rot)
            .expect("mirror of a valid embedding");
        e.roots = self.roots.clone();
        e
    }

    /// Equality of edge lists, signatures and rotations up to cyclic shift.
    pub fn same_structure(&self, other: &Embedding) -> bool {
        if self.ends != other.ends || self.sig != other.sig || self.n() != other.n() {
            return false;
        }
        self.rot.iter().zip(&other.rot).all(|(a, b)| cyclic_eq(a, b))
    }

    /// Every dart together with its tail, in rotation order.
    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        0..2 * self.m()
    }
}

pub(crate) fn cyclic_eq(a: &[Dart], b: &[Dart]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    match b.iter().position(|&x| x == a[0]) {
        None => false,
        Some(off) => (0..a.len()).all(|i| a[i] == b[(off + i) % b.len()]),
    }
}

/// Face orbits of an embedding.
///
/// Each face is stored as the orbit that contains its smallest state; the
/// reverse orbit describes the same face. Faces are numbered by smallest state.
#[derive(Debug, Clone)]
pub struct Faces {
    walks: Vec<Vec<(Dart, i8)>>,
    state_face: Vec<usize>,
    state_index: Vec<usize>,
}

impl Faces {
    fn trace(emb: &Embedding) -> Faces {
        let states = 4 * emb.m();
        let mut state_face = vec![usize::MAX; states];
        let mut state_index = vec![usize::MAX; states];
        let mut walks = Vec::new();
        for x in 0..states {
            if state_face[x] != usize::MAX {
                continue;
            }
            let f = walks.len();
            let (d0, s0) = state_parts(x);
            let mut walk = Vec::new();
            let (mut d, mut s) = (d0, s0);
            loop {
                let y = state(d, s);
                state_face[y] = f;
                state_index[y] = walk.len();
                walk.push((d, s));
                let (nd, ns) = emb.step(d, s);
                d = nd;
                s = ns;
                if d == d0 && s == s0 {
                    break;
                }
            }
            for &(d, s) in &walk {
                let (rd, rs) = emb.reverse_state(d, s);
                let y = state(rd, rs);
                if state_face[y] == usize::MAX {
                    state_face[y] = f;
                }
            }
            walks.push(walk);
        }
        Faces { walks, state_face, state_index }
    }

    pub fn count(&self) -> usize {
        self.walks.len()
    }

    /// The canonical boundary walk of face `f`.
    pub fn walk(&self, f: usize) -> &[(Dart, i8)] {
        &self.walks[f]
    }

    pub fn face_of(&self, d: Dart, s: i8) -> usize {
        self.state_face[state(d, s)]
    }

    /// Index of state `(d, s)` in the canonical walk of its face, if the state
    /// lies on that walk rather than on its reverse.
    pub fn index_in_walk(&self, d: Dart, s: i8) -> Option<usize> {
        let i = self.state_index[state(d, s)];
        (i != usize::MAX).then_some(i)
    }

    /// Face on side A of edge `e`: the side of states `(2e, +1)` and `(2e+1, -sig)`.
    pub fn side_a(&self, e: usize) -> usize {
        self.face_of(2 * e, 1)
    }

    /// Face on side B of edge `e`.
    pub fn side_b(&self, e: usize) -> usize {
        self.face_of(2 * e, -1)
    }

    /// Face of the corner that precedes dart `d` in the rotation at its tail
    /// (the gap between `prev(d)` and `d`).
    pub fn corner_face(&self, d: Dart) -> usize {
        self.face_of(d, 1)
    }

    /// Vertices on the boundary of face `f`, sorted and without repeats.
    pub fn vertices(&self, emb: &Embedding, f: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.walks[f].iter().map(|&(d, _)| emb.tail(d)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Edges on the boundary of face `f` in walk order (repeats kept).
    pub fn edges(&self, f: usize) -> Vec<usize> {
        self.walks[f].iter().map(|&(d, _)| d / 2).collect()
    }

    /// For each vertex, the sorted list of incident faces.
    pub fn faces_at_vertices(&self, emb: &Embedding) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); emb.n()];
        for v in 0..emb.n() {
            for &d in emb.rotation(v) {
                out[v].push(self.corner_face(d));
            }
            out[v].sort_unstable();
            out[v].dedup();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k4() -> Embedding {
        // planar K4: outer triangle 0,1,2 and centre 3
        Embedding::from_neighbor_rotation(&[
            vec![1, 3, 2],
            vec![2, 3, 0],
            vec![0, 3, 1],
            vec![0, 1, 2],
        ])
        .unwrap()
    }

    #[test]
    fn k4_has_four_faces() {
        let e = k4();
        assert_eq!(e.face_count(), 4);
        assert_eq!(e.euler_genus(), 0);
        assert!(e.is_orientable());
    }

    #[test]
    fn single_edge_has_one_face() {
        let e = Embedding::new(vec![[0, 1]], vec![1], vec![vec![0], vec![1]]).unwrap();
        assert_eq!(e.face_count(), 1);
        assert_eq!(e.euler_genus(), 0);
    }

    #[test]
    fn projective_loop() {
        // one vertex, one loop with signature -1: projective plane
        let e = Embedding::new(vec![[0, 0]], vec![-1], vec![vec![0, 1]]).unwrap();
        assert_eq!(e.face_count(), 1);
        assert_eq!(e.euler_genus(), 1);
        assert!(!e.is_orientable());
    }

    #[test]
    fn rejects_missing_and_duplicate_darts() {
        assert!(Embedding::new(vec![[0, 1]], vec![1], vec![vec![0], vec![]]).is_err());
        assert!(Embedding::new(vec![[0, 1]], vec![1], vec![vec![0, 0], vec![1]]).is_err());
        assert!(Embedding::new(vec![[0, 1]], vec![1], vec![vec![1], vec![0]]).is_err());
    }

    #[test]
    fn switching_preserves_faces() {
        let mut e = k4();
        let before = e.face_count();
        e.switch_vertex(3);
        assert_eq!(e.face_count(), before);
        assert!(e.is_orientable());
        let (n, flips) = e.normalized();
        assert!(n.signatures().iter().all(|&s| s == 1));
        assert!(flips.iter().any(|&f| f));
    }

    #[test]
    fn face_sides_cover_all_states() {
        let e = k4();
        let f = e.faces();
        for k in 0..e.m() {
            assert_ne!(f.side_a(k), f.side_b(k));
            assert_eq!(f.side_a(k), f.face_of(2 * k + 1, -e.sig(k)));
        }
    }
}

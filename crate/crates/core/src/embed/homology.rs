use std::collections::VecDeque;

use super::Embedding;
use crate::error::{failed, Result};

/// A Z2 cohomology basis from a tree-cotree decomposition.
///
/// Each edge carries a bit vector; the vector of a closed walk is the XOR of
/// its edges, and it vanishes exactly on walks that bound a set of faces.
#[derive(Debug, Clone)]
pub struct HomologyBasis {
    vectors: Vec<u64>,
    rank: usize,
    tree: Vec<bool>,
}

impl HomologyBasis {
    pub fn new(emb: &Embedding) -> Result<Self> {
        let n = emb.n();
        let m = emb.m();
        let faces = emb.faces();
        // spanning forest
        let mut tree = vec![false; m];
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(u) = q.pop_front() {
                for &d in emb.rotation(u) {
                    let w = emb.head(d);
                    if !seen[w] {
                        seen[w] = true;
                        tree[d / 2] = true;
                        q.push_back(w);
                    }
                }
            }
        }
        // dual spanning forest over non-tree edges
        let fc = faces.count();
        let mut cotree = vec![false; m];
        let mut parent_edge = vec![usize::MAX; fc];
        let mut order = Vec::with_capacity(fc);
        let mut fseen = vec![false; fc];
        for s in 0..fc {
            if fseen[s] {
                continue;
            }
            fseen[s] = true;
            order.push(s);
            let mut i = order.len() - 1;
            while i < order.len() {
                let f = order[i];
                i += 1;
                for &(d, _) in faces.walk(f) {
                    let e = d / 2;
                    if tree[e] {
                        continue;
                    }
                    let (a, b) = (faces.side_a(e), faces.side_b(e));
                    let g = if a == f { b } else { a };
                    if !fseen[g] {
                        fseen[g] = true;
                        cotree[e] = true;
                        parent_edge[g] = e;
                        order.push(g);
                    }
                }
            }
        }
        let mut vectors = vec![0u64; m];
        let mut rank = 0;
        for e in 0..m {
            if !tree[e] && !cotree[e] {
                if rank == 64 {
                    return failed("Euler genus above 64 is not supported by the homology basis");
                }
                vectors[e] = 1u64 << rank;
                rank += 1;
            }
        }
        for &f in order.iter().rev() {
            let p = parent_edge[f];
            if p == usize::MAX {
                continue;
            }
            let mut acc = 0u64;
            let mut skipped = false;
            for &(d, _) in faces.walk(f) {
                let e = d / 2;
                if e == p && !skipped {
                    skipped = true;
                    continue;
                }
                acc ^= vectors[e];
            }
            vectors[p] = acc;
        }
        Ok(HomologyBasis { vectors, rank, tree })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edge(&self, e: usize) -> u64 {
        self.vectors[e]
    }

    pub fn is_tree_edge(&self, e: usize) -> bool {
        self.tree[e]
    }

    /// Class of a closed walk given by its edges.
    pub fn class_of(&self, edges: impl IntoIterator<Item = usize>) -> u64 {
        edges.into_iter().fold(0, |acc, e| acc ^ self.vectors[e])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::k4;

    #[test]
    fn sphere_has_rank_zero() {
        let h = HomologyBasis::new(&k4()).unwrap();
        assert_eq!(h.rank(), 0);
        for e in 0..6 {
            assert_eq!(h.edge(e), 0);
        }
    }

    #[test]
    fn projective_loop_is_nontrivial() {
        let e = Embedding::new(vec![[0, 0]], vec![-1], vec![vec![0, 1]]).unwrap();
        let h = HomologyBasis::new(&e).unwrap();
        assert_eq!(h.rank(), 1);
        assert_ne!(h.class_of([0]), 0);
    }

    #[test]
    fn face_boundaries_vanish() {
        let e = Embedding::new(vec![[0, 0], [0, 0]], vec![1, 1], vec![vec![0, 2, 1, 3]]).unwrap();
        // one vertex with two interleaved loops: torus
        assert_eq!(e.euler_genus(), 2);
        let h = HomologyBasis::new(&e).unwrap();
        assert_eq!(h.rank(), 2);
        let f = e.faces();
        for i in 0..f.count() {
            assert_eq!(h.class_of(f.edges(i)), 0);
        }
        assert_ne!(h.class_of([0]), 0);
        assert_ne!(h.class_of([1]), 0);
        assert_ne!(h.class_of([0]), h.class_of([1]));
    }
}

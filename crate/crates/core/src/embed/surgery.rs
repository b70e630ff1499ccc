//! Cutting an embedded graph along disjoint cycles and gluing it back.

use super::{Dart, Embedding, RootSet};
use crate::error::{malformed, Result};

/// A closed walk given by consecutive darts; vertices must be distinct.
pub type Cycle = Vec<Dart>;

/// A boundary component created by cutting.
#[derive(Debug, Clone)]
pub struct Cuff {
    /// Index of the input cycle this cuff comes from.
    pub cycle: usize,
    /// Darts of the cuff cycle in the cut embedding.
    pub darts: Vec<Dart>,
    /// The face of the cut embedding that fills the hole.
    pub cap_face: usize,
    pub one_sided: bool,
}

/// Output of [`cut_along`].
#[derive(Debug, Clone)]
pub struct CutResult {
    pub embedding: Embedding,
    /// Original vertex of every vertex of the cut embedding.
    pub vertex_origin: Vec<usize>,
    /// Original edge of every edge of the cut embedding.
    pub edge_origin: Vec<usize>,
    pub cuffs: Vec<Cuff>,
    /// Split vertices as (original, first copy, second copy).
    pub splits: Vec<(usize, usize, usize)>,
}

impl CutResult {
    pub fn dart_origin(&self, d: Dart) -> Dart {
        2 * self.edge_origin[d / 2] + d % 2
    }

    /// Identifies the two copies of every split vertex again.
    pub fn reglue(&self) -> Embedding {
        let cut = &self.embedding;
        let m_old = self.edge_origin.iter().copied().max().map_or(0, |x| x + 1);
        let n_old = self.vertex_origin.iter().copied().max().map_or(0, |x| x + 1);
        let mut ends = vec![[usize::MAX; 2]; m_old];
        let mut sig = vec![0i8; m_old];
        for k in 0..cut.m() {
            let o = self.edge_origin[k];
            if ends[o][0] == usize::MAX {
                let [u, v] = cut.ends(k);
                ends[o] = [self.vertex_origin[u], self.vertex_origin[v]];
                sig[o] = cut.sig(k);
            }
        }
        let mut second = vec![usize::MAX; n_old];
        let mut first = vec![usize::MAX; n_old];
        for &(o, a, b) in &self.splits {
            first[o] = a;
            second[o] = b;
        }
        let mut rot = vec![Vec::new(); n_old];
        for v in 0..cut.n() {
            let o = self.vertex_origin[v];
            if second[o] == v {
                continue;
            }
            let mut r: Vec<Dart> = cut.rotation(v).iter().map(|&d| self.dart_origin(d)).collect();
            if first[o] == v {
                let other: Vec<Dart> =
                    cut.rotation(second[o]).iter().map(|&d| self.dart_origin(d)).collect();
                r.extend_from_slice(&other[1..other.len() - 1]);
            }
            rot[o] = r;
        }
        Embedding::new(ends, sig, rot).expect("regluing restores a valid embedding")
    }

    /// Connected components of the cut embedding with their Euler genus and
    /// the cuffs they contain.
    pub fn pieces(&self) -> Vec<Piece> {
        let emb = &self.embedding;
        let comps = emb.components();
        let mut comp_of = vec![0; emb.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let genera = component_genera(emb, &comp_of, comps.len());
        let mut pieces: Vec<Piece> = comps
            .into_iter()
            .zip(genera)
            .map(|(vertices, euler_genus)| Piece { vertices, euler_genus, cuffs: Vec::new() })
            .collect();
        for (i, cuff) in self.cuffs.iter().enumerate() {
            let v = emb.tail(cuff.darts[0]);
            pieces[comp_of[v]].cuffs.push(i);
        }
        pieces
    }
}

/// A connected component of a cut embedding.
#[derive(Debug, Clone)]
pub struct Piece {
    pub vertices: Vec<usize>,
    pub euler_genus: i64,
    pub cuffs: Vec<usize>,
}

/// Euler genus of each component, given a component labelling of the vertices.
pub(crate) fn component_genera(emb: &Embedding, comp_of: &[usize], count: usize) -> Vec<i64> {
    let mut chi = vec![0i64; count];
    for v in 0..emb.n() {
        chi[comp_of[v]] += 1;
    }
    for e in 0..emb.m() {
        chi[comp_of[emb.ends(e)[0]]] -= 1;
    }
    let faces = emb.faces();
    for f in 0..faces.count() {
        let d = faces.walk(f)[0].0;
        chi[comp_of[emb.tail(d)]] += 1;
    }
    chi.into_iter().map(|c| 2 - c).collect()
}

/// Checks that `cycle` is a closed walk through distinct vertices.
pub(crate) fn validate_cycle(emb: &Embedding, cycle: &[Dart]) -> Result<()> {
    if cycle.is_empty() {
        return malformed("empty cycle");
    }
    let mut seen_v = std::collections::HashSet::new();
    let mut seen_e = std::collections::HashSet::new();
    for (i, &d) in cycle.iter().enumerate() {
        if d >= 2 * emb.m() {
            return malformed(format!("dart {d} does not exist"));
        }
        let next = cycle[(i + 1) % cycle.len()];
        if emb.head(d) != emb.tail(next) {
            return malformed("cycle darts are not consecutive");
        }
        if !seen_v.insert(emb.tail(d)) {
            return malformed("cycle repeats a vertex");
        }
        if !seen_e.insert(d / 2) {
            return malformed("cycle repeats an edge");
        }
    }
    Ok(())
}

/// Product of the signatures along a cycle: +1 for two-sided cycles.
pub fn cycle_sign(emb: &Embedding, cycle: &[Dart]) -> i8 {
    cycle.iter().fold(1i8, |s, &d| s * emb.sig(d / 2))
}

/// Cuts along pairwise vertex-disjoint cycles. A two-sided cycle leaves two
/// cuffs, a one-sided cycle leaves one cuff of twice its length. Each cuff is
/// capped by a new face, so the result is again a closed-surface embedding.
///
/// Surviving edges and the first copy of each split vertex keep their ids;
/// second copies and duplicated edges are appended.
pub fn cut_along(emb: &Embedding, cycles: &[Cycle]) -> Result<CutResult> {
    let mut used = vec![false; emb.n()];
    for c in cycles {
        validate_cycle(emb, c)?;
        for &d in c {
            let v = emb.tail(d);
            if used[v] {
                return malformed("cycles are not vertex-disjoint");
            }
            used[v] = true;
        }
    }
    let mut ends: Vec<[usize; 2]> = (0..emb.m()).map(|e| emb.ends(e)).collect();
    let mut sig: Vec<i8> = emb.signatures().to_vec();
    let mut rot: Vec<Vec<Dart>> = (0..emb.n()).map(|v| emb.rotation(v).to_vec()).collect();
    let mut vertex_origin: Vec<usize> = (0..emb.n()).collect();
    let mut edge_origin: Vec<usize> = (0..emb.m()).collect();
    let mut splits = Vec::new();
    // (cycle index, darts, one-sided) before faces are known
    let mut pending: Vec<(usize, Vec<Dart>, bool)> = Vec::new();

    for (ci, cycle) in cycles.iter().enumerate() {
        let l = cycle.len();
        let mut s = vec![1i8; l + 1];
        for i in 0..l {
            s[i + 1] = s[i] * emb.sig(cycle[i] / 2);
        }
        let one_sided = s[l] < 0;
        let xs: Vec<usize> = cycle.iter().map(|&d| emb.tail(d)).collect();
        let m_now = ends.len();
        let second: Vec<usize> = (0..l).map(|i| rot.len() + i).collect();
        // duplicate edges e_i'' get ids m_now + i
        let dup = |i: usize| m_now + i;
        for i in 0..l {
            let d = cycle[i];
            let e = d / 2;
            edge_origin.push(edge_origin[e]);
            sig.push(sig[e]);
            let wrap = i + 1 == l && one_sided;
            let (next1, next2) = if i + 1 == l {
                if one_sided {
                    (second[0], xs[0])
                } else {
                    (xs[0], second[0])
                }
            } else {
                (xs[i + 1], second[i + 1])
            };
            let _ = wrap;
            if d % 2 == 0 {
                ends[e] = [xs[i], next1];
                ends.push([second[i], next2]);
            } else {
                ends[e] = [next1, xs[i]];
                ends.push([next2, second[i]]);
            }
        }
        for _ in 0..l {
            rot.push(Vec::new());
        }
        for i in 0..l {
            let x = xs[i];
            let b = cycle[i];
            let a = cycle[(i + l - 1) % l] ^ 1;
            let r = emb.rotation(x);
            let deg = r.len();
            let pa = emb.position(a);
            let pb = emb.position(b);
            let arc = |from: usize, to: usize| -> Vec<Dart> {
                let mut out = Vec::new();
                let mut p = from;
                loop {
                    out.push(r[p]);
                    if p == to {
                        break;
                    }
                    p = (p + 1) % deg;
                }
                out
            };
            let (seg1, seg2) = if s[i] > 0 {
                (arc(pb, pa), arc(pa, pb))
            } else {
                (arc(pa, pb), arc(pb, pa))
            };
            // dart ids of the copies at each vertex copy
            let b1 = b;
            let b2 = 2 * dup(i) + b % 2;
            let (a1, a2) = if i > 0 {
                (a, 2 * dup(i - 1) + a % 2)
            } else if one_sided {
                (2 * dup(l - 1) + a % 2, a)
            } else {
                (a, 2 * dup(l - 1) + a % 2)
            };
            let map1 = |d: Dart| if d == b { b1 } else if d == a { a1 } else { d };
            let map2 = |d: Dart| if d == b { b2 } else if d == a { a2 } else { d };
            let r1: Vec<Dart> = seg1.iter().map(|&d| map1(d)).collect();
            let r2: Vec<Dart> = seg2.iter().map(|&d| map2(d)).collect();
            for &d in &r2 {
                if d != a2 && d != b2 {
                    ends[d / 2][d % 2] = second[i];
                }
            }
            rot[x] = r1;
            rot[second[i]] = r2;
            vertex_origin.push(vertex_origin[x]);
            splits.push((vertex_origin[x], x, second[i]));
        }
        let firsts: Vec<Dart> = cycle.clone();
        let seconds: Vec<Dart> = (0..l).map(|i| 2 * dup(i) + cycle[i] % 2).collect();
        if one_sided {
            let mut all = firsts;
            all.extend(seconds);
            pending.push((ci, all, true));
        } else {
            pending.push((ci, firsts, false));
            pending.push((ci, seconds, false));
        }
    }
    let mut out = Embedding::new(ends, sig, rot)?;
    if let Some(r) = emb.roots() {
        let mask = r.mask(emb.n());
        let roots = (0..out.n()).filter(|&v| mask[vertex_origin[v]]).collect();
        out.set_roots(Some(RootSet::new(roots)));
    }
    let faces = out.faces();
    let cuffs = pending
        .into_iter()
        .map(|(cycle, darts, one_sided)| {
            let v = out.tail(darts[0]);
            let cap_face = faces.corner_face(out.rotation(v)[0]);
            Cuff { cycle, darts, cap_face, one_sided }
        })
        .collect();
    Ok(CutResult { embedding: out, vertex_origin, edge_origin, cuffs, splits })
}

/// A cycle is contractible when it is two-sided and cutting along it leaves a
/// component that is a disk: Euler genus zero with a single cuff.
pub fn is_contractible(emb: &Embedding, cycle: &[Dart]) -> Result<bool> {
    validate_cycle(emb, cycle)?;
    if cycle_sign(emb, cycle) < 0 {
        return Ok(false);
    }
    let cut = cut_along(emb, &[cycle.to_vec()])?;
    Ok(cut.pieces().iter().any(|p| p.euler_genus == 0 && p.cuffs.len() == 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::k4;

    fn triangle_darts(e: &Embedding, vs: &[usize]) -> Vec<Dart> {
        (0..vs.len())
            .map(|i| {
                let (u, v) = (vs[i], vs[(i + 1) % vs.len()]);
                *e.rotation(u).iter().find(|&&d| e.head(d) == v).unwrap()
            })
            .collect()
    }

    #[test]
    fn facial_triangle_of_k4_is_contractible() {
        let e = k4();
        let c = triangle_darts(&e, &[0, 1, 3]);
        assert!(is_contractible(&e, &c).unwrap());
        let cut = cut_along(&e, &[c]).unwrap();
        let pieces = cut.pieces();
        assert_eq!(pieces.len(), 2);
        assert!(pieces.iter().all(|p| p.euler_genus == 0 && p.cuffs.len() == 1));
        assert!(cut.reglue().same_structure(&e));
    }

    #[test]
    fn cap_faces_are_cuff_faces() {
        let e = k4();
        let c = triangle_darts(&e, &[0, 1, 2]);
        let cut = cut_along(&e, &[c]).unwrap();
        let f = cut.embedding.faces();
        for cuff in &cut.cuffs {
            let mut cap = f.edges(cuff.cap_face);
            let mut cuff_edges: Vec<usize> = cuff.darts.iter().map(|d| d / 2).collect();
            cap.sort_unstable();
            cuff_edges.sort_unstable();
            assert_eq!(cap, cuff_edges);
        }
        assert_eq!(f.count(), e.face_count() + 2);
    }

    #[test]
    fn one_sided_loop() {
        let e = Embedding::new(vec![[0, 0]], vec![-1], vec![vec![0, 1]]).unwrap();
        assert!(!is_contractible(&e, &[0]).unwrap());
        let cut = cut_along(&e, &[vec![0]]).unwrap();
        assert_eq!(cut.cuffs.len(), 1);
        assert_eq!(cut.cuffs[0].darts.len(), 2);
        let p = cut.pieces();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].euler_genus, 0);
        assert!(cut.reglue().same_structure(&e));
    }

    #[test]
    fn torus_loop_cuts_to_cylinder() {
        let e = Embedding::new(vec![[0, 0], [0, 0]], vec![1, 1], vec![vec![0, 2, 1, 3]]).unwrap();
        assert!(!is_contractible(&e, &[0]).unwrap());
        let cut = cut_along(&e, &[vec![0]]).unwrap();
        let p = cut.pieces();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].euler_genus, 0);
        assert_eq!(p[0].cuffs.len(), 2);
        assert!(cut.reglue().same_structure(&e));
    }
}

//! Surfaces with boundary made of faces of an embedded graph.

use super::{dual, Dart, Embedding};
use crate::error::{malformed, Result};

/// A connected union of closed faces whose boundary is a disjoint union of
/// cycles of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    /// Sorted face ids.
    pub faces: Vec<usize>,
    /// Boundary cycles as dart sequences.
    pub boundary: Vec<Vec<Dart>>,
    pub orientable: bool,
    /// Euler genus of the surface obtained by capping every cuff with a disk.
    pub euler_genus: i64,
    pub cuff_count: usize,
}

struct Dsu {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), parity: vec![0; n] }
    }

    fn find(&mut self, x: usize) -> (usize, u8) {
        let mut path = Vec::new();
        let mut r = x;
        while self.parent[r] != r {
            path.push(r);
            r = self.parent[r];
        }
        // recompute parities toward the root, deepest first
        let mut acc = 0;
        for &y in path.iter().rev() {
            acc ^= self.parity[y];
            self.parity[y] = acc;
            self.parent[y] = r;
        }
        (r, if path.is_empty() { 0 } else { self.parity[x] })
    }

    /// Joins with the constraint parity(a) ^ parity(b) == p; false on conflict.
    fn union(&mut self, a: usize, b: usize, p: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == p;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ p;
        true
    }
}

impl Region {
    /// Builds and classifies the region formed by the given faces.
    pub fn from_faces(emb: &Embedding, faces: &[usize]) -> Result<Region> {
        let fs = emb.faces();
        let mut inside = vec![false; fs.count()];
        for &f in faces {
            if f >= fs.count() {
                return malformed(format!("face {f} does not exist"));
            }
            inside[f] = true;
        }
        let mut face_list: Vec<usize> = faces.to_vec();
        face_list.sort_unstable();
        face_list.dedup();
        if face_list.is_empty() {
            return malformed("empty region");
        }
        // boundary darts per vertex from corner membership
        let mut bdarts: Vec<Vec<Dart>> = vec![Vec::new(); emb.n()];
        let mut vcount = 0i64;
        for v in 0..emb.n() {
            let r = emb.rotation(v);
            let ins: Vec<bool> = r.iter().map(|&d| inside[fs.corner_face(d)]).collect();
            if !ins.iter().any(|&b| b) {
                continue;
            }
            vcount += 1;
            for j in 0..r.len() {
                // dart r[j] separates the corner before it from the one after
                if ins[j] != ins[(j + 1) % r.len()] {
                    bdarts[v].push(r[j]);
                }
            }
            if bdarts[v].len() > 2 {
                return malformed(format!("region is pinched at vertex {v}"));
            }
        }
        let mut ecount = 0i64;
        let mut is_boundary = vec![false; emb.m()];
        for e in 0..emb.m() {
            let (a, b) = (inside[fs.side_a(e)], inside[fs.side_b(e)]);
            if a || b {
                ecount += 1;
            }
            is_boundary[e] = a != b;
        }
        for v in 0..emb.n() {
            for &d in &bdarts[v] {
                if !is_boundary[d / 2] {
                    return malformed(format!("region is pinched at vertex {v}"));
                }
            }
        }
        // trace boundary cycles
        let mut used = vec![false; 2 * emb.m()];
        let mut boundary = Vec::new();
        for v in 0..emb.n() {
            for &d0 in &bdarts[v] {
                if used[d0] {
                    continue;
                }
                let mut cyc = Vec::new();
                let mut d = d0;
                loop {
                    used[d] = true;
                    used[d ^ 1] = true;
                    cyc.push(d);
                    let w = emb.head(d);
                    let next = bdarts[w].iter().copied().find(|&x| x != (d ^ 1));
                    match next {
                        Some(x) if x == d0 => break,
                        Some(x) if !used[x] => d = x,
                        _ => return malformed("boundary is not a union of cycles"),
                    }
                }
                boundary.push(cyc);
            }
        }
        // connectivity and orientability across interior edges
        let du = dual(emb);
        let mut dsu = Dsu::new(fs.count());
        let mut orientable = true;
        for e in 0..emb.m() {
            let [a, b] = du.ends(e);
            if inside[a] && inside[b] {
                let p = u8::from(du.sig(e) < 0);
                if !dsu.union(a, b, p) {
                    orientable = false;
                }
            }
        }
        let root = dsu.find(face_list[0]).0;
        if face_list.iter().any(|&f| dsu.find(f).0 != root) {
            return malformed("region is not connected");
        }
        let chi = vcount - ecount + face_list.len() as i64;
        let cuff_count = boundary.len();
        let euler_genus = 2 - chi - cuff_count as i64;
        Ok(Region { faces: face_list, boundary, orientable, euler_genus, cuff_count })
    }

    /// The whole surface of a connected embedding.
    pub fn whole(emb: &Embedding) -> Result<Region> {
        let all: Vec<usize> = (0..emb.face_count()).collect();
        Region::from_faces(emb, &all)
    }

    pub fn contains_face(&self, f: usize) -> bool {
        self.faces.binary_search(&f).is_ok()
    }

    /// Vertices of the closed region, sorted.
    pub fn closure_vertices(&self, emb: &Embedding) -> Vec<usize> {
        let fs = emb.faces();
        let mut vs: Vec<usize> = self.faces.iter().flat_map(|&f| fs.vertices(emb, f)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Vertices on some boundary cycle, sorted.
    pub fn boundary_vertices(&self, emb: &Embedding) -> Vec<usize> {
        let mut vs: Vec<usize> =
            self.boundary.iter().flatten().map(|&d| emb.tail(d)).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Edges of the closed region (interior and boundary), sorted.
    pub fn closure_edges(&self, emb: &Embedding) -> Vec<usize> {
        let fs = emb.faces();
        (0..emb.m())
            .filter(|&e| self.contains_face(fs.side_a(e)) || self.contains_face(fs.side_b(e)))
            .collect()
    }
}

/// Returns `(euler_genus, orientable, cuff_count)` for a region, recomputed
/// from its faces.
pub fn classify_region(emb: &Embedding, region: &Region) -> Result<(i64, bool, usize)> {
    let r = Region::from_faces(emb, &region.faces)?;
    Ok((r.euler_genus, r.orientable, r.cuff_count))
}

fn edge_key(cycle: &[Dart]) -> Vec<usize> {
    let mut es: Vec<usize> = cycle.iter().map(|d| d / 2).collect();
    es.sort_unstable();
    es
}

/// Groups faces into classes that touch through a shared vertex.
pub(crate) fn face_components(emb: &Embedding, faces: &[usize]) -> Vec<Vec<usize>> {
    let fs = emb.faces();
    let mut inside = vec![false; fs.count()];
    for &f in faces {
        inside[f] = true;
    }
    let mut dsu = Dsu::new(fs.count());
    for v in 0..emb.n() {
        let mut first = None;
        for &d in emb.rotation(v) {
            let f = fs.corner_face(d);
            if inside[f] {
                match first {
                    None => first = Some(f),
                    Some(g) => {
                        dsu.union(f, g, 0);
                    }
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    let mut sorted = faces.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for f in sorted {
        let r = dsu.find(f).0;
        groups.entry(r).or_default().push(f);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

/// True when `inner` lies in the interior of `outer` and every component of
/// the difference is a sphere with boundary sharing exactly one cuff with
/// `inner`.
pub fn is_nested_pair(emb: &Embedding, inner: &Region, outer: &Region) -> bool {
    if !inner.faces.iter().all(|&f| outer.contains_face(f)) {
        return false;
    }
    let outer_bd = outer.boundary_vertices(emb);
    let inner_cl = inner.closure_vertices(emb);
    if inner_cl.iter().any(|v| outer_bd.binary_search(v).is_ok()) {
        return false;
    }
    let diff: Vec<usize> =
        outer.faces.iter().copied().filter(|&f| !inner.contains_face(f)).collect();
    let inner_keys: Vec<Vec<usize>> = inner.boundary.iter().map(|c| edge_key(c)).collect();
    let mut matched = vec![0usize; inner_keys.len()];
    for comp in face_components(emb, &diff) {
        let r = match Region::from_faces(emb, &comp) {
            Ok(r) => r,
            Err(_) => return false,
        };
        if r.euler_genus != 0 {
            return false;
        }
        let shared: Vec<usize> = r
            .boundary
            .iter()
            .filter_map(|c| inner_keys.iter().position(|k| *k == edge_key(c)))
            .collect();
        if shared.len() != 1 {
            return false;
        }
        matched[shared[0]] += 1;
    }
    // every inner cuff is enclosed by exactly one collar
    matched.iter().all(|&c| c == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::k4;

    #[test]
    fn single_face_is_disk() {
        let e = k4();
        let r = Region::from_faces(&e, &[0]).unwrap();
        assert_eq!((r.euler_genus, r.orientable, r.cuff_count), (0, true, 1));
        assert_eq!(r.boundary[0].len(), 3);
    }

    #[test]
    fn whole_sphere_has_no_cuffs() {
        let e = k4();
        let r = Region::whole(&e).unwrap();
        assert_eq!((r.euler_genus, r.orientable, r.cuff_count), (0, true, 0));
    }

    #[test]
    fn projective_plane_is_nonorientable() {
        let e = Embedding::new(vec![[0, 0]], vec![-1], vec![vec![0, 1]]).unwrap();
        let r = Region::whole(&e).unwrap();
        assert_eq!((r.euler_genus, r.orientable, r.cuff_count), (1, false, 0));
    }

    #[test]
    fn nested_fails_when_not_contained() {
        let e = k4();
        let a = Region::from_faces(&e, &[0]).unwrap();
        let b = Region::from_faces(&e, &[1]).unwrap();
        assert!(!is_nested_pair(&e, &a, &b));
    }
}

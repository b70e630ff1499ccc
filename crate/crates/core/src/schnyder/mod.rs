//! Schnyder woods of 3-connected plane graphs, their barycentric coordinates
//! and the dominance orders on them.
//!
//! Tree indices are `0, 1, 2` for `T1, T2, T3`; index arithmetic is cyclic.

mod order;
mod poset;
mod svg;

use num_rational::Ratio;

use crate::embed::Embedding;
use crate::error::{failed, precondition, Result};

pub use poset::{ancestors_subtree, dominance, mirsky_partition, Dominance, DominancePoset, Mirsky, SubTree};
pub use svg::draw_svg;

use order::{dart_between, shell};

pub(crate) const NONE: usize = usize::MAX;

/// Three in-arborescences with exact barycentric coordinates.
#[derive(Debug, Clone)]
pub struct SchnyderWood {
    special: [usize; 3],
    parent: [Vec<usize>; 3],
    /// Numerators of the coordinates; the common denominator is `denom`.
    coords: Vec<[i64; 3]>,
    denom: i64,
    outer: Vec<usize>,
}

impl SchnyderWood {
    pub fn special(&self) -> [usize; 3] {
        self.special
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    /// Parent of `v` in tree `i`, `None` for the root `a_i`.
    pub fn parent(&self, i: usize, v: usize) -> Option<usize> {
        let p = self.parent[i % 3][v];
        (p != NONE).then_some(p)
    }

    /// Coordinate numerators over the denominator `f - 1`.
    pub fn numerators(&self, v: usize) -> [i64; 3] {
        self.coords[v]
    }

    pub fn denominator(&self) -> i64 {
        self.denom
    }

    pub fn coord(&self, v: usize) -> [Ratio<i64>; 3] {
        self.coords[v].map(|x| Ratio::new(x, self.denom))
    }

    /// Vertices of the outer face, from `a2` over `a1` to `a3`.
    pub fn outer_path(&self) -> &[usize] {
        &self.outer
    }

    /// Vertices on the path from `v` to the root of tree `i`, starting at `v`.
    pub fn path_to_root(&self, i: usize, v: usize) -> Vec<usize> {
        let mut out = vec![v];
        let mut x = v;
        while let Some(p) = self.parent(i, x) {
            out.push(p);
            x = p;
        }
        out
    }

    /// Full invariant check: arborescences, corner coordinates, lattice
    /// membership and the parallelogram condition.
    pub fn check(&self, emb: &Embedding) -> Result<()> {
        let n = self.n();
        let g = emb.graph();
        for i in 0..3 {
            let a = self.special[i];
            if self.parent[i][a] != NONE {
                return failed(format!("root of tree {} has a parent", i + 1));
            }
            for v in 0..n {
                if v == a {
                    continue;
                }
                let p = self.parent[i][v];
                if p == NONE || !g.has_edge(v, p) {
                    return failed(format!("vertex {v} has no valid parent in tree {}", i + 1));
                }
                let mut x = v;
                let mut steps = 0;
                while x != a {
                    x = self.parent[i][x];
                    steps += 1;
                    if x == NONE || steps > n {
                        return failed(format!("tree {} is not an arborescence at {v}", i + 1));
                    }
                }
            }
            let mut e = [0; 3];
            e[i] = self.denom;
            if self.coords[a] != e {
                return failed(format!("special vertex a{} is not at a corner", i + 1));
            }
        }
        if self.denom != emb.face_count() as i64 - 1 {
            return failed("denominator differs from f - 1");
        }
        for v in 0..n {
            let c = self.coords[v];
            if c.iter().any(|&x| x < 0) || c.iter().sum::<i64>() != self.denom {
                return failed(format!("coordinates of {v} leave the simplex"));
            }
        }
        for i in 0..3 {
            let (j, k) = ((i + 2) % 3, (i + 1) % 3);
            for v in 0..n {
                if v == self.special[i] {
                    continue;
                }
                let cv = self.coords[v];
                let inside: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&w| self.coords[w][j] <= cv[j] && self.coords[w][k] <= cv[k])
                    .collect();
                if inside != [self.parent[i][v]] {
                    return failed(format!(
                        "parallelogram {} of vertex {v} holds neighbours {inside:?}, parent is {}",
                        i + 1,
                        self.parent[i][v]
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Builds a Schnyder wood with the given outer face and special vertices.
/// `a2` and `a3` must be consecutive on the outer face.
pub fn compute_schnyder_wood(emb: &Embedding, outer_face: usize, special: [usize; 3]) -> Result<SchnyderWood> {
    let n = emb.n();
    let [a1, a2, a3] = special;
    if a1 == a2 || a2 == a3 || a1 == a3 {
        return precondition("special vertices must be distinct");
    }
    if special.iter().any(|&a| a >= n) {
        return precondition("special vertex out of range");
    }
    if emb.euler_genus() != 0 {
        return precondition("the embedding is not planar");
    }
    if outer_face >= emb.face_count() {
        return precondition(format!("face {outer_face} does not exist"));
    }
    let g = emb.graph();
    if g.edge_count() != emb.m() || (0..emb.m()).any(|e| emb.is_loop(e)) {
        return precondition("the graph is not simple");
    }
    if !g.is_3_connected() {
        return precondition("the graph is not 3-connected");
    }
    let mut key = emb.faces().vertices(emb, outer_face);
    key.sort_unstable();
    if special.iter().any(|a| key.binary_search(a).is_err()) {
        return precondition("special vertices are not on the outer face");
    }
    let (norm, _) = emb.normalized();
    let mut oriented = None;
    for cand in [norm.clone(), norm.mirrored()] {
        let d = dart_between(&cand, a2, a3).ok_or_else(|| {
            crate::error::Error::Precondition("a2 and a3 must be adjacent on the outer face".into())
        })?;
        let f = cand.faces().face_of(d, 1);
        let mut vs = cand.faces().vertices(&cand, f);
        vs.sort_unstable();
        if vs == key {
            oriented = Some(cand);
            break;
        }
    }
    let Some(emb) = oriented else {
        return precondition("a2 and a3 must be consecutive on the outer face");
    };
    let sh = shell(&emb, a2, a3, a1)?;
    let mut out = [vec![NONE; n], vec![NONE; n], vec![NONE; n]];
    out[2][a2] = a3;
    out[1][a3] = a2;
    let assign_cover = |out: &mut [Vec<usize>; 3], x: usize, left: Option<usize>, right: Option<usize>| {
        // the upward edge doubles an edge already pointing at x
        let free = |out: &[Vec<usize>; 3], y: usize| out[1][x] != y && out[2][x] != y;
        if let Some(y) = right.filter(|&y| out[1][y] == x && free(out, y)) {
            out[0][x] = y;
        } else if let Some(y) = left.filter(|&y| out[2][y] == x && free(out, y)) {
            out[0][x] = y;
        } else {
            return failed(format!("covered vertex {x} has no upward edge"));
        }
        Ok(())
    };
    for st in sh.steps.iter().rev() {
        let zs = &st.members;
        out[1][zs[0]] = st.left;
        out[2][zs[zs.len() - 1]] = st.right;
        for w in zs.windows(2) {
            out[2][w[0]] = w[1];
            out[1][w[1]] = w[0];
        }
        let mut line = vec![st.left];
        line.extend(&st.exposed);
        line.push(st.right);
        for (j, &x) in st.exposed.iter().enumerate() {
            if zs.len() == 1 && g.has_edge(x, zs[0]) {
                out[0][x] = zs[0];
            } else {
                assign_cover(&mut out, x, Some(line[j]), Some(line[j + 2]))?;
            }
        }
    }
    let outer = sh.outer;
    for (j, &x) in outer.iter().enumerate() {
        if x == a1 {
            continue;
        }
        let left = (j > 0).then(|| outer[j - 1]);
        let right = outer.get(j + 1).copied();
        assign_cover(&mut out, x, left, right)?;
    }
    let coords = region_coordinates(&emb, &out, special, &outer)?;
    let wood = SchnyderWood { special, parent: out, coords, denom: emb.face_count() as i64 - 1, outer };
    Ok(wood)
}

/// Picks special vertices on `face`: two consecutive ones for `a2, a3` and a
/// third for `a1`, using as few vertices from `avoid` as possible. Ties go to
/// the smallest ids.
pub fn frame_on_face(emb: &Embedding, face: usize, avoid: &crate::RootSet) -> Option<[usize; 3]> {
    let fs = emb.faces();
    let walk = fs.walk(face);
    let cyc: Vec<usize> = walk.iter().map(|&(d, _)| emb.tail(d)).collect();
    let k = cyc.len();
    let mut best: Option<(usize, [usize; 3])> = None;
    for j in 0..k {
        let (a2, a3) = (cyc[j], cyc[(j + 1) % k]);
        for &a1 in &cyc {
            if a1 == a2 || a1 == a3 || a2 == a3 {
                continue;
            }
            let cost = [a1, a2, a3].iter().filter(|&&x| avoid.contains(x)).count();
            let cand = (cost, [a1, a2, a3]);
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.map(|b| b.1)
}

/// Face counts of the three regions cut out by the tree paths from each
/// vertex.
fn region_coordinates(
    emb: &Embedding,
    parent: &[Vec<usize>; 3],
    special: [usize; 3],
    outer: &[usize],
) -> Result<Vec<[i64; 3]>> {
    let n = emb.n();
    let fs = emb.faces();
    let f = fs.count();
    let face_edges: Vec<Vec<usize>> = (0..f).map(|x| fs.edges(x)).collect();
    // edge ids between each vertex and its parents
    let mut pedge = [vec![NONE; n], vec![NONE; n], vec![NONE; n]];
    for i in 0..3 {
        for v in 0..n {
            let p = parent[i][v];
            if p != NONE {
                pedge[i][v] = dart_between(emb, v, p).expect("parent adjacent") / 2;
            }
        }
    }
    let d = dart_between(emb, outer[0], outer[outer.len() - 1]).expect("base edge");
    let outer_face = fs.face_of(d, 1);
    let mut outer_edge = vec![false; emb.m()];
    for &e in &fs.edges(outer_face) {
        outer_edge[e] = true;
    }
    // inner faces around each special vertex
    let seeds: Vec<Vec<usize>> = special
        .iter()
        .map(|&a| {
            emb.rotation(a).iter().map(|&d| fs.corner_face(d)).filter(|&x| x != outer_face).collect()
        })
        .collect();
    let mut coords = vec![[0i64; 3]; n];
    let mut blocked = outer_edge.clone();
    let mut seen = vec![false; f];
    let mut stack = Vec::new();
    for v in 0..n {
        for i in 0..3 {
            if v == special[i] {
                coords[v] = [0; 3];
                coords[v][i] = f as i64 - 1;
                break;
            }
            let mut marked = Vec::new();
            for t in [(i + 2) % 3, (i + 1) % 3] {
                let mut x = v;
                while parent[t][x] != NONE {
                    let e = pedge[t][x];
                    if !blocked[e] {
                        blocked[e] = true;
                        marked.push(e);
                    }
                    x = parent[t][x];
                }
            }
            seen.iter_mut().for_each(|s| *s = false);
            seen[outer_face] = true;
            let mut reached = 0i64;
            for &s in &seeds[i] {
                if !seen[s] {
                    seen[s] = true;
                    reached += 1;
                    stack.push(s);
                }
            }
            while let Some(x) = stack.pop() {
                for &e in &face_edges[x] {
                    if blocked[e] {
                        continue;
                    }
                    for y in [fs.side_a(e), fs.side_b(e)] {
                        if !seen[y] {
                            seen[y] = true;
                            reached += 1;
                            stack.push(y);
                        }
                    }
                }
            }
            coords[v][i] = f as i64 - 1 - reached;
            for e in marked {
                blocked[e] = false;
            }
        }
    }
    for v in 0..n {
        if coords[v].iter().sum::<i64>() != f as i64 - 1 {
            return failed(format!("region counts of vertex {v} do not add up"));
        }
    }
    Ok(coords)
}

#[cfg(test)]
mod tests;

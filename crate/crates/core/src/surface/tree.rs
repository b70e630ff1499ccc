//! The tree dual to the union of the nest cycles, and the cover pieces cut
//! out of it.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::embed::{classify_region, is_nested_pair, Embedding, Region};
use crate::error::{failed, precondition, Result};

use super::planarize::NestSystem;

/// Tree whose vertices are the faces of the union `H` of the nest cycles in
/// the capped sphere, with one edge per cycle.
#[derive(Debug, Clone)]
pub struct NestTree {
    pub adj: Vec<Vec<usize>>,
    pub root: usize,
    /// Leaf of every cuff, in cuff order.
    pub leaves: Vec<usize>,
    /// Faces of the cut embedding making up the face `f(v)` of `H`.
    pub faces: Vec<Vec<usize>>,
    /// Cycle label `(nest, level)` of every tree edge, keyed by sorted ends.
    pub edge_cycle: BTreeMap<(usize, usize), (usize, usize)>,
    pub depth: usize,
}

impl NestTree {
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.leaves.contains(&v)
    }

    pub fn distances(&self, from: &[usize]) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.len()];
        let mut q = VecDeque::new();
        for &s in from {
            dist[s] = 0;
            q.push_back(s);
        }
        while let Some(u) = q.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    }

    /// Closed neighbourhood of a vertex set, sorted.
    pub fn closed_neighbourhood(&self, set: &[usize]) -> Vec<usize> {
        let mut out: BTreeSet<usize> = set.iter().copied().collect();
        for &u in set {
            out.extend(self.adj[u].iter().copied());
        }
        out.into_iter().collect()
    }

    /// Tree edges with exactly one end in `set`.
    pub fn boundary_edges(&self, set: &[usize]) -> Vec<(usize, usize)> {
        let s: BTreeSet<usize> = set.iter().copied().collect();
        self.edge_cycle.keys().copied().filter(|(a, b)| s.contains(a) != s.contains(b)).collect()
    }

    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        let s: BTreeSet<usize> = set.iter().copied().collect();
        let Some(&start) = s.iter().next() else { return false };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if s.contains(&w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == s.len()
    }
}

/// Builds the tree from nests truncated to their common depth. Vertex
/// `i (d + 1) + j` is the layer between cycles `j - 1` and `j` of nest `i`
/// (the cap when `j = 0`); the last vertex is the root.
pub fn build_nest_tree(ns: &NestSystem) -> Result<NestTree> {
    let d = ns.depth();
    if d < 1 {
        return precondition("nests need depth at least 1");
    }
    let ce = &ns.planarization.cut.embedding;
    let fs = ce.faces();
    let g = ns.nests.len();
    let mut used = vec![false; ce.n()];
    for nest in &ns.nests {
        for c in &nest.cycles[..=d] {
            for &x in c {
                let v = ce.tail(x);
                if used[v] {
                    return failed(format!("nest cycles share vertex {v}"));
                }
                used[v] = true;
            }
        }
    }
    let root = g * (d + 1);
    let mut label = vec![root; fs.count()];
    for (i, nest) in ns.nests.iter().enumerate() {
        for j in (0..=d).rev() {
            for &f in &nest.disks[j] {
                label[f] = i * (d + 1) + j;
            }
        }
    }
    let mut faces = vec![Vec::new(); root + 1];
    for (f, &l) in label.iter().enumerate() {
        faces[l].push(f);
    }
    if let Some(v) = faces.iter().position(|f| f.is_empty()) {
        return failed(format!("tree vertex {v} has no face"));
    }
    let mut edge_cycle = BTreeMap::new();
    for (i, nest) in ns.nests.iter().enumerate() {
        for (j, c) in nest.cycles[..=d].iter().enumerate() {
            for &x in c {
                let e = x / 2;
                let (a, b) = (label[fs.side_a(e)], label[fs.side_b(e)]);
                if a == b {
                    return failed(format!("cycle {j} of nest {i} has the same layer on both sides"));
                }
                if let Some(old) = edge_cycle.insert((a.min(b), a.max(b)), (i, j)) {
                    if old != (i, j) {
                        return failed(format!("layers {a} and {b} are separated by two cycles"));
                    }
                }
            }
        }
    }
    let mut adj = vec![Vec::new(); root + 1];
    for &(a, b) in edge_cycle.keys() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let t = NestTree { adj, root, leaves: (0..g).map(|i| i * (d + 1)).collect(), faces, edge_cycle, depth: d };
    if t.edge_cycle.len() + 1 != t.len() || !t.is_connected_set(&(0..t.len()).collect::<Vec<_>>()) {
        return failed("the dual of the nest cycles is not a tree");
    }
    Ok(t)
}

/// Region of a tree vertex set: the union of the faces `f(u)` of its non-leaf
/// vertices. Without projection the set must be connected and the region
/// lies in the cut embedding; with projection it is mapped to the original
/// embedding, where matched pieces glue along their cut cycles.
pub fn region_of(tree: &NestTree, ns: &NestSystem, set: &[usize], emb: Option<&Embedding>) -> Result<Region> {
    if set.is_empty() {
        return precondition("empty tree vertex set");
    }
    if emb.is_none() && !tree.is_connected_set(set) {
        return precondition("the tree vertex set is not connected");
    }
    let mut faces: Vec<usize> = set.iter().filter(|v| !tree.is_leaf(**v)).flat_map(|&v| tree.faces[v].iter().copied()).collect();
    faces.sort_unstable();
    match emb {
        None => Region::from_faces(&ns.planarization.cut.embedding, &faces),
        Some(e) => Region::from_faces(e, &ns.planarization.project_faces(&faces)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SurfaceKind {
    Sphere,
    Projective,
}

impl std::fmt::Display for SurfaceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SurfaceKind::Sphere => "sphere",
            SurfaceKind::Projective => "projective",
        })
    }
}

/// Which part of the partition a piece comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PieceClass {
    /// The ball around the leaf of a one-sided cuff.
    OneSided { cuff: usize },
    /// The balls around the two cuffs of a two-sided cycle.
    Matched { cuffs: [usize; 2] },
    /// A component of the tree minus all balls.
    Between,
    /// A disk of a projective-plane cover.
    Disk { index: usize },
}

impl std::fmt::Display for PieceClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PieceClass::OneSided { cuff } => write!(f, "A1(cuff {cuff})"),
            PieceClass::Matched { cuffs } => write!(f, "A2(cuffs {} {})", cuffs[0], cuffs[1]),
            PieceClass::Between => write!(f, "B"),
            PieceClass::Disk { index } => write!(f, "disk {index}"),
        }
    }
}

/// A nested pair of regions of the original embedding.
#[derive(Debug, Clone)]
pub struct CoverPiece {
    pub class: PieceClass,
    /// Tree vertices of the piece, and of its closed neighbourhood.
    pub set: Vec<usize>,
    pub closed: Vec<usize>,
    pub inner: Region,
    pub outer: Region,
    pub kind: SurfaceKind,
}

/// Splits the tree into balls of radius `floor(d / 3)` around the leaves,
/// grouped by cuff side, and the components of the rest; realizes each part
/// and its closed neighbourhood as regions of `emb` and checks that they are
/// nested and of the expected kind.
pub fn partition_cover_pieces(tree: &NestTree, ns: &NestSystem, emb: &Embedding) -> Result<Vec<CoverPiece>> {
    let d = tree.depth;
    let radius = d / 3;
    if radius < 1 {
        return precondition(format!("depth {d} gives balls of radius 0"));
    }
    let g = tree.leaves.len();
    let leaf_dist: Vec<Vec<usize>> = tree.leaves.iter().map(|&l| tree.distances(&[l])).collect();
    for i in 0..g {
        for j in i + 1..g {
            let x = leaf_dist[i][tree.leaves[j]];
            if x < d {
                return failed(format!("leaves {i} and {j} are at distance {x} < {d}"));
            }
        }
        if leaf_dist[i][tree.root] <= radius {
            return failed(format!("the root lies in the ball of leaf {i}"));
        }
    }
    let balls: Vec<Vec<usize>> =
        leaf_dist.iter().map(|dist| (0..tree.len()).filter(|&v| dist[v] <= radius).collect()).collect();
    for i in 0..g {
        for j in i + 1..g {
            let near = balls[j].iter().map(|&v| leaf_dist[i][v]).min().unwrap_or(usize::MAX);
            if near < radius + 3 {
                return failed(format!("balls {i} and {j} are too close for disjoint collars"));
            }
        }
    }
    let cut = &ns.planarization.cut;
    let mut sets: Vec<(PieceClass, Vec<usize>)> = Vec::new();
    let mut done = vec![false; g];
    for i in 0..g {
        if done[i] {
            continue;
        }
        done[i] = true;
        let cuff = &cut.cuffs[i];
        if cuff.one_sided {
            sets.push((PieceClass::OneSided { cuff: i }, balls[i].clone()));
        } else {
            let j = (i + 1..g)
                .find(|&j| cut.cuffs[j].cycle == cuff.cycle)
                .ok_or_else(|| crate::Error::Failed(format!("two-sided cuff {i} has no partner")))?;
            done[j] = true;
            let mut s = balls[i].clone();
            s.extend_from_slice(&balls[j]);
            s.sort_unstable();
            sets.push((PieceClass::Matched { cuffs: [i, j] }, s));
        }
    }
    let in_ball: BTreeSet<usize> = balls.iter().flatten().copied().collect();
    let mut seen = BTreeSet::new();
    let mut between = 0;
    for s in 0..tree.len() {
        if in_ball.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut comp = vec![s];
        seen.insert(s);
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            k += 1;
            for &w in &tree.adj[u] {
                if !in_ball.contains(&w) && seen.insert(w) {
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        sets.push((PieceClass::Between, comp));
        between += 1;
    }
    if between > g {
        return failed(format!("{between} components outside the balls exceed g = {g}"));
    }
    let mut pieces = Vec::new();
    for (class, set) in sets {
        let closed = tree.closed_neighbourhood(&set);
        let inner = region_of(tree, ns, &set, Some(emb))?;
        let outer = region_of(tree, ns, &closed, Some(emb))?;
        let kind = if matches!(class, PieceClass::OneSided { .. }) { SurfaceKind::Projective } else { SurfaceKind::Sphere };
        let want = match kind {
            SurfaceKind::Sphere => (0, true),
            SurfaceKind::Projective => (1, false),
        };
        for (name, r) in [("inner", &inner), ("outer", &outer)] {
            let (eg, orientable, _) = classify_region(emb, r)?;
            if (eg, orientable) != want {
                return failed(format!("{class} {name} region has Euler genus {eg}, orientable {orientable}; expected {kind}"));
            }
        }
        if !is_nested_pair(emb, &inner, &outer) {
            return failed(format!("{class} regions are not nested"));
        }
        pieces.push(CoverPiece { class, set, closed, inner, outer, kind });
    }
    let mut all: Vec<usize> = pieces.iter().flat_map(|p| p.inner.faces.iter().copied()).collect();
    all.sort_unstable();
    all.dedup();
    if all.len() != emb.face_count() {
        return failed("the inner regions do not cover every face");
    }
    Ok(pieces)
}

//! Planarizing cycles and nests of disks around the resulting cuffs.

use std::collections::BTreeSet;

use crate::embed::{cut_along, shortest_cycle_matching, CutResult, Cycle, Embedding, Region, ShortestCycleQuery};
use crate::error::{failed, precondition, Result};

/// Disjoint cycles of the graph whose cut is a single sphere with boundary.
#[derive(Debug, Clone)]
pub struct Planarization {
    pub cycles: Vec<Cycle>,
    pub cut: CutResult,
    /// Face of the original embedding for every face of the cut embedding;
    /// `None` for the caps.
    pub face_origin: Vec<Option<usize>>,
}

impl Planarization {
    pub fn cuff_count(&self) -> usize {
        self.cut.cuffs.len()
    }

    /// Original faces of a set of cut faces, caps dropped.
    pub fn project_faces(&self, faces: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = faces.iter().filter_map(|&f| self.face_origin[f]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Matches the faces of a cut embedding with the original faces through
/// their corners.
pub(crate) fn cut_face_origin(emb: &Embedding, cut: &CutResult) -> Result<Vec<Option<usize>>> {
    let ce = &cut.embedding;
    let cf = ce.faces();
    let caps: BTreeSet<usize> = cut.cuffs.iter().map(|c| c.cap_face).collect();
    let mut origin: Vec<Option<usize>> = vec![None; cf.count()];
    for v in 0..ce.n() {
        for &d in ce.rotation(v) {
            let f = cf.corner_face(d);
            if caps.contains(&f) {
                continue;
            }
            let g = emb.faces().corner_face(cut.dart_origin(d));
            match origin[f] {
                None => origin[f] = Some(g),
                Some(h) if h == g => {}
                Some(h) => return failed(format!("cut face {f} meets original faces {h} and {g}")),
            }
        }
    }
    if let Some(f) = (0..cf.count()).find(|f| !caps.contains(f) && origin[*f].is_none()) {
        return failed(format!("cut face {f} has no original face"));
    }
    Ok(origin)
}

/// Repeatedly cuts along a shortest cycle that is nonseparating in the
/// current cut surface and avoids every cuff, until the cut is a sphere.
pub fn planarize(emb: &Embedding) -> Result<Planarization> {
    let eg = emb.euler_genus();
    if eg == 0 {
        return precondition("the embedding is already planar");
    }
    if emb.components().len() != 1 {
        return precondition("the embedding is not connected");
    }
    let mut cycles: Vec<Cycle> = Vec::new();
    for _ in 0..=eg {
        let cut = cut_along(emb, &cycles)?;
        let ce = &cut.embedding;
        if ce.components().len() != 1 {
            return failed("cutting disconnected the surface");
        }
        if ce.euler_genus() == 0 {
            let face_origin = cut_face_origin(emb, &cut)?;
            return Ok(Planarization { cycles, cut, face_origin });
        }
        let avoid: Vec<usize> = cut.cuffs.iter().flat_map(|c| c.darts.iter().map(|&d| ce.tail(d))).collect();
        let q = ShortestCycleQuery { nonseparating: true, avoid, ..Default::default() };
        let Some(c) = shortest_cycle_matching(ce, &q)? else {
            return failed(format!(
                "no nonseparating cycle avoids the {} cuffs (cut Euler genus {})",
                cut.cuffs.len(),
                ce.euler_genus()
            ));
        };
        cycles.push(c.iter().map(|&d| cut.dart_origin(d)).collect());
    }
    failed("planarization did not finish within the Euler genus")
}

/// One growth step of a disk: add every face touching its closure, then
/// fill all holes except the largest one. Returns the faces of the grown
/// disk, or `None` when the result is not a disk.
pub(crate) fn grow_disk(emb: &Embedding, disk: &[usize]) -> Option<Vec<usize>> {
    let fs = emb.faces();
    let mut inside = vec![false; fs.count()];
    for &f in disk {
        inside[f] = true;
    }
    let at = fs.faces_at_vertices(emb);
    for f in disk {
        for v in fs.vertices(emb, *f) {
            for &g in &at[v] {
                inside[g] = true;
            }
        }
    }
    let holes = edge_components(emb, &inside, false);
    if holes.is_empty() {
        return None;
    }
    let keep = holes.iter().enumerate().max_by_key(|(i, h)| (h.len(), std::cmp::Reverse(*i))).map(|x| x.0)?;
    for (i, h) in holes.iter().enumerate() {
        if i != keep {
            for &f in h {
                inside[f] = true;
            }
        }
    }
    let faces: Vec<usize> = (0..fs.count()).filter(|&f| inside[f]).collect();
    let r = Region::from_faces(emb, &faces).ok()?;
    (r.euler_genus == 0 && r.cuff_count == 1).then_some(faces)
}

/// Components of the faces with `inside[f] == want`, adjacent across edges.
pub(crate) fn edge_components(emb: &Embedding, inside: &[bool], want: bool) -> Vec<Vec<usize>> {
    let fs = emb.faces();
    let mut comp = vec![usize::MAX; fs.count()];
    let mut out = Vec::new();
    let mut nb: Vec<Vec<usize>> = vec![Vec::new(); fs.count()];
    for e in 0..emb.m() {
        let (a, b) = (fs.side_a(e), fs.side_b(e));
        nb[a].push(b);
        nb[b].push(a);
    }
    for s in 0..fs.count() {
        if inside[s] != want || comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut stack = vec![s];
        let mut members = Vec::new();
        while let Some(f) = stack.pop() {
            members.push(f);
            for &g in &nb[f] {
                if inside[g] == want && comp[g] == usize::MAX {
                    comp[g] = id;
                    stack.push(g);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Nested disks around one cuff: `disks[j]` is bounded by `cycles[j]`.
#[derive(Debug, Clone)]
pub struct Nest {
    pub cuff: usize,
    pub cycles: Vec<Cycle>,
    /// Sorted face sets of the cut embedding.
    pub disks: Vec<Vec<usize>>,
    /// Why growth stopped before the requested depth.
    pub stopped: Option<String>,
}

impl Nest {
    pub fn depth(&self) -> usize {
        self.cycles.len() - 1
    }
}

#[derive(Debug, Clone)]
pub struct NestSystem {
    pub planarization: Planarization,
    pub nests: Vec<Nest>,
    pub requested: usize,
}

impl NestSystem {
    /// Depth reached by every nest.
    pub fn depth(&self) -> usize {
        self.nests.iter().map(Nest::depth).min().unwrap_or(0)
    }

    /// Checks that the disks grow strictly, that every disk is bounded by its
    /// cycle, and that the closed outermost disks of different nests are
    /// disjoint, which gives both disjointness of the nests and the
    /// outside condition.
    pub fn verify(&self) -> Result<()> {
        let ce = &self.planarization.cut.embedding;
        let mut seen: Vec<Option<usize>> = vec![None; ce.n()];
        for (i, nest) in self.nests.iter().enumerate() {
            for (j, disk) in nest.disks.iter().enumerate() {
                let r = Region::from_faces(ce, disk)?;
                if r.euler_genus != 0 || r.cuff_count != 1 {
                    return failed(format!("nest {i}: disk {j} is not a disk"));
                }
                let mut a: Vec<usize> = r.boundary[0].iter().map(|d| d / 2).collect();
                let mut b: Vec<usize> = nest.cycles[j].iter().map(|d| d / 2).collect();
                a.sort_unstable();
                b.sort_unstable();
                if a != b {
                    return failed(format!("nest {i}: disk {j} is not bounded by its cycle"));
                }
                if j > 0 && !(nest.disks[j - 1].len() < disk.len() && nest.disks[j - 1].iter().all(|f| disk.binary_search(f).is_ok())) {
                    return failed(format!("nest {i}: disk {j} does not strictly contain disk {}", j - 1));
                }
            }
            let last = Region::from_faces(ce, nest.disks.last().expect("at least the cap"))?;
            for v in last.closure_vertices(ce) {
                if let Some(k) = seen[v] {
                    return failed(format!("nests {k} and {i} meet at vertex {v}"));
                }
                seen[v] = Some(i);
            }
        }
        Ok(())
    }
}

/// Grows nests around all cuffs in turn until each reaches `depth` or can no
/// longer grow without touching another nest or ceasing to be a disk.
pub fn find_nests(planarization: Planarization, depth: usize) -> Result<NestSystem> {
    let ce = &planarization.cut.embedding;
    if ce.euler_genus() != 0 {
        return precondition("the cut surface is not a sphere with boundary");
    }
    let fs = ce.faces();
    let mut nests: Vec<Nest> = planarization
        .cut
        .cuffs
        .iter()
        .enumerate()
        .map(|(i, c)| Nest { cuff: i, cycles: vec![c.darts.clone()], disks: vec![vec![c.cap_face]], stopped: None })
        .collect();
    // owner of every vertex in some closed disk
    let mut owner: Vec<Option<usize>> = vec![None; ce.n()];
    let closure = |faces: &[usize]| -> BTreeSet<usize> { faces.iter().flat_map(|&f| fs.vertices(ce, f)).collect() };
    for (i, nest) in nests.iter_mut().enumerate() {
        for v in closure(&nest.disks[0]) {
            if let Some(k) = owner[v] {
                nest.stopped = Some(format!("cuffs {k} and {i} share vertex {v}"));
            }
            owner[v] = Some(i);
        }
    }
    let mut active: Vec<bool> = nests.iter().map(|n| n.stopped.is_none()).collect();
    if active.iter().any(|a| !a) {
        for a in &mut active {
            *a = false;
        }
    }
    while active.iter().any(|&a| a) {
        for i in 0..nests.len() {
            if !active[i] {
                continue;
            }
            if nests[i].depth() >= depth {
                active[i] = false;
                continue;
            }
            let cur = nests[i].disks.last().expect("cap").clone();
            let Some(next) = grow_disk(ce, &cur) else {
                nests[i].stopped = Some("the next layer is not a disk".into());
                active[i] = false;
                continue;
            };
            let vs = closure(&next);
            if let Some(v) = vs.iter().find(|&&v| owner[v].is_some_and(|k| k != i)) {
                nests[i].stopped = Some(format!("the next layer would touch nest {} at vertex {v}", owner[*v].unwrap()));
                active[i] = false;
                continue;
            }
            let r = Region::from_faces(ce, &next)?;
            for &v in &vs {
                owner[v] = Some(i);
            }
            nests[i].cycles.push(r.boundary[0].clone());
            nests[i].disks.push(next);
        }
    }
    for n in &mut nests {
        if n.depth() < depth && n.stopped.is_none() {
            n.stopped = Some("stopped with the other nests".into());
        }
    }
    let sys = NestSystem { planarization, nests, requested: depth };
    sys.verify()?;
    Ok(sys)
}

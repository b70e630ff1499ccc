//! The 3-connected minor that agrees with the graph near an inner region, and
//! lifting covers and models back through it.

use std::collections::{BTreeSet, HashMap};

use crate::embed::{is_nested_pair, Dart, Embedding, Region, RootSet};
use crate::error::{failed, precondition, Result};
use crate::graph::Graph;
use crate::model::{verify_cover, FaceCover, RootedK2tModel};

/// The closed region as an embedding of its own, with every cuff capped by a
/// new face.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub embedding: Embedding,
    /// Vertex of the parent embedding for every vertex.
    pub vertex_origin: Vec<usize>,
    /// Edge of the parent embedding for every edge.
    pub edge_origin: Vec<usize>,
}

pub fn restrict_to_region(emb: &Embedding, region: &Region) -> Result<Restriction> {
    let keep_e = region.closure_edges(emb);
    let keep_v = region.closure_vertices(emb);
    let mut new_e = vec![usize::MAX; emb.m()];
    for (i, &e) in keep_e.iter().enumerate() {
        new_e[e] = i;
    }
    let mut new_v = vec![usize::MAX; emb.n()];
    for (i, &v) in keep_v.iter().enumerate() {
        new_v[v] = i;
    }
    let ends = keep_e.iter().map(|&e| emb.ends(e).map(|v| new_v[v])).collect();
    let sig = keep_e.iter().map(|&e| emb.sig(e)).collect();
    let rot = keep_v
        .iter()
        .map(|&v| {
            emb.rotation(v)
                .iter()
                .filter(|&&d| new_e[d / 2] != usize::MAX)
                .map(|&d| 2 * new_e[d / 2] + d % 2)
                .collect()
        })
        .collect();
    let embedding = Embedding::new(ends, sig, rot)?;
    if embedding.euler_genus() != region.euler_genus {
        return failed(format!(
            "capped region has Euler genus {}, expected {}",
            embedding.euler_genus(),
            region.euler_genus
        ));
    }
    Ok(Restriction { embedding, vertex_origin: keep_v, edge_origin: keep_e })
}

/// Contracts every group (each must induce a connected subgraph) into one
/// vertex, then drops the loops and the parallel copies this creates at the
/// new vertices. Returns the minor, the new id of every old vertex, and the
/// old id of every new edge.
pub fn contract_groups(emb: &Embedding, groups: &[Vec<usize>]) -> Result<(Embedding, Vec<usize>, Vec<usize>)> {
    let n = emb.n();
    let mut ends: Vec<[usize; 2]> = (0..emb.m()).map(|e| emb.ends(e)).collect();
    let mut sig: Vec<i8> = emb.signatures().to_vec();
    let mut rot: Vec<Vec<Dart>> = (0..n).map(|v| emb.rotation(v).to_vec()).collect();
    let mut gone = vec![false; emb.m()];
    let mut merged = vec![false; n];
    let mut is_group_rep = vec![false; n];
    let mut group_of = vec![usize::MAX; n];
    for (gi, grp) in groups.iter().enumerate() {
        for &v in grp {
            if group_of[v] != usize::MAX {
                return precondition(format!("vertex {v} lies in two groups"));
            }
            group_of[v] = gi;
        }
    }
    for (gi, grp) in groups.iter().enumerate() {
        let Some(&c) = grp.iter().min() else { continue };
        is_group_rep[c] = true;
        // breadth-first tree inside the group, contracted edge by edge
        let mut seen = BTreeSet::from([c]);
        let mut queue = std::collections::VecDeque::from([c]);
        while let Some(u) = queue.pop_front() {
            for &d in emb.rotation(u) {
                let w = emb.head(d);
                if group_of[w] != gi || seen.contains(&w) {
                    continue;
                }
                seen.insert(w);
                queue.push_back(w);
                let e = d / 2;
                if sig[e] < 0 {
                    rot[w].reverse();
                    for &x in &rot[w] {
                        if ends[x / 2][0] != ends[x / 2][1] {
                            sig[x / 2] = -sig[x / 2];
                        }
                    }
                }
                let dc = if ends[e][0] == c { 2 * e } else { 2 * e + 1 };
                let dw = dc ^ 1;
                let pc = rot[c].iter().position(|&x| x == dc).expect("dart at its tail");
                let pw = rot[w].iter().position(|&x| x == dw).expect("dart at its tail");
                let mut r = rot[c][..pc].to_vec();
                r.extend_from_slice(&rot[w][pw + 1..]);
                r.extend_from_slice(&rot[w][..pw]);
                r.extend_from_slice(&rot[c][pc + 1..]);
                for &x in &rot[w] {
                    ends[x / 2][x % 2] = c;
                }
                rot[c] = r;
                rot[w].clear();
                merged[w] = true;
                gone[e] = true;
            }
        }
        if seen.len() != grp.iter().collect::<BTreeSet<_>>().len() {
            return precondition(format!("group {gi} is not connected"));
        }
    }
    let mut pairs: HashMap<(usize, usize), usize> = HashMap::new();
    for e in 0..emb.m() {
        if gone[e] {
            continue;
        }
        let [u, v] = ends[e];
        if !is_group_rep[u] && !is_group_rep[v] {
            continue;
        }
        if u == v || pairs.insert((u.min(v), u.max(v)), e).is_some() {
            gone[e] = true;
        }
    }
    let mut vmap = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if !merged[v] {
            vmap[v] = next;
            next += 1;
        }
    }
    for v in 0..n {
        if merged[v] {
            let c = *groups[group_of[v]].iter().min().expect("nonempty group");
            vmap[v] = vmap[c];
        }
    }
    let mut new_e = vec![usize::MAX; emb.m()];
    let mut back = Vec::new();
    for e in 0..emb.m() {
        if !gone[e] {
            new_e[e] = back.len();
            back.push(e);
        }
    }
    let out_ends = back.iter().map(|&e| ends[e].map(|v| vmap[v])).collect();
    let out_sig = back.iter().map(|&e| sig[e]).collect();
    let out_rot = (0..n)
        .filter(|&v| !merged[v])
        .map(|v| rot[v].iter().filter(|&&d| !gone[d / 2]).map(|&d| 2 * new_e[d / 2] + d % 2).collect())
        .collect();
    Ok((Embedding::new(out_ends, out_sig, out_rot)?, vmap, back))
}

/// A minor of the graph inside an outer region, obtained by contracting each
/// component outside the inner region, together with the face map.
#[derive(Debug, Clone)]
pub struct AgreeingMinor {
    pub embedding: Embedding,
    /// Branch set in the parent graph of every vertex of the minor.
    pub branch_sets: Vec<Vec<usize>>,
    /// Minor vertices that stand for contracted components.
    pub component_vertices: Vec<usize>,
    /// Parent face with the same inner incidences, for every face of the minor.
    pub face_map: Vec<usize>,
    /// Parent vertices of the closed inner region, sorted.
    pub inner_vertices: Vec<usize>,
}

impl AgreeingMinor {
    /// Minor vertex of an inner parent vertex.
    pub fn vertex_of(&self, v: usize) -> Option<usize> {
        self.inner_vertices.binary_search(&v).ok()?;
        self.branch_sets.iter().position(|b| b.len() == 1 && b[0] == v)
    }

    /// Roots of the inner region, in minor ids.
    pub fn roots(&self, roots: &RootSet) -> RootSet {
        RootSet::new(
            (0..self.embedding.n())
                .filter(|h| self.component_vertices.binary_search(h).is_err())
                .filter(|&h| roots.contains(self.branch_sets[h][0]))
                .collect(),
        )
    }

    /// Parent model from a model of the minor.
    pub fn lift_model(&self, g: &Graph, m: &RootedK2tModel) -> Result<RootedK2tModel> {
        let up = |set: &[usize]| -> Vec<usize> {
            let mut out: Vec<usize> = set.iter().flat_map(|&h| self.branch_sets[h].iter().copied()).collect();
            out.sort_unstable();
            out
        };
        RootedK2tModel::new(g, [up(&m.centers[0]), up(&m.centers[1])], m.satellites.iter().map(|s| up(s)).collect())
    }

    /// Parent faces of a cover of the minor.
    pub fn lift_faces(&self, cover: &FaceCover) -> Vec<usize> {
        cover.faces.iter().map(|&f| self.face_map[f]).collect()
    }
}

/// Contracts each component of the outer closure minus the inner closure,
/// checks that the minor is 3-connected with every component vertex of
/// degree at least 3, and finds for every face of the minor a parent face
/// incident to exactly the same inner vertices.
pub fn contract_outside(emb: &Embedding, inner: &Region, outer: &Region) -> Result<AgreeingMinor> {
    if !is_nested_pair(emb, inner, outer) {
        return precondition("inner and outer regions are not a nested pair");
    }
    let res = restrict_to_region(emb, outer)?;
    let sub = &res.embedding;
    let inner_vertices = inner.closure_vertices(emb);
    let is_inner: Vec<bool> =
        res.vertex_origin.iter().map(|v| inner_vertices.binary_search(v).is_ok()).collect();
    let groups = sub.graph().components_without(&is_inner);
    let (h, vmap, _) = contract_groups(sub, &groups)?;
    if h.euler_genus() != outer.euler_genus {
        return failed(format!(
            "contracting the outside changed the Euler genus from {} to {}",
            outer.euler_genus,
            h.euler_genus()
        ));
    }
    let mut branch_sets = vec![Vec::new(); h.n()];
    for (v, &x) in vmap.iter().enumerate() {
        branch_sets[x].push(res.vertex_origin[v]);
    }
    for b in &mut branch_sets {
        b.sort_unstable();
    }
    let mut component_vertices: Vec<usize> = groups.iter().map(|g| vmap[g[0]]).collect();
    component_vertices.sort_unstable();
    let hg = h.graph();
    for &c in &component_vertices {
        if hg.degree(c) < 3 {
            return failed(format!("component vertex {c} has degree {} in the minor", hg.degree(c)));
        }
    }
    if !hg.is_3_connected() {
        return failed("the agreeing minor is not 3-connected");
    }
    // parent faces keyed by their inner incidences
    let fs = emb.faces();
    let inner_key = |vs: Vec<usize>| -> Vec<usize> {
        vs.into_iter().filter(|v| inner_vertices.binary_search(v).is_ok()).collect()
    };
    let mut by_key: HashMap<Vec<usize>, usize> = HashMap::new();
    for &f in &outer.faces {
        by_key.entry(inner_key(fs.vertices(emb, f))).or_insert(f);
    }
    let hf = h.faces();
    let mut face_map = Vec::with_capacity(hf.count());
    for f in 0..hf.count() {
        let mut key: Vec<usize> = hf
            .vertices(&h, f)
            .into_iter()
            .filter(|x| component_vertices.binary_search(x).is_err())
            .map(|x| branch_sets[x][0])
            .collect();
        key.sort_unstable();
        match by_key.get(&key) {
            Some(&g) => face_map.push(g),
            None => return failed(format!("face {f} of the minor has no parent face with the same inner vertices")),
        }
    }
    Ok(AgreeingMinor { embedding: h, branch_sets, component_vertices, face_map, inner_vertices })
}

/// Union of the lifted piece covers. Each piece cover must cover the roots
/// of its minor; every root of the parent must lie in some piece, and every
/// lifted face must see the same inner roots as its minor face.
pub fn lift_cover(emb: &Embedding, roots: &RootSet, parts: &[(&AgreeingMinor, &FaceCover)]) -> Result<FaceCover> {
    let mut covered_by_piece = vec![false; emb.n()];
    let fs = emb.faces();
    let mask = roots.mask(emb.n());
    let mut faces = Vec::new();
    for (i, (minor, cover)) in parts.iter().enumerate() {
        let h = &minor.embedding;
        let hr = minor.roots(roots);
        let v = verify_cover(h, &hr, cover);
        if !v.ok() {
            return failed(format!("piece {i}: cover does not cover the piece roots: {v}"));
        }
        for &f in &cover.faces {
            let g = minor.face_map[f];
            let mut in_h: Vec<usize> =
                h.faces().vertices(h, f).into_iter().filter(|&x| hr.contains(x)).map(|x| minor.branch_sets[x][0]).collect();
            in_h.sort_unstable();
            let in_g: Vec<usize> = fs
                .vertices(emb, g)
                .into_iter()
                .filter(|&x| mask[x] && minor.inner_vertices.binary_search(&x).is_ok())
                .collect();
            if in_h != in_g {
                return failed(format!("piece {i}: face {f} and its image {g} see different roots"));
            }
            faces.push(g);
        }
        for &v in &minor.inner_vertices {
            covered_by_piece[v] = true;
        }
    }
    if let Some(r) = roots.iter().find(|&r| r < emb.n() && !covered_by_piece[r]) {
        return failed(format!("root {r} lies in no piece"));
    }
    let cover = FaceCover::new(faces);
    let v = verify_cover(emb, roots, &cover);
    if !v.ok() {
        return failed(format!("lifted cover is invalid: {v}"));
    }
    Ok(cover)
}

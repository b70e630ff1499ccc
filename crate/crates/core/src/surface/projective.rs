//! Covers of the projective plane by three nested pairs of disks around the
//! faces of a K4-subdivision.

use std::collections::BTreeSet;

use crate::embed::format::{cycle_from_vertices, Hint};
use crate::embed::{cut_along, cycle_sign, is_nested_pair, shortest_cycle_matching, Embedding, Region, ShortestCycleQuery};
use crate::error::{failed, precondition, Result};
use crate::graph::Graph;

use super::planarize::{cut_face_origin, edge_components, grow_disk};
use super::tree::{CoverPiece, PieceClass, SurfaceKind};

/// Faces of the disk bounded by a cycle, or `None` when no side of the cycle
/// is a disk bounded by exactly that cycle. The smaller side wins when both
/// are disks.
pub fn disk_of_cycle(emb: &Embedding, cycle: &[usize]) -> Option<Vec<usize>> {
    let fs = emb.faces();
    let mut on = vec![false; emb.m()];
    for &d in cycle {
        on[d / 2] = true;
    }
    let mut key: Vec<usize> = cycle.iter().map(|d| d / 2).collect();
    key.sort_unstable();
    // components across edges off the cycle
    let mut comp = vec![usize::MAX; fs.count()];
    let mut sides: Vec<Vec<usize>> = Vec::new();
    let mut nb: Vec<Vec<usize>> = vec![Vec::new(); fs.count()];
    for e in 0..emb.m() {
        if !on[e] {
            let (a, b) = (fs.side_a(e), fs.side_b(e));
            nb[a].push(b);
            nb[b].push(a);
        }
    }
    for s in 0..fs.count() {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = sides.len();
        let mut members = vec![s];
        let mut k = 0;
        while k < members.len() {
            let f = members[k];
            k += 1;
            for &g in &nb[f] {
                if comp[g] == usize::MAX {
                    comp[g] = sides.len();
                    members.push(g);
                }
            }
        }
        members.sort_unstable();
        sides.push(members);
    }
    sides
        .into_iter()
        .filter(|faces| {
            Region::from_faces(emb, faces).is_ok_and(|r| {
                let mut b: Vec<usize> = r.boundary.iter().flatten().map(|d| d / 2).collect();
                b.sort_unstable();
                r.euler_genus == 0 && r.cuff_count == 1 && b == key
            })
        })
        .min_by_key(|faces| faces.len())
}

fn disk_piece(emb: &Embedding, index: usize, inner: Vec<usize>, outer: Vec<usize>) -> Result<CoverPiece> {
    let inner = Region::from_faces(emb, &inner)?;
    let outer = Region::from_faces(emb, &outer)?;
    for r in [&inner, &outer] {
        if r.euler_genus != 0 || r.cuff_count != 1 {
            return failed(format!("piece {index} is not a disk"));
        }
    }
    if !is_nested_pair(emb, &inner, &outer) {
        return failed(format!("piece {index}: the regions are not nested"));
    }
    Ok(CoverPiece { class: PieceClass::Disk { index }, set: Vec::new(), closed: Vec::new(), inner, outer, kind: SurfaceKind::Sphere })
}

fn check_union(emb: &Embedding, pieces: &[CoverPiece]) -> Result<()> {
    let all: BTreeSet<usize> = pieces.iter().flat_map(|p| p.inner.faces.iter().copied()).collect();
    if all.len() != emb.face_count() {
        return failed(format!("the inner disks cover {} of {} faces", all.len(), emb.face_count()));
    }
    Ok(())
}

/// Three nested pairs of disks covering a projective-plane embedding, from
/// the three facial cycles and the three protective cycles of a hint, or
/// found by a search when there is no hint.
pub fn projective_cover(emb: &Embedding, hint: Option<&Hint>) -> Result<Vec<CoverPiece>> {
    if emb.euler_genus() != 1 {
        return precondition(format!("Euler genus {} is not the projective plane", emb.euler_genus()));
    }
    if emb.components().len() != 1 {
        return precondition("the embedding is not connected");
    }
    match hint {
        Some(h) => hint_cover(emb, h),
        None => search_cover(emb),
    }
}

fn hint_cover(emb: &Embedding, hint: &Hint) -> Result<Vec<CoverPiece>> {
    if hint.faces.len() != 3 || hint.protect.len() != 3 {
        return precondition("the hint needs three facial and three protective cycles");
    }
    let disk = |vs: &[usize], what: &str, i: usize| -> Result<Vec<usize>> {
        let c = cycle_from_vertices(emb, vs)?;
        disk_of_cycle(emb, &c).ok_or_else(|| crate::Error::Failed(format!("{what} cycle {i} bounds no disk")))
    };
    let inner: Vec<Vec<usize>> = (0..3).map(|i| disk(&hint.faces[i], "facial", i)).collect::<Result<_>>()?;
    let outer: Vec<Vec<usize>> = (0..3).map(|i| disk(&hint.protect[i], "protective", i)).collect::<Result<_>>()?;
    let mut pieces = Vec::new();
    for (i, inn) in inner.into_iter().enumerate() {
        // the protective cycle listed at the same index first
        let order = [i, (i + 1) % 3, (i + 2) % 3];
        let piece = order.iter().find_map(|&j| disk_piece(emb, i, inn.clone(), outer[j].clone()).ok());
        match piece {
            Some(p) => pieces.push(p),
            None => return failed(format!("no protective disk nests facial disk {i}")),
        }
    }
    check_union(emb, &pieces)?;
    Ok(pieces)
}

/// Search without a hint. Cut along a shortest one-sided cycle to get a disk
/// whose boundary walks the cycle twice, take a ball `Q` deep inside it, and
/// join four boundary points at quarter spacing to `Q` by disjoint paths.
/// The ball and the two pairs of opposite quadrants of the annulus (glued
/// across the cycle) are the three inner disks; each outer disk is one
/// growth step of its inner disk.
fn search_cover(emb: &Embedding) -> Result<Vec<CoverPiece>> {
    let q = ShortestCycleQuery::default();
    let Some(c) = shortest_cycle_matching(emb, &q)? else {
        return failed("no noncontractible cycle");
    };
    if cycle_sign(emb, &c) > 0 {
        return failed("the shortest noncontractible cycle is two-sided");
    }
    let cut = cut_along(emb, &[c.clone()])?;
    let ce = &cut.embedding;
    let origin = cut_face_origin(emb, &cut)?;
    let cuff = &cut.cuffs[0];
    let two_l = cuff.darts.len();
    let l = two_l / 2;
    if l < 4 {
        return failed(format!("shortest one-sided cycle has length {l}; the search needs at least 4"));
    }
    let ring: Vec<usize> = cuff.darts.iter().map(|&d| ce.tail(d)).collect();
    let g = ce.graph();
    let mut on_cuff = vec![false; ce.n()];
    for &v in &ring {
        on_cuff[v] = true;
    }
    // distance from the cuff
    let mut dist = vec![usize::MAX; ce.n()];
    let mut queue = std::collections::VecDeque::new();
    for &v in &ring {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let center = (0..ce.n()).max_by_key(|&v| (dist[v], std::cmp::Reverse(v))).expect("vertices");
    let fs = ce.faces();
    let start = fs.faces_at_vertices(ce)[center].iter().copied().find(|&f| f != cuff.cap_face);
    let Some(start) = start else { return failed("the center lies only on the cap") };
    let mut balls = vec![vec![start]];
    while let Some(next) = grow_disk(ce, balls.last().expect("start")) {
        if next.contains(&cuff.cap_face) || Region::from_faces(ce, &next)?.closure_vertices(ce).iter().any(|&v| on_cuff[v]) {
            break;
        }
        balls.push(next);
    }
    let mut why = Vec::new();
    for ball in balls.iter().rev() {
        for p in 0..l.div_ceil(2) {
            match quadrant_cover(emb, &cut, &origin, &g, &ring, ball, p) {
                Ok(pieces) => return Ok(pieces),
                Err(e) => why.push(e.to_string()),
            }
        }
    }
    failed(format!(
        "no K4-subdivision found around a one-sided cycle of length {l} ({} attempts; last: {})",
        why.len(),
        why.last().map_or("none", |s| s.as_str())
    ))
}

fn quadrant_cover(
    emb: &Embedding,
    cut: &crate::embed::CutResult,
    origin: &[Option<usize>],
    g: &Graph,
    ring: &[usize],
    ball: &[usize],
    p: usize,
) -> Result<Vec<CoverPiece>> {
    let ce = &cut.embedding;
    let fs = ce.faces();
    let two_l = ring.len();
    let l = two_l / 2;
    let q = p + l / 2;
    let ends = [p, q, p + l, q + l];
    let ball_r = Region::from_faces(ce, ball)?;
    let qb = ball_r.boundary_vertices(ce);
    let in_ball = ball_r.closure_vertices(ce);
    // paths from the four ring points to the ball boundary, through the annulus
    let n = ce.n();
    let (s, t) = (n, n + 1);
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend(ends.iter().map(|&i| (s, ring[i])));
    edges.extend(qb.iter().map(|&v| (v, t)));
    let aug = Graph::from_edges(n + 2, edges);
    let mut blocked = vec![false; n + 2];
    for &v in &in_ball {
        blocked[v] = qb.binary_search(&v).is_err();
    }
    for (i, &v) in ring.iter().enumerate() {
        blocked[v] = !ends.contains(&i);
    }
    let paths = crate::graph::disjoint_paths_avoiding(&aug, s, t, &blocked);
    if paths.len() < 4 {
        return failed(format!("only {} disjoint paths from the cycle to the ball", paths.len()));
    }
    let mut cut_edge = vec![false; ce.m()];
    for path in &paths {
        let inner: Vec<usize> = path.iter().copied().filter(|&v| v < n).collect();
        let stop = inner.iter().position(|v| qb.binary_search(v).is_ok()).unwrap_or(inner.len() - 1);
        for w in inner[..=stop].windows(2) {
            for &d in ce.rotation(w[0]) {
                if ce.head(d) == w[1] {
                    cut_edge[d / 2] = true;
                }
            }
        }
    }
    let mut annulus = vec![true; fs.count()];
    for &f in ball {
        annulus[f] = false;
    }
    annulus[cut.cuffs[0].cap_face] = false;
    // quadrants: components of the annulus across edges off the paths
    let quads = edge_components(ce, &annulus, true);
    let mut split: Vec<Vec<usize>> = Vec::new();
    for comp in quads {
        let set: BTreeSet<usize> = comp.iter().copied().collect();
        let mut seen = BTreeSet::new();
        for &f0 in &comp {
            if !seen.insert(f0) {
                continue;
            }
            let mut part = vec![f0];
            let mut k = 0;
            while k < part.len() {
                let f = part[k];
                k += 1;
                for e in fs.edges(f) {
                    if cut_edge[e] {
                        continue;
                    }
                    for h in [fs.side_a(e), fs.side_b(e)] {
                        if set.contains(&h) && seen.insert(h) {
                            part.push(h);
                        }
                    }
                }
            }
            part.sort_unstable();
            split.push(part);
        }
    }
    if split.len() != 4 {
        return failed(format!("the paths split the annulus into {} parts", split.len()));
    }
    // which ring arc each part lies on
    let cap = cut.cuffs[0].cap_face;
    let arc_of = |i: usize| -> usize { ends.iter().filter(|&&e| e <= i).count() % 4 };
    let mut groups: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for part in &split {
        let arcs: BTreeSet<usize> = (0..two_l)
            .filter(|&i| {
                let d = cut.cuffs[0].darts[i];
                let e = d / 2;
                let other = if fs.side_a(e) == cap { fs.side_b(e) } else { fs.side_a(e) };
                part.binary_search(&other).is_ok()
            })
            .map(|i| arc_of(i) % 2)
            .collect();
        if arcs.len() != 1 {
            return failed("a quadrant meets two arcs of the cycle");
        }
        let a = *arcs.iter().next().expect("one arc");
        groups[a].extend(part.iter().filter_map(|&f| origin[f]));
    }
    let mut inner = vec![ball.iter().filter_map(|&f| origin[f]).collect::<Vec<_>>()];
    for grp in groups {
        inner.push(grp);
    }
    let mut pieces = Vec::new();
    for (i, mut faces) in inner.into_iter().enumerate() {
        faces.sort_unstable();
        faces.dedup();
        let outer = grow_disk(emb, &faces).ok_or_else(|| crate::Error::Failed(format!("disk {i} does not grow to a disk")))?;
        pieces.push(disk_piece(emb, i, faces, outer)?);
    }
    check_union(emb, &pieces)?;
    Ok(pieces)
}

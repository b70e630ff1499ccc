//! Graph families with canonical embeddings and root sets.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::embed::format::Hint;
use crate::embed::{Dart, Embedding, RootSet};
use crate::error::{malformed, precondition, Result};
use crate::graph::Graph;

/// Orientable embedding of a simple graph from consistently oriented
/// triangles: each triangle `(a, b, c)` makes `c` follow `b` at `a`.
pub fn from_triangles(n: usize, tris: &[[usize; 3]]) -> Result<Embedding> {
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for t in tris {
        for k in 0..3 {
            let (a, b, c) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
            if succ[a].insert(b, c).is_some() {
                return malformed(format!("corner {b} at {a} appears in two triangles"));
            }
        }
    }
    let mut nbrs = Vec::with_capacity(n);
    for (a, s) in succ.iter().enumerate() {
        let Some(&start) = s.keys().min() else {
            return malformed(format!("vertex {a} lies on no triangle"));
        };
        let mut order = vec![start];
        let mut x = s[&start];
        while x != start {
            if order.len() > s.len() {
                return malformed(format!("triangles around {a} do not close up"));
            }
            order.push(x);
            x = *s.get(&x).ok_or_else(|| crate::Error::Malformed(format!("link of {a} is not a cycle")))?;
        }
        if order.len() != s.len() {
            return malformed(format!("link of {a} is not a single cycle"));
        }
        nbrs.push(order);
    }
    Embedding::from_neighbor_rotation(&nbrs)
}

/// Embedding of a triangulated closed surface from unoriented triangles. The
/// rotation at each vertex follows its link in some direction; signatures mark
/// the edges where the two directions disagree.
pub fn from_triangles_unoriented(n: usize, tris: &[[usize; 3]]) -> Result<Embedding> {
    let mut link: Vec<BTreeMap<usize, Vec<usize>>> = vec![BTreeMap::new(); n];
    for t in tris {
        for k in 0..3 {
            let (a, b, c) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
            if a >= n || a == b || a == c || b == c {
                return malformed(format!("bad triangle {t:?}"));
            }
            link[a].entry(b).or_default().push(c);
            link[a].entry(c).or_default().push(b);
        }
    }
    let mut order: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (a, l) in link.iter().enumerate() {
        let Some(&start) = l.keys().next() else {
            return malformed(format!("vertex {a} lies on no triangle"));
        };
        if let Some((b, _)) = l.iter().find(|(_, x)| x.len() != 2) {
            return malformed(format!("edge {a}-{b} does not lie on exactly two triangles"));
        }
        let mut seq = vec![start];
        let (mut prev, mut x) = (start, l[&start][0].min(l[&start][1]));
        while x != start {
            if seq.len() > l.len() {
                return malformed(format!("link of {a} is not a cycle"));
            }
            seq.push(x);
            let nx = if l[&x][0] == prev { l[&x][1] } else { l[&x][0] };
            prev = x;
            x = nx;
        }
        if seq.len() != l.len() {
            return malformed(format!("link of {a} is not a single cycle"));
        }
        order.push(seq);
    }
    let mut id: HashMap<(usize, usize), usize> = HashMap::new();
    let mut ends = Vec::new();
    for (u, seq) in order.iter().enumerate() {
        for &v in seq {
            let key = (u.min(v), u.max(v));
            id.entry(key).or_insert_with(|| {
                ends.push([key.0, key.1]);
                ends.len() - 1
            });
        }
    }
    let pos: Vec<HashMap<usize, usize>> =
        order.iter().map(|s| s.iter().enumerate().map(|(i, &v)| (v, i)).collect()).collect();
    // does `c` directly follow `b` in the rotation at `a`
    let follows = |a: usize, b: usize, c: usize| (pos[a][&b] + 1) % order[a].len() == pos[a][&c];
    let sig = ends
        .iter()
        .map(|&[u, v]| {
            let w = link[u][&v][0];
            let fu = follows(u, v, w);
            let fv = follows(v, w, u);
            if fu == fv {
                1
            } else {
                -1
            }
        })
        .collect();
    let rot = order
        .iter()
        .enumerate()
        .map(|(u, seq)| {
            seq.iter()
                .map(|&v| {
                    let k = id[&(u.min(v), u.max(v))];
                    2 * k + usize::from(ends[k][0] != u)
                })
                .collect()
        })
        .collect();
    Embedding::new(ends, sig, rot)
}

/// Triangulated Klein bottle: a `w x h` grid triangulated like
/// [`torus_grid`], with the top row glued to the bottom row reversed.
/// Vertex `(x, y)` has id `x + w * y`.
pub fn klein_grid(w: usize, h: usize) -> Result<Embedding> {
    if w < 4 || h < 4 {
        return precondition("Klein grid needs both sides at least 4");
    }
    let at = |x: usize, y: usize| {
        let x = x % w;
        if y == h {
            (w - 1 - x) % w
        } else {
            x + w * y
        }
    };
    let mut tris = Vec::new();
    for y in 0..h {
        for x in 0..w {
            tris.push([at(x, y), at(x + 1, y), at(x + 1, y + 1)]);
            tris.push([at(x, y), at(x + 1, y + 1), at(x, y + 1)]);
        }
    }
    from_triangles_unoriented(w * h, &tris)
}

/// K6 triangulating the projective plane (the hemi-icosahedron).
pub fn projective_k6() -> Embedding {
    let tris = [
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ];
    from_triangles_unoriented(6, &tris).expect("fixed triangulation")
}

/// Planar K4: outer triangle 0, 1, 2 around vertex 3.
pub fn k4() -> Embedding {
    Embedding::from_neighbor_rotation(&[vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]])
        .expect("fixed rotation")
}

/// Wheel with rim `0..n` and hub `n`.
pub fn wheel(n: usize) -> Result<Embedding> {
    if n < 3 {
        return precondition("wheel needs at least 3 rim vertices");
    }
    let mut nbrs: Vec<Vec<usize>> =
        (0..n).map(|i| vec![(i + 1) % n, n, (i + n - 1) % n]).collect();
    nbrs.push((0..n).collect());
    Embedding::from_neighbor_rotation(&nbrs)
}

/// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Embedding {
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut tris = Vec::new();
    for i in 0..5 {
        tris.push([0, u(i), u(i + 1)]);
        tris.push([u(i), l(i), u(i + 1)]);
        tris.push([u(i + 1), l(i), l(i + 1)]);
        tris.push([l(i), 11, l(i + 1)]);
    }
    from_triangles(12, &tris).expect("fixed triangulation")
}

/// Vertex ids of the windmill.
struct WindmillIds {
    p: usize,
    q2: usize,
}

impl WindmillIds {
    fn u(&self, i: usize) -> usize {
        2 * (i % self.p)
    }
    fn v(&self, i: usize) -> usize {
        2 * (i % self.p) + 1
    }
    fn z(&self) -> usize {
        2 * self.p
    }
    /// Path vertex `j` (1-based) of vane `i`; `k` is 0, 1, 2 for the a, b, c paths.
    fn path(&self, i: usize, k: usize, j: usize) -> usize {
        if j == 1 {
            return match k {
                0 => self.u(i),
                1 => self.v(i),
                _ => self.u(i + 1),
            };
        }
        2 * self.p + 1 + 3 * (self.q2 - 1) * i + 3 * (j - 2) + k
    }
}

/// The windmill of even parameter `t >= 6`: a wheel on `t` rim vertices with
/// a vane of three rung-connected paths attached to every other rim edge.
pub fn windmill(t: usize) -> Result<Embedding> {
    if t < 6 || t % 2 == 1 {
        return precondition(format!("windmill needs an even parameter of at least 6, got {t}"));
    }
    let p = t / 2;
    let q2 = 2 * (t / 5);
    let w = WindmillIds { p, q2 };
    let n = 2 * p + 1 + 3 * p * (q2 - 1);
    let mut nbrs = vec![Vec::new(); n];
    nbrs[w.z()] = (0..2 * p).collect();
    let a = |i, j| w.path(i, 0, j);
    let b = |i, j| w.path(i, 1, j);
    let c = |i, j| w.path(i, 2, j);
    for i in 0..p {
        let prev = (i + p - 1) % p;
        nbrs[w.u(i)] = vec![c(prev, 2), a(i, 2), w.v(i), w.z(), w.v(prev)];
        nbrs[w.v(i)] = vec![b(i, 2), w.u(i + 1), w.z(), w.u(i)];
        for j in 2..q2 {
            nbrs[a(i, j)] = vec![a(i, j + 1), b(i, j), a(i, j - 1)];
            nbrs[b(i, j)] = vec![b(i, j + 1), c(i, j), b(i, j - 1), a(i, j)];
            nbrs[c(i, j)] = vec![c(i, j + 1), c(i, j - 1), b(i, j)];
        }
        nbrs[a(i, q2)] = vec![c(i, q2), b(i, q2), a(i, q2 - 1)];
        nbrs[b(i, q2)] = vec![c(i, q2), b(i, q2 - 1), a(i, q2)];
        nbrs[c(i, q2)] = vec![c(i, q2 - 1), b(i, q2), a(i, q2)];
    }
    let mut roots = Vec::new();
    for i in 0..p {
        for j in (1..=q2).step_by(2) {
            roots.push(b(i, j));
        }
    }
    Ok(Embedding::from_neighbor_rotation(&nbrs)?.with_roots(RootSet::new(roots)))
}

/// Strong product of two simple graphs; vertex `(x, y)` gets id `x * |H| + y`.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.n();
    let mut edges = Vec::new();
    for x in 0..g.n() {
        for y in 0..nh {
            let id = x * nh + y;
            for &y2 in h.neighbors(y) {
                edges.push((id, x * nh + y2));
            }
            for &x2 in g.neighbors(x) {
                edges.push((id, x2 * nh + y));
                for &y2 in h.neighbors(y) {
                    edges.push((id, x2 * nh + y2));
                }
            }
        }
    }
    Graph::from_edges(g.n() * nh, edges)
}

/// The bagel on `n = 2p` vertices, the strong product of an edge and a
/// `p`-cycle, embedded in the torus with every vertex rooted. Vertex `v_i` is
/// `i` and `w_i` is `p + i`. The faces are `2p` triangles and `p` quadrilaterals.
pub fn bagel(n: usize) -> Result<Embedding> {
    if n < 6 || n % 2 == 1 {
        return precondition(format!("bagel needs an even size of at least 6, got {n}"));
    }
    let p = n / 2;
    let v = |i: usize| i % p;
    let w = |i: usize| p + i % p;
    let mut nbrs = vec![Vec::new(); n];
    for i in 0..p {
        let (ip, im) = (i + 1, i + p - 1);
        nbrs[v(i)] = vec![v(ip), w(ip), w(i), v(im), w(im)];
        nbrs[w(i)] = vec![w(ip), v(ip), w(im), v(im), v(i)];
    }
    Ok(Embedding::from_neighbor_rotation(&nbrs)?.with_roots(RootSet::all(n)))
}

/// Triangulated torus grid: `C_m x C_m` with the steps (1,0), (0,1), (1,1).
/// Vertex `(x, y)` has id `x + m * y`.
pub fn torus_grid(m: usize) -> Result<Embedding> {
    if m < 3 {
        return precondition("torus grid needs m >= 3");
    }
    let id = |x: usize, y: usize| (x % m) + m * (y % m);
    let mut tris = Vec::new();
    for y in 0..m {
        for x in 0..m {
            tris.push([id(x, y), id(x + 1, y), id(x + 1, y + 1)]);
            tris.push([id(x, y), id(x + 1, y + 1), id(x, y + 1)]);
        }
    }
    from_triangles(m * m, &tris)
}

/// A `k x k` grid with one diagonal per square and an apex joined to the
/// whole outer boundary. Vertex `(x, y)` has id `x + k * y`; the apex is `k * k`.
pub fn grid_triangulation(k: usize) -> Result<Embedding> {
    if k < 2 {
        return precondition("grid triangulation needs k >= 2");
    }
    let id = |x: usize, y: usize| x + k * y;
    let apex = k * k;
    let mut tris = Vec::new();
    for y in 0..k - 1 {
        for x in 0..k - 1 {
            tris.push([id(x, y), id(x + 1, y), id(x + 1, y + 1)]);
            tris.push([id(x, y), id(x + 1, y + 1), id(x, y + 1)]);
        }
    }
    // outer boundary counterclockwise
    let mut ring = Vec::new();
    for x in 0..k - 1 {
        ring.push(id(x, 0));
    }
    for y in 0..k - 1 {
        ring.push(id(k - 1, y));
    }
    for x in (1..k).rev() {
        ring.push(id(x, k - 1));
    }
    for y in (1..k).rev() {
        ring.push(id(0, y));
    }
    for i in 0..ring.len() {
        let (a, b) = (ring[i], ring[(i + 1) % ring.len()]);
        tris.push([b, a, apex]);
    }
    from_triangles(k * k + 1, &tris)
}

/// A random simple triangulation of the sphere: stacked insertions followed
/// by random edge flips. Reproducible from the seed.
pub fn random_triangulation(n: usize, seed: u64) -> Result<Embedding> {
    if n < 4 {
        return precondition("random triangulation needs n >= 4");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // third vertex of the triangle to the left of each directed edge
    let mut third: HashMap<(usize, usize), usize> = HashMap::new();
    let add = |third: &mut HashMap<(usize, usize), usize>, t: [usize; 3]| {
        for k in 0..3 {
            third.insert((t[k], t[(k + 1) % 3]), t[(k + 2) % 3]);
        }
    };
    let mut tris: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for &t in &tris {
        add(&mut third, t);
    }
    for z in 3..n {
        let i = rng.gen_range(0..tris.len());
        let [a, b, c] = tris.swap_remove(i);
        for t in [[a, b, z], [b, c, z], [c, a, z]] {
            tris.push(t);
            add(&mut third, t);
        }
    }
    let mut deg = vec![0usize; n];
    for &(u, _) in third.keys() {
        deg[u] += 1;
    }
    let mut edges: Vec<(usize, usize)> = third.keys().copied().filter(|&(u, v)| u < v).collect();
    edges.sort_unstable();
    for _ in 0..2 * n {
        let (a, b) = *edges.choose(&mut rng).expect("edges exist");
        let c = third[&(a, b)];
        let d = third[&(b, a)];
        if c == d || third.contains_key(&(c, d)) || deg[a] <= 3 || deg[b] <= 3 {
            continue;
        }
        for key in [(a, b), (b, c), (c, a), (b, a), (a, d), (d, b)] {
            third.remove(&key);
        }
        add(&mut third, [a, d, c]);
        add(&mut third, [d, b, c]);
        deg[a] -= 1;
        deg[b] -= 1;
        deg[c] += 1;
        deg[d] += 1;
        let pos = edges.iter().position(|&e| e == (a, b)).expect("edge listed");
        edges[pos] = (c.min(d), c.max(d));
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (&(u, v), &w) in &third {
        let mut t = [u, v, w];
        let k = (0..3).min_by_key(|&k| t[k]).unwrap();
        t.rotate_left(k);
        if seen.insert(t) {
            out.push(t);
        }
    }
    out.sort_unstable();
    from_triangles(n, &out)
}

/// Random 3-connected plane graph: a random triangulation with edges removed
/// in random order, each with probability one half, as long as the graph
/// stays 3-connected.
pub fn random_polyhedron(n: usize, seed: u64) -> Result<Embedding> {
    let mut emb = random_triangulation(n, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut order: Vec<[usize; 2]> = (0..emb.m()).map(|e| emb.ends(e)).collect();
    order.shuffle(&mut rng);
    for [u, v] in order {
        if !rng.gen_bool(0.5) {
            continue;
        }
        let mut del = vec![false; emb.m()];
        let Some(e) = (0..emb.m()).find(|&e| {
            let [a, b] = emb.ends(e);
            (a, b) == (u, v) || (a, b) == (v, u)
        }) else {
            continue;
        };
        del[e] = true;
        let (next, _) = crate::embed::delete_edges(&emb, &del)?;
        if next.graph().is_3_connected() {
            emb = next;
        }
    }
    Ok(emb)
}

/// Attaches a random root set: each vertex independently with probability `p`,
/// and at least one root.
pub fn random_roots(emb: Embedding, p: f64, seed: u64) -> Embedding {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = emb.n();
    let mut roots: Vec<usize> = (0..n).filter(|_| rng.gen_bool(p)).collect();
    if roots.is_empty() {
        roots.push(rng.gen_range(0..n));
    }
    emb.with_roots(RootSet::new(roots))
}

/// Lattice points of the diamond of radius `r`.
fn diamond_points(r: i64) -> Vec<(i64, i64)> {
    let mut pts = Vec::new();
    for j in (-r..=r).rev() {
        for i in -r..=r {
            if i.abs() + j.abs() <= r && (i + r).rem_euclid(2) == 1 && j.rem_euclid(2) == 1 {
                pts.push((i, j));
            }
        }
    }
    pts
}

fn diamond_edges(pts: &[(i64, i64)], r: i64) -> Vec<((i64, i64), (i64, i64))> {
    let mut edges = Vec::new();
    for &(i, j) in pts {
        for (di, dj) in [(2, 0), (0, 2)] {
            let (a, b) = (i + di, j + dj);
            if a.abs() + b.abs() <= r {
                edges.push(((i, j), (a, b)));
            }
        }
    }
    edges
}

fn angle_order(dirs: &mut [(f64, Dart)]) {
    dirs.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("finite angles"));
}

/// Planar diamond grid `D_r`: lattice points `(i, j)` with `|i| + |j| <= r`,
/// `j` odd and `i + r` odd, joined at distance 2.
pub fn diamond_grid(r: usize) -> Result<Embedding> {
    if r < 3 {
        return precondition("diamond grid needs r >= 3");
    }
    let r = r as i64;
    let pts = diamond_points(r);
    let id: HashMap<(i64, i64), usize> = pts.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let edges = diamond_edges(&pts, r);
    let ends: Vec<[usize; 2]> = edges.iter().map(|(a, b)| [id[a], id[b]]).collect();
    let mut dirs: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); pts.len()];
    for (k, (a, b)) in edges.iter().enumerate() {
        let (dx, dy) = ((b.0 - a.0) as f64, (b.1 - a.1) as f64);
        dirs[id[a]].push((dy.atan2(dx), 2 * k));
        dirs[id[b]].push(((-dy).atan2(-dx), 2 * k + 1));
    }
    let rot = dirs
        .into_iter()
        .map(|mut d| {
            angle_order(&mut d);
            d.into_iter().map(|x| x.1).collect()
        })
        .collect();
    let m = ends.len();
    Embedding::new(ends, vec![1; m], rot)
}

/// Vertex id of lattice point `(i, j)` in a projective diamond grid.
#[derive(Debug, Clone)]
pub struct ProjectiveGrid {
    pub embedding: Embedding,
    pub r: usize,
    ids: HashMap<(i64, i64), usize>,
    /// Representative lattice point of every vertex.
    pub points: Vec<(i64, i64)>,
    pub hint: Option<Hint>,
}

impl ProjectiveGrid {
    pub fn id(&self, i: i64, j: i64) -> Option<usize> {
        let r = self.r as i64;
        let key = if i.abs() + j.abs() == r && j < 0 { (-i, -j) } else { (i, j) };
        self.ids.get(&key).copied()
    }
}

/// Projective diamond grid `P_r`: the diamond grid with antipodal boundary
/// points identified. Edges stay distinct, so a few parallel edges appear.
/// For `r >= 16` a K4-subdivision and three protective cycles are attached
/// as a hint.
pub fn projective_diamond_grid(r: usize) -> Result<ProjectiveGrid> {
    if r < 3 {
        return precondition("projective diamond grid needs r >= 3");
    }
    let ri = r as i64;
    let pts = diamond_points(ri);
    let on_boundary = |p: (i64, i64)| p.0.abs() + p.1.abs() == ri;
    // representative of a point and whether it is the point itself
    let rep = |p: (i64, i64)| -> ((i64, i64), bool) {
        if on_boundary(p) && p.1 < 0 {
            ((-p.0, -p.1), false)
        } else {
            (p, true)
        }
    };
    let mut ids = HashMap::new();
    let mut points = Vec::new();
    for &p in &pts {
        let (q, own) = rep(p);
        if own {
            ids.insert(q, points.len());
            points.push(q);
        }
    }
    let edges = diamond_edges(&pts, ri);
    let mut ends = Vec::with_capacity(edges.len());
    let mut sig = Vec::with_capacity(edges.len());
    let mut dirs: Vec<Vec<(f64, Dart)>> = vec![Vec::new(); points.len()];
    // direction of an edge leaving lattice point `a` towards `b`, in the chart
    // of the representative of `a`
    let chart_dir = |a: (i64, i64), b: (i64, i64)| -> f64 {
        let (mut dx, mut dy) = ((b.0 - a.0) as f64, (b.1 - a.1) as f64);
        let (_, own) = rep(a);
        if !own {
            // carry over by the antipodal map, then reflect across the tangent
            let q = (-a.0, -a.1);
            dx = -dx;
            dy = -dy;
            let nx = if q.0 == 0 { 0.0 } else { q.0.signum() as f64 };
            let ny = q.1.signum() as f64;
            let dot = (dx * nx + dy * ny) / (nx * nx + ny * ny);
            dx -= 2.0 * dot * nx;
            dy -= 2.0 * dot * ny;
        }
        dy.atan2(dx)
    };
    for (k, &(a, b)) in edges.iter().enumerate() {
        let (ra, oa) = rep(a);
        let (rb, ob) = rep(b);
        ends.push([ids[&ra], ids[&rb]]);
        sig.push(if oa == ob { 1 } else { -1 });
        dirs[ids[&ra]].push((chart_dir(a, b), 2 * k));
        dirs[ids[&rb]].push((chart_dir(b, a), 2 * k + 1));
    }
    let rot = dirs
        .into_iter()
        .map(|mut d| {
            angle_order(&mut d);
            d.into_iter().map(|x| x.1).collect()
        })
        .collect();
    let embedding = Embedding::new(ends, sig, rot)?;
    let mut grid = ProjectiveGrid { embedding, r, ids, points, hint: None };
    if r >= 16 {
        grid.hint = Some(projective_hint(&grid));
    }
    Ok(grid)
}

fn projective_hint(g: &ProjectiveGrid) -> Hint {
    let r = g.r as i64;
    let id = |i: i64, j: i64| g.id(i, j).expect("hint point inside the grid");
    // first coordinates are odd for even r and even for odd r
    let s = if r % 2 == 0 { 0 } else { 1 };
    let (b5, p7, p3) = (5 + s, 7 + s, 3 + s);
    let row_end = |j: i64| {
        // largest i with i + r odd and |i| + |j| <= r
        let mut i = r - j.abs();
        while (i + r).rem_euclid(2) != 1 {
            i -= 1;
        }
        i
    };
    let row = |j: i64, from: i64, to: i64| -> Vec<usize> {
        let step = if to >= from { 2 } else { -2 };
        let mut out = Vec::new();
        let mut i = from;
        loop {
            out.push(id(i, j));
            if i == to {
                break;
            }
            i += step;
        }
        out
    };
    let col = |i: i64, from: i64, to: i64| -> Vec<usize> {
        let step = if to >= from { 2 } else { -2 };
        let mut out = Vec::new();
        let mut j = from;
        loop {
            out.push(id(i, j));
            if j == to {
                break;
            }
            j += step;
        }
        out
    };
    let j5 = 5;
    let e5 = row_end(j5);
    // square of the four branch vertices
    let mut f1 = row(j5, b5, -b5);
    f1.pop();
    f1.extend(col(-b5, j5, -j5));
    f1.pop();
    f1.extend(row(-j5, -b5, b5));
    f1.pop();
    f1.extend(col(b5, -j5, j5));
    f1.pop();
    // both full rows j = 5 and j = -5 joined through the boundary
    let mut f2 = row(j5, -e5, e5);
    f2.pop();
    f2.extend(row(-j5, -e5, e5));
    f2.pop();
    // the two side regions joined through the boundary
    let mut f3 = col(b5, -j5, j5);
    f3.pop();
    f3.extend(row(j5, b5, e5));
    f3.pop();
    f3.extend(row(-j5, -e5, -b5));
    f3.pop();
    f3.extend(col(-b5, -j5, j5));
    f3.pop();
    f3.extend(row(j5, -b5, -e5));
    f3.pop();
    f3.extend(row(-j5, e5, b5));
    f3.pop();
    let mut c1 = row(7, p7, -p7);
    c1.pop();
    c1.extend(col(-p7, 7, -7));
    c1.pop();
    c1.extend(row(-7, -p7, p7));
    c1.pop();
    c1.extend(col(p7, -7, 7));
    c1.pop();
    let e3 = row_end(3);
    let mut c2 = row(3, -e3, e3);
    c2.pop();
    c2.extend(row(-3, -e3, e3));
    c2.pop();
    let e7 = row_end(7);
    let mut c3 = col(p3, -7, 7);
    c3.pop();
    c3.extend(row(7, p3, e7));
    c3.pop();
    c3.extend(row(-7, -e7, -p3));
    c3.pop();
    c3.extend(col(-p3, -7, 7));
    c3.pop();
    c3.extend(row(7, -p3, -e7));
    c3.pop();
    c3.extend(row(-7, e7, p3));
    c3.pop();
    let branch = vec![id(b5, j5), id(-b5, j5), id(-b5, -j5), id(b5, -j5)];
    let mut faces = vec![f1, f2, f3];
    let mut protect = vec![c1, c2, c3];
    for c in faces.iter_mut().chain(protect.iter_mut()) {
        dedup_cycle(c);
    }
    Hint { branch, faces, protect }
}

/// Removes a repeated closing vertex, if any.
fn dedup_cycle(c: &mut Vec<usize>) {
    while c.len() > 1 && c.first() == c.last() {
        c.pop();
    }
}

/// Named families for command-line use.
pub fn by_name(family: &str, args: &[u64]) -> Result<(Embedding, Option<Hint>)> {
    let arg = |k: usize| -> Result<usize> {
        args.get(k)
            .map(|&x| x as usize)
            .ok_or_else(|| crate::Error::Malformed(format!("{family} needs {} argument(s)", k + 1)))
    };
    let plain = |e: Embedding| Ok((e, None));
    match family {
        "windmill" => plain(windmill(arg(0)?)?),
        "bagel" => plain(bagel(arg(0)?)?),
        "diamond" => plain(diamond_grid(arg(0)?)?),
        "projective" => {
            let g = projective_diamond_grid(arg(0)?)?;
            let n = g.embedding.n();
            Ok((g.embedding.with_roots(RootSet::all(n)), g.hint))
        }
        "wheel" => {
            let e = wheel(arg(0)?)?;
            let n = e.n();
            plain(e.with_roots(RootSet::new((0..n - 1).collect())))
        }
        "k4" => plain(k4()),
        "icosahedron" => plain(icosahedron()),
        "triangulation" => {
            let n = arg(0)?;
            let seed = args.get(1).copied().unwrap_or(0);
            plain(random_roots(random_triangulation(n, seed)?, 0.3, seed))
        }
        "torus-grid" => {
            let e = torus_grid(arg(0)?)?;
            let n = e.n();
            plain(e.with_roots(RootSet::all(n)))
        }
        "grid" => plain(grid_triangulation(arg(0)?)?),
        "klein" => {
            let e = klein_grid(arg(0)?, arg(1)?)?;
            let n = e.n();
            plain(e.with_roots(RootSet::all(n)))
        }
        "k6" => plain(projective_k6().with_roots(RootSet::all(6))),
        _ => malformed(format!("unknown family {family:?}")),
    }
}

/// Names accepted by [`by_name`].
pub const FAMILIES: &[&str] = &[
    "windmill",
    "bagel",
    "diamond",
    "projective",
    "wheel",
    "k4",
    "icosahedron",
    "triangulation",
    "torus-grid",
    "grid",
    "klein",
    "k6",
];

/// Vertex degrees keyed by degree, used in tests and reports.
pub fn degree_histogram(emb: &Embedding) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for v in 0..emb.n() {
        *h.entry(emb.degree(v)).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::{check_polyhedral, face_width};

    #[test]
    fn windmill_counts() {
        let w = windmill(10).unwrap();
        assert_eq!(w.n(), 56);
        assert_eq!(w.roots().unwrap().len(), 10);
        assert_eq!(w.euler_genus(), 0);
        assert!(w.graph().is_3_connected());
        let w6 = windmill(6).unwrap();
        assert_eq!((w6.n(), w6.roots().unwrap().len()), (16, 3));
        assert!(windmill(5).is_err());
        assert!(windmill(7).is_err());
    }

    #[test]
    fn windmill_roots_are_face_independent() {
        for t in [6, 8, 10, 12] {
            let w = windmill(t).unwrap();
            let f = w.faces();
            let at = f.faces_at_vertices(&w);
            let roots: Vec<usize> = w.roots().unwrap().iter().collect();
            for (i, &a) in roots.iter().enumerate() {
                for &b in &roots[i + 1..] {
                    assert!(at[a].iter().all(|x| !at[b].contains(x)), "t={t}: {a} {b}");
                }
            }
        }
    }

    #[test]
    fn bagel_structure() {
        let b = bagel(14).unwrap();
        assert_eq!((b.n(), b.m(), b.face_count()), (14, 35, 21));
        assert_eq!(b.euler_genus(), 2);
        assert!(b.is_orientable());
        let b6 = bagel(6).unwrap();
        assert_eq!(b6.m(), 15);
        assert_eq!(face_width(&b).unwrap().value(), Some(2));
    }

    #[test]
    fn strong_product_of_edges_is_k4() {
        let k2 = Graph::from_edges(2, [(0, 1)]);
        let p = strong_product(&k2, &k2);
        assert_eq!(p.edge_count(), 6);
    }

    #[test]
    fn small_families() {
        let ico = icosahedron();
        assert_eq!((ico.n(), ico.m(), ico.face_count()), (12, 30, 20));
        assert!(check_polyhedral(&ico));
        let w = wheel(6).unwrap();
        assert_eq!(w.n(), 7);
        assert_eq!(w.euler_genus(), 0);
        assert!(check_polyhedral(&k4()));
    }

    #[test]
    fn torus_grid_is_torus() {
        let t = torus_grid(5).unwrap();
        assert_eq!((t.m(), t.face_count()), (75, 50));
        assert_eq!(t.euler_genus(), 2);
    }

    #[test]
    fn unoriented_triangles_match_oriented() {
        let m = 5;
        let id = |x: usize, y: usize| (x % m) + m * (y % m);
        let mut tris = Vec::new();
        for y in 0..m {
            for x in 0..m {
                // every second triangle listed backwards
                tris.push([id(x, y), id(x + 1, y + 1), id(x + 1, y)]);
                tris.push([id(x, y), id(x + 1, y + 1), id(x, y + 1)]);
            }
        }
        let e = from_triangles_unoriented(m * m, &tris).unwrap();
        assert_eq!((e.face_count(), e.euler_genus()), (50, 2));
        assert!(e.is_orientable());
        assert!(e.faces().walk(0).len() == 3);
    }

    #[test]
    fn klein_and_k6() {
        let k = klein_grid(6, 5).unwrap();
        assert_eq!((k.n(), k.face_count(), k.euler_genus()), (30, 60, 2));
        assert!(!k.is_orientable());
        assert!(k.graph().is_3_connected());
        let p = projective_k6();
        assert_eq!((p.m(), p.face_count(), p.euler_genus()), (15, 10, 1));
        assert!(!p.is_orientable());
        assert_eq!(face_width(&p).unwrap().value(), Some(3));
        assert!(check_polyhedral(&p));
    }

    #[test]
    fn grid_triangulation_is_planar() {
        let g = grid_triangulation(5).unwrap();
        assert_eq!(g.euler_genus(), 0);
        assert!(g.graph().is_3_connected());
    }

    #[test]
    fn random_triangulations_are_reproducible() {
        let a = random_triangulation(30, 7).unwrap();
        let b = random_triangulation(30, 7).unwrap();
        assert!(a.same_structure(&b));
        assert_eq!(a.euler_genus(), 0);
        assert_eq!(a.m(), 3 * 30 - 6);
        assert!(a.graph().is_3_connected());
    }

    #[test]
    fn projective_grids() {
        let d3 = diamond_grid(3).unwrap();
        assert_eq!((d3.n(), d3.m()), (8, 9));
        assert_eq!(d3.euler_genus(), 0);
        let p3 = projective_diamond_grid(3).unwrap().embedding;
        assert_eq!((p3.n(), p3.m(), p3.face_count()), (5, 9, 5));
        assert_eq!(p3.euler_genus(), 1);
        for r in 4..=9 {
            let p = projective_diamond_grid(r).unwrap().embedding;
            assert_eq!(p.euler_genus(), 1, "r = {r}");
        }
        let p16 = projective_diamond_grid(16).unwrap();
        assert_eq!(p16.embedding.n(), 128);
        assert_eq!(p16.embedding.euler_genus(), 1);
        assert!(p16.hint.is_some());
    }
}

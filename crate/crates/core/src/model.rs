//! Certificates: rooted K2,t models and face covers, their checkers and text
//! forms.
//!
//! ```text
//! cover f3 f17 f20
//! model x1: 4 5 ; x2: 9 ; y1: 0 ; y2: 1 2
//! ```

use std::fmt;

use crate::embed::{Embedding, RootSet};
use crate::error::{malformed, Error, Result};
use crate::graph::Graph;

/// Branch sets of a rooted K2,t model: two centers and t satellites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedK2tModel {
    pub centers: [Vec<usize>; 2],
    pub satellites: Vec<Vec<usize>>,
    /// For satellite `j`, an edge to each center as `(center vertex, satellite vertex)`.
    pub witness_edges: Vec<[(usize, usize); 2]>,
}

impl RootedK2tModel {
    /// Sorts the branch sets and finds witness edges. Fails when a satellite
    /// misses a center.
    pub fn new(g: &Graph, centers: [Vec<usize>; 2], satellites: Vec<Vec<usize>>) -> Result<Self> {
        let sort = |mut v: Vec<usize>| {
            v.sort_unstable();
            v.dedup();
            v
        };
        let centers = centers.map(sort);
        let satellites: Vec<Vec<usize>> = satellites.into_iter().map(sort).collect();
        let mut witness_edges = Vec::with_capacity(satellites.len());
        for (j, y) in satellites.iter().enumerate() {
            let mut pair = [(0, 0); 2];
            for (i, x) in centers.iter().enumerate() {
                pair[i] = find_edge(g, x, y).ok_or_else(|| {
                    Error::Failed(format!("satellite {} is not adjacent to center {}", j + 1, i + 1))
                })?;
            }
            witness_edges.push(pair);
        }
        Ok(RootedK2tModel { centers, satellites, witness_edges })
    }

    pub fn t(&self) -> usize {
        self.satellites.len()
    }
}

fn find_edge(g: &Graph, a: &[usize], b: &[usize]) -> Option<(usize, usize)> {
    for &u in a {
        for &w in g.neighbors(u) {
            if b.binary_search(&w).is_ok() {
                return Some((u, w));
            }
        }
    }
    None
}

/// Outcome of a certificate check; `problems` is empty when valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Verdict {
    pub problems: Vec<String>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            write!(f, "valid")
        } else {
            write!(f, "{}", self.problems.join("; "))
        }
    }
}

fn is_connected_set(g: &Graph, set: &[usize]) -> bool {
    if set.is_empty() {
        return false;
    }
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![set[0]];
    seen[set[0]] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == set.len()
}

/// Checks disjointness, connectivity of every branch set, the 2t adjacencies
/// and a root in every satellite.
pub fn verify_model(g: &Graph, roots: &RootSet, model: &RootedK2tModel) -> Verdict {
    let mut problems = Vec::new();
    let n = g.n();
    let names: Vec<String> = ["center 1".to_string(), "center 2".to_string()]
        .into_iter()
        .chain((1..=model.satellites.len()).map(|j| format!("satellite {j}")))
        .collect();
    let sets: Vec<&Vec<usize>> = model.centers.iter().chain(model.satellites.iter()).collect();
    let mut owner = vec![usize::MAX; n];
    for (k, set) in sets.iter().enumerate() {
        if set.is_empty() {
            problems.push(format!("{} is empty", names[k]));
            continue;
        }
        for &v in set.iter() {
            if v >= n {
                problems.push(format!("{} holds vertex {v} out of range", names[k]));
                continue;
            }
            if owner[v] != usize::MAX && owner[v] != k {
                problems.push(format!("{} and {} share vertex {v}", names[owner[v]], names[k]));
            }
            owner[v] = k;
        }
        if set.iter().all(|&v| v < n) && !is_connected_set(g, set) {
            problems.push(format!("{} is not connected", names[k]));
        }
    }
    if !problems.is_empty() {
        return Verdict { problems };
    }
    if model.witness_edges.len() != model.satellites.len() {
        problems.push("witness edge count differs from satellite count".into());
    }
    for (j, y) in model.satellites.iter().enumerate() {
        for i in 0..2 {
            let ok = match model.witness_edges.get(j) {
                Some(pair) => {
                    let (a, b) = pair[i];
                    a < n
                        && b < n
                        && g.has_edge(a, b)
                        && model.centers[i].contains(&a)
                        && y.contains(&b)
                }
                None => false,
            };
            if !ok {
                problems.push(format!("no edge between center {} and satellite {}", i + 1, j + 1));
            }
        }
        if !y.iter().any(|&v| roots.contains(v)) {
            problems.push(format!("unrooted satellite {}", j + 1));
        }
    }
    Verdict { problems }
}

/// A set of faces of an embedding.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FaceCover {
    pub faces: Vec<usize>,
}

impl FaceCover {
    pub fn new(mut faces: Vec<usize>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        FaceCover { faces }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Every root must lie on a listed face.
pub fn verify_cover(emb: &Embedding, roots: &RootSet, cover: &FaceCover) -> Verdict {
    let mut problems = Vec::new();
    let fs = emb.faces();
    let mut covered = vec![false; emb.n()];
    for &f in &cover.faces {
        if f >= fs.count() {
            problems.push(format!("face {f} does not exist"));
            continue;
        }
        for v in fs.vertices(emb, f) {
            covered[v] = true;
        }
    }
    for r in roots.iter() {
        if r >= emb.n() {
            problems.push(format!("root {r} out of range"));
        } else if !covered[r] {
            problems.push(format!("root {r} is on no listed face"));
        }
    }
    Verdict { problems }
}

/// Either kind of certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Cover(FaceCover),
    Model(RootedK2tModel),
}

impl Certificate {
    pub fn verify(&self, emb: &Embedding, roots: &RootSet) -> Verdict {
        match self {
            Certificate::Cover(c) => verify_cover(emb, roots, c),
            Certificate::Model(m) => verify_model(&emb.graph(), roots, m),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        match self {
            Certificate::Cover(c) => {
                write!(f, "cover")?;
                for x in &c.faces {
                    write!(f, " f{x}")?;
                }
                Ok(())
            }
            Certificate::Model(m) => {
                write!(f, "model x1: {} ; x2: {}", join(&m.centers[0]), join(&m.centers[1]))?;
                for (j, y) in m.satellites.iter().enumerate() {
                    write!(f, " ; y{}: {}", j + 1, join(y))?;
                }
                Ok(())
            }
        }
    }
}

/// Parses a certificate. Witness edges of a model are recomputed from the
/// graph, so the result still has to pass verification.
pub fn parse_certificate(text: &str, g: &Graph) -> Result<Certificate> {
    let body: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    let body = body.trim();
    if let Some(rest) = body.strip_prefix("cover") {
        let faces = rest
            .split_whitespace()
            .map(|tok| {
                tok.trim_start_matches('f')
                    .parse()
                    .map_err(|_| Error::Malformed(format!("bad face token {tok:?}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        return Ok(Certificate::Cover(FaceCover::new(faces)));
    }
    let Some(rest) = body.strip_prefix("model") else {
        return malformed("certificate must start with `cover` or `model`");
    };
    let mut centers: [Option<Vec<usize>>; 2] = [None, None];
    let mut sats: Vec<(usize, Vec<usize>)> = Vec::new();
    for part in rest.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let Some((name, vs)) = part.split_once(':') else {
            return malformed(format!("branch set without a name: {part:?}"));
        };
        let vs = vs
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| Error::Malformed(format!("bad vertex {x:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        if vs.iter().any(|&v| v >= g.n()) {
            return malformed("vertex out of range in certificate");
        }
        let name = name.trim();
        match name {
            "x1" => centers[0] = Some(vs),
            "x2" => centers[1] = Some(vs),
            _ => {
                let j: usize = name
                    .strip_prefix('y')
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| Error::Malformed(format!("unknown branch set {name:?}")))?;
                sats.push((j, vs));
            }
        }
    }
    let [Some(x1), Some(x2)] = centers else {
        return malformed("model needs x1 and x2");
    };
    sats.sort_by_key(|s| s.0);
    let satellites: Vec<Vec<usize>> = sats.into_iter().map(|s| s.1).collect();
    // witness edges are looked up leniently; verification reports what is missing
    let sort = |mut v: Vec<usize>| {
        v.sort_unstable();
        v.dedup();
        v
    };
    let centers = [sort(x1), sort(x2)];
    let satellites: Vec<Vec<usize>> = satellites.into_iter().map(sort).collect();
    let mut witness_edges = Vec::new();
    for y in &satellites {
        let a = find_edge(g, &centers[0], y);
        let b = find_edge(g, &centers[1], y);
        match (a, b) {
            (Some(a), Some(b)) => witness_edges.push([a, b]),
            _ => break,
        }
    }
    Ok(Certificate::Model(RootedK2tModel { centers, satellites, witness_edges }))
}

//! Rooted K2,t models from pairs of trees touching at roots.

use std::collections::BTreeSet;

use crate::embed::RootSet;
use crate::error::{failed, precondition, Result};
use crate::graph::Graph;
use crate::model::{verify_model, RootedK2tModel};
use crate::schnyder::{ancestors_subtree, dominance, Dominance, SchnyderWood, SubTree};

fn tree_degrees(t: &SubTree) -> std::collections::BTreeMap<usize, usize> {
    let mut d = std::collections::BTreeMap::new();
    for &(a, b) in &t.edges {
        *d.entry(a).or_insert(0) += 1;
        *d.entry(b).or_insert(0) += 1;
    }
    d
}

fn checked(g: &Graph, roots: &RootSet, m: RootedK2tModel) -> Result<RootedK2tModel> {
    let v = verify_model(g, roots, &m);
    if !v.ok() {
        return failed(format!("constructed model is invalid: {v}"));
    }
    Ok(m)
}

/// Model from two edge-disjoint trees whose common vertices are leaves of
/// both and roots: the tree interiors are the centers, the common vertices
/// the satellites.
pub fn model_from_trees(g: &Graph, roots: &RootSet, t: &SubTree, t2: &SubTree) -> Result<RootedK2tModel> {
    if t.vertices.len() < 3 || t2.vertices.len() < 3 {
        return precondition("each tree needs at least three vertices");
    }
    let key = |&(a, b): &(usize, usize)| (a.min(b), a.max(b));
    let e1: BTreeSet<(usize, usize)> = t.edges.iter().map(key).collect();
    if let Some(e) = t2.edges.iter().map(key).find(|e| e1.contains(e)) {
        return failed(format!("trees share the edge {}-{}", e.0, e.1));
    }
    let v2: BTreeSet<usize> = t2.vertices.iter().copied().collect();
    let s: Vec<usize> = t.vertices.iter().copied().filter(|v| v2.contains(v)).collect();
    if s.is_empty() {
        return failed("the trees do not touch");
    }
    let (d1, d2) = (tree_degrees(t), tree_degrees(t2));
    for &x in &s {
        if d1.get(&x) != Some(&1) || d2.get(&x) != Some(&1) {
            return failed(format!("shared vertex {x} is not a leaf of both trees"));
        }
        if !roots.contains(x) {
            return failed(format!("shared vertex {x} is not a root"));
        }
    }
    let x1: Vec<usize> = t.vertices.iter().copied().filter(|v| !v2.contains(v)).collect();
    let x2: Vec<usize> = t2.vertices.iter().copied().filter(|v| s.binary_search(v).is_err()).collect();
    let m = RootedK2tModel::new(g, [x1, x2], s.iter().map(|&x| vec![x]).collect())?;
    checked(g, roots, m)
}

/// Model from a chain of `P_i`, built from the `T_{i-1}` and `T_{i+1}`
/// ancestor trees.
pub fn model_from_chain(g: &Graph, roots: &RootSet, wood: &SchnyderWood, i: usize, s: &[usize]) -> Result<RootedK2tModel> {
    let i = i % 3;
    if s.len() < 3 {
        return precondition("a chain needs at least three roots; use the small-t models");
    }
    let sp = wood.special();
    let (before, after) = ((i + 2) % 3, (i + 1) % 3);
    if s.contains(&sp[before]) || s.contains(&sp[after]) {
        return precondition("the chain contains a special vertex of the other two trees");
    }
    for (a, &u) in s.iter().enumerate() {
        for &v in &s[a + 1..] {
            if matches!(dominance(wood, u, v, i), Dominance::Incomparable | Dominance::Equal) {
                return precondition(format!("{u} and {v} are not comparable in P{}", i + 1));
            }
        }
    }
    // the two parallelogram unions meet exactly in S
    let inside = |j: usize, x: usize, u: usize| {
        let (cx, cu) = (wood.numerators(x), wood.numerators(u));
        cx[(j + 2) % 3] <= cu[(j + 2) % 3] && cx[(j + 1) % 3] <= cu[(j + 1) % 3]
    };
    for x in 0..wood.n() {
        let a = s.iter().any(|&u| inside(before, x, u));
        let b = s.iter().any(|&u| inside(after, x, u));
        if a && b && !s.contains(&x) {
            return failed(format!("parallelogram unions share the vertex {x} outside the chain"));
        }
    }
    let t1 = ancestors_subtree(wood, before, s);
    let t2 = ancestors_subtree(wood, after, s);
    model_from_trees(g, roots, &t1, &t2)
}

/// Model from roots sharing the value of coordinate `i`: their `T_i`
/// ancestor tree above the level, and paths that drop below the level and
/// follow `T_{i-1}`.
pub fn model_from_level(g: &Graph, roots: &RootSet, wood: &SchnyderWood, i: usize, s: &[usize]) -> Result<RootedK2tModel> {
    let i = i % 3;
    if s.len() < 3 {
        return precondition("a level set needs at least three roots");
    }
    let c = wood.numerators(s[0])[i];
    if s.iter().any(|&u| wood.numerators(u)[i] != c) {
        return precondition(format!("coordinate {} is not constant on the set", i + 1));
    }
    if c <= 0 || c >= wood.denominator() {
        return precondition(format!("level {c}/{} is not strictly inside (0, 1)", wood.denominator()));
    }
    let t1 = ancestors_subtree(wood, i, s);
    let before = (i + 2) % 3;
    let level = |v: usize| wood.numerators(v)[i];
    let in_s: BTreeSet<usize> = s.iter().copied().collect();
    let mut vs = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &u in s {
        let mut v = u;
        vs.insert(v);
        let mut steps = 0;
        loop {
            steps += 1;
            if steps > 4 * wood.n() {
                return failed("special path does not terminate");
            }
            let w = if level(v) < c {
                match wood.parent(before, v) {
                    Some(p) => p,
                    None => break,
                }
            } else if let Some(&w) = g.neighbors(v).iter().filter(|&&w| level(w) < c).min() {
                w
            } else {
                let p = wood.parent(before, v).expect("level vertices are not a_(i-1)");
                if level(p) != c {
                    return failed(format!("tree step from {v} leaves the level upwards"));
                }
                p
            };
            if in_s.contains(&w) {
                return failed(format!("path from {u} meets the root {w} before leaving the level"));
            }
            edges.insert((v, w));
            if !vs.insert(w) {
                break;
            }
            v = w;
        }
    }
    let t2 = SubTree { vertices: vs.into_iter().collect(), edges: edges.into_iter().collect() };
    model_from_trees(g, roots, &t1, &t2)
}

/// Models for one or two satellites in a 3-connected graph.
pub fn small_t_model(g: &Graph, roots: &RootSet, t: usize) -> Result<RootedK2tModel> {
    let rs: Vec<usize> = roots.iter().collect();
    if rs.len() < t {
        return precondition(format!("{} roots are fewer than t = {t}", rs.len()));
    }
    let m = match t {
        1 => {
            let r = rs[0];
            let nb = g.neighbors(r);
            if nb.len() < 2 {
                return precondition(format!("root {r} has fewer than two neighbours"));
            }
            RootedK2tModel::new(g, [vec![nb[0]], vec![nb[1]]], vec![vec![r]])?
        }
        2 => {
            let (a, b) = (rs[0], rs[1]);
            let paths = g.disjoint_paths(a, b);
            let inner: Vec<Vec<usize>> =
                paths.iter().map(|p| p[1..p.len() - 1].to_vec()).filter(|p| !p.is_empty()).collect();
            if inner.len() < 2 {
                return precondition(format!("roots {a} and {b} are not joined by three disjoint paths"));
            }
            RootedK2tModel::new(g, [inner[0].clone(), inner[1].clone()], vec![vec![a], vec![b]])?
        }
        _ => return precondition("small-t models exist only for t = 1, 2"),
    };
    checked(g, roots, m)
}

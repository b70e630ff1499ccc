use std::collections::HashMap;

use super::Embedding;

/// Direct test for a polyhedral embedding: the graph is simple, every facial
/// walk is a cycle, and two faces meet in nothing, one vertex, or one edge.
pub fn check_polyhedral(emb: &Embedding) -> bool {
    let n = emb.n();
    if n < 4 {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    for e in 0..emb.m() {
        let [u, v] = emb.ends(e);
        if u == v || !seen.insert((u.min(v), u.max(v))) {
            return false;
        }
    }
    let fs = emb.faces();
    let mut face_verts = Vec::with_capacity(fs.count());
    for f in 0..fs.count() {
        let w = fs.walk(f);
        let vs = fs.vertices(emb, f);
        if vs.len() != w.len() || w.len() < 3 {
            return false;
        }
        face_verts.push(vs);
    }
    // shared vertices for every pair of faces
    let mut shared: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let at = fs.faces_at_vertices(emb);
    for v in 0..n {
        if at[v].len() != emb.degree(v) {
            // a face visits v twice
            return false;
        }
        for i in 0..at[v].len() {
            for j in i + 1..at[v].len() {
                shared.entry((at[v][i], at[v][j])).or_default().push(v);
            }
        }
    }
    let g = emb.graph();
    for ((f1, f2), vs) in shared {
        match vs.len() {
            1 => {}
            2 => {
                if !g.has_edge(vs[0], vs[1]) {
                    return false;
                }
                let e1 = fs.edges(f1);
                let common = fs.edges(f2).into_iter().filter(|e| e1.contains(e)).count();
                if common != 1 {
                    return false;
                }
                let [a, b] = emb.ends(fs.edges(f2).into_iter().find(|e| e1.contains(e)).unwrap());
                if !(vs.contains(&a) && vs.contains(&b)) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::k4;

    #[test]
    fn k4_is_polyhedral() {
        assert!(check_polyhedral(&k4()));
    }

    #[test]
    fn cycle_is_not() {
        let c4 = Embedding::from_neighbor_rotation(&[vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]])
            .unwrap();
        assert!(!check_polyhedral(&c4));
    }
}

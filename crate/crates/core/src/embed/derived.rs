use super::{Dart, Embedding};
use crate::error::{malformed, Result};

/// Result of inserting a vertex into every face and joining it to every corner.
#[derive(Debug, Clone)]
pub struct Stellation {
    pub embedding: Embedding,
    /// Number of original vertices; the vertex for face `f` is `n + f`.
    pub n_primal: usize,
    /// Number of original edges; corner edges follow them.
    pub m_primal: usize,
}

/// Joins a new vertex inside each face to all of the face's corners. Corner
/// edges take the orientation of the face walk at that corner as signature.
pub fn stellation(emb: &Embedding) -> Stellation {
    let n = emb.n();
    let m = emb.m();
    let faces = emb.faces();
    let fc = faces.count();
    let mut ends: Vec<[usize; 2]> = (0..m).map(|e| emb.ends(e)).collect();
    let mut sig: Vec<i8> = emb.signatures().to_vec();
    let mut rot: Vec<Vec<Dart>> = vec![Vec::new(); n + fc];
    // face vertex rotation slots indexed by walk position
    let mut face_slots: Vec<Vec<Dart>> =
        (0..fc).map(|f| vec![usize::MAX; faces.walk(f).len()]).collect();
    for x in 0..n {
        for &d in emb.rotation(x) {
            let b = d;
            let a = emb.prev(d);
            let f = faces.corner_face(b);
            let (idx, s) = match faces.index_in_walk(b, 1) {
                Some(i) => (i, 1i8),
                None => (
                    faces
                        .index_in_walk(a, -1)
                        .expect("corner lies on the canonical walk or its reverse"),
                    -1i8,
                ),
            };
            let k = ends.len();
            ends.push([x, n + f]);
            sig.push(s);
            rot[x].push(2 * k);
            rot[x].push(b);
            face_slots[f][idx] = 2 * k + 1;
        }
    }
    for (f, slots) in face_slots.into_iter().enumerate() {
        debug_assert!(slots.iter().all(|&d| d != usize::MAX));
        rot[n + f] = slots.into_iter().rev().collect();
    }
    let embedding = Embedding::new(ends, sig, rot).expect("stellation is well formed");
    Stellation { embedding, n_primal: n, m_primal: m }
}

/// Removes the marked edges. Returns the new embedding and, for each new edge,
/// the id of the edge it came from.
pub fn delete_edges(emb: &Embedding, del: &[bool]) -> Result<(Embedding, Vec<usize>)> {
    let mut new_id = vec![usize::MAX; emb.m()];
    let mut back = Vec::new();
    for e in 0..emb.m() {
        if !del[e] {
            new_id[e] = back.len();
            back.push(e);
        }
    }
    let ends = back.iter().map(|&e| emb.ends(e)).collect();
    let sig = back.iter().map(|&e| emb.sig(e)).collect();
    let rot: Vec<Vec<Dart>> = (0..emb.n())
        .map(|v| {
            emb.rotation(v)
                .iter()
                .filter(|&&d| !del[d / 2])
                .map(|&d| 2 * new_id[d / 2] + d % 2)
                .collect()
        })
        .collect();
    if let Some(v) = rot.iter().position(|r: &Vec<Dart>| r.is_empty()) {
        return malformed(format!("deleting edges isolates vertex {v}"));
    }
    let mut out = Embedding::new(ends, sig, rot)?;
    out.set_roots(emb.roots().cloned());
    Ok((out, back))
}

/// The vertex-face incidence graph, embedded in the same surface. Vertex `v`
/// keeps its id and face `f` becomes vertex `n + f`.
pub fn radial_graph(emb: &Embedding) -> Embedding {
    let st = stellation(emb);
    let del: Vec<bool> = (0..st.embedding.m()).map(|e| e < st.m_primal).collect();
    delete_edges(&st.embedding, &del).expect("radial graph keeps every vertex").0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::k4;

    #[test]
    fn stellation_of_k4_is_triangulated() {
        let e = k4();
        let st = stellation(&e);
        let s = &st.embedding;
        assert_eq!(s.n(), 8);
        assert_eq!(s.m(), 6 + 12);
        assert_eq!(s.face_count(), 12);
        assert_eq!(s.euler_genus(), 0);
    }

    #[test]
    fn radial_graph_of_k4() {
        let r = radial_graph(&k4());
        assert_eq!(r.n(), 8);
        assert_eq!(r.m(), 12);
        assert_eq!(r.face_count(), 6);
        assert_eq!(r.euler_genus(), 0);
    }

    #[test]
    fn radial_graph_projective_loop() {
        let e = Embedding::new(vec![[0, 0]], vec![-1], vec![vec![0, 1]]).unwrap();
        let r = radial_graph(&e);
        assert_eq!(r.euler_genus(), 1);
        assert_eq!(r.face_count(), 1);
    }
}

use super::{Dart, Embedding};

/// Orientation of a tracing state measured in the frame of the edge's first endpoint.
fn first_frame(emb: &Embedding, d: Dart, s: i8) -> i8 {
    if d % 2 == 0 {
        s
    } else {
        s * emb.sig(d / 2)
    }
}

/// The dual embedding. Face `f` becomes vertex `f`; edge `e` of the primal
/// becomes dual edge `e`, running from the face on side A to the face on side B.
pub fn dual(emb: &Embedding) -> Embedding {
    let faces = emb.faces();
    let m = emb.m();
    let mut ends = vec![[0usize; 2]; m];
    let mut orient = vec![[0i8; 2]; m];
    let mut rot = vec![Vec::new(); faces.count()];
    for (f, r) in rot.iter_mut().enumerate() {
        for &(d, s) in faces.walk(f) {
            let e = d / 2;
            let side_a = (d == 2 * e && s == 1) || (d == 2 * e + 1 && s == -emb.sig(e));
            let side = usize::from(!side_a);
            ends[e][side] = f;
            orient[e][side] = first_frame(emb, d, s);
            r.push(2 * e + side);
        }
        // walks keep the face on their right, so reverse to match rotations
        r.reverse();
    }
    let sig = orient.iter().map(|o| o[0] * o[1]).collect();
    Embedding::new(ends, sig, rot).expect("dual of a well-formed embedding")
}

/// Checks that dualising twice returns the primal: the double dual has the
/// same Euler genus and its faces match the primal vertices edge for edge.
pub fn dual_of_dual_matches(emb: &Embedding) -> bool {
    let d = dual(emb);
    let dd = dual(&d);
    if dd.n() != emb.n() || d.n() != emb.face_count() || dd.m() != emb.m() {
        return false;
    }
    if dd.euler_genus() != emb.euler_genus() || d.euler_genus() != emb.euler_genus() {
        return false;
    }
    // faces of the dual correspond to primal vertices
    let mut primal: Vec<Vec<usize>> = (0..emb.n())
        .map(|v| {
            let mut es: Vec<usize> = emb.rotation(v).iter().map(|&x| x / 2).collect();
            es.sort_unstable();
            es
        })
        .collect();
    let df = d.faces();
    let mut dual_faces: Vec<Vec<usize>> = (0..df.count())
        .map(|f| {
            let mut es = df.edges(f);
            es.sort_unstable();
            es
        })
        .collect();
    primal.sort();
    dual_faces.sort();
    primal == dual_faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::tests::k4;

    #[test]
    fn k4_is_self_dual() {
        let d = dual(&k4());
        assert_eq!(d.n(), 4);
        assert_eq!(d.m(), 6);
        assert!(d.graph().is_3_connected());
        assert_eq!(d.face_count(), 4);
        assert!(dual_of_dual_matches(&k4()));
    }

    #[test]
    fn cycle_dual_is_bond() {
        let c5 = Embedding::from_neighbor_rotation(&[
            vec![1, 4],
            vec![2, 0],
            vec![3, 1],
            vec![4, 2],
            vec![0, 3],
        ])
        .unwrap();
        let d = dual(&c5);
        assert_eq!(d.n(), 2);
        assert_eq!(d.m(), 5);
        for e in 0..5 {
            let [a, b] = d.ends(e);
            assert_ne!(a, b);
        }
        assert_eq!(d.euler_genus(), 0);
        assert!(dual_of_dual_matches(&c5));
    }

    #[test]
    fn projective_loop_dual() {
        let e = Embedding::new(vec![[0, 0]], vec![-1], vec![vec![0, 1]]).unwrap();
        let d = dual(&e);
        assert_eq!(d.euler_genus(), 1);
        assert!(dual_of_dual_matches(&e));
    }
}

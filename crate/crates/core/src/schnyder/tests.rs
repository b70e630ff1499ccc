use super::*;
use crate::generators::{icosahedron, k4, random_polyhedron, random_triangulation, wheel};
use crate::RootSet;

fn outer_of(emb: &Embedding, vs: &[usize]) -> usize {
    let mut key = vs.to_vec();
    key.sort_unstable();
    (0..emb.face_count())
        .find(|&f| {
            let mut x = emb.faces().vertices(emb, f);
            x.sort_unstable();
            x == key
        })
        .expect("face exists")
}

fn wood_on_every_frame(emb: &Embedding) {
    for f in 0..emb.face_count() {
        let frame = frame_on_face(emb, f, &RootSet::default()).unwrap();
        let w = compute_schnyder_wood(emb, f, frame).unwrap();
        w.check(emb).unwrap();
    }
}

#[test]
fn k4_center_is_barycenter() {
    let e = k4();
    let w = compute_schnyder_wood(&e, outer_of(&e, &[0, 1, 2]), [0, 1, 2]).unwrap();
    w.check(&e).unwrap();
    assert_eq!(w.denominator(), 3);
    assert_eq!(w.numerators(3), [1, 1, 1]);
    assert_eq!(w.numerators(0), [3, 0, 0]);
    // other cyclic order of the same corners
    let w = compute_schnyder_wood(&e, outer_of(&e, &[0, 1, 2]), [0, 2, 1]).unwrap();
    w.check(&e).unwrap();
}

#[test]
fn rejects_equal_corners() {
    let e = k4();
    assert!(compute_schnyder_wood(&e, 0, [0, 0, 1]).is_err());
}

#[test]
fn wheel_five_with_rim_corners() {
    let e = wheel(5).unwrap();
    let rim = outer_of(&e, &[0, 1, 2, 3, 4]);
    let w = compute_schnyder_wood(&e, rim, [3, 0, 1]).unwrap();
    w.check(&e).unwrap();
    assert_eq!(w.denominator(), 5);
}

#[test]
fn small_families() {
    wood_on_every_frame(&k4());
    wood_on_every_frame(&icosahedron());
    for n in 3..10 {
        wood_on_every_frame(&wheel(n).unwrap());
    }
}

#[test]
fn random_triangulations() {
    for seed in 0..30 {
        let e = random_triangulation(8 + seed as usize, seed).unwrap();
        let w = compute_schnyder_wood(&e, 0, frame_on_face(&e, 0, &RootSet::default()).unwrap()).unwrap();
        w.check(&e).unwrap();
    }
}

#[test]
fn random_polyhedra() {
    for seed in 0..30 {
        let e = random_polyhedron(8 + seed as usize, seed).unwrap();
        wood_on_every_frame(&e);
    }
}

#[test]
fn coordinates_are_distinct() {
    let e = random_polyhedron(40, 7).unwrap();
    let w = compute_schnyder_wood(&e, 0, frame_on_face(&e, 0, &RootSet::default()).unwrap()).unwrap();
    let mut cs: Vec<[i64; 3]> = (0..e.n()).map(|v| w.numerators(v)).collect();
    cs.sort_unstable();
    cs.dedup();
    assert_eq!(cs.len(), e.n());
}

#[test]
fn dominance_on_k4() {
    let e = k4();
    let w = compute_schnyder_wood(&e, outer_of(&e, &[0, 1, 2]), [0, 1, 2]).unwrap();
    assert_eq!(dominance(&w, 3, 3, 0), Dominance::Equal);
    // a3 against a2 in the first order: each has a zero where the other has a one
    assert_eq!(dominance(&w, 1, 2, 0), Dominance::Incomparable);
    assert_eq!(dominance(&w, 3, 0, 1), Dominance::Incomparable);
    assert_eq!(dominance(&w, 3, 0, 0), Dominance::Greater);
    assert_eq!(dominance(&w, 3, 1, 0), Dominance::Incomparable);
}

#[test]
fn mirsky_chain_and_antichain() {
    let chain: Vec<usize> = (0..5).collect();
    let m = mirsky_partition(&chain, |a, b| a < b);
    assert_eq!(m.antichains.len(), 5);
    assert_eq!(m.chain, chain);
    let anti: Vec<usize> = (0..7).collect();
    let m = mirsky_partition(&anti, |_, _| false);
    assert_eq!(m.antichains, vec![anti.clone()]);
    assert_eq!(m.chain.len(), 1);
}

#[test]
fn ancestors_of_k4_center() {
    let e = k4();
    let w = compute_schnyder_wood(&e, outer_of(&e, &[0, 1, 2]), [0, 1, 2]).unwrap();
    let t = ancestors_subtree(&w, 0, &[3]);
    assert_eq!(t.vertices, vec![0, 3]);
    assert_eq!(t.edges, vec![(3, 0)]);
    assert_eq!(ancestors_subtree(&w, 1, &[1]).vertices, vec![1]);
    let all: Vec<usize> = (0..4).collect();
    assert_eq!(ancestors_subtree(&w, 2, &all).edges.len(), 3);
}

#[test]
fn svg_mentions_every_vertex() {
    let e = icosahedron();
    let w = compute_schnyder_wood(&e, 0, frame_on_face(&e, 0, &RootSet::default()).unwrap()).unwrap();
    let s = draw_svg(&e, &w);
    assert_eq!(s.matches("<circle").count(), 12);
}

#[test]
fn windmills_and_grids() {
    for t in [6, 8, 10] {
        wood_on_every_frame(&crate::generators::windmill(t).unwrap());
    }
    wood_on_every_frame(&crate::generators::grid_triangulation(5).unwrap());
}

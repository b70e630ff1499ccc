use super::*;
use crate::generators::{bagel, grid_triangulation, k4, random_roots, random_triangulation, wheel, windmill};
use crate::graph::Graph;
use crate::model::verify_model;
use crate::schnyder::SubTree;

/// Roots at the even lattice points of the grid triangulation; no two are adjacent.
fn lattice_roots(k: usize) -> RootSet {
    RootSet::new((0..k * k).filter(|v| (v % k) % 2 == 0 && (v / k) % 2 == 0).collect())
}

#[test]
fn wheel_rim_is_one_face() {
    let w = wheel(6).unwrap();
    let rim = RootSet::new((0..6).collect());
    let out = min_face_cover(&w, &rim, CoverMode::Exact).unwrap();
    assert_eq!(out.cover.len(), 1);
    assert!(out.optimal);
    assert_eq!(face_independent_roots(&w, &rim, 10).roots.len(), 1);
}

#[test]
fn windmill_covers_equal_root_count() {
    for (t, size) in [(6, 3), (8, 4), (10, 10)] {
        let e = windmill(t).unwrap();
        let roots = e.root_set();
        let out = min_face_cover(&e, &roots, CoverMode::Exact).unwrap();
        assert_eq!(out.cover.len(), size, "windmill {t}");
        assert!(out.optimal);
        assert_eq!(face_independent_roots(&e, &roots, 100).roots.len(), size);
    }
}

#[test]
fn greedy_cover_is_valid() {
    let e = random_roots(random_triangulation(40, 3).unwrap(), 0.5, 3);
    let roots = e.root_set();
    let g = min_face_cover(&e, &roots, CoverMode::Greedy).unwrap();
    let x = min_face_cover(&e, &roots, CoverMode::Exact).unwrap();
    assert!(verify_cover(&e, &roots, &g.cover).ok());
    assert!(verify_cover(&e, &roots, &x.cover).ok());
    assert!(x.cover.len() <= g.cover.len());
}

#[test]
fn stars_sharing_leaves() {
    let g = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
    let t = SubTree { vertices: vec![0, 2, 3, 4], edges: vec![(2, 0), (3, 0), (4, 0)] };
    let t2 = SubTree { vertices: vec![1, 2, 3, 4], edges: vec![(2, 1), (3, 1), (4, 1)] };
    let roots = RootSet::new(vec![2, 3, 4]);
    let m = model_from_trees(&g, &roots, &t, &t2).unwrap();
    assert_eq!(m.t(), 3);
    let t2 = SubTree { vertices: vec![0, 1, 2, 3], edges: vec![(2, 0), (3, 1), (1, 2)] };
    let g = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (1, 0)]);
    assert!(model_from_trees(&g, &roots, &t, &t2).is_err());
}

#[test]
fn small_t_models() {
    let g = k4().graph();
    let m = small_t_model(&g, &RootSet::new(vec![3]), 1).unwrap();
    assert_eq!(m.t(), 1);
    let b = bagel(8).unwrap().graph();
    let m = small_t_model(&b, &RootSet::new(vec![0, 2]), 2).unwrap();
    assert!(verify_model(&b, &RootSet::new(vec![0, 2]), &m).ok());
    assert!(small_t_model(&g, &RootSet::new(vec![]), 1).is_err());
}

#[test]
fn windmill_six_branches() {
    let e = windmill(6).unwrap();
    let r = plane_dichotomy(&e, &e.root_set(), 6).unwrap();
    let Certificate::Cover(c) = &r.certificate else { panic!("expected a cover") };
    assert_eq!(c.len(), 3);
    let r = plane_dichotomy(&e, &e.root_set(), 2).unwrap();
    let Certificate::Model(m) = &r.certificate else { panic!("expected a model") };
    assert_eq!(m.t(), 2);
}

#[test]
fn lattice_grid_goes_through_the_chain_case() {
    let k = 19;
    let e = grid_triangulation(k).unwrap();
    let roots = lattice_roots(k);
    assert!(roots.len() >= 84);
    let r = plane_dichotomy(&e, &roots, 3).unwrap();
    assert!(matches!(r.branch, Branch::Chain { .. }), "{:?}", r.branch);
    assert!(r.certificate.verify(&e, &roots).ok());
}

fn grid_wood(k: usize) -> (Embedding, SchnyderWood) {
    let e = grid_triangulation(k).unwrap();
    let (f, fr) = choose_frame(&e, &RootSet::new(vec![])).unwrap();
    let w = compute_schnyder_wood(&e, f, fr).unwrap();
    (e, w)
}

/// Level sets of each coordinate (strictly inside the triangle), and the
/// face-independent part of each picked greedily.
fn level_sets(e: &Embedding, wood: &SchnyderWood, i: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let at = e.faces().faces_at_vertices(e);
    let mut by: std::collections::BTreeMap<i64, Vec<usize>> = Default::default();
    for u in 0..e.n() {
        let c = wood.numerators(u)[i];
        if c > 0 && c < wood.denominator() {
            by.entry(c).or_default().push(u);
        }
    }
    by.into_values()
        .map(|us| {
            let mut pick: Vec<usize> = Vec::new();
            for &u in &us {
                if pick.iter().all(|&p| !at[p].iter().any(|f| at[u].contains(f))) {
                    pick.push(u);
                }
            }
            (us, pick)
        })
        .collect()
}

#[test]
fn equal_level_roots_give_a_model() {
    let (mut built, mut four) = (0, false);
    for seed in 0..10 {
        let e = crate::generators::random_polyhedron(120, seed).unwrap();
        let g = e.graph();
        let fr = frame_on_face(&e, 0, &RootSet::new(vec![])).unwrap();
        let wood = compute_schnyder_wood(&e, 0, fr).unwrap();
        for i in 0..3 {
            for (_, pick) in level_sets(&e, &wood, i) {
                if pick.len() >= 3 {
                    let roots = RootSet::new(pick.clone());
                    let m = model_from_level(&g, &roots, &wood, i, &pick).unwrap();
                    assert_eq!(m.t(), pick.len());
                    four |= pick.len() >= 4;
                    built += 1;
                }
            }
        }
    }
    assert!(built > 50 && four);
}

#[test]
fn level_rejects_bad_sets() {
    let (e, wood) = grid_wood(7);
    let g = e.graph();
    let all = RootSet::all(e.n());
    let a = wood.special();
    assert!(model_from_level(&g, &all, &wood, 0, &[a[0], a[1], a[2]]).is_err());
    // roots sharing a face can stop a path on the level
    let mut caught = 0;
    for seed in 0..5 {
        let e = crate::generators::random_polyhedron(120, seed).unwrap();
        let fr = frame_on_face(&e, 0, &RootSet::new(vec![])).unwrap();
        let wood = compute_schnyder_wood(&e, 0, fr).unwrap();
        for i in 0..3 {
            for (us, pick) in level_sets(&e, &wood, i) {
                if pick.len() < us.len() && model_from_level(&e.graph(), &all, &wood, i, &us).is_err() {
                    caught += 1;
                }
            }
        }
    }
    assert!(caught > 0);
}

#[test]
fn chain_rejects_bad_sets() {
    let (e, wood) = grid_wood(7);
    let g = e.graph();
    let all = RootSet::all(e.n());
    let a = wood.special();
    assert!(model_from_chain(&g, &all, &wood, 0, &[1, 2]).is_err());
    let chain = DominancePoset::new(&wood, 0, &(0..e.n()).collect::<Vec<_>>()).mirsky().chain;
    assert!(chain.len() >= 3);
    let mut with_special = chain[..2].to_vec();
    with_special.push(a[2]);
    assert!(model_from_chain(&g, &all, &wood, 0, &with_special).is_err());
}

#[test]
fn a_model_forces_half_t_faces() {
    for seed in 0..20 {
        let e = random_roots(random_triangulation(12, seed).unwrap(), 0.5, seed);
        let roots = e.root_set();
        for t in 1..=2 {
            if let Ok(r) = plane_dichotomy(&e, &roots, t) {
                if r.is_model() {
                    let c = min_face_cover(&e, &roots, CoverMode::Exact).unwrap();
                    assert!(c.cover.len() >= t.div_ceil(2));
                }
            }
        }
    }
}

#[test]
fn rejects_non_planar_and_zero_t() {
    let b = bagel(8).unwrap();
    assert!(plane_dichotomy(&b, &b.root_set(), 3).is_err());
    let e = k4();
    assert!(plane_dichotomy(&e, &RootSet::all(4), 0).is_err());
}

use super::*;
use crate::embed::{check_polyhedral, classify_region, is_nested_pair, Region};
use crate::generators::{bagel, klein_grid, projective_diamond_grid, projective_k6, torus_grid, wheel};
use crate::model::verify_model;

fn nests(emb: &Embedding, depth: usize) -> NestSystem {
    find_nests(planarize(emb).unwrap(), depth).unwrap()
}

#[test]
fn planarize_projective_torus_klein() {
    let p = projective_diamond_grid(8).unwrap().embedding;
    let pl = planarize(&p).unwrap();
    assert_eq!(pl.cycles.len(), 1);
    assert_eq!(pl.cuff_count(), 1);
    assert!(pl.cut.cuffs[0].one_sided);
    assert_eq!(pl.cut.embedding.euler_genus(), 0);

    let t = torus_grid(8).unwrap();
    let pl = planarize(&t).unwrap();
    assert_eq!(pl.cut.embedding.euler_genus(), 0);
    assert_eq!(pl.cuff_count(), 2);
    assert!(pl.cut.cuffs.iter().all(|c| !c.one_sided && c.cycle == 0));

    let k = klein_grid(16, 8).unwrap();
    let pl = planarize(&k).unwrap();
    assert_eq!(pl.cycles.len(), 2);
    assert_eq!(pl.cuff_count(), 2);
    assert!(pl.cut.cuffs.iter().all(|c| c.one_sided));
    assert_eq!(pl.cut.embedding.euler_genus(), 0);

    assert!(planarize(&wheel(5).unwrap()).is_err());
}

#[test]
fn face_origin_covers_every_face() {
    for emb in [torus_grid(6).unwrap(), klein_grid(12, 6).unwrap(), projective_diamond_grid(6).unwrap().embedding] {
        let pl = planarize(&emb).unwrap();
        let all: Vec<usize> = (0..pl.cut.embedding.face_count()).collect();
        assert_eq!(pl.project_faces(&all), (0..emb.face_count()).collect::<Vec<_>>());
        let caps = pl.face_origin.iter().filter(|f| f.is_none()).count();
        assert_eq!(caps, pl.cuff_count());
    }
}

#[test]
fn torus_nests_hold_invariants() {
    let ns = nests(&torus_grid(24).unwrap(), REQUESTED_DEPTH);
    assert!(ns.depth() >= 5);
    ns.verify().unwrap();
    for n in &ns.nests {
        assert!(n.stopped.is_some());
        for w in n.disks.windows(2) {
            assert!(w[0].len() < w[1].len());
        }
    }
    let ns = nests(&torus_grid(24).unwrap(), 4);
    assert!(ns.nests.iter().all(|n| n.depth() == 4 && n.stopped.is_none()));
}

#[test]
fn crowded_cuffs_stop_early() {
    let ns = nests(&torus_grid(3).unwrap(), 5);
    assert!(ns.depth() <= 1);
    assert!(ns.nests.iter().all(|n| n.stopped.as_deref().is_some_and(|s| s.contains("touch"))));
    ns.verify().unwrap();
}

#[test]
fn nest_tree_sizes() {
    let ns = nests(&torus_grid(16).unwrap(), 3);
    let t = build_nest_tree(&ns).unwrap();
    assert_eq!(t.len(), 9);
    assert_eq!(t.leaves.len(), 2);
    assert_eq!(t.adj[t.root].len(), 2);

    let ns = nests(&projective_diamond_grid(16).unwrap().embedding, 3);
    let t = build_nest_tree(&ns).unwrap();
    assert_eq!(t.len(), 5);
    let degrees: Vec<usize> = t.adj.iter().map(Vec::len).collect();
    assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 2);

    for (m, d) in [(16, 7), (24, 11)] {
        let ns = nests(&torus_grid(m).unwrap(), d);
        assert_eq!(ns.depth(), d);
        assert_eq!(build_nest_tree(&ns).unwrap().len(), 2 * (d + 1) + 1);
    }
}

#[test]
fn nest_tree_rejects_shared_cycles() {
    let mut ns = nests(&torus_grid(16).unwrap(), 3);
    ns.nests[1].cycles[2] = ns.nests[0].cycles[2].clone();
    assert!(build_nest_tree(&ns).is_err());
}

fn connected_subsets(t: &NestTree, max: usize) -> Vec<Vec<usize>> {
    let internal: Vec<usize> = (0..t.len()).filter(|&v| !t.is_leaf(v)).collect();
    let mut out: std::collections::BTreeSet<Vec<usize>> = internal.iter().map(|&v| vec![v]).collect();
    let mut frontier: Vec<Vec<usize>> = out.iter().cloned().collect();
    for _ in 1..max {
        let mut next = Vec::new();
        for s in &frontier {
            for &u in s {
                for &w in &t.adj[u] {
                    if !t.is_leaf(w) && !s.contains(&w) {
                        let mut x = s.clone();
                        x.push(w);
                        x.sort_unstable();
                        if out.insert(x.clone()) {
                            next.push(x);
                        }
                    }
                }
            }
        }
        frontier = next;
    }
    out.into_iter().collect()
}

#[test]
fn connected_tree_sets_give_spheres() {
    for (emb, d) in [(torus_grid(16).unwrap(), 7), (klein_grid(30, 14).unwrap(), 6)] {
        let ns = nests(&emb, d);
        let t = build_nest_tree(&ns).unwrap();
        let ce = &ns.planarization.cut.embedding;
        let sets = connected_subsets(&t, 6);
        assert!(sets.len() > 40);
        for u in sets {
            let r = region_of(&t, &ns, &u, None).unwrap();
            let cuffs = t.boundary_edges(&u).len();
            assert_eq!(classify_region(ce, &r).unwrap(), (0, true, cuffs), "{u:?}");
        }
        let internal: Vec<usize> = (0..t.len()).filter(|&v| !t.is_leaf(v)).collect();
        let r = region_of(&t, &ns, &internal, None).unwrap();
        assert_eq!((r.euler_genus, r.cuff_count), (0, t.leaves.len()));
        let v = internal[0];
        let r = region_of(&t, &ns, &[v], None).unwrap();
        assert_eq!(r.cuff_count, t.adj[v].len());
    }
}

#[test]
fn region_of_rejects_disconnected_sets() {
    let ns = nests(&torus_grid(16).unwrap(), 7);
    let t = build_nest_tree(&ns).unwrap();
    assert!(region_of(&t, &ns, &[1, 3], None).is_err());
    assert!(region_of(&t, &ns, &[], None).is_err());
}

fn check_pieces(emb: &Embedding, pieces: &[CoverPiece]) {
    for p in pieces {
        assert!(is_nested_pair(emb, &p.inner, &p.outer), "{}", p.class);
        let want = match p.kind {
            SurfaceKind::Sphere => (0, true),
            SurfaceKind::Projective => (1, false),
        };
        for r in [&p.inner, &p.outer] {
            let (eg, or, _) = classify_region(emb, r).unwrap();
            assert_eq!((eg, or), want, "{}", p.class);
        }
    }
    let mut all: Vec<usize> = pieces.iter().flat_map(|p| p.inner.faces.clone()).collect();
    all.sort_unstable();
    all.dedup();
    assert_eq!(all.len(), emb.face_count());
}

#[test]
fn torus_partition_matches_the_cut_cycle() {
    let emb = torus_grid(24).unwrap();
    let ns = nests(&emb, REQUESTED_DEPTH);
    let t = build_nest_tree(&ns).unwrap();
    let pieces = partition_cover_pieces(&t, &ns, &emb).unwrap();
    assert_eq!(pieces.len(), 2);
    assert_eq!(pieces[0].class, PieceClass::Matched { cuffs: [0, 1] });
    assert_eq!(pieces[1].class, PieceClass::Between);
    assert!(pieces.iter().all(|p| p.kind == SurfaceKind::Sphere));
    check_pieces(&emb, &pieces);
}

#[test]
fn projective_partition_has_a_projective_ball() {
    let emb = projective_diamond_grid(24).unwrap().embedding;
    let ns = nests(&emb, 9);
    assert_eq!(ns.depth(), 9);
    let t = build_nest_tree(&ns).unwrap();
    let pieces = partition_cover_pieces(&t, &ns, &emb).unwrap();
    let classes: Vec<PieceClass> = pieces.iter().map(|p| p.class.clone()).collect();
    assert_eq!(classes, [PieceClass::OneSided { cuff: 0 }, PieceClass::Between]);
    assert_eq!(pieces[0].kind, SurfaceKind::Projective);
    check_pieces(&emb, &pieces);
}

#[test]
fn klein_partition_has_two_projective_balls() {
    let emb = klein_grid(30, 14).unwrap();
    let ns = nests(&emb, REQUESTED_DEPTH);
    let t = build_nest_tree(&ns).unwrap();
    let pieces = partition_cover_pieces(&t, &ns, &emb).unwrap();
    assert_eq!(pieces.iter().filter(|p| p.kind == SurfaceKind::Projective).count(), 2);
    assert!(pieces.len() <= 4);
    for p in pieces.iter().filter(|p| p.kind == SurfaceKind::Projective) {
        let (eg, or, cuffs) = classify_region(&emb, &p.inner).unwrap();
        assert_eq!((eg, or), (1, false));
        assert!(cuffs >= 1);
    }
    check_pieces(&emb, &pieces);
}

#[test]
fn shallow_nests_do_not_partition() {
    let emb = klein_grid(16, 8).unwrap();
    let ns = nests(&emb, REQUESTED_DEPTH);
    assert_eq!(ns.depth(), 3);
    let t = build_nest_tree(&ns).unwrap();
    assert!(partition_cover_pieces(&t, &ns, &emb).is_err());
}

#[test]
fn contract_nothing_is_the_capped_region() {
    let emb = torus_grid(8).unwrap();
    let inner = Region::from_faces(&emb, &[0]).unwrap();
    let grown = planarize::grow_disk(&emb, &[0]).unwrap();
    let outer = Region::from_faces(&emb, &grown).unwrap();
    let m = contract_outside(&emb, &outer, &outer);
    assert!(m.is_err(), "a region is not nested in itself");
    let m = contract_outside(&emb, &inner, &outer).unwrap();
    assert_eq!(m.component_vertices.len(), 1);
    assert_eq!(m.embedding.euler_genus(), 0);
    // every face of the minor maps to a face with the same inner vertices
    let inner_vs = inner.closure_vertices(&emb);
    for f in 0..m.embedding.face_count() {
        let g = m.face_map[f];
        let mut a: Vec<usize> = m.embedding.faces().vertices(&m.embedding, f).into_iter().filter(|x| m.component_vertices.binary_search(x).is_err()).map(|x| m.branch_sets[x][0]).collect();
        let mut b: Vec<usize> = emb.faces().vertices(&emb, g).into_iter().filter(|x| inner_vs.contains(x)).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
    let r = restrict_to_region(&emb, &outer).unwrap();
    assert_eq!(r.embedding.euler_genus(), 0);
    assert_eq!(r.embedding.face_count(), outer.faces.len() + 1);
}

#[test]
fn projective_grid_pieces_give_3_connected_minors() {
    let g = projective_diamond_grid(16).unwrap();
    let pieces = projective_cover(&g.embedding, g.hint.as_ref()).unwrap();
    assert_eq!(pieces.len(), 3);
    check_pieces(&g.embedding, &pieces);
    for p in &pieces {
        let m = contract_outside(&g.embedding, &p.inner, &p.outer).unwrap();
        assert!(m.embedding.graph().is_3_connected());
        let hg = m.embedding.graph();
        assert!(m.component_vertices.iter().all(|&c| hg.degree(c) >= 3));
    }
}

#[test]
fn digons_keep_the_projective_grid_from_being_polyhedral() {
    let e = projective_diamond_grid(16).unwrap().embedding;
    let digons = (0..e.face_count()).filter(|&f| e.faces().walk(f).len() == 2).count();
    assert_eq!(digons, 2);
    assert!(!check_polyhedral(&e));
    let mut seen = std::collections::HashSet::new();
    let del: Vec<bool> = (0..e.m())
        .map(|k| {
            let [u, v] = e.ends(k);
            !seen.insert((u.min(v), u.max(v)))
        })
        .collect();
    let (s, _) = crate::embed::delete_edges(&e, &del).unwrap();
    assert!(check_polyhedral(&s));
}

#[test]
fn torus_minors_stay_polyhedral() {
    let emb = torus_grid(16).unwrap();
    assert!(check_polyhedral(&emb));
    let ns = nests(&emb, REQUESTED_DEPTH);
    let t = build_nest_tree(&ns).unwrap();
    for p in partition_cover_pieces(&t, &ns, &emb).unwrap() {
        let m = contract_outside(&emb, &p.inner, &p.outer).unwrap();
        assert!(check_polyhedral(&m.embedding), "{}", p.class);
    }
}

#[test]
fn projective_search_without_hint() {
    let g = projective_diamond_grid(16).unwrap();
    let pieces = projective_cover(&g.embedding, None).unwrap();
    assert_eq!(pieces.len(), 3);
    check_pieces(&g.embedding, &pieces);
    let err = projective_cover(&projective_k6(), None).unwrap_err();
    assert!(err.to_string().contains("one-sided cycle"), "{err}");
    assert!(matches!(projective_cover(&torus_grid(6).unwrap(), None), Err(crate::Error::Precondition(_))));
}

#[test]
fn disks_of_cycles() {
    let emb = torus_grid(8).unwrap();
    let ring: Vec<usize> = emb.faces().walk(0).iter().map(|&(d, _)| d).collect();
    assert_eq!(disk_of_cycle(&emb, &ring), Some(vec![0]));
    let pl = planarize(&emb).unwrap();
    assert_eq!(disk_of_cycle(&emb, &pl.cycles[0]), None);
}

#[test]
fn lift_cover_rejects_bad_parts() {
    let g = projective_diamond_grid(16).unwrap();
    let emb = &g.embedding;
    let roots = RootSet::all(emb.n());
    let pieces = projective_cover(emb, g.hint.as_ref()).unwrap();
    let minors: Vec<AgreeingMinor> = pieces.iter().map(|p| contract_outside(emb, &p.inner, &p.outer).unwrap()).collect();
    let covers: Vec<FaceCover> = minors
        .iter()
        .map(|m| min_face_cover(&m.embedding, &m.roots(&roots), CoverMode::Greedy).unwrap().cover)
        .collect();
    let parts: Vec<(&AgreeingMinor, &FaceCover)> = minors.iter().zip(&covers).collect();
    let c = lift_cover(emb, &roots, &parts).unwrap();
    assert!(c.len() <= covers.iter().map(FaceCover::len).sum());
    assert!(lift_cover(emb, &roots, &parts[..2]).unwrap_err().to_string().contains("lies in no piece"));
    let short = FaceCover::new(covers[0].faces[1..].to_vec());
    let mut bad = parts.clone();
    bad[0].1 = &short;
    assert!(lift_cover(emb, &roots, &bad).is_err());
}

#[test]
fn bagel_falls_back_to_an_exact_cover() {
    let b = bagel(14).unwrap();
    let r = genus_face_cover(&b, &RootSet::all(14), 5, None).unwrap();
    let GenusOutcome::Fallback { reason, cover, optimal } = &r.outcome else { panic!("expected a fallback") };
    assert!(reason.contains("face-width 2"));
    assert!(*optimal);
    assert_eq!(b.face_count(), 21);
    assert_eq!(cover.len(), min_face_cover(&b, &RootSet::all(14), CoverMode::Exact).unwrap().cover.len());
    assert!(r.certificate().verify(&b, &RootSet::all(14)).ok());
}

#[test]
fn projective_grid_end_to_end() {
    let g = projective_diamond_grid(16).unwrap();
    let roots = RootSet::all(g.embedding.n());
    let r = genus_face_cover(&g.embedding, &roots, 5, g.hint.as_ref()).unwrap();
    let GenusOutcome::Cover(c) = &r.outcome else { panic!("{}", r.report) };
    assert!(verify_cover(&g.embedding, &roots, c).ok());
    assert_eq!(r.report.pieces.len(), 3);
    assert!(r.report.pieces.iter().all(|p| p.nested && p.minor_3_connected));
    let text = r.report.to_string();
    assert!(text.contains("disk 2"));
}

#[test]
fn torus_band_roots_end_to_end() {
    let m = 24;
    let e = torus_grid(m).unwrap();
    let roots = RootSet::new((0..2 * m).collect());
    let r = genus_face_cover(&e, &roots, 3, None).unwrap();
    let GenusOutcome::Cover(c) = &r.outcome else { panic!("{}", r.report) };
    assert!(verify_cover(&e, &roots, c).ok());
    assert!(r.report.pieces.len() <= 4);
    assert!(r.report.achieved_depth.unwrap() >= 3);
}

#[test]
fn small_t_gives_a_lifted_model() {
    let e = torus_grid(16).unwrap();
    let roots = RootSet::all(e.n());
    let r = genus_face_cover(&e, &roots, 2, None).unwrap();
    let GenusOutcome::Model(m) = &r.outcome else { panic!("{}", r.report) };
    assert_eq!(m.t(), 2);
    assert!(verify_model(&e.graph(), &roots, m).ok());
}

#[test]
fn pipeline_rejects_bad_input() {
    let w = wheel(6).unwrap();
    assert!(genus_face_cover(&w, &RootSet::all(6), 3, None).is_err());
    let t = torus_grid(8).unwrap();
    assert!(genus_face_cover(&t, &RootSet::all(64), 0, None).is_err());
}

#[test]
fn k6_falls_back() {
    let k = projective_k6();
    let r = genus_face_cover(&k, &RootSet::all(6), 3, None).unwrap();
    assert!(r.is_fallback());
    assert!(r.certificate().verify(&k, &RootSet::all(6)).ok());
}

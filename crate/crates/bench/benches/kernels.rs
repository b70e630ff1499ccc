use std::time::Duration;

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use facecover::dichotomy::{min_face_cover, plane_dichotomy, CoverMode};
use facecover::embed::face_width;
use facecover::generators::bagel;
use facecover::oracles::brute_force_rooted_k2t;
use facecover::schnyder::{compute_schnyder_wood, frame_on_face};
use facecover::surface::genus_face_cover;
use facecover::RootSet;
use facecover_bench::*;

fn schnyder(c: &mut Criterion) {
    let e = rooted_triangulation(200, 1);
    let frame = frame_on_face(&e, 0, &RootSet::default()).unwrap();
    c.bench_function("schnyder wood, 200 vertices", |b| b.iter(|| compute_schnyder_wood(black_box(&e), 0, frame).unwrap()));
}

fn dichotomy(c: &mut Criterion) {
    let e = rooted_triangulation(60, 3);
    let roots = e.root_set();
    c.bench_function("plane dichotomy, 60 vertices, t=3", |b| b.iter(|| plane_dichotomy(black_box(&e), &roots, 3).unwrap()));
    let w = windmill_instance(10);
    let wr = w.root_set();
    c.bench_function("exact cover, windmill 10", |b| b.iter(|| min_face_cover(black_box(&w), &wr, CoverMode::Exact).unwrap()));
}

fn topology(c: &mut Criterion) {
    let t = rooted_torus(16);
    c.bench_function("face-width, torus 16", |b| b.iter(|| face_width(black_box(&t)).unwrap()));
    let p = projective_grid(16);
    c.bench_function("face-width, P16", |b| b.iter(|| face_width(black_box(&p.embedding)).unwrap()));
}

fn pipeline(c: &mut Criterion) {
    let t = rooted_torus(16);
    let roots = t.root_set();
    c.bench_function("genus pipeline, torus 16, t=5", |b| b.iter(|| genus_face_cover(black_box(&t), &roots, 5, None).unwrap()));
    let p = projective_grid(16);
    let pr = RootSet::all(p.embedding.n());
    c.bench_function("genus pipeline, P16 with hint, t=5", |b| {
        b.iter(|| genus_face_cover(black_box(&p.embedding), &pr, 5, p.hint.as_ref()).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let g = bagel(10).unwrap().graph();
    let roots = RootSet::all(10);
    c.bench_function("rooted K2,5 search, bagel 10", |b| {
        b.iter(|| brute_force_rooted_k2t(black_box(&g), &roots, 5, Duration::from_secs(60)))
    });
}

criterion_group!(benches, schnyder, dichotomy, topology, pipeline, oracle);
criterion_main!(benches);

//! Shared inputs for the benchmarks.

use facecover::generators::{projective_diamond_grid, random_roots, random_triangulation, torus_grid, windmill};
use facecover::{Embedding, RootSet};

/// A seeded triangulation with about a third of its vertices rooted.
pub fn rooted_triangulation(n: usize, seed: u64) -> Embedding {
    random_roots(random_triangulation(n, seed).expect("n >= 4"), 0.3, seed)
}

pub fn windmill_instance(t: usize) -> Embedding {
    windmill(t).expect("even t >= 6")
}

/// Torus grid with every vertex rooted.
pub fn rooted_torus(m: usize) -> Embedding {
    let e = torus_grid(m).expect("m >= 3");
    let n = e.n();
    e.with_roots(RootSet::all(n))
}

pub fn projective_grid(r: usize) -> facecover::generators::ProjectiveGrid {
    projective_diamond_grid(r).expect("r >= 3")
}

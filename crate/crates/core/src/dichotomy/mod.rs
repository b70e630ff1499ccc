//! Plane dichotomy: a small face cover of the roots or a rooted K2,t model.

mod claims;
mod cover;

use std::time::Duration;

use crate::embed::{Embedding, RootSet};
use crate::error::{failed, precondition, Result};
use crate::model::{verify_cover, Certificate};
use crate::oracles::{brute_force_rooted_k2t, OracleResult};
use crate::schnyder::{compute_schnyder_wood, frame_on_face, DominancePoset, SchnyderWood};

pub use crate::model::{FaceCover, RootedK2tModel};
pub use claims::{model_from_chain, model_from_level, model_from_trees, small_t_model};
pub use cover::{face_independent_roots, min_face_cover, CoverMode, CoverOutcome, IndependentRoots, EXACT_NODE_LIMIT};

/// Roots beyond which the cover branch switches to the greedy cover.
pub const EXACT_COVER_ROOTS: usize = 60;
/// Time the three-root endgame may spend in the brute-force search.
pub const ENDGAME_BUDGET: Duration = Duration::from_secs(120);

/// Which part of the argument produced the certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    SmallT,
    Chain { tree: usize },
    Level { tree: usize },
    Endgame,
    Cover { optimal: bool },
}

#[derive(Debug, Clone)]
pub struct DichotomyResult {
    pub certificate: Certificate,
    pub branch: Branch,
    /// Face-independent roots found, after dropping special vertices.
    pub independent: usize,
}

impl DichotomyResult {
    pub fn is_model(&self) -> bool {
        matches!(self.certificate, Certificate::Model(_))
    }
}

/// The cover bound `27 t^4`.
pub fn cover_bound(t: usize) -> u128 {
    27 * (t as u128).pow(4)
}

fn check_input(emb: &Embedding, t: usize) -> Result<()> {
    if t == 0 {
        return precondition("t must be at least 1");
    }
    if emb.euler_genus() != 0 || emb.components().len() != 1 {
        return precondition("the embedding is not a connected plane embedding");
    }
    if (0..emb.m()).any(|e| emb.is_loop(e)) {
        return precondition("the graph has a loop");
    }
    let g = emb.graph();
    if !g.is_3_connected() {
        return precondition("the graph is not 3-connected");
    }
    Ok(())
}

fn cover_result(emb: &Embedding, roots: &RootSet, independent: usize) -> Result<DichotomyResult> {
    let mode = if roots.len() <= EXACT_COVER_ROOTS { CoverMode::Exact } else { CoverMode::Greedy };
    let out = min_face_cover(emb, roots, mode)?;
    let v = verify_cover(emb, roots, &out.cover);
    if !v.ok() {
        return failed(format!("cover failed verification: {v}"));
    }
    Ok(DichotomyResult {
        certificate: Certificate::Cover(out.cover),
        branch: Branch::Cover { optimal: out.optimal },
        independent,
    })
}

/// The embedding with every parallel copy of an edge after the first removed.
/// Each parallel class bounds only digons, so the plane faces of the result
/// see the same vertex sets as the larger faces they replace.
fn simplified(emb: &Embedding) -> Result<Embedding> {
    let mut seen = std::collections::HashSet::new();
    let del: Vec<bool> = (0..emb.m())
        .map(|e| {
            let [u, v] = emb.ends(e);
            !seen.insert((u.min(v), u.max(v)))
        })
        .collect();
    if !del.contains(&true) {
        return Ok(emb.clone());
    }
    Ok(crate::embed::delete_edges(emb, &del)?.0)
}

/// Face whose frame uses the fewest roots, ties to the smallest face id.
fn choose_frame(emb: &Embedding, roots: &RootSet) -> Option<(usize, [usize; 3])> {
    let mut best: Option<(usize, usize, [usize; 3])> = None;
    for f in 0..emb.face_count() {
        if let Some(fr) = frame_on_face(emb, f, roots) {
            let cost = fr.iter().filter(|&&x| roots.contains(x)).count();
            if best.as_ref().map_or(true, |b| cost < b.0) {
                best = Some((cost, f, fr));
            }
        }
    }
    best.map(|b| (b.1, b.2))
}

/// Largest antichain of a Mirsky partition, ties to the smallest minimum id.
fn largest_antichain(wood: &SchnyderWood, i: usize, ground: &[usize]) -> Vec<usize> {
    let m = DominancePoset::new(wood, i, ground).mirsky();
    m.antichains
        .into_iter()
        .max_by_key(|a| (a.len(), std::cmp::Reverse(a.first().copied().unwrap_or(usize::MAX))))
        .unwrap_or_default()
}

/// Coordinate index constant on all of `s`, if any.
fn constant_coordinate(wood: &SchnyderWood, s: &[usize]) -> Option<usize> {
    (0..3).find(|&i| s.iter().all(|&u| wood.numerators(u)[i] == wood.numerators(s[0])[i]))
}

/// Either a face cover of size at most `27 t^4` or a rooted K2,t model.
pub fn plane_dichotomy(emb: &Embedding, roots: &RootSet, t: usize) -> Result<DichotomyResult> {
    check_input(emb, t)?;
    let g = emb.graph();
    if t <= 2 {
        if roots.len() >= t {
            let m = small_t_model(&g, roots, t)?;
            return Ok(DichotomyResult { certificate: Certificate::Model(m), branch: Branch::SmallT, independent: 0 });
        }
        return cover_result(emb, roots, 0);
    }
    let need = t.saturating_pow(4);
    let orig = emb;
    let simple = simplified(orig)?;
    let emb = &simple;
    let (face, frame) = choose_frame(emb, roots).ok_or_else(|| crate::Error::Failed("no face admits a frame".into()))?;
    let extra = frame.iter().filter(|&&x| roots.contains(x)).count();
    let ind = face_independent_roots(emb, roots, need.saturating_add(extra));
    let pool: Vec<usize> = ind.roots.iter().copied().filter(|r| !frame.contains(r)).collect();
    if pool.len() < need {
        return cover_result(orig, roots, pool.len());
    }
    let wood = compute_schnyder_wood(emb, face, frame)?;
    let done = |m: RootedK2tModel, branch: Branch| {
        Ok(DichotomyResult { certificate: Certificate::Model(m), branch, independent: pool.len() })
    };
    for i in 0..3 {
        let chain = DominancePoset::new(&wood, i, &pool).mirsky().chain;
        if chain.len() >= t {
            let m = model_from_chain(&g, roots, &wood, i, &chain[..t])?;
            return done(m, Branch::Chain { tree: i });
        }
    }
    let s1 = largest_antichain(&wood, 0, &pool);
    let s2 = largest_antichain(&wood, 1, &s1);
    let s3 = largest_antichain(&wood, 2, &s2);
    if s3.len() < t {
        return failed(format!("antichain cascade ended with {} roots, fewer than t = {t}", s3.len()));
    }
    if let Some(i) = constant_coordinate(&wood, &s3) {
        let m = model_from_level(&g, roots, &wood, i, &s3[..t])?;
        return done(m, Branch::Level { tree: i });
    }
    if s3.len() >= 4 {
        return failed(format!(
            "antichain {:?} in all three orders has no constant coordinate",
            &s3[..s3.len().min(8)]
        ));
    }
    // three roots: look for any level set of three among the pool first
    for i in 0..3 {
        let mut by_level: std::collections::BTreeMap<i64, Vec<usize>> = Default::default();
        for &u in &pool {
            by_level.entry(wood.numerators(u)[i]).or_default().push(u);
        }
        for (&c, us) in &by_level {
            if us.len() >= t && c > 0 && c < wood.denominator() {
                if let Ok(m) = model_from_level(&g, roots, &wood, i, &us[..t]) {
                    return done(m, Branch::Level { tree: i });
                }
            }
        }
    }
    match brute_force_rooted_k2t(&g, roots, t, ENDGAME_BUDGET) {
        OracleResult::Model(m) => done(m, Branch::Endgame),
        OracleResult::Absent => failed("three-root endgame: the oracle found no model despite the independent roots"),
        OracleResult::Timeout => failed("three-root endgame: the oracle ran out of budget"),
    }
}

#[cfg(test)]
mod tests;

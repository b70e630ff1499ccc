//! Face covers for graphs on surfaces of higher Euler genus: planarization,
//! nests, the nest tree and its partition into pieces, agreeing minors and
//! projective-plane covers, with covers and models lifted back.

mod minor;
mod planarize;
mod projective;
mod tree;

use std::fmt;

use crate::dichotomy::{min_face_cover, plane_dichotomy, CoverMode, EXACT_COVER_ROOTS};
use crate::embed::format::Hint;
use crate::embed::{face_width, Embedding, FaceWidth, RootSet};
use crate::error::{failed, precondition, Result};
use crate::model::{verify_cover, Certificate, FaceCover, RootedK2tModel};

pub use minor::{contract_groups, contract_outside, lift_cover, restrict_to_region, AgreeingMinor, Restriction};
pub use planarize::{find_nests, planarize, Nest, NestSystem, Planarization};
pub use projective::{disk_of_cycle, projective_cover};
pub use tree::{build_nest_tree, partition_cover_pieces, region_of, CoverPiece, NestTree, PieceClass, SurfaceKind};

/// Nest depth asked for, `3 r + 1` with `r = 16`.
pub const REQUESTED_DEPTH: usize = 49;
/// Smallest achieved depth the pipeline goes on with.
pub const MIN_DEPTH: usize = 3;
/// Face-width a projective piece needs for the K4-subdivision search.
pub const PROJECTIVE_FACE_WIDTH: usize = 16;

/// Result of the surface pipeline.
#[derive(Debug, Clone)]
pub enum GenusOutcome {
    Cover(FaceCover),
    Model(RootedK2tModel),
    /// The structural route does not apply; `cover` comes from set cover on
    /// the whole instance.
    Fallback { reason: String, cover: FaceCover, optimal: bool },
}

/// One row of the piece table.
#[derive(Debug, Clone)]
pub struct PieceReport {
    pub class: PieceClass,
    pub kind: SurfaceKind,
    pub inner_faces: usize,
    pub outer_faces: usize,
    pub nested: bool,
    pub minor_vertices: usize,
    pub minor_3_connected: bool,
    pub roots: usize,
    /// Cover size, or `None` when the piece gave a model or was not reached.
    pub cover: Option<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct PipelineReport {
    pub euler_genus: i64,
    pub face_width: Option<usize>,
    pub requested_depth: usize,
    pub achieved_depth: Option<usize>,
    pub pieces: Vec<PieceReport>,
    pub log: Vec<String>,
}

impl PipelineReport {
    fn note(&mut self, s: impl Into<String>) {
        self.log.push(s.into());
    }
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.log {
            writeln!(f, "{line}")?;
        }
        if !self.pieces.is_empty() {
            writeln!(f, "{:<18} {:<10} {:>6} {:>6} {:>6} {:>8} {:>5} {:>6} {:>6}", "piece", "kind", "inner", "outer", "nested", "minor", "3conn", "roots", "cover")?;
            for p in &self.pieces {
                let cover = p.cover.map_or("-".to_string(), |c| c.to_string());
                writeln!(
                    f,
                    "{:<18} {:<10} {:>6} {:>6} {:>6} {:>8} {:>5} {:>6} {:>6}",
                    p.class.to_string(),
                    p.kind.to_string(),
                    p.inner_faces,
                    p.outer_faces,
                    p.nested,
                    p.minor_vertices,
                    p.minor_3_connected,
                    p.roots,
                    cover
                )?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct GenusResult {
    pub outcome: GenusOutcome,
    pub report: PipelineReport,
}

impl GenusResult {
    /// The certificate for the input, fallback covers included.
    pub fn certificate(&self) -> Certificate {
        match &self.outcome {
            GenusOutcome::Cover(c) | GenusOutcome::Fallback { cover: c, .. } => Certificate::Cover(c.clone()),
            GenusOutcome::Model(m) => Certificate::Model(m.clone()),
        }
    }

    pub fn is_fallback(&self) -> bool {
        matches!(self.outcome, GenusOutcome::Fallback { .. })
    }
}

fn check_input(emb: &Embedding, t: usize) -> Result<()> {
    if t == 0 {
        return precondition("t must be at least 1");
    }
    if emb.euler_genus() < 1 {
        return precondition("the embedding is planar; use the plane dichotomy");
    }
    if emb.components().len() != 1 {
        return precondition("the embedding is not connected");
    }
    if (0..emb.m()).any(|e| emb.is_loop(e)) {
        return precondition("the graph has a loop");
    }
    if !emb.graph().is_3_connected() {
        return precondition("the graph is not 3-connected");
    }
    Ok(())
}

fn fallback(emb: &Embedding, roots: &RootSet, reason: String, mut report: PipelineReport) -> Result<GenusResult> {
    let mode = if roots.len() <= EXACT_COVER_ROOTS { CoverMode::Exact } else { CoverMode::Greedy };
    let out = min_face_cover(emb, roots, mode)?;
    let v = verify_cover(emb, roots, &out.cover);
    if !v.ok() {
        return failed(format!("fallback cover failed verification: {v}"));
    }
    report.note(format!("fallback: {reason}"));
    report.note(format!("oracle cover of size {} ({})", out.cover.len(), if out.optimal { "optimal" } else { "greedy" }));
    Ok(GenusResult { outcome: GenusOutcome::Fallback { reason, cover: out.cover, optimal: out.optimal }, report })
}

/// Outcome of covering one piece.
enum PieceOutcome {
    Cover(FaceCover),
    Model(RootedK2tModel),
    Stop(String),
}

/// Either a face cover of the roots assembled from covers of the pieces, a
/// rooted K2,t model, or a fallback set cover with the reason the structural
/// route stopped. The hint is used for projective-plane inputs.
pub fn genus_face_cover(emb: &Embedding, roots: &RootSet, t: usize, hint: Option<&Hint>) -> Result<GenusResult> {
    check_input(emb, t)?;
    let eg = emb.euler_genus();
    let mut report = PipelineReport { euler_genus: eg, requested_depth: REQUESTED_DEPTH, ..Default::default() };
    report.note(format!(
        "input: {} vertices, {} edges, {} faces, Euler genus {eg}, {}",
        emb.n(),
        emb.m(),
        emb.face_count(),
        if emb.is_orientable() { "orientable" } else { "non-orientable" }
    ));
    let fw = face_width(emb)?;
    report.face_width = fw.value();
    report.note(format!("face-width {}", fw_text(&fw)));
    if !fw.at_least(3) {
        return fallback(emb, roots, format!("face-width {} is below 3", fw_text(&fw)), report);
    }
    if eg == 1 {
        return match projective_route(emb, roots, t, hint, &mut report)? {
            PieceOutcome::Cover(c) => Ok(GenusResult { outcome: GenusOutcome::Cover(c), report }),
            PieceOutcome::Model(m) => Ok(GenusResult { outcome: GenusOutcome::Model(m), report }),
            PieceOutcome::Stop(reason) => fallback(emb, roots, reason, report),
        };
    }
    let pl = match planarize(emb) {
        Ok(p) => p,
        Err(e) => return fallback(emb, roots, format!("planarization failed: {e}"), report),
    };
    report.note(format!(
        "planarized along {} cycles of lengths {:?}; {} cuffs ({} one-sided)",
        pl.cycles.len(),
        pl.cycles.iter().map(Vec::len).collect::<Vec<_>>(),
        pl.cuff_count(),
        pl.cut.cuffs.iter().filter(|c| c.one_sided).count()
    ));
    let ns = find_nests(pl, REQUESTED_DEPTH)?;
    let depth = ns.depth();
    report.achieved_depth = Some(depth);
    for n in &ns.nests {
        report.note(format!(
            "nest around cuff {}: depth {}{}",
            n.cuff,
            n.depth(),
            n.stopped.as_ref().map_or(String::new(), |s| format!(" ({s})"))
        ));
    }
    report.note(format!("achieved nest depth {depth} of {REQUESTED_DEPTH} requested"));
    if depth < MIN_DEPTH {
        return fallback(emb, roots, format!("nest depth {depth} is below {MIN_DEPTH}"), report);
    }
    let tree = match build_nest_tree(&ns) {
        Ok(t) => t,
        Err(e) => return fallback(emb, roots, format!("nest tree: {e}"), report),
    };
    report.note(format!("nest tree: {} vertices, {} leaves", tree.len(), tree.leaves.len()));
    let pieces = match partition_cover_pieces(&tree, &ns, emb) {
        Ok(p) => p,
        Err(e) => return fallback(emb, roots, format!("partition: {e}"), report),
    };
    let between = pieces.iter().filter(|p| p.class == PieceClass::Between).count();
    report.note(format!(
        "{} pieces: {} in the balls, {between} between them (k = {between}, g = {})",
        pieces.len(),
        pieces.len() - between,
        tree.leaves.len()
    ));
    match cover_pieces(emb, roots, t, &pieces, &mut report)? {
        PieceOutcome::Cover(c) => Ok(GenusResult { outcome: GenusOutcome::Cover(c), report }),
        PieceOutcome::Model(m) => Ok(GenusResult { outcome: GenusOutcome::Model(m), report }),
        PieceOutcome::Stop(reason) => fallback(emb, roots, reason, report),
    }
}

fn fw_text(fw: &FaceWidth) -> String {
    fw.value().map_or("unbounded".into(), |v| v.to_string())
}

fn projective_route(
    emb: &Embedding,
    roots: &RootSet,
    t: usize,
    hint: Option<&Hint>,
    report: &mut PipelineReport,
) -> Result<PieceOutcome> {
    let pieces = match projective_cover(emb, hint) {
        Ok(p) => p,
        Err(e) => return Ok(PieceOutcome::Stop(format!("projective cover: {e}"))),
    };
    report.note(format!("projective cover with {} disks ({})", pieces.len(), if hint.is_some() { "hint" } else { "search" }));
    cover_pieces(emb, roots, t, &pieces, report)
}

/// Covers every piece through its agreeing minor and lifts the covers, or
/// returns the first model found.
fn cover_pieces(
    emb: &Embedding,
    roots: &RootSet,
    t: usize,
    pieces: &[CoverPiece],
    report: &mut PipelineReport,
) -> Result<PieceOutcome> {
    let g = emb.graph();
    let mut minors = Vec::new();
    let mut covers = Vec::new();
    for (i, p) in pieces.iter().enumerate() {
        let mut row = PieceReport {
            class: p.class.clone(),
            kind: p.kind,
            inner_faces: p.inner.faces.len(),
            outer_faces: p.outer.faces.len(),
            nested: crate::embed::is_nested_pair(emb, &p.inner, &p.outer),
            minor_vertices: 0,
            minor_3_connected: false,
            roots: 0,
            cover: None,
        };
        let minor = match contract_outside(emb, &p.inner, &p.outer) {
            Ok(m) => m,
            Err(e) => {
                report.pieces.push(row);
                return Ok(PieceOutcome::Stop(format!("piece {i} ({}): {e}", p.class)));
            }
        };
        let h = &minor.embedding;
        let hr = minor.roots(roots);
        row.minor_vertices = h.n();
        row.minor_3_connected = h.graph().is_3_connected();
        row.roots = hr.len();
        let out = match p.kind {
            SurfaceKind::Sphere => match plane_dichotomy(h, &hr, t) {
                Ok(r) => match r.certificate {
                    Certificate::Cover(c) => PieceOutcome::Cover(c),
                    Certificate::Model(m) => PieceOutcome::Model(m),
                },
                Err(e) => PieceOutcome::Stop(format!("piece {i} ({}): dichotomy: {e}", p.class)),
            },
            SurfaceKind::Projective => {
                let fw = face_width(h)?;
                if !fw.at_least(PROJECTIVE_FACE_WIDTH) {
                    PieceOutcome::Stop(format!(
                        "piece {i} ({}): face-width {} of the projective minor is below {PROJECTIVE_FACE_WIDTH}",
                        p.class,
                        fw_text(&fw)
                    ))
                } else {
                    report.note(format!("piece {i}: projective minor with {} vertices", h.n()));
                    projective_route(h, &hr, t, None, report)?
                }
            }
        };
        match out {
            PieceOutcome::Cover(c) => {
                row.cover = Some(c.len());
                report.pieces.push(row);
                covers.push(c);
                minors.push(minor);
            }
            PieceOutcome::Model(m) => {
                report.pieces.push(row);
                report.note(format!("piece {i} ({}) gave a rooted K2,{} model", p.class, m.t()));
                return Ok(PieceOutcome::Model(minor.lift_model(&g, &m)?));
            }
            PieceOutcome::Stop(s) => {
                report.pieces.push(row);
                return Ok(PieceOutcome::Stop(s));
            }
        }
    }
    let parts: Vec<(&AgreeingMinor, &FaceCover)> = minors.iter().zip(&covers).collect();
    let cover = lift_cover(emb, roots, &parts)?;
    report.note(format!(
        "lifted cover of size {} from piece covers of sizes {:?}",
        cover.len(),
        covers.iter().map(FaceCover::len).collect::<Vec<_>>()
    ));
    Ok(PieceOutcome::Cover(cover))
}

#[cfg(test)]
mod tests;

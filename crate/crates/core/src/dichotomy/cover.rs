//! Face covers by set cover, and face-independent root sets.

use fixedbitset::FixedBitSet;

use crate::embed::{Embedding, RootSet};
use crate::error::{failed, Result};
use crate::model::FaceCover;
use crate::oracles::{conflict_masks, independent_up_to, MAX_EXACT_ROOTS};

/// Search nodes the exact cover may spend before settling for the best
/// cover found so far.
pub const EXACT_NODE_LIMIT: u64 = 4_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    Exact,
    Greedy,
}

impl std::str::FromStr for CoverMode {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(CoverMode::Exact),
            "greedy" => Ok(CoverMode::Greedy),
            _ => Err(crate::Error::Malformed(format!("unknown cover mode {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverOutcome {
    pub cover: FaceCover,
    /// True when the search proved the cover minimum.
    pub optimal: bool,
}

struct Instance {
    /// Candidate faces with the roots (by index) they contain.
    faces: Vec<(usize, FixedBitSet)>,
    /// For each root index, positions in `faces` containing it.
    by_root: Vec<Vec<usize>>,
    k: usize,
}

fn instance(emb: &Embedding, roots: &RootSet) -> Result<Instance> {
    let rs: Vec<usize> = roots.iter().collect();
    let k = rs.len();
    let mut index = vec![usize::MAX; emb.n()];
    for (i, &r) in rs.iter().enumerate() {
        if r >= emb.n() {
            return failed(format!("root {r} is not a vertex"));
        }
        index[r] = i;
    }
    let fs = emb.faces();
    let mut sets: Vec<(usize, FixedBitSet)> = Vec::new();
    for f in 0..fs.count() {
        let mut b = FixedBitSet::with_capacity(k);
        for v in fs.vertices(emb, f) {
            if index[v] != usize::MAX {
                b.insert(index[v]);
            }
        }
        if b.count_ones(..) > 0 {
            sets.push((f, b));
        }
    }
    // drop faces whose roots are contained in another face's roots
    let mut keep = vec![true; sets.len()];
    for a in 0..sets.len() {
        for b in 0..sets.len() {
            if a == b || !keep[b] {
                continue;
            }
            let sub = sets[a].1.is_subset(&sets[b].1);
            let same = sub && sets[b].1.is_subset(&sets[a].1);
            if sub && (!same || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    let faces: Vec<(usize, FixedBitSet)> =
        sets.into_iter().zip(keep).filter(|(_, k)| *k).map(|(s, _)| s).collect();
    let mut by_root = vec![Vec::new(); k];
    for (j, (_, b)) in faces.iter().enumerate() {
        for i in b.ones() {
            by_root[i].push(j);
        }
    }
    if let Some(i) = by_root.iter().position(|l| l.is_empty()) {
        return failed(format!("root {} lies on no face", rs[i]));
    }
    Ok(Instance { faces, by_root, k })
}

fn greedy(inst: &Instance) -> Vec<usize> {
    let mut uncovered = FixedBitSet::with_capacity(inst.k);
    uncovered.insert_range(..);
    let mut chosen = Vec::new();
    while uncovered.count_ones(..) > 0 {
        let (j, _) = inst
            .faces
            .iter()
            .enumerate()
            .map(|(j, (_, b))| (j, b.intersection(&uncovered).count()))
            .max_by_key(|&(j, c)| (c, std::cmp::Reverse(j)))
            .expect("some face covers an uncovered root");
        uncovered.difference_with(&inst.faces[j].1);
        chosen.push(j);
    }
    chosen
}

struct Exact<'a> {
    inst: &'a Instance,
    best: Vec<usize>,
    nodes: u64,
    aborted: bool,
}

impl Exact<'_> {
    /// Roots that pairwise share no candidate face each need their own face.
    fn lower_bound(&self, uncovered: &FixedBitSet) -> usize {
        let mut used = FixedBitSet::with_capacity(self.inst.faces.len());
        let mut order: Vec<usize> = uncovered.ones().collect();
        order.sort_by_key(|&i| self.inst.by_root[i].len());
        let mut lb = 0;
        for i in order {
            if self.inst.by_root[i].iter().all(|&j| !used.contains(j)) {
                lb += 1;
                for &j in &self.inst.by_root[i] {
                    used.insert(j);
                }
            }
        }
        lb
    }

    fn run(&mut self, uncovered: &FixedBitSet, chosen: &mut Vec<usize>) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > EXACT_NODE_LIMIT {
            self.aborted = true;
            return;
        }
        if uncovered.count_ones(..) == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if chosen.len() + self.lower_bound(uncovered) >= self.best.len() {
            return;
        }
        let r = uncovered.ones().min_by_key(|&i| self.inst.by_root[i].len()).expect("nonempty");
        let mut opts: Vec<(usize, usize)> = self.inst.by_root[r]
            .iter()
            .map(|&j| (j, self.inst.faces[j].1.intersection(uncovered).count()))
            .collect();
        opts.sort_by_key(|&(j, c)| (std::cmp::Reverse(c), j));
        for (j, _) in opts {
            let mut next = uncovered.clone();
            next.difference_with(&self.inst.faces[j].1);
            chosen.push(j);
            self.run(&next, chosen);
            chosen.pop();
        }
    }
}

/// Face cover of the roots. Exact mode runs branch and bound from the
/// greedy cover and reports whether it finished.
pub fn min_face_cover(emb: &Embedding, roots: &RootSet, mode: CoverMode) -> Result<CoverOutcome> {
    let inst = instance(emb, roots)?;
    let start = greedy(&inst);
    let (picked, optimal) = match mode {
        CoverMode::Greedy => (start, inst.k <= 1),
        CoverMode::Exact => {
            let mut ex = Exact { inst: &inst, best: start, nodes: 0, aborted: false };
            let mut all = FixedBitSet::with_capacity(inst.k);
            all.insert_range(..);
            ex.run(&all, &mut Vec::new());
            (ex.best, !ex.aborted)
        }
    };
    Ok(CoverOutcome { cover: FaceCover::new(picked.into_iter().map(|j| inst.faces[j].0).collect()), optimal })
}

/// Roots pairwise sharing no face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentRoots {
    pub roots: Vec<usize>,
    /// False when only the greedy pass ran and it fell short of the target,
    /// so a larger set might exist.
    pub exact: bool,
}

/// At most `target` pairwise face-independent roots; at least
/// `min(target, nu)` of them whenever `exact` is set.
pub fn face_independent_roots(emb: &Embedding, roots: &RootSet, target: usize) -> IndependentRoots {
    let rs: Vec<usize> = roots.iter().filter(|&r| r < emb.n()).collect();
    let fs = emb.faces();
    let mut pos = vec![usize::MAX; emb.n()];
    for (i, &r) in rs.iter().enumerate() {
        pos[r] = i;
    }
    let mut conf: Vec<Vec<usize>> = vec![Vec::new(); rs.len()];
    for f in 0..fs.count() {
        let on: Vec<usize> = fs.vertices(emb, f).into_iter().filter(|&v| pos[v] != usize::MAX).map(|v| pos[v]).collect();
        for &a in &on {
            for &b in &on {
                if a != b {
                    conf[a].push(b);
                }
            }
        }
    }
    for c in &mut conf {
        c.sort_unstable();
        c.dedup();
    }
    let mut order: Vec<usize> = (0..rs.len()).collect();
    order.sort_by_key(|&i| (conf[i].len(), rs[i]));
    let mut blocked = vec![false; rs.len()];
    let mut pick = Vec::new();
    for i in order {
        if pick.len() >= target {
            break;
        }
        if !blocked[i] {
            pick.push(rs[i]);
            blocked[i] = true;
            for &j in &conf[i] {
                blocked[j] = true;
            }
        }
    }
    if pick.len() >= target {
        pick.sort_unstable();
        return IndependentRoots { roots: pick, exact: true };
    }
    if rs.len() <= MAX_EXACT_ROOTS {
        let masks = conflict_masks(emb, &rs);
        let mut best: Vec<usize> = independent_up_to(&masks, target).into_iter().map(|i| rs[i]).collect();
        best.truncate(target);
        best.sort_unstable();
        return IndependentRoots { roots: best, exact: true };
    }
    pick.sort_unstable();
    IndependentRoots { roots: pick, exact: false }
}

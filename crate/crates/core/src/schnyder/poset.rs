use std::collections::BTreeSet;

use super::SchnyderWood;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Less,
    Greater,
    Incomparable,
    Equal,
}

/// Compares `u` and `v` in the order of tree `i`: `u < v` when both
/// coordinates other than `i` are strictly smaller.
pub fn dominance(wood: &SchnyderWood, u: usize, v: usize, i: usize) -> Dominance {
    if u == v {
        return Dominance::Equal;
    }
    let (j, k) = ((i + 2) % 3, (i + 1) % 3);
    let (cu, cv) = (wood.numerators(u), wood.numerators(v));
    if cu[j] < cv[j] && cu[k] < cv[k] {
        Dominance::Less
    } else if cv[j] < cu[j] && cv[k] < cu[k] {
        Dominance::Greater
    } else {
        Dominance::Incomparable
    }
}

/// A ground set ordered by one of the three dominance orders.
#[derive(Debug, Clone)]
pub struct DominancePoset<'a> {
    wood: &'a SchnyderWood,
    index: usize,
    ground: Vec<usize>,
}

impl<'a> DominancePoset<'a> {
    pub fn new(wood: &'a SchnyderWood, index: usize, ground: &[usize]) -> Self {
        let mut ground = ground.to_vec();
        ground.sort_unstable();
        ground.dedup();
        DominancePoset { wood, index: index % 3, ground }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn less(&self, u: usize, v: usize) -> bool {
        dominance(self.wood, u, v, self.index) == Dominance::Less
    }

    pub fn mirsky(&self) -> Mirsky {
        mirsky_partition(&self.ground, |u, v| self.less(u, v))
    }
}

/// Partition of a poset into antichains by height, with a longest chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mirsky {
    /// `antichains[h]` holds the elements whose longest chain from below has
    /// `h + 1` elements.
    pub antichains: Vec<Vec<usize>>,
    /// A chain of maximum length, smallest element first.
    pub chain: Vec<usize>,
}

/// Splits `items` into as many antichains as the longest chain has elements.
pub fn mirsky_partition(items: &[usize], less: impl Fn(usize, usize) -> bool) -> Mirsky {
    let k = items.len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut indeg = vec![0usize; k];
    let mut succs: Vec<Vec<usize>> = vec![Vec::new(); k];
    for a in 0..k {
        for b in 0..k {
            if a != b && less(items[a], items[b]) {
                preds[b].push(a);
                succs[a].push(b);
                indeg[b] += 1;
            }
        }
    }
    let mut height = vec![1usize; k];
    let mut via = vec![usize::MAX; k];
    let mut ready: Vec<usize> = (0..k).filter(|&x| indeg[x] == 0).collect();
    while let Some(a) = ready.pop() {
        for &b in &succs[a] {
            if height[a] + 1 > height[b] {
                height[b] = height[a] + 1;
                via[b] = a;
            }
            indeg[b] -= 1;
            if indeg[b] == 0 {
                ready.push(b);
            }
        }
    }
    let h = height.iter().copied().max().unwrap_or(0);
    let mut antichains = vec![Vec::new(); h];
    for x in 0..k {
        antichains[height[x] - 1].push(items[x]);
    }
    for a in &mut antichains {
        a.sort_unstable();
    }
    let mut chain = Vec::new();
    if let Some(top) = (0..k).filter(|&x| height[x] == h).min_by_key(|&x| items[x]) {
        let mut x = top;
        loop {
            chain.push(items[x]);
            if via[x] == usize::MAX {
                break;
            }
            x = via[x];
        }
    }
    chain.reverse();
    Mirsky { antichains, chain }
}

/// The part of a tree spanned by a vertex set and all its ancestors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubTree {
    pub vertices: Vec<usize>,
    /// Edges as `(child, parent)`.
    pub edges: Vec<(usize, usize)>,
}

pub fn ancestors_subtree(wood: &SchnyderWood, i: usize, set: &[usize]) -> SubTree {
    let mut vs = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for &s in set {
        let mut x = s;
        if !vs.insert(x) {
            continue;
        }
        while let Some(p) = wood.parent(i, x) {
            edges.insert((x, p));
            if !vs.insert(p) {
                break;
            }
            x = p;
        }
    }
    SubTree { vertices: vs.into_iter().collect(), edges: edges.into_iter().collect() }
}

//! Simple undirected graphs and connectivity tests.

use std::collections::VecDeque;

/// A simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list, dropping loops and repeated edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `keep`, with vertices renumbered in increasing order.
    /// Returns the graph and the map from new to old ids.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (new_id[u], new_id[v]));
        (Graph::from_edges(old.len(), edges), old)
    }

    /// True when the vertices not in `removed` induce a connected graph.
    pub fn is_connected_without(&self, removed: &[bool]) -> bool {
        let start = match (0..self.n()).find(|&v| !removed[v]) {
            Some(s) => s,
            None => return true,
        };
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !removed[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == removed.iter().filter(|&&r| !r).count()
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&vec![false; self.n()])
    }

    /// Connected components of the vertices not in `removed`.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Biconnectivity of the graph minus `removed` (at least three vertices
    /// remaining, connected, and no cut vertex). Two adjacent vertices also count.
    pub fn is_biconnected_without(&self, removed: &[bool]) -> bool {
        let alive: Vec<usize> = (0..self.n()).filter(|&v| !removed[v]).collect();
        match alive.len() {
            0 | 1 => return false,
            2 => return self.has_edge(alive[0], alive[1]),
            _ => {}
        }
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let root = alive[0];
        let mut timer = 0;
        // iterative DFS: (vertex, parent, next neighbour index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut root_children = 0;
        while let Some(&mut (u, parent, ref mut idx)) = stack.last_mut() {
            if *idx < self.adj[u].len() {
                let w = self.adj[u][*idx];
                *idx += 1;
                if removed[w] || w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if p != root && low[u] >= disc[p] {
                        return false;
                    }
                }
            }
        }
        if timer != alive.len() {
            return false;
        }
        root_children <= 1
    }

    pub fn is_biconnected(&self) -> bool {
        self.is_biconnected_without(&vec![false; self.n()])
    }

    /// 3-connectivity: at least four vertices and no separating set of size two.
    pub fn is_3_connected(&self) -> bool {
        let n = self.n();
        if n < 4 {
            return false;
        }
        let mut removed = vec![false; n];
        for v in 0..n {
            removed[v] = true;
            let ok = self.is_biconnected_without(&removed);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    /// Maximum number of internally vertex-disjoint paths between `s` and `t`
    /// (a direct edge counts as one path), together with the paths.
    pub fn disjoint_paths(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        disjoint_paths_avoiding(self, s, t, &vec![false; self.n()])
    }

    /// Vertex connectivity (the complete graph on n vertices has n - 1).
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n();
        if n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        let mut best = n - 1;
        for s in 0..n {
            for t in s + 1..n {
                if self.has_edge(s, t) {
                    continue;
                }
                let k = self.disjoint_paths(s, t).len();
                best = best.min(k);
            }
        }
        best
    }

    /// k-connectivity: more than k vertices and no separator of fewer than k vertices.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n() <= k {
            return false;
        }
        match k {
            0 => true,
            1 => self.is_connected(),
            2 => self.is_biconnected(),
            3 => self.is_3_connected(),
            _ => self.vertex_connectivity() >= k,
        }
    }

    /// Breadth-first distances from `s` (usize::MAX when unreachable).
    pub fn bfs(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    q.push_back(w);
                }
            }
        }
        dist
    }
}

/// Internally vertex-disjoint s-t paths avoiding the vertices in `blocked`,
/// found by unit-capacity augmenting paths on the split-vertex network.
pub(crate) fn disjoint_paths_avoiding(
    g: &Graph,
    s: usize,
    t: usize,
    blocked: &[bool],
) -> Vec<Vec<usize>> {
    let n = g.n();
    // node 2v = in(v), 2v+1 = out(v); arcs stored with residual capacity
    let mut head = Vec::new();
    let mut cap = Vec::new();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    let mut add = |a: usize, b: usize, c: u32, head: &mut Vec<usize>, cap: &mut Vec<u32>| {
        adj[a].push(head.len());
        head.push(b);
        cap.push(c);
        adj[b].push(head.len());
        head.push(a);
        cap.push(0);
    };
    let big = n as u32 + 1;
    for v in 0..n {
        if blocked[v] && v != s && v != t {
            continue;
        }
        let c = if v == s || v == t { big } else { 1 };
        add(2 * v, 2 * v + 1, c, &mut head, &mut cap);
    }
    for (u, v) in g.edges() {
        let ok = |x: usize| !blocked[x] || x == s || x == t;
        if !ok(u) || !ok(v) {
            continue;
        }
        if (u == s && v == t) || (u == t && v == s) {
            continue;
        }
        add(2 * u + 1, 2 * v, 1, &mut head, &mut cap);
        add(2 * v + 1, 2 * u, 1, &mut head, &mut cap);
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    loop {
        let mut prev = vec![usize::MAX; 2 * n];
        let mut seen = vec![false; 2 * n];
        seen[source] = true;
        let mut q = VecDeque::from([source]);
        while let Some(x) = q.pop_front() {
            if x == sink {
                break;
            }
            for &a in &adj[x] {
                let y = head[a];
                if cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    prev[y] = a;
                    q.push_back(y);
                }
            }
        }
        if !seen[sink] {
            break;
        }
        let mut y = sink;
        while y != source {
            let a = prev[y];
            cap[a] -= 1;
            cap[a ^ 1] += 1;
            y = head[a ^ 1];
        }
    }
    // decompose flow into paths
    let mut paths = Vec::new();
    if g.has_edge(s, t) {
        paths.push(vec![s, t]);
    }
    let mut used: Vec<bool> = vec![false; head.len()];
    loop {
        let mut path = vec![s];
        let mut x = source;
        let mut ok = false;
        'walk: loop {
            for &a in &adj[x] {
                // forward arcs are even indices; flow present when the reverse has capacity
                if a % 2 == 0 && cap[a ^ 1] > 0 && !used[a] {
                    used[a] = true;
                    let y = head[a];
                    if y == sink {
                        path.push(t);
                        ok = true;
                        break 'walk;
                    }
                    if y % 2 == 0 {
                        // entering in(v); continue from out(v)
                        path.push(y / 2);
                        x = y + 1;
                    } else {
                        x = y;
                    }
                    continue 'walk;
                }
            }
            break;
        }
        if !ok {
            break;
        }
        paths.push(path);
    }
    paths
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    #[test]
    fn cycle_is_biconnected_not_triconnected() {
        let c = cycle(6);
        assert!(c.is_biconnected());
        assert!(!c.is_3_connected());
        assert_eq!(c.vertex_connectivity(), 2);
    }

    #[test]
    fn path_has_cut_vertex() {
        let p = Graph::from_edges(3, [(0, 1), (1, 2)]);
        assert!(!p.is_biconnected());
    }

    #[test]
    fn complete_graphs() {
        assert!(complete(4).is_3_connected());
        assert_eq!(complete(5).vertex_connectivity(), 4);
        assert!(complete(6).is_k_connected(5));
        assert!(!complete(4).is_k_connected(4));
    }

    #[test]
    fn disjoint_paths_in_k4() {
        let g = complete(4);
        let paths = g.disjoint_paths(0, 1);
        assert_eq!(paths.len(), 3);
        for p in &paths {
            assert_eq!(p.first(), Some(&0));
            assert_eq!(p.last(), Some(&1));
            for w in p.windows(2) {
                assert!(g.has_edge(w[0], w[1]));
            }
        }
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(5, [(0, 1), (2, 3)]);
        let c = g.components_without(&[false; 5]);
        assert_eq!(c, vec![vec![0, 1], vec![2, 3], vec![4]]);
    }
}

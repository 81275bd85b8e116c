//! Matchings: maximum cardinality matching in general graphs (Edmonds'
//! blossom algorithm) and exact minimum-weight perfect pairing of a small
//! complete graph by subset dynamic programming.

use std::collections::VecDeque;

use thiserror::Error;

/// Largest terminal count accepted by [`min_weight_perfect_matching`].
pub const MAX_TERMINALS: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("{0} terminals exceed the supported maximum of {MAX_TERMINALS}")]
    TooManyTerminals(usize),
    #[error("cannot pair an odd number ({0}) of terminals")]
    OddTerminalCount(usize),
    #[error("weight matrix is not square, symmetric with zero diagonal")]
    MalformedWeights,
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list; loops and repeated edges are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u != v {
                g.adj[u].push(v);
                g.adj[v].push(u);
            }
        }
        for a in &mut g.adj {
            a.sort_unstable();
            a.dedup();
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Subgraph induced by the vertices with `keep[v] == true`, relabelled
    /// in increasing order.
    pub fn induced(&self, keep: &[bool]) -> Graph {
        let mut label = vec![usize::MAX; self.n()];
        let mut next = 0;
        for v in 0..self.n() {
            if keep[v] {
                label[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| keep[u] && keep[v])
            .map(|(u, v)| (label[u], label[v]));
        Graph::from_edges(next, edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
        }
    }

    /// Builds a matching from vertex pairs, or `None` if two pairs share a vertex.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Option<Self> {
        let mut m = Matching::empty(n);
        for &(u, v) in pairs {
            if u == v || u >= n || v >= n || m.mate[u].is_some() || m.mate[v].is_some() {
                return None;
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
        }
        Some(m)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Matched pairs `(u, v)` with `u < v`, in increasing order of `u`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

/// Maximum cardinality matching by Edmonds' blossom shrinking.
///
/// Vertices are scanned in increasing order and neighbors in ascending
/// order, so the result is a deterministic function of the graph.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate: Vec<Option<usize>> = vec![None; n];

    // Greedy warm start.
    for u in 0..n {
        if mate[u].is_none() {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| mate[v].is_none()) {
                mate[u] = Some(v);
                mate[v] = Some(u);
            }
        }
    }

    let mut search = BlossomSearch::new(n);
    for root in 0..n {
        if mate[root].is_none() {
            if let Some(end) = search.find_augmenting_path(g, &mate, root) {
                let mut v = Some(end);
                while let Some(x) = v {
                    let pv = search.parent[x].expect("path vertex has a parent");
                    let ppv = mate[pv];
                    mate[x] = Some(pv);
                    mate[pv] = Some(x);
                    v = ppv;
                }
            }
        }
    }
    Matching { mate }
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    if g.n() % 2 == 1 {
        return false;
    }
    maximum_matching(g).is_perfect()
}

struct BlossomSearch {
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl BlossomSearch {
    fn new(n: usize) -> Self {
        BlossomSearch {
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mate: &[Option<usize>], mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; mate.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match mate[a] {
                None => break,
                Some(m) => a = self.parent[m].expect("outer vertex on tree path"),
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[mate[b].expect("inner path is matched")].expect("tree path");
        }
    }

    fn mark_path(&mut self, mate: &[Option<usize>], mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = mate[v].expect("blossom path is matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("blossom path has parents");
        }
    }

    fn find_augmenting_path(
        &mut self,
        g: &Graph,
        mate: &[Option<usize>],
        root: usize,
    ) -> Option<usize> {
        let n = g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.used[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for &to in g.neighbors(v) {
                if self.base[v] == self.base[to] || mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer = to == root || mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_outer {
                    let cur_base = self.lca(mate, v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(mate, v, cur_base, to);
                    self.mark_path(mate, to, cur_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }
}

/// A perfect pairing of terminals `0..t` with its total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub pairs: Vec<(usize, usize)>,
    pub total_weight: u64,
}

/// Exact minimum-weight perfect matching of the complete graph on `t`
/// terminals. Among optimal pairings the lexicographically least one is
/// returned (lowest terminal first, paired with its lowest feasible partner).
pub fn min_weight_perfect_matching(weights: &[Vec<u32>]) -> Result<Pairing, MatchingError> {
    let t = weights.len();
    if t % 2 == 1 {
        return Err(MatchingError::OddTerminalCount(t));
    }
    if t > MAX_TERMINALS {
        return Err(MatchingError::TooManyTerminals(t));
    }
    for (i, row) in weights.iter().enumerate() {
        if row.len() != t || row[i] != 0 || (0..t).any(|j| row[j] != weights[j][i]) {
            return Err(MatchingError::MalformedWeights);
        }
    }
    if t == 0 {
        return Ok(Pairing {
            pairs: Vec::new(),
            total_weight: 0,
        });
    }

    // cost[mask] = cheapest pairing of the terminals in `mask`; odd masks unused.
    let full = (1usize << t) - 1;
    let mut cost = vec![u64::MAX; full + 1];
    cost[0] = 0;
    for mask in 1..=full {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut best = u64::MAX;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let sub = cost[rest & !(1 << j)];
            best = best.min(sub.saturating_add(weights[i][j] as u64));
        }
        cost[mask] = best;
    }

    let mut pairs = Vec::with_capacity(t / 2);
    let mut mask = full;
    while mask != 0 {
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut bits = rest;
        loop {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let next = rest & !(1 << j);
            if cost[next].saturating_add(weights[i][j] as u64) == cost[mask] {
                pairs.push((i, j));
                mask = next;
                break;
            }
        }
    }
    Ok(Pairing {
        pairs,
        total_weight: cost[full],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> Graph {
        Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
    }

    fn brute_max_matching(g: &Graph) -> usize {
        fn go(g: &Graph, used: &mut Vec<bool>, v: usize) -> usize {
            if v == g.n() {
                return 0;
            }
            if used[v] {
                return go(g, used, v + 1);
            }
            let mut best = go(g, used, v + 1);
            for &w in g.neighbors(v) {
                if !used[w] {
                    used[v] = true;
                    used[w] = true;
                    best = best.max(1 + go(g, used, v + 1));
                    used[v] = false;
                    used[w] = false;
                }
            }
            best
        }
        go(g, &mut vec![false; g.n()], 0)
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges)
    }

    #[test]
    fn small_cases() {
        assert_eq!(maximum_matching(&Graph::from_edges(2, [(0, 1)])).len(), 1);
        assert_eq!(maximum_matching(&cycle(5)).len(), 2);
        assert!(has_perfect_matching(&Graph::new(0)));
        assert!(!has_perfect_matching(&cycle(3)));
    }

    #[test]
    fn petersen_is_perfectly_matchable() {
        let g = petersen();
        assert_eq!(brute_max_matching(&g), 5);
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 5);
        assert!(m.is_valid_in(&g));
    }

    #[test]
    fn blossom_needed() {
        // Triangle 0-1-2 with pendant paths; greedy picks 0-1 and must re-route.
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5)]);
        assert_eq!(brute_max_matching(&g), 3);
        assert_eq!(maximum_matching(&g).len(), 3);
    }

    #[test]
    fn pairing_small() {
        let p = min_weight_perfect_matching(&[vec![0, 7], vec![7, 0]]).unwrap();
        assert_eq!(p.pairs, vec![(0, 1)]);
        assert_eq!(p.total_weight, 7);

        let w = vec![
            vec![0, 1, 5, 5],
            vec![1, 0, 5, 5],
            vec![5, 5, 0, 1],
            vec![5, 5, 1, 0],
        ];
        let p = min_weight_perfect_matching(&w).unwrap();
        assert_eq!(p.pairs, vec![(0, 1), (2, 3)]);
        assert_eq!(p.total_weight, 2);
    }

    #[test]
    fn pairing_errors() {
        let w3 = vec![vec![0; 3]; 3];
        assert_eq!(
            min_weight_perfect_matching(&w3),
            Err(MatchingError::OddTerminalCount(3))
        );
        let w28 = vec![vec![0; 28]; 28];
        assert_eq!(
            min_weight_perfect_matching(&w28),
            Err(MatchingError::TooManyTerminals(28))
        );
        let asym = vec![vec![0, 1], vec![2, 0]];
        assert_eq!(
            min_weight_perfect_matching(&asym),
            Err(MatchingError::MalformedWeights)
        );
    }

    #[test]
    fn pairing_prefers_lexicographically_least_tie() {
        // All pairings cost 0.
        let w = vec![vec![0; 4]; 4];
        let p = min_weight_perfect_matching(&w).unwrap();
        assert_eq!(p.pairs, vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn induced_relabels() {
        let g = cycle(4);
        let h = g.induced(&[true, false, true, true]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
    }
}

//! Brute-force references for the solver's outputs.
//!
//! None of these use linear programming or T-join reasoning: the Clar oracle
//! searches face subsets directly, testing the remainder for a perfect
//! matching, and the rest are plain exhaustive or branch-and-bound searches.

use thiserror::Error;

use crate::matching::{has_perfect_matching, Graph, Matching};
use crate::plane_graph::{DualGraph, FaceId, PlaneGraph};
use crate::solver::is_clar_set;

pub const EVEN_FACE_LIMIT: usize = 22;
pub const ALPHA_LIMIT: usize = 30;
pub const TJOIN_EDGE_LIMIT: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is {size}, above the oracle limit {limit}")]
    TooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("the given edge set is not a perfect matching of the graph")]
    NotPerfectMatching,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleValue {
    pub value: usize,
    pub best_set: Vec<FaceId>,
}

/// Maximum Clar set by depth-first search over even faces in id order.
pub fn clar_oracle(g: &PlaneGraph) -> Result<OracleValue, OracleError> {
    clar_oracle_with_order(g, &g.even_faces())
}

/// As [`clar_oracle`], branching over the even faces in the given order.
pub fn clar_oracle_with_order(
    g: &PlaneGraph,
    order: &[FaceId],
) -> Result<OracleValue, OracleError> {
    if order.len() > EVEN_FACE_LIMIT {
        return Err(OracleError::TooLarge {
            what: "even face count",
            size: order.len(),
            limit: EVEN_FACE_LIMIT,
        });
    }
    if !has_perfect_matching(&g.to_graph()) {
        return Err(OracleError::NoPerfectMatching);
    }
    let mut search = ClarSearch {
        g,
        order,
        used: vec![false; g.n()],
        chosen: Vec::new(),
        best: Vec::new(),
    };
    search.go(0);
    let mut best_set = search.best;
    best_set.sort_unstable();
    Ok(OracleValue {
        value: best_set.len(),
        best_set,
    })
}

struct ClarSearch<'a> {
    g: &'a PlaneGraph,
    order: &'a [FaceId],
    used: Vec<bool>,
    chosen: Vec<FaceId>,
    best: Vec<FaceId>,
}

impl ClarSearch<'_> {
    // Subsets of Clar sets are Clar sets, so any branch whose current set
    // fails the perfect matching test can be cut.
    fn go(&mut self, i: usize) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if i == self.order.len() || self.chosen.len() + (self.order.len() - i) <= self.best.len() {
            return;
        }
        let f = self.order[i];
        let verts = &self.g.face(f).vertices;
        if verts.iter().all(|&v| !self.used[v]) {
            self.chosen.push(f);
            if is_clar_set(self.g, &self.chosen) {
                for &v in verts {
                    self.used[v] = true;
                }
                self.go(i + 1);
                for &v in verts {
                    self.used[v] = false;
                }
            }
            self.chosen.pop();
        }
        self.go(i + 1);
    }
}

/// Faces on which `m` alternates.
pub fn alternating_faces(g: &PlaneGraph, m: &Matching) -> Vec<FaceId> {
    g.faces()
        .iter()
        .filter(|f| f.is_even())
        .filter(|f| {
            let k = f.len();
            let in_m = |i: usize| {
                let d = f.darts[i % k];
                m.mate(g.tail(d)) == Some(g.head(d))
            };
            (0..k).all(|i| in_m(i) != in_m(i + 1))
        })
        .map(|f| f.id)
        .collect()
}

/// Largest set of pairwise vertex-disjoint faces that all alternate with
/// respect to the fixed perfect matching `m`.
pub fn clar_wrt_matching_oracle(g: &PlaneGraph, m: &Matching) -> Result<usize, OracleError> {
    if !m.is_perfect() || !m.is_valid_in(&g.to_graph()) {
        return Err(OracleError::NotPerfectMatching);
    }
    let faces = alternating_faces(g, m);
    let k = faces.len();
    let conflicts = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let a = g.face(faces[i]);
            g.face(faces[j])
                .vertices
                .iter()
                .any(|&v| a.contains_vertex(v))
        });
    alpha_oracle(&Graph::from_edges(k, conflicts))
}

/// Independence number by branch and bound over vertex bitmasks.
pub fn alpha_oracle(graph: &Graph) -> Result<usize, OracleError> {
    let n = graph.n();
    if n > ALPHA_LIMIT {
        return Err(OracleError::TooLarge {
            what: "vertex count",
            size: n,
            limit: ALPHA_LIMIT,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << w))
        .collect();
    let all = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut best = 0;
    mis(&adj, all, 0, &mut best);
    Ok(best)
}

fn mis(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // Branch on a vertex of maximum degree inside `cand`.
    let mut pick = None;
    let mut pick_deg = 0;
    let mut bits = cand;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let d = (adj[v] & cand).count_ones();
        if pick.is_none() || d > pick_deg {
            pick = Some(v);
            pick_deg = d;
        }
    }
    let Some(v) = pick else {
        *best = (*best).max(size);
        return;
    };
    if pick_deg == 0 {
        *best = (*best).max(size + cand.count_ones() as usize);
        return;
    }
    mis(adj, cand & !(adj[v] | 1 << v), size + 1, best);
    mis(adj, cand & !(1 << v), size, best);
}

/// Minimum T-join size by exhaustive search over all dual edge subsets.
pub fn tjoin_oracle(dual: &DualGraph, terminals: &[FaceId]) -> Result<usize, OracleError> {
    let m = dual.edge_count();
    if m > TJOIN_EDGE_LIMIT {
        return Err(OracleError::TooLarge {
            what: "dual edge count",
            size: m,
            limit: TJOIN_EDGE_LIMIT,
        });
    }
    let flip: Vec<u64> = dual
        .edges()
        .iter()
        .map(|&(a, b)| (1u64 << a.0) ^ (1u64 << b.0))
        .collect();
    let target = terminals.iter().fold(0u64, |acc, f| acc ^ 1 << f.0);
    let mut best = usize::MAX;
    // Gray-code walk: consecutive subsets differ in one edge.
    let mut parity = 0u64;
    let mut subset = 0u64;
    for step in 0u64..(1 << m) {
        if step > 0 {
            let bit = step.trailing_zeros() as usize;
            subset ^= 1 << bit;
            parity ^= flip[bit];
        }
        if parity == target {
            best = best.min(subset.count_ones() as usize);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use crate::matching::maximum_matching;

    #[test]
    fn clar_named() {
        assert_eq!(clar_oracle(&named("benzene").unwrap()).unwrap().value, 1);
        assert_eq!(
            clar_oracle(&named("dodecahedron").unwrap()).unwrap().value,
            0
        );
        let cube = named("cube").unwrap();
        assert_eq!(clar_oracle(&cube).unwrap().value, 2);
        let mut rev = cube.even_faces();
        rev.reverse();
        assert_eq!(clar_oracle_with_order(&cube, &rev).unwrap().value, 2);
    }

    #[test]
    fn alpha_small() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(alpha_oracle(&k4).unwrap(), 1);
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(alpha_oracle(&c4).unwrap(), 2);
        assert_eq!(alpha_oracle(&Graph::new(0)).unwrap(), 0);
        assert!(matches!(
            alpha_oracle(&Graph::new(31)),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[test]
    fn wrt_matching_on_benzene() {
        let g = named("benzene").unwrap();
        let m = maximum_matching(&g.to_graph());
        assert_eq!(alternating_faces(&g, &m).len(), 2);
        assert_eq!(clar_wrt_matching_oracle(&g, &m).unwrap(), 1);
        let partial = Matching::from_pairs(6, &[(0, 1)]).unwrap();
        assert_eq!(
            clar_wrt_matching_oracle(&g, &partial),
            Err(OracleError::NotPerfectMatching)
        );
    }

    #[test]
    fn tjoin_small() {
        let cube = named("cube").unwrap();
        assert_eq!(tjoin_oracle(&cube.dual(), &[]).unwrap(), 0);
        let prism = named("prism").unwrap();
        assert_eq!(tjoin_oracle(&prism.dual(), &prism.odd_faces()).unwrap(), 2);
        let k4 = named("k4").unwrap();
        assert_eq!(tjoin_oracle(&k4.dual(), &k4.odd_faces()).unwrap(), 2);
    }

    #[test]
    fn clar_oracle_refuses_unmatchable() {
        assert_eq!(
            clar_oracle(&named("cycle(5)").unwrap()),
            Err(OracleError::NoPerfectMatching)
        );
    }
}

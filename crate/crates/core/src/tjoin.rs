//! Shortest odd-joins in the planar dual under unit edge lengths.
//!
//! The odd-degree nodes of the dual are exactly the odd faces of the primal.
//! A minimum T-join is assembled from BFS shortest paths between terminals
//! paired by a minimum-weight perfect matching of their distance matrix.

use std::collections::BTreeSet;

use crate::matching::{min_weight_perfect_matching, MatchingError};
use crate::plane_graph::{DualGraph, EdgeId, FaceId, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TJoin {
    /// Dual edge ids, which coincide with the primal edge ids of `J`.
    pub edges: Vec<EdgeId>,
    pub terminals: Vec<FaceId>,
    /// Sum of the matched terminal distances; `edges.len()` never exceeds it.
    pub pairing_weight: u64,
}

impl TJoin {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Even faces with at least one join edge on their boundary. Diagnostic only.
    pub fn touched_even_faces(&self, g: &PlaneGraph) -> Vec<FaceId> {
        let mut touched = BTreeSet::new();
        for &e in &self.edges {
            let (a, b) = g.edge_faces(e);
            for f in [a, b] {
                if g.face(f).is_even() {
                    touched.insert(f);
                }
            }
        }
        touched.into_iter().collect()
    }
}

/// Minimum-cardinality T-join of `dual`.
pub fn shortest_odd_join(dual: &DualGraph, terminals: &[FaceId]) -> Result<TJoin, MatchingError> {
    let t = terminals.len();
    if t % 2 == 1 {
        return Err(MatchingError::OddTerminalCount(t));
    }
    let searches: Vec<_> = terminals.iter().map(|&s| dual.bfs(s)).collect();
    let weights: Vec<Vec<u32>> = searches
        .iter()
        .map(|(dist, _)| {
            terminals
                .iter()
                .map(|f| {
                    u32::try_from(dist[f.0])
                        .expect("dual of a 2-connected plane graph is connected")
                })
                .collect()
        })
        .collect();
    let pairing = min_weight_perfect_matching(&weights)?;

    let mut parity = vec![false; dual.edge_count()];
    for &(i, j) in &pairing.pairs {
        let parent = &searches[i].1;
        let mut f = terminals[j];
        while let Some((p, e)) = parent[f.0] {
            parity[e.0] ^= true;
            f = p;
        }
    }
    let edges = parity
        .iter()
        .enumerate()
        .filter(|(_, &on)| on)
        .map(|(e, _)| EdgeId(e))
        .collect();
    Ok(TJoin {
        edges,
        terminals: terminals.to_vec(),
        pairing_weight: pairing.total_weight,
    })
}

/// The shortest odd-join of `g`'s dual, with the odd faces as terminals.
pub fn odd_join_of(g: &PlaneGraph) -> Result<TJoin, MatchingError> {
    shortest_odd_join(&g.dual(), &g.odd_faces())
}

/// True iff the dual degree of every node within `join` is odd exactly at `terminals`.
pub fn verify_tjoin(dual: &DualGraph, terminals: &[FaceId], join: &[EdgeId]) -> bool {
    let mut odd = vec![false; dual.node_count()];
    let mut seen = BTreeSet::new();
    for &e in join {
        if e.0 >= dual.edge_count() || !seen.insert(e) {
            return false;
        }
        let (a, b) = dual.endpoints(e);
        odd[a.0] ^= true;
        odd[b.0] ^= true;
    }
    let mut expected = vec![false; dual.node_count()];
    for f in terminals {
        if f.0 >= dual.node_count() {
            return false;
        }
        expected[f.0] ^= true;
    }
    odd == expected
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn empty_terminal_set() {
        let g = named("cube").unwrap();
        let j = odd_join_of(&g).unwrap();
        assert_eq!(j.size(), 0);
        assert!(verify_tjoin(&g.dual(), &[], &[]));
    }

    #[test]
    fn prism_and_k4() {
        let prism = named("prism").unwrap();
        let j = odd_join_of(&prism).unwrap();
        assert_eq!(j.size(), 2);
        assert!(verify_tjoin(&prism.dual(), &j.terminals, &j.edges));
        assert_eq!(j.touched_even_faces(&prism).len(), 1);

        let k4 = named("k4").unwrap();
        let j = odd_join_of(&k4).unwrap();
        assert_eq!(j.size(), 2);
        assert!(verify_tjoin(&k4.dual(), &j.terminals, &j.edges));
    }

    #[test]
    fn single_triangle_square_edge_is_not_a_join() {
        let prism = named("prism").unwrap();
        let dual = prism.dual();
        let t = prism.odd_faces();
        let e = (0..prism.m())
            .map(EdgeId)
            .find(|&e| {
                let (a, b) = prism.edge_faces(e);
                prism.face(a).is_even() != prism.face(b).is_even()
            })
            .unwrap();
        assert!(!verify_tjoin(&dual, &t, &[e]));
    }

    #[test]
    fn rejects_duplicate_edges() {
        let prism = named("prism").unwrap();
        assert!(!verify_tjoin(&prism.dual(), &[], &[EdgeId(0), EdgeId(0)]));
    }
}

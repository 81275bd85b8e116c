//! The FPT Clar number algorithm.
//!
//! 1. Find a shortest odd-join `J` of the dual (unit lengths).
//! 2. Subdivide every edge of `J` with a new node; the set of these nodes is `U`.
//!    Every face of the subdivided graph is even.
//! 3. For every guess `b_U` in `{0,1,2}^U` of how many chosen objects cover
//!    each subdivision node, fix the half-edge variables accordingly and solve
//!    the exact LP `max 1y  s.t.  R y + K x = b',  y, x >= 0`.
//! 4. The best LP optimum over all guesses is the Clar number. The constraint
//!    matrix is unimodular, so every optimal vertex is 0/1 and decodes into a
//!    Clar set plus a perfect matching of the remaining vertices.

use rayon::prelude::*;
use thiserror::Error;

use crate::lp::{is_integral, solve_lp, LinearProgram, LpStatus, Rational};
use crate::matching::{has_perfect_matching, MatchingError};
use crate::plane_graph::{EdgeId, FaceId, GraphError, PlaneGraph};
use crate::tjoin::{shortest_odd_join, TJoin};

/// Default cap on `|J|`; `3^16` LPs is about 43 million.
pub const DEFAULT_MAX_PARAM: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has no perfect matching; its Clar number is undefined")]
    NoPerfectMatching,
    #[error("odd-join size {size} exceeds the parameter cap {cap}")]
    ParameterTooLarge { size: usize, cap: usize },
    #[error("LP for guess {guess:?} returned a non-integral optimal vertex")]
    NonIntegralVertex { guess: Vec<u8> },
    #[error("decoded solution failed verification")]
    InvalidSolution,
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads for guess enumeration; 0 lets the pool decide.
    pub jobs: usize,
    /// Skip guesses that are locally infeasible before building their LP.
    pub prune: bool,
    /// Exclude the outer face (when the instance names one) from Clar sets.
    pub forbid_outer: bool,
    pub max_param: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            jobs: 1,
            prune: false,
            forbid_outer: false,
            max_param: DEFAULT_MAX_PARAM,
        }
    }
}

/// A face of the input graph traced in the subdivided graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedFace {
    pub face: FaceId,
    pub vertices: Vec<usize>,
}

/// `G` with every edge of `J` subdivided. Subdivision node `n + k` sits on
/// the `k`-th join edge; its half-edges are `2k` and `2k + 1`.
#[derive(Debug, Clone)]
pub struct SubdividedGraph {
    pub base: PlaneGraph,
    pub join: Vec<EdgeId>,
    pub subdivision_nodes: Vec<usize>,
    pub half_edges: Vec<(usize, usize)>,
    pub surviving_edges: Vec<EdgeId>,
    /// All even faces of `G`, lifted. Odd faces of `G` are never columns.
    pub face_columns: Vec<LiftedFace>,
}

pub fn subdivide(g: &PlaneGraph, join: &[EdgeId]) -> SubdividedGraph {
    let n = g.n();
    let mut join = join.to_vec();
    join.sort_unstable();
    join.dedup();
    let mut node_of = vec![None; g.m()];
    let mut half_edges = Vec::with_capacity(2 * join.len());
    for (k, &e) in join.iter().enumerate() {
        node_of[e.0] = Some(n + k);
        let (p, q) = g.edge(e);
        half_edges.push((p, n + k));
        half_edges.push((n + k, q));
    }
    let surviving_edges = (0..g.m())
        .map(EdgeId)
        .filter(|e| node_of[e.0].is_none())
        .collect();
    let face_columns = g
        .faces()
        .iter()
        .filter(|f| f.is_even())
        .map(|f| {
            let mut vertices = Vec::with_capacity(f.len());
            for &d in &f.darts {
                vertices.push(g.tail(d));
                if let Some(u) = node_of[d.edge().0] {
                    vertices.push(u);
                }
            }
            LiftedFace {
                face: f.id,
                vertices,
            }
        })
        .collect();
    SubdividedGraph {
        base: g.clone(),
        subdivision_nodes: (n..n + join.len()).collect(),
        join,
        half_edges,
        surviving_edges,
        face_columns,
    }
}

impl SubdividedGraph {
    pub fn vertex_count(&self) -> usize {
        self.base.n() + self.join.len()
    }

    pub fn edge_count(&self) -> usize {
        self.surviving_edges.len() + self.half_edges.len()
    }

    /// The subdivided graph as a plane graph in its own right, with the
    /// inherited embedding.
    pub fn to_plane_graph(&self) -> Result<PlaneGraph, GraphError> {
        let g = &self.base;
        let n = g.n();
        let mut rot = g.rotation_lists();
        for (k, &e) in self.join.iter().enumerate() {
            let (p, q) = g.edge(e);
            for (a, b) in [(p, q), (q, p)] {
                let slot = rot[a]
                    .iter_mut()
                    .find(|w| **w == b)
                    .expect("join edge endpoint");
                *slot = n + k;
            }
        }
        for &e in &self.join {
            let (p, q) = g.edge(e);
            rot.push(vec![p, q]);
        }
        PlaneGraph::from_rotation(rot)
    }
}

/// Constraint columns over rows `V + U`.
#[derive(Debug, Clone)]
pub struct IncidenceSystem {
    pub rows: usize,
    pub base_vertices: usize,
    /// Face columns (`R`): face id and its sorted row support.
    pub face_columns: Vec<(FaceId, Vec<usize>)>,
    /// Free edge columns (`K`, edges of `E - J`).
    pub edge_columns: Vec<(EdgeId, [usize; 2])>,
    /// Fixable half-edge columns (`J'`) with the index of their subdivision node.
    pub fixable_columns: Vec<([usize; 2], usize)>,
}

pub fn assemble_system(s: &SubdividedGraph, exclude: Option<FaceId>) -> IncidenceSystem {
    let face_columns = s
        .face_columns
        .iter()
        .filter(|lf| Some(lf.face) != exclude)
        .map(|lf| {
            let mut rows = lf.vertices.clone();
            rows.sort_unstable();
            (lf.face, rows)
        })
        .collect();
    let edge_columns = s
        .surviving_edges
        .iter()
        .map(|&e| {
            let (u, v) = s.base.edge(e);
            (e, [u, v])
        })
        .collect();
    let fixable_columns = s
        .half_edges
        .iter()
        .enumerate()
        .map(|(h, &(a, b))| ([a.min(b), a.max(b)], h / 2))
        .collect();
    IncidenceSystem {
        rows: s.vertex_count(),
        base_vertices: s.base.n(),
        face_columns,
        edge_columns,
        fixable_columns,
    }
}

/// One assignment `b_U` with its derived half-edge fixings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuessVector {
    pub b_u: Vec<u8>,
}

impl GuessVector {
    /// The `index`-th vector of `{0,1,2}^k` in lexicographic order.
    pub fn from_index(mut index: u64, k: usize) -> Self {
        let mut b_u = vec![0u8; k];
        for slot in b_u.iter_mut().rev() {
            *slot = (index % 3) as u8;
            index /= 3;
        }
        GuessVector { b_u }
    }

    /// `z` for half-edge `h`: 1 iff its subdivision node is guessed 2.
    pub fn z(&self, owner: usize) -> u8 {
        (self.b_u[owner] == 2) as u8
    }

    /// Stacked right-hand side `b = (1_V, b_U)` before elimination.
    pub fn rhs(&self, base_vertices: usize) -> Vec<i64> {
        let mut b = vec![1i64; base_vertices];
        b.extend(self.b_u.iter().map(|&x| x as i64));
        b
    }
}

/// The LP for one guess with the half-edge variables eliminated.
/// Columns: faces first, then free edges, each in id order.
pub fn instantiate(sys: &IncidenceSystem, guess: &GuessVector) -> LinearProgram {
    let mut b = guess.rhs(sys.base_vertices);
    for &(rows, owner) in &sys.fixable_columns {
        if guess.z(owner) == 1 {
            for r in rows {
                b[r] -= 1;
            }
        }
    }
    let cols = sys.face_columns.len() + sys.edge_columns.len();
    let mut a = vec![vec![0i64; cols]; sys.rows];
    for (j, (_, rows)) in sys.face_columns.iter().enumerate() {
        for &r in rows {
            a[r][j] = 1;
        }
    }
    let off = sys.face_columns.len();
    for (j, (_, rows)) in sys.edge_columns.iter().enumerate() {
        for &r in rows {
            a[r][off + j] = 1;
        }
    }
    let mut objective = vec![0i64; cols];
    objective[..off].iter_mut().for_each(|c| *c = 1);
    let names = sys
        .face_columns
        .iter()
        .map(|(f, _)| format!("y_{f}"))
        .chain(sys.edge_columns.iter().map(|(e, _)| format!("x_{e}")))
        .collect();
    LinearProgram::new(a, b, objective).with_names(names)
}

/// Cheap local infeasibility tests for a guess.
fn locally_infeasible(sys: &IncidenceSystem, guess: &GuessVector) -> bool {
    let n = sys.base_vertices;
    let mut covered_by_face = vec![false; guess.b_u.len()];
    for (_, rows) in &sys.face_columns {
        for &r in rows {
            if r >= n {
                covered_by_face[r - n] = true;
            }
        }
    }
    if guess
        .b_u
        .iter()
        .zip(&covered_by_face)
        .any(|(&b, &c)| b == 1 && !c)
    {
        return true;
    }
    let mut load = vec![0u8; n];
    for &(rows, owner) in &sys.fixable_columns {
        if guess.z(owner) == 1 && rows[0] < n {
            load[rows[0]] += 1;
        }
    }
    load.iter().any(|&l| l > 1)
}

/// A Clar set with a perfect matching of the vertices it leaves uncovered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClarSolution {
    pub faces: Vec<FaceId>,
    /// Matching edges of `G` as vertex pairs `(u, v)`, `u < v`, sorted.
    pub matching: Vec<(usize, usize)>,
    pub value: usize,
    /// The guess that produced the solution; absent when `U` is empty.
    pub witness_guess: Option<Vec<u8>>,
}

/// Decodes a 0/1 LP vertex into faces and matching edges.
pub fn extract_solution(
    s: &SubdividedGraph,
    sys: &IncidenceSystem,
    guess: &GuessVector,
    vertex: &[Rational],
) -> Result<ClarSolution, SolveError> {
    if !is_integral(vertex) {
        return Err(SolveError::NonIntegralVertex {
            guess: guess.b_u.clone(),
        });
    }
    let one = Rational::one();
    let mut faces: Vec<FaceId> = sys
        .face_columns
        .iter()
        .zip(vertex)
        .filter(|(_, y)| **y == one)
        .map(|((f, _), _)| *f)
        .collect();
    faces.sort_unstable();
    let off = sys.face_columns.len();
    let mut matching: Vec<(usize, usize)> = sys
        .edge_columns
        .iter()
        .zip(&vertex[off..])
        .filter(|(_, x)| **x == one)
        .map(|((_, [u, v]), _)| (*u, *v))
        .collect();
    for (k, &e) in s.join.iter().enumerate() {
        if guess.b_u[k] == 2 {
            matching.push(s.base.edge(e));
        }
    }
    matching.sort_unstable();
    Ok(ClarSolution {
        value: faces.len(),
        faces,
        matching,
        witness_guess: (!guess.b_u.is_empty()).then(|| guess.b_u.clone()),
    })
}

/// True iff `faces` are distinct, even and pairwise vertex-disjoint, and the
/// graph left after deleting their vertices has a perfect matching.
pub fn is_clar_set(g: &PlaneGraph, faces: &[FaceId]) -> bool {
    match covered_vertices(g, faces) {
        Some(covered) => {
            let keep: Vec<bool> = covered.iter().map(|c| !c).collect();
            has_perfect_matching(&g.to_graph().induced(&keep))
        }
        None => false,
    }
}

fn covered_vertices(g: &PlaneGraph, faces: &[FaceId]) -> Option<Vec<bool>> {
    let mut covered = vec![false; g.n()];
    let mut seen = vec![false; g.face_count()];
    for &f in faces {
        if f.0 >= g.face_count() || seen[f.0] || !g.face(f).is_even() {
            return None;
        }
        seen[f.0] = true;
        for &v in &g.face(f).vertices {
            if covered[v] {
                return None;
            }
            covered[v] = true;
        }
    }
    Some(covered)
}

/// Checks a solution certificate: a Clar set whose matching is exactly a
/// perfect matching of the uncovered vertices using edges of `g`.
pub fn verify_solution(g: &PlaneGraph, s: &ClarSolution) -> bool {
    if s.value != s.faces.len() {
        return false;
    }
    let Some(mut covered) = covered_vertices(g, &s.faces) else {
        return false;
    };
    for &(u, v) in &s.matching {
        if u >= g.n() || v >= g.n() || g.edge_between(u, v).is_none() || covered[u] || covered[v] {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    covered.into_iter().all(|c| c)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Number of odd faces.
    pub terminals: usize,
    /// Size of the odd-join, which equals `|U|`.
    pub join_size: usize,
    pub guesses: u64,
    pub lps_solved: u64,
    pub lps_feasible: u64,
    pub pruned: u64,
    pub pivots: u64,
}

#[derive(Debug, Clone)]
pub struct ClarResult {
    pub value: usize,
    pub solution: ClarSolution,
    pub join: TJoin,
    pub stats: SolveStats,
}

#[derive(Default)]
struct Acc {
    best: Option<(usize, u64, Vec<Rational>)>,
    solved: u64,
    feasible: u64,
    pruned: u64,
    pivots: u64,
}

impl Acc {
    fn merge(mut self, other: Acc) -> Acc {
        self.solved += other.solved;
        self.feasible += other.feasible;
        self.pruned += other.pruned;
        self.pivots += other.pivots;
        self.best = match (self.best, other.best) {
            (None, b) | (b, None) => b,
            (Some(a), Some(b)) => {
                // Larger value wins; ties go to the lexicographically smaller guess.
                if (b.0, std::cmp::Reverse(b.1)) > (a.0, std::cmp::Reverse(a.1)) {
                    Some(b)
                } else {
                    Some(a)
                }
            }
        };
        self
    }
}

/// Computes the Clar number of `g` together with a verified certificate.
pub fn solve_clar(g: &PlaneGraph, options: &SolveOptions) -> Result<ClarResult, SolveError> {
    if !has_perfect_matching(&g.to_graph()) {
        return Err(SolveError::NoPerfectMatching);
    }
    let join = shortest_odd_join(&g.dual(), &g.odd_faces())?;
    if join.size() > options.max_param {
        return Err(SolveError::ParameterTooLarge {
            size: join.size(),
            cap: options.max_param,
        });
    }
    let sub = subdivide(g, &join.edges);
    let exclude = if options.forbid_outer {
        g.outer_face()
    } else {
        None
    };
    let sys = assemble_system(&sub, exclude);
    let k = join.size();
    let total = 3u64.pow(k as u32);

    let evaluate = |index: u64| -> Result<Acc, SolveError> {
        let guess = GuessVector::from_index(index, k);
        let mut acc = Acc::default();
        if options.prune && locally_infeasible(&sys, &guess) {
            acc.pruned = 1;
            return Ok(acc);
        }
        let out = solve_lp(&instantiate(&sys, &guess));
        acc.solved = 1;
        acc.pivots = out.pivots as u64;
        if out.status == LpStatus::Optimal {
            acc.feasible = 1;
            let vertex = out.vertex.expect("optimal outcome carries a vertex");
            if !is_integral(&vertex) {
                return Err(SolveError::NonIntegralVertex { guess: guess.b_u });
            }
            let value = out
                .objective_value
                .and_then(|v| v.to_i64())
                .expect("integral vertex has integral objective") as usize;
            acc.best = Some((value, index, vertex));
        }
        Ok(acc)
    };

    let acc = if options.jobs == 1 || total == 1 {
        (0..total).try_fold(Acc::default(), |acc, i| {
            Ok::<_, SolveError>(acc.merge(evaluate(i)?))
        })?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..total)
                .into_par_iter()
                .map(evaluate)
                .try_reduce(Acc::default, |a, b| Ok(a.merge(b)))
        })?
    };

    // The guess read off any perfect matching is feasible, so `best` exists.
    let (value, index, vertex) = acc.best.ok_or(SolveError::NoPerfectMatching)?;
    let guess = GuessVector::from_index(index, k);
    let solution = extract_solution(&sub, &sys, &guess, &vertex)?;
    if solution.value != value || !verify_solution(g, &solution) {
        return Err(SolveError::InvalidSolution);
    }
    let stats = SolveStats {
        terminals: join.terminals.len(),
        join_size: k,
        guesses: total,
        lps_solved: acc.solved,
        lps_feasible: acc.feasible,
        pruned: acc.pruned,
        pivots: acc.pivots,
    };
    Ok(ClarResult {
        value,
        solution,
        join,
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use crate::tjoin::odd_join_of;

    #[test]
    fn named_values() {
        for (name, want) in [
            ("benzene", 1),
            ("cube", 2),
            ("prism", 1),
            ("dodecahedron", 0),
            ("coronene", 3),
            ("k4", 0),
        ] {
            let g = named(name).unwrap();
            let r = solve_clar(&g, &SolveOptions::default()).unwrap();
            assert_eq!(r.value, want, "{name}");
            assert!(verify_solution(&g, &r.solution));
        }
    }

    #[test]
    fn prism_counts() {
        let g = named("prism").unwrap();
        let r = solve_clar(&g, &SolveOptions::default()).unwrap();
        assert_eq!(r.stats.join_size, 2);
        assert_eq!(r.stats.lps_solved, 9);
        let pruned = solve_clar(
            &g,
            &SolveOptions {
                prune: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(pruned.value, 1);
        assert_eq!(pruned.stats.lps_solved + pruned.stats.pruned, 9);
    }

    #[test]
    fn bipartite_solves_one_lp() {
        let r = solve_clar(&named("cube").unwrap(), &SolveOptions::default()).unwrap();
        assert_eq!(r.stats.lps_solved, 1);
        assert_eq!(r.solution.witness_guess, None);
        assert!(r.solution.matching.is_empty());
    }

    #[test]
    fn subdivision_counts_and_parity() {
        let g = named("prism").unwrap();
        let j = odd_join_of(&g).unwrap();
        let s = subdivide(&g, &j.edges);
        assert_eq!((s.vertex_count(), s.edge_count()), (8, 11));
        let gp = s.to_plane_graph().unwrap();
        assert!(gp.is_bipartite());
        let sys = assemble_system(&s, None);
        assert_eq!(sys.rows, 8);
        assert_eq!(sys.fixable_columns.len(), 4);

        let empty = subdivide(&g, &[]);
        assert_eq!(empty.vertex_count(), g.n());
        assert_eq!(empty.face_columns.len(), 3);
    }

    #[test]
    fn elimination_right_hand_sides() {
        let g = named("prism").unwrap();
        let j = odd_join_of(&g).unwrap();
        let s = subdivide(&g, &j.edges);
        let sys = assemble_system(&s, None);
        let lp = instantiate(&sys, &GuessVector { b_u: vec![2, 2] });
        assert_eq!(&lp.b[6..], &[0, 0]);
        assert!(lp.a.iter().flatten().all(|&x| (-2..=2).contains(&x)));
    }

    #[test]
    fn guess_order_is_lexicographic() {
        assert_eq!(GuessVector::from_index(0, 2).b_u, vec![0, 0]);
        assert_eq!(GuessVector::from_index(1, 2).b_u, vec![0, 1]);
        assert_eq!(GuessVector::from_index(3, 2).b_u, vec![1, 0]);
        assert_eq!(GuessVector::from_index(8, 2).b_u, vec![2, 2]);
    }

    #[test]
    fn refuses_unmatchable_graphs() {
        let g = named("cycle(5)").unwrap();
        assert_eq!(
            solve_clar(&g, &SolveOptions::default()).unwrap_err(),
            SolveError::NoPerfectMatching
        );
    }

    #[test]
    fn parameter_cap() {
        let g = named("dodecahedron").unwrap();
        let err = solve_clar(
            &g,
            &SolveOptions {
                max_param: 2,
                ..Default::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, SolveError::ParameterTooLarge { cap: 2, .. }));
    }

    #[test]
    fn verify_examples() {
        let cube = named("cube").unwrap();
        let opposite: Vec<FaceId> = {
            let f0 = &cube.faces()[0];
            let far = cube
                .faces()
                .iter()
                .find(|f| f.vertices.iter().all(|v| !f0.contains_vertex(*v)))
                .unwrap();
            vec![f0.id, far.id]
        };
        let s = ClarSolution {
            faces: opposite,
            matching: vec![],
            value: 2,
            witness_guess: None,
        };
        assert!(verify_solution(&cube, &s));
        let adjacent = vec![cube.edge_faces(EdgeId(0)).0, cube.edge_faces(EdgeId(0)).1];
        let s = ClarSolution {
            faces: adjacent,
            matching: vec![],
            value: 2,
            witness_guess: None,
        };
        assert!(!verify_solution(&cube, &s));
    }

    #[test]
    fn jobs_do_not_change_output() {
        let g = named("nanotube_cap_demo").unwrap();
        let one = solve_clar(&g, &SolveOptions::default()).unwrap();
        let four = solve_clar(
            &g,
            &SolveOptions {
                jobs: 4,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one.solution, four.solution);
        assert_eq!(one.stats, four.stats);
    }
}

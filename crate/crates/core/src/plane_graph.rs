//! Plane graphs given by a rotation system, with face tracing and the planar dual.
//!
//! A [`PlaneGraph`] is built from per-vertex neighbor lists in clockwise order.
//! Each undirected edge `e` owns two darts: `2e` runs from the smaller endpoint
//! to the larger one and `2e + 1` runs back. A face is the orbit of the
//! permutation `u -> v  ==>  v -> succ_v(u)`, where `succ_v` is the next
//! neighbor of `v` in its rotation.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::matching::Graph;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub usize);

/// A directed side of an edge.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(edge: EdgeId, reversed: bool) -> Self {
        Dart(2 * edge.0 + reversed as usize)
    }

    pub fn edge(self) -> EdgeId {
        EdgeId(self.0 / 2)
    }

    pub fn reverse(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    pub fn is_reversed(self) -> bool {
        self.0 & 1 == 1
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at least 3 are needed")]
    TooSmall(usize),
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    VertexOutOfRange { vertex: usize, neighbor: usize },
    #[error("vertex {0} lists itself as a neighbor")]
    SelfLoop(usize),
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: usize, neighbor: usize },
    #[error("rotation is asymmetric: {from} lists {to} but not vice versa")]
    AsymmetricRotation { from: usize, to: usize },
    #[error("graph is not 2-connected (cut vertex or disconnected: {0})")]
    NotTwoConnected(String),
    #[error("rotation does not describe a sphere embedding: n - m + f = {n} - {m} + {f} != 2")]
    EulerViolation { n: usize, m: usize, f: usize },
    #[error("outer face metadata {0:?} does not match any face")]
    UnknownOuterFace(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Boundary darts in traversal order, starting at the smallest dart.
    pub darts: Vec<Dart>,
    /// Tail vertex of each boundary dart.
    pub vertices: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.darts.len().is_multiple_of(2)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.darts.iter().map(|d| d.edge())
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// A 2-connected simple graph together with a fixed embedding in the sphere.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    rotation: Vec<Vec<EdgeId>>,
    /// Position of edge `e` inside the rotation of its smaller / larger endpoint.
    rotation_pos: Vec<[usize; 2]>,
    faces: Vec<Face>,
    dart_face: Vec<FaceId>,
    outer_face: Option<FaceId>,
    name: Option<String>,
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise neighbor orders.
    pub fn from_rotation(rotation: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = rotation.len();
        if n < 3 {
            return Err(GraphError::TooSmall(n));
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            for (i, &w) in nbrs.iter().enumerate() {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        neighbor: w,
                    });
                }
                if w == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if nbrs[..i].contains(&w) {
                    return Err(GraphError::DuplicateNeighbor {
                        vertex: v,
                        neighbor: w,
                    });
                }
            }
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            for &w in nbrs {
                if !rotation[w].contains(&v) {
                    return Err(GraphError::AsymmetricRotation { from: v, to: w });
                }
            }
        }

        let mut edges: Vec<(usize, usize)> = rotation
            .iter()
            .enumerate()
            .flat_map(|(v, nbrs)| nbrs.iter().filter(move |&&w| v < w).map(move |&w| (v, w)))
            .collect();
        edges.sort_unstable();

        let lookup = |u: usize, v: usize| -> EdgeId {
            let key = if u < v { (u, v) } else { (v, u) };
            EdgeId(edges.binary_search(&key).expect("edge collected above"))
        };

        let mut rot = vec![Vec::new(); n];
        let mut rotation_pos = vec![[0usize; 2]; edges.len()];
        for (v, nbrs) in rotation.iter().enumerate() {
            for (i, &w) in nbrs.iter().enumerate() {
                let e = lookup(v, w);
                rot[v].push(e);
                let side = if v == edges[e.0].0 { 0 } else { 1 };
                rotation_pos[e.0][side] = i;
            }
        }

        let mut g = PlaneGraph {
            n,
            edges,
            rotation: rot,
            rotation_pos,
            faces: Vec::new(),
            dart_face: Vec::new(),
            outer_face: None,
            name: None,
        };
        g.check_two_connected()?;
        g.trace_faces();
        let (n, m, f) = (g.n, g.m(), g.faces.len());
        if n + f != m + 2 {
            return Err(GraphError::EulerViolation { n, m, f });
        }
        Ok(g)
    }

    /// Attaches outer-face metadata. The cycle is matched against the traced
    /// faces up to rotation and reflection.
    pub fn with_outer_face(mut self, cycle: &[usize]) -> Result<Self, GraphError> {
        let found = self
            .faces
            .iter()
            .find(|f| same_cycle(&f.vertices, cycle))
            .map(|f| f.id);
        match found {
            Some(id) => {
                self.outer_face = Some(id);
                Ok(self)
            }
            None => Err(GraphError::UnknownOuterFace(cycle.to_vec())),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn outer_face(&self) -> Option<FaceId> {
        self.outer_face
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok().map(EdgeId)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Edges around `v` in clockwise order.
    pub fn rotation(&self, v: usize) -> &[EdgeId] {
        &self.rotation[v]
    }

    /// Neighbors of `v` in clockwise order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rotation[v].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn rotation_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    pub fn other_end(&self, e: EdgeId, v: usize) -> usize {
        let (a, b) = self.edges[e.0];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn tail(&self, d: Dart) -> usize {
        let (a, b) = self.edges[d.edge().0];
        if d.is_reversed() {
            b
        } else {
            a
        }
    }

    pub fn head(&self, d: Dart) -> usize {
        self.tail(d.reverse())
    }

    /// The dart running from `u` to `v`, if `uv` is an edge.
    pub fn dart(&self, u: usize, v: usize) -> Option<Dart> {
        self.edge_between(u, v).map(|e| Dart::new(e, u > v))
    }

    /// Successor of dart `u -> v` along its face: `v -> succ_v(u)`.
    pub fn next_dart(&self, d: Dart) -> Dart {
        let e = d.edge();
        let v = self.head(d);
        let side = if self.edges[e.0].0 == v { 0 } else { 1 };
        let pos = self.rotation_pos[e.0][side];
        let rot = &self.rotation[v];
        let next_edge = rot[(pos + 1) % rot.len()];
        Dart::new(next_edge, self.edges[next_edge.0].0 != v)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f.0]
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn dart_face(&self, d: Dart) -> FaceId {
        self.dart_face[d.0]
    }

    /// The two faces on either side of `e`, as (face of dart `2e`, face of dart `2e+1`).
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        (
            self.dart_face[Dart::new(e, false).0],
            self.dart_face[Dart::new(e, true).0],
        )
    }

    pub fn odd_faces(&self) -> Vec<FaceId> {
        self.faces
            .iter()
            .filter(|f| !f.is_even())
            .map(|f| f.id)
            .collect()
    }

    pub fn even_faces(&self) -> Vec<FaceId> {
        self.faces
            .iter()
            .filter(|f| f.is_even())
            .map(|f| f.id)
            .collect()
    }

    pub fn is_bipartite(&self) -> bool {
        self.faces.iter().all(Face::is_even)
    }

    pub fn dual(&self) -> DualGraph {
        DualGraph::of(self)
    }

    /// The underlying abstract graph, for matching computations.
    pub fn to_graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }

    fn trace_faces(&mut self) {
        let darts = 2 * self.edges.len();
        let mut dart_face = vec![FaceId(usize::MAX); darts];
        let mut faces = Vec::new();
        for start in 0..darts {
            if dart_face[start].0 != usize::MAX {
                continue;
            }
            let id = FaceId(faces.len());
            let mut face = Face {
                id,
                darts: Vec::new(),
                vertices: Vec::new(),
            };
            let mut d = Dart(start);
            loop {
                dart_face[d.0] = id;
                face.darts.push(d);
                face.vertices.push(self.tail(d));
                d = self.next_dart(d);
                if d.0 == start {
                    break;
                }
            }
            faces.push(face);
        }
        self.faces = faces;
        self.dart_face = dart_face;
    }

    fn check_two_connected(&self) -> Result<(), GraphError> {
        // Iterative DFS with low-points.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut timer = 0;
        let mut root_children = 0;
        // (vertex, parent edge, next rotation index)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(0, None, 0)];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < self.rotation[v].len() {
                let e = self.rotation[v][*idx];
                *idx += 1;
                if Some(e) == parent {
                    continue;
                }
                let w = self.other_end(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= disc[p] {
                        return Err(GraphError::NotTwoConnected(format!("cut vertex {p}")));
                    }
                }
            }
        }
        if let Some(v) = disc.iter().position(|&d| d == usize::MAX) {
            return Err(GraphError::NotTwoConnected(format!(
                "vertex {v} unreachable"
            )));
        }
        if root_children > 1 {
            return Err(GraphError::NotTwoConnected("cut vertex 0".into()));
        }
        Ok(())
    }
}

/// Re-checks the structural invariants of a built graph and returns a
/// description of every violation (empty when all hold).
pub fn check_invariants(g: &PlaneGraph) -> Vec<String> {
    let mut bad = Vec::new();
    let (n, m, f) = (g.n(), g.m(), g.face_count());
    if n + f != m + 2 {
        bad.push(format!("Euler: {n} - {m} + {f} != 2"));
    }
    let total: usize = g.faces().iter().map(Face::len).sum();
    if total != 2 * m {
        bad.push(format!("face lengths sum to {total}, expected {}", 2 * m));
    }
    if g.odd_faces().len() % 2 == 1 {
        bad.push("odd number of odd faces".into());
    }
    let mut seen = vec![0usize; 2 * m];
    for face in g.faces() {
        for d in &face.darts {
            seen[d.0] += 1;
        }
        let mut vs = face.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        if vs.len() != face.len() {
            bad.push(format!("face {} is not a simple cycle", face.id));
        }
    }
    if seen.iter().any(|&c| c != 1) {
        bad.push("faces do not partition the darts".into());
    }
    for v in 0..n {
        for e in g.rotation(v) {
            let (a, b) = g.edge(*e);
            if a != v && b != v {
                bad.push(format!("edge {e} listed at non-endpoint {v}"));
            }
        }
    }
    let dual = g.dual();
    for face in g.faces() {
        if dual.degree(face.id) != face.len() {
            bad.push(format!(
                "dual degree of {} differs from its length",
                face.id
            ));
        }
    }
    if dual.edges().iter().any(|(a, b)| a == b) {
        bad.push("dual has a loop".into());
    }
    bad
}

/// Equality of cyclic vertex sequences up to rotation and reversal.
pub(crate) fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let k = a.len();
    let Some(start) = b.iter().position(|&x| x == a[0]) else {
        return false;
    };
    let forward = (0..k).all(|i| a[i] == b[(start + i) % k]);
    let backward = (0..k).all(|i| a[i] == b[(start + k - i) % k]);
    forward || backward
}

/// Planar dual as a multigraph. Dual edge `i` crosses primal edge `EdgeId(i)`.
#[derive(Debug, Clone)]
pub struct DualGraph {
    node_count: usize,
    edges: Vec<(FaceId, FaceId)>,
    /// Per face: (neighbor face, dual edge), sorted by neighbor then edge.
    adjacency: Vec<Vec<(FaceId, EdgeId)>>,
}

impl DualGraph {
    pub fn of(g: &PlaneGraph) -> Self {
        let node_count = g.face_count();
        let edges: Vec<_> = (0..g.m()).map(|e| g.edge_faces(EdgeId(e))).collect();
        let mut adjacency = vec![Vec::new(); node_count];
        for (i, &(a, b)) in edges.iter().enumerate() {
            adjacency[a.0].push((b, EdgeId(i)));
            adjacency[b.0].push((a, EdgeId(i)));
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
        }
        DualGraph {
            node_count,
            edges,
            adjacency,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of the dual edge crossing primal edge `e`.
    pub fn endpoints(&self, e: EdgeId) -> (FaceId, FaceId) {
        self.edges[e.0]
    }

    pub fn edges(&self) -> &[(FaceId, FaceId)] {
        &self.edges
    }

    pub fn adjacency(&self, f: FaceId) -> &[(FaceId, EdgeId)] {
        &self.adjacency[f.0]
    }

    pub fn degree(&self, f: FaceId) -> usize {
        self.adjacency[f.0].len()
    }

    /// Nodes of odd degree; for a dual these are exactly the odd faces.
    pub fn odd_degree_nodes(&self) -> Vec<FaceId> {
        (0..self.node_count)
            .filter(|&f| self.adjacency[f].len() % 2 == 1)
            .map(FaceId)
            .collect()
    }

    /// Unit-length BFS from `source`. Returns distances and, per node, the
    /// (parent node, edge) pair used to reach it. Neighbors are scanned in
    /// ascending order, so parents are the lowest-index choices.
    pub fn bfs(&self, source: FaceId) -> (Vec<usize>, Vec<Option<(FaceId, EdgeId)>>) {
        let mut dist = vec![usize::MAX; self.node_count];
        let mut parent = vec![None; self.node_count];
        let mut queue = VecDeque::new();
        dist[source.0] = 0;
        queue.push_back(source);
        while let Some(f) = queue.pop_front() {
            for &(h, e) in &self.adjacency[f.0] {
                if dist[h.0] == usize::MAX {
                    dist[h.0] = dist[f.0] + 1;
                    parent[h.0] = Some((f, e));
                    queue.push_back(h);
                }
            }
        }
        (dist, parent)
    }
}

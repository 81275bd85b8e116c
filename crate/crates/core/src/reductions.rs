//! The two hardness gadgets as instance transformers.
//!
//! [`eliminate_even_face`] plants a triangle inside an even face so that the
//! face count parity flips while the independence number grows by exactly
//! one. [`independent_set_to_clar`] turns a plane graph whose faces are all
//! odd into a cubic plane graph whose even faces are in bijection with the
//! original vertices, so that Clar sets correspond to independent sets.

use thiserror::Error;

use crate::matching::Matching;
use crate::plane_graph::{Dart, EdgeId, FaceId, GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("face {0} is not even")]
    FaceNotEven(FaceId),
    #[error("edge {edge} is not on the boundary of face {face}")]
    EdgeNotOnFace { face: FaceId, edge: EdgeId },
    #[error("face {0} is even; the blow-up needs odd faces only")]
    EvenFacePresent(FaceId),
    #[error("no face {0}")]
    UnknownFace(FaceId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Adds vertices `a, b, c` inside even face `face` next to its boundary edge
/// `uv`, with edges `ab, bc, ca, au, bu, bv`.
///
/// The face splits into triangles `u v b`, `u b a`, `a b c` and the old
/// boundary with `uv` replaced by the path `u a c b v`, three longer than
/// before. All four are odd, so exactly one even face disappears.
pub fn eliminate_even_face(
    g: &PlaneGraph,
    face: FaceId,
    edge: EdgeId,
) -> Result<PlaneGraph, ReductionError> {
    if face.0 >= g.face_count() {
        return Err(ReductionError::UnknownFace(face));
    }
    let f = g.face(face);
    if !f.is_even() {
        return Err(ReductionError::FaceNotEven(face));
    }
    let Some(&dart) = f.darts.iter().find(|d| d.edge() == edge) else {
        return Err(ReductionError::EdgeNotOnFace { face, edge });
    };
    let (u, v) = (g.tail(dart), g.head(dart));
    let n = g.n();
    let (a, b, c) = (n, n + 1, n + 2);

    let mut rot = g.rotation_lists();
    let pos_v = rot[u].iter().position(|&w| w == v).expect("uv is an edge");
    rot[u].insert(pos_v, b);
    rot[u].insert(pos_v, a);
    let pos_u = rot[v].iter().position(|&w| w == u).expect("uv is an edge");
    rot[v].insert(pos_u + 1, b);
    rot.push(vec![b, u, c]);
    rot.push(vec![v, u, a, c]);
    rot.push(vec![a, b]);

    let mut out = PlaneGraph::from_rotation(rot)?;
    if let Some(name) = g.name() {
        out = out.with_name(format!("{name}+gadget"));
    }
    if let Some(outer) = g.outer_face() {
        let cycle = if outer == face {
            let mut cyc = Vec::with_capacity(f.len() + 3);
            for d in rotate_to(&f.darts, dart) {
                cyc.push(g.tail(d));
                if d == dart {
                    cyc.extend([a, c, b]);
                }
            }
            cyc
        } else {
            g.face(outer).vertices.clone()
        };
        out = out.with_outer_face(&cycle)?;
    }
    assert_eq!(
        out.even_faces().len() + 1,
        g.even_faces().len(),
        "gadget must remove exactly one even face"
    );
    Ok(out)
}

fn rotate_to(darts: &[Dart], first: Dart) -> impl Iterator<Item = Dart> + '_ {
    let k = darts.iter().position(|&d| d == first).unwrap_or(0);
    darts[k..].iter().chain(&darts[..k]).copied()
}

/// Applies [`eliminate_even_face`] to the lowest-id even face (at its lowest
/// boundary edge) until every face is odd.
pub fn odd_face_closure(g: &PlaneGraph) -> Result<PlaneGraph, ReductionError> {
    let mut cur = g.clone();
    while let Some(f) = cur.even_faces().first().copied() {
        let e = cur.face(f).edges().min().expect("faces are nonempty");
        cur = eliminate_even_face(&cur, f, e)?;
    }
    Ok(cur)
}

#[derive(Debug, Clone)]
pub struct BlowUp {
    /// The blown-up graph; vertex `i` is the copy of dart `i` of the source.
    pub graph: PlaneGraph,
    /// Connector edges between the two copies of every source edge.
    pub canonical_matching: Matching,
    /// For each source vertex, the even face of `graph` that represents it.
    pub vertex_faces: Vec<FaceId>,
}

/// Replaces every face of `g` by a circuit through one new vertex per
/// boundary edge, joined across each edge of `g` by a connector.
pub fn independent_set_to_clar(g: &PlaneGraph) -> Result<BlowUp, ReductionError> {
    if let Some(&f) = g.even_faces().first() {
        return Err(ReductionError::EvenFacePresent(f));
    }
    let darts = 2 * g.m();
    let mut prev = vec![Dart(0); darts];
    for f in g.faces() {
        let k = f.darts.len();
        for i in 0..k {
            prev[f.darts[(i + 1) % k].0] = f.darts[i];
        }
    }
    let rot: Vec<Vec<usize>> = (0..darts)
        .map(|i| {
            let d = Dart(i);
            vec![prev[i].0, g.next_dart(d).0, d.reverse().0]
        })
        .collect();
    let mut graph = PlaneGraph::from_rotation(rot)?;
    if let Some(name) = g.name() {
        graph = graph.with_name(format!("blowup({name})"));
    }

    let pairs: Vec<(usize, usize)> = (0..g.m()).map(|e| (2 * e, 2 * e + 1)).collect();
    let canonical_matching = Matching::from_pairs(darts, &pairs).expect("connectors are disjoint");

    let vertex_faces = (0..g.n())
        .map(|v| {
            let mut around: Vec<usize> = (0..darts)
                .filter(|&d| g.tail(Dart(d)) == v || g.head(Dart(d)) == v)
                .collect();
            around.sort_unstable();
            graph
                .faces()
                .iter()
                .find(|f| {
                    let mut vs = f.vertices.clone();
                    vs.sort_unstable();
                    vs == around
                })
                .map(|f| f.id)
                .expect("every source vertex becomes a face")
        })
        .collect();

    Ok(BlowUp {
        graph,
        canonical_matching,
        vertex_faces,
    })
}

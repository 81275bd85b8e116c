//! Named and random instance generators.
//!
//! Most named instances are given as straight-line drawings; the rotation
//! system is read off by sorting each vertex's neighbors by angle.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::matching::has_perfect_matching;
use crate::plane_graph::{GraphError, PlaneGraph};
use crate::reductions::eliminate_even_face;

pub const NAMES: &[&str] = &[
    "cycle(k)",
    "benzene",
    "naphthalene",
    "coronene",
    "cube",
    "prism",
    "k4",
    "dodecahedron",
    "grid(rows,cols)",
    "nanotube_cap_demo",
    "nanotube(rings)",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("unknown instance name {0:?}; known: {names}", names = NAMES.join(", "))]
    UnknownName(String),
    #[error("no valid instance found after {0} attempts")]
    Exhausted(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Builds a plane graph from a crossing-free straight-line drawing. Neighbors
/// are ordered clockwise; the face of largest area becomes the outer face.
pub fn from_straight_line(
    points: &[(f64, f64)],
    edges: &[(usize, usize)],
) -> Result<PlaneGraph, GraphError> {
    let mut nbrs = vec![Vec::new(); points.len()];
    for &(u, v) in edges {
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    for (u, list) in nbrs.iter_mut().enumerate() {
        let (x0, y0) = points[u];
        let angle = |w: &usize| {
            let (x, y) = points[*w];
            (y - y0).atan2(x - x0)
        };
        list.sort_by(|a, b| angle(b).total_cmp(&angle(a)));
    }
    let g = PlaneGraph::from_rotation(nbrs)?;
    let area = |vs: &[usize]| -> f64 {
        let k = vs.len();
        (0..k)
            .map(|i| {
                let (x1, y1) = points[vs[i]];
                let (x2, y2) = points[vs[(i + 1) % k]];
                x1 * y2 - x2 * y1
            })
            .sum::<f64>()
            .abs()
    };
    let outer = g
        .faces()
        .iter()
        .map(|f| (area(&f.vertices), f))
        .fold(
            None::<(f64, &crate::plane_graph::Face)>,
            |best, (a, f)| match best {
                Some((b, _)) if b >= a - 1e-9 => best,
                _ => Some((a, f)),
            },
        )
        .map(|(_, f)| f.vertices.clone())
        .expect("at least two faces");
    g.with_outer_face(&outer)
}

fn polar(r: f64, deg: f64) -> (f64, f64) {
    let t = deg * PI / 180.0;
    (r * t.cos(), r * t.sin())
}

pub fn cycle(k: usize) -> Result<PlaneGraph, GraphError> {
    let pts: Vec<_> = (0..k)
        .map(|i| polar(1.0, 360.0 * i as f64 / k as f64))
        .collect();
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    from_straight_line(&pts, &edges)
}

/// Two concentric `k`-gons joined by spokes: prism for k=3, cube for k=4.
fn prism_graph(k: usize) -> Result<PlaneGraph, GraphError> {
    let mut pts = Vec::new();
    for r in [2.0, 1.0] {
        pts.extend((0..k).map(|i| polar(r, 90.0 + 360.0 * i as f64 / k as f64)));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((i, (i + 1) % k));
        edges.push((k + i, k + (i + 1) % k));
        edges.push((i, k + i));
    }
    from_straight_line(&pts, &edges)
}

fn k4() -> Result<PlaneGraph, GraphError> {
    let mut pts: Vec<_> = (0..3)
        .map(|i| polar(1.0, 90.0 + 120.0 * i as f64))
        .collect();
    pts.push((0.0, 0.0));
    from_straight_line(&pts, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
}

/// Schlegel diagram: outer pentagon, a 10-ring, inner pentagon.
fn dodecahedron() -> Result<PlaneGraph, GraphError> {
    let mut pts = Vec::new();
    pts.extend((0..5).map(|i| polar(3.0, 72.0 * i as f64)));
    pts.extend((0..10).map(|j| polar(2.0, 36.0 * j as f64)));
    pts.extend((0..5).map(|i| polar(1.0, 72.0 * i as f64 + 36.0)));
    let (a, b, c) = (0, 5, 15);
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((a + i, a + (i + 1) % 5));
        edges.push((a + i, b + 2 * i));
        edges.push((b + 2 * i + 1, c + i));
        edges.push((c + i, c + (i + 1) % 5));
    }
    for j in 0..10 {
        edges.push((b + j, b + (j + 1) % 10));
    }
    from_straight_line(&pts, &edges)
}

/// A (5,0) nanotube fullerene: two six-pentagon caps joined by `rings - 1`
/// rings of five hexagons. `rings = 2` gives C30, the smallest member.
pub fn nanotube(rings: usize) -> Result<PlaneGraph, GraphError> {
    assert!(rings >= 2, "a nanotube needs at least two 10-rings");
    let mut pts = Vec::new();
    let cap = rings as f64 + 2.0;
    pts.extend((0..5).map(|i| polar(cap, 72.0 * i as f64)));
    for r in 0..rings {
        pts.extend((0..10).map(|j| polar(cap - 1.0 - r as f64, 36.0 * j as f64)));
    }
    let ring = |r: usize, j: usize| 5 + 10 * r + j % 10;
    let inner = 5 + 10 * rings;
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, ring(0, 2 * i)));
    }
    // Ring r has its even (odd) vertices bound outward when r is even (odd).
    for r in 0..rings {
        for j in 0..10 {
            edges.push((ring(r, j), ring(r, j + 1)));
        }
        if r + 1 < rings {
            let parity = (r + 1) % 2;
            for i in 0..5 {
                edges.push((ring(r, 2 * i + parity), ring(r + 1, 2 * i + parity)));
            }
        }
    }
    let parity = rings % 2;
    pts.extend((0..5).map(|i| polar(1.0, 72.0 * i as f64 + 36.0 * parity as f64)));
    for i in 0..5 {
        edges.push((ring(rings - 1, 2 * i + parity), inner + i));
        edges.push((inner + i, inner + (i + 1) % 5));
    }
    from_straight_line(&pts, &edges)
}

/// Grid graph with `rows x cols` vertices.
pub fn grid(rows: usize, cols: usize) -> Result<PlaneGraph, GraphError> {
    let cells: Vec<(i32, i32)> = (0..rows.saturating_sub(1) as i32)
        .flat_map(|r| (0..cols.saturating_sub(1) as i32).map(move |c| (r, c)))
        .collect();
    from_cells(Lattice::Square, &cells, &[])
}

/// Hexagonal system with the given hexagon centers in axial coordinates.
pub fn benzenoid(centers: &[(i32, i32)]) -> Result<PlaneGraph, GraphError> {
    from_cells(Lattice::Hex, centers, &[])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lattice {
    Square,
    Hex,
}

impl Lattice {
    fn corners(self, (q, r): (i32, i32)) -> Vec<(f64, f64)> {
        match self {
            Lattice::Square => {
                let (x, y) = (q as f64, r as f64);
                vec![(x, y), (x + 1.0, y), (x + 1.0, y + 1.0), (x, y + 1.0)]
            }
            Lattice::Hex => {
                let cx = 3f64.sqrt() * (q as f64 + r as f64 / 2.0);
                let cy = 1.5 * r as f64;
                (0..6)
                    .map(|k| {
                        let (dx, dy) = polar(1.0, 30.0 + 60.0 * k as f64);
                        (cx + dx, cy + dy)
                    })
                    .collect()
            }
        }
    }

    fn neighbors(self, (q, r): (i32, i32)) -> Vec<(i32, i32)> {
        match self {
            Lattice::Square => vec![(q + 1, r), (q - 1, r), (q, r + 1), (q, r - 1)],
            Lattice::Hex => vec![
                (q + 1, r),
                (q - 1, r),
                (q, r + 1),
                (q, r - 1),
                (q + 1, r - 1),
                (q - 1, r + 1),
            ],
        }
    }
}

/// Union of lattice cells, plus optional chords `(cell index, corner i, corner j)`.
fn from_cells(
    lattice: Lattice,
    cells: &[(i32, i32)],
    chords: &[(usize, usize, usize)],
) -> Result<PlaneGraph, GraphError> {
    let key = |(x, y): (f64, f64)| ((x * 1000.0).round() as i64, (y * 1000.0).round() as i64);
    let mut index: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut pts = Vec::new();
    let mut edges = BTreeSet::new();
    let mut cell_ids = Vec::new();
    for &cell in cells {
        let ids: Vec<usize> = lattice
            .corners(cell)
            .into_iter()
            .map(|p| {
                *index.entry(key(p)).or_insert_with(|| {
                    pts.push(p);
                    pts.len() - 1
                })
            })
            .collect();
        let k = ids.len();
        for i in 0..k {
            let (a, b) = (ids[i], ids[(i + 1) % k]);
            edges.insert((a.min(b), a.max(b)));
        }
        cell_ids.push(ids);
    }
    for &(c, i, j) in chords {
        let (a, b) = (cell_ids[c][i], cell_ids[c][j]);
        edges.insert((a.min(b), a.max(b)));
    }
    let edges: Vec<_> = edges.into_iter().collect();
    from_straight_line(&pts, &edges)
}

fn parse_args(name: &str, prefix: &str) -> Option<Vec<usize>> {
    let inner = name
        .strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?;
    inner.split(',').map(|s| s.trim().parse().ok()).collect()
}

/// Looks up a named instance; see [`NAMES`].
pub fn named(name: &str) -> Result<PlaneGraph, GenError> {
    let name = name.trim();
    let unknown = || GenError::UnknownName(name.to_string());
    let g = match name {
        "benzene" => cycle(6)?,
        "naphthalene" => benzenoid(&[(0, 0), (1, 0)])?,
        "coronene" => benzenoid(&[(0, 0), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)])?,
        "cube" => prism_graph(4)?,
        "prism" => prism_graph(3)?,
        "k4" => k4()?,
        "dodecahedron" => dodecahedron()?,
        "nanotube_cap_demo" => nanotube(2)?,
        _ => {
            if let Some(a) = parse_args(name, "cycle") {
                match a[..] {
                    [k] if k >= 3 => cycle(k)?,
                    _ => return Err(unknown()),
                }
            } else if let Some(a) = parse_args(name, "grid") {
                match a[..] {
                    [r, c] if r >= 2 && c >= 2 => grid(r, c)?,
                    _ => return Err(unknown()),
                }
            } else if let Some(a) = parse_args(name, "nanotube") {
                match a[..] {
                    [k] if k >= 2 => nanotube(k)?,
                    _ => return Err(unknown()),
                }
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(g.with_name(name))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LatticeChoice {
    Square,
    Hex,
    Mixed,
}

/// Knobs for [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SizeParams {
    pub max_vertices: usize,
    pub max_cells: usize,
    pub lattice: LatticeChoice,
    /// Probability that a cell receives a chord (creating two odd faces).
    pub chord_probability: f64,
    /// Probability of planting a pair of triangle gadgets.
    pub gadget_probability: f64,
    pub max_attempts: usize,
}

impl Default for SizeParams {
    fn default() -> Self {
        SizeParams {
            max_vertices: 16,
            max_cells: 5,
            lattice: LatticeChoice::Mixed,
            chord_probability: 0.35,
            gadget_probability: 0.15,
            max_attempts: 1000,
        }
    }
}

/// A random 2-connected plane graph with a perfect matching, reproducible
/// from `seed`. Cells of a square or hexagonal lattice are grown into a
/// connected patch, some cells get a chord, and sometimes a pair of
/// even-face gadgets is planted.
pub fn random_instance(seed: u64, params: &SizeParams) -> Result<PlaneGraph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..params.max_attempts {
        if let Some(g) = attempt(&mut rng, params) {
            return Ok(g.with_name(format!("random({seed})")));
        }
    }
    Err(GenError::Exhausted(params.max_attempts))
}

fn attempt(rng: &mut ChaCha8Rng, params: &SizeParams) -> Option<PlaneGraph> {
    let lattice = match params.lattice {
        LatticeChoice::Square => Lattice::Square,
        LatticeChoice::Hex => Lattice::Hex,
        LatticeChoice::Mixed => *[Lattice::Square, Lattice::Hex].choose(rng)?,
    };
    let target = rng.gen_range(1..=params.max_cells.max(1));
    let mut cells = vec![(0, 0)];
    while cells.len() < target {
        let &base = cells.choose(rng)?;
        let &next = lattice.neighbors(base).choose(rng)?;
        if !cells.contains(&next) {
            cells.push(next);
        }
    }
    let corners = match lattice {
        Lattice::Square => 4,
        Lattice::Hex => 6,
    };
    let mut chords = Vec::new();
    for c in 0..cells.len() {
        if rng.gen_bool(params.chord_probability) {
            let i = rng.gen_range(0..corners);
            let skip = if corners == 6 {
                rng.gen_range(2..=3)
            } else {
                2
            };
            chords.push((c, i, (i + skip) % corners));
        }
    }
    let mut g = from_cells(lattice, &cells, &chords).ok()?;

    if rng.gen_bool(params.gadget_probability) {
        for _ in 0..2 {
            let even = g.even_faces();
            let &f = even.choose(rng)?;
            let edges: Vec<_> = g.face(f).edges().collect();
            let &e = edges.choose(rng)?;
            g = eliminate_even_face(&g, f, e).ok()?;
        }
    }
    (g.n() <= params.max_vertices && has_perfect_matching(&g.to_graph())).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face_lengths(g: &PlaneGraph) -> Vec<usize> {
        let mut l: Vec<usize> = g.faces().iter().map(|f| f.len()).collect();
        l.sort_unstable();
        l
    }

    #[test]
    fn named_counts() {
        let cube = named("cube").unwrap();
        assert_eq!((cube.n(), cube.m(), cube.face_count()), (8, 12, 6));
        assert_eq!(cube.even_faces().len(), 6);

        let prism = named("prism").unwrap();
        assert_eq!(face_lengths(&prism), vec![3, 3, 4, 4, 4]);

        let d = named("dodecahedron").unwrap();
        assert_eq!((d.n(), d.m()), (20, 30));
        assert_eq!(face_lengths(&d), vec![5; 12]);

        let c = named("coronene").unwrap();
        assert_eq!(c.n(), 24);
        assert_eq!(face_lengths(&c), vec![6, 6, 6, 6, 6, 6, 6, 18]);

        let n = named("naphthalene").unwrap();
        assert_eq!((n.n(), n.m()), (10, 11));

        let k4 = named("k4").unwrap();
        assert_eq!(face_lengths(&k4), vec![3, 3, 3, 3]);
    }

    #[test]
    fn nanotubes_are_fullerenes() {
        for rings in 2..=4 {
            let g = nanotube(rings).unwrap();
            assert_eq!(g.n(), 10 + 10 * rings);
            assert!((0..g.n()).all(|v| g.degree(v) == 3));
            let l = face_lengths(&g);
            assert_eq!(l.iter().filter(|&&x| x == 5).count(), 12);
            assert!(l.iter().all(|&x| x == 5 || x == 6));
        }
    }

    #[test]
    fn grid_and_outer_face() {
        let g = named("grid(3,4)").unwrap();
        assert_eq!((g.n(), g.m()), (12, 17));
        let outer = g.outer_face().unwrap();
        assert_eq!(g.face(outer).len(), 10);
    }

    #[test]
    fn unknown_names() {
        for bad in ["hexagon", "cycle(2)", "grid(1,5)", "cycle(x)"] {
            assert!(matches!(named(bad), Err(GenError::UnknownName(_))), "{bad}");
        }
    }

    #[test]
    fn random_is_reproducible() {
        let p = SizeParams::default();
        let a = random_instance(1, &p).unwrap();
        let b = random_instance(1, &p).unwrap();
        assert_eq!(a.rotation_lists(), b.rotation_lists());
        assert!(has_perfect_matching(&a.to_graph()));
    }
}

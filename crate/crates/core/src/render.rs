//! Static SVG drawings of plane graphs and Clar solutions.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::plane_graph::{FaceId, PlaneGraph};
use crate::solver::ClarSolution;

const SIZE: f64 = 480.0;
const RADIUS: f64 = 210.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayoutKind {
    Barycentric,
    /// The barycentric layout collapsed two vertices; all vertices were put on a circle.
    CircularFallback,
}

/// Tutte's barycentric layout: the outer face (or the longest face when none
/// is named) is pinned to a circle and every other vertex sits at the
/// average of its neighbors.
pub fn layout(g: &PlaneGraph) -> (Vec<(f64, f64)>, LayoutKind) {
    let outer = frame_face(g);
    let ring = &g.face(outer).vertices;
    let n = g.n();
    let mut pos = vec![(0.0, 0.0); n];
    let mut pinned = vec![false; n];
    for (i, &v) in ring.iter().enumerate() {
        let t = 2.0 * PI * i as f64 / ring.len() as f64 - PI / 2.0;
        pos[v] = (RADIUS * t.cos(), RADIUS * t.sin());
        pinned[v] = true;
    }
    let nbrs: Vec<Vec<usize>> = g.rotation_lists();
    for _ in 0..20_000 {
        let mut delta: f64 = 0.0;
        for v in 0..n {
            if pinned[v] {
                continue;
            }
            let k = nbrs[v].len() as f64;
            let (sx, sy) = nbrs[v]
                .iter()
                .fold((0.0, 0.0), |(x, y), &w| (x + pos[w].0, y + pos[w].1));
            let new = (sx / k, sy / k);
            delta = delta.max((new.0 - pos[v].0).abs() + (new.1 - pos[v].1).abs());
            pos[v] = new;
        }
        if delta < 1e-9 {
            break;
        }
    }
    let collapsed =
        (0..n).any(|u| (u + 1..n).any(|v| (pos[u].0 - pos[v].0).hypot(pos[u].1 - pos[v].1) < 1e-3));
    if collapsed {
        let circle = (0..n)
            .map(|i| {
                let t = 2.0 * PI * i as f64 / n as f64 - PI / 2.0;
                (RADIUS * t.cos(), RADIUS * t.sin())
            })
            .collect();
        return (circle, LayoutKind::CircularFallback);
    }
    (pos, LayoutKind::Barycentric)
}

fn frame_face(g: &PlaneGraph) -> FaceId {
    g.outer_face().unwrap_or_else(|| {
        g.faces()
            .iter()
            .fold(None::<&crate::plane_graph::Face>, |best, f| match best {
                Some(b) if b.len() >= f.len() => Some(b),
                _ => Some(f),
            })
            .map(|f| f.id)
            .expect("plane graphs have faces")
    })
}

/// Renders `g`, shading the faces of `solution` and drawing its matching bold.
pub fn render_svg(g: &PlaneGraph, solution: Option<&ClarSolution>) -> String {
    let (pos, _) = layout(g);
    let frame = frame_face(g);
    let c = SIZE / 2.0;
    let at = |v: usize| (c + pos[v].0, c + pos[v].1);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    if let Some(name) = g.name() {
        let _ = writeln!(s, "  <title>{}</title>", escape(name));
    }
    let _ = writeln!(s, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    if let Some(sol) = solution {
        for &f in &sol.faces {
            let points: Vec<String> = g
                .face(f)
                .vertices
                .iter()
                .map(|&v| {
                    let (x, y) = at(v);
                    format!("{x:.2},{y:.2}")
                })
                .collect();
            // The frame face is the unbounded region; outline it instead of filling the plane.
            let style = if f == frame {
                r##"fill="none" stroke="#f4a3a3" stroke-width="12""##
            } else {
                r##"fill="#f4a3a3" stroke="none""##
            };
            let _ = writeln!(
                s,
                r#"  <polygon class="clar-face" data-face="{}" points="{}" {style}/>"#,
                f.0,
                points.join(" ")
            );
        }
    }

    let matched: Vec<(usize, usize)> = solution.map(|s| s.matching.clone()).unwrap_or_default();
    for &(u, v) in g.edges() {
        let ((x1, y1), (x2, y2)) = (at(u), at(v));
        let (class, width) = if matched.contains(&(u, v)) {
            ("matching", 5)
        } else {
            ("edge", 2)
        };
        let _ = writeln!(
            s,
            r#"  <line class="{class}" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="{width}"/>"#
        );
    }
    for v in 0..g.n() {
        let (x, y) = at(v);
        let _ = writeln!(
            s,
            r#"  <circle class="vertex" cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

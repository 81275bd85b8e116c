//! The FPT parameter: a shortest odd-join of the dual, and the subdivided
//! graph it induces.
//!
//!     cargo run --example odd_join -- nanotube(3)

use clar::generators::named;
use clar::solver::subdivide;
use clar::tjoin::{odd_join_of, verify_tjoin};

fn main() {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "dodecahedron".into());
    let g = named(&name).expect("known name");
    let dual = g.dual();
    let join = odd_join_of(&g).expect("even number of odd faces");
    assert!(verify_tjoin(&dual, &join.terminals, &join.edges));

    println!(
        "{name}: {} faces, {} odd",
        g.face_count(),
        join.terminals.len()
    );
    println!(
        "shortest odd-join has {} edges (pairing weight {})",
        join.size(),
        join.pairing_weight
    );
    for &e in &join.edges {
        let (a, b) = dual.endpoints(e);
        println!(
            "  primal edge {:?} separates {a} (len {}) and {b} (len {})",
            g.edge(e),
            g.face(a).len(),
            g.face(b).len()
        );
    }
    let touched = join.touched_even_faces(&g);
    println!("even faces touched by the join: {touched:?}");

    let sub = subdivide(&g, &join.edges);
    let lifted = sub
        .to_plane_graph()
        .expect("subdivision keeps the embedding valid");
    println!(
        "subdivided graph: {} vertices, {} edges, bipartite = {}",
        lifted.n(),
        lifted.m(),
        lifted.is_bipartite()
    );
    println!(
        "guesses to enumerate: 3^{} = {}",
        join.size(),
        3u64.pow(join.size() as u32)
    );
}

//! The two hardness constructions as instance transformers.
//!
//! An even face is removed by planting a triangle in it, which raises the
//! independence number by exactly one. A graph with odd faces only is then
//! blown up so that its Clar number equals the source's independence number.
//!
//!     cargo run --release --example hardness_gadgets

use clar::generators::named;
use clar::oracle::{alpha_oracle, clar_oracle, clar_wrt_matching_oracle};
use clar::reductions::{independent_set_to_clar, odd_face_closure};

fn main() {
    for name in ["k4", "cycle(4)", "prism", "cube"] {
        let g = named(name).unwrap();
        let closed = odd_face_closure(&g).unwrap();
        let alpha_g = alpha_oracle(&g.to_graph()).unwrap();
        let alpha_closed = alpha_oracle(&closed.to_graph()).unwrap();
        println!(
            "{name}: alpha = {alpha_g}, {} even faces -> closure with {} vertices, alpha = {alpha_closed}",
            g.even_faces().len(),
            closed.n()
        );

        let blow = independent_set_to_clar(&closed).unwrap();
        let even = blow.graph.even_faces().len();
        if even > clar::oracle::EVEN_FACE_LIMIT {
            println!(
                "  blow-up has {} vertices and {even} even faces (too many for the oracle)",
                blow.graph.n()
            );
            continue;
        }
        let cl = clar_oracle(&blow.graph).unwrap().value;
        let wrt = clar_wrt_matching_oracle(&blow.graph, &blow.canonical_matching).unwrap();
        println!(
            "  blow-up: {} vertices, Cl = {cl}, Cl wrt canonical matching = {wrt}",
            blow.graph.n()
        );
    }
}

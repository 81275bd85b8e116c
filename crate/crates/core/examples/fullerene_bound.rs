//! Clar numbers of small fullerenes against the upper bound floor((n - 12) / 6).
//! Buckminsterfullerene is built as the blow-up of the dodecahedron. Its
//! pentagons are isolated, so its odd-join has 12 edges and 3^12 guesses; its
//! value comes from the brute-force oracle instead.
//!
//!     cargo run --release --example fullerene_bound

use std::time::Instant;

use clar::generators::named;
use clar::oracle::clar_oracle;
use clar::reductions::independent_set_to_clar;
use clar::solver::{solve_clar, SolveOptions};
use clar::tjoin::odd_join_of;
use clar::PlaneGraph;

fn is_fullerene(g: &PlaneGraph) -> bool {
    (0..g.n()).all(|v| g.degree(v) == 3)
        && g.faces().iter().all(|f| f.len() == 5 || f.len() == 6)
        && g.faces().iter().filter(|f| f.len() == 5).count() == 12
}

fn main() {
    let instances: Vec<(String, PlaneGraph)> = [
        "dodecahedron",
        "nanotube(2)",
        "nanotube(3)",
        "nanotube(4)",
        "nanotube(5)",
    ]
    .iter()
    .map(|n| (n.to_string(), named(n).unwrap()))
    .collect();
    let options = SolveOptions {
        jobs: 0,
        prune: true,
        ..SolveOptions::default()
    };
    println!(
        "{:<32} {:>4} {:>4} {:>5} {:>5} {:>10}",
        "instance", "n", "|J|", "Cl", "bound", "time"
    );
    for (name, g) in &instances {
        assert!(is_fullerene(g), "{name}");
        let start = Instant::now();
        let r = solve_clar(g, &options).unwrap();
        let bound = (g.n() - 12) / 6;
        assert!(r.value <= bound);
        println!(
            "{name:<32} {:>4} {:>4} {:>5} {:>5} {:>10.2?}",
            g.n(),
            r.stats.join_size,
            r.value,
            bound,
            start.elapsed()
        );
    }

    let c60 = independent_set_to_clar(&named("dodecahedron").unwrap())
        .unwrap()
        .graph;
    assert!(is_fullerene(&c60));
    let start = Instant::now();
    let join = odd_join_of(&c60).unwrap().size();
    let value = clar_oracle(&c60).unwrap().value;
    let bound = (c60.n() - 12) / 6;
    assert!(value <= bound);
    println!(
        "{:<32} {:>4} {join:>4} {value:>5} {bound:>5} {:>10.2?}  (oracle)",
        "C60",
        c60.n(),
        start.elapsed()
    );
}

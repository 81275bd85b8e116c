//! Clar numbers of the built-in named instances, with the FPT parameter and
//! LP count for each. Fullerenes are checked against the `floor((n-12)/6)`
//! upper bound.
//!
//!     cargo run --release --example named_instances

use std::time::Instant;

use clar::generators::named;
use clar::solver::{solve_clar, SolveOptions};

fn main() {
    let names = [
        "benzene",
        "naphthalene",
        "coronene",
        "cube",
        "prism",
        "k4",
        "grid(4,4)",
        "grid(6,6)",
        "dodecahedron",
        "nanotube_cap_demo",
        "nanotube(3)",
    ];
    println!(
        "{:<18} {:>4} {:>4} {:>4} {:>8} {:>6}  time",
        "name", "n", "|T|", "|J|", "LPs", "Cl"
    );
    for name in names {
        let g = named(name).expect("known name");
        let t = Instant::now();
        let r = solve_clar(
            &g,
            &SolveOptions {
                jobs: 0,
                ..Default::default()
            },
        )
        .expect("solvable");
        let fullerene = (0..g.n()).all(|v| g.degree(v) == 3)
            && g.faces().iter().all(|f| f.len() == 5 || f.len() == 6);
        let bound = if fullerene {
            format!("  (bound {})", (g.n() - 12) / 6)
        } else {
            String::new()
        };
        println!(
            "{:<18} {:>4} {:>4} {:>4} {:>8} {:>6}  {:.2?}{bound}",
            name,
            g.n(),
            r.stats.terminals,
            r.stats.join_size,
            r.stats.lps_solved,
            r.value,
            t.elapsed()
        );
    }
}

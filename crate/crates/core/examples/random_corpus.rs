//! Generates a seeded corpus of small random instances and compares the
//! solver against the brute-force oracle on each.
//!
//!     cargo run --release --example random_corpus -- 300

use std::collections::BTreeMap;
use std::time::Instant;

use clar::generators::{random_instance, SizeParams};
use clar::oracle::clar_oracle;
use clar::solver::{solve_clar, SolveOptions};

fn main() {
    let count: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(100);
    let params = SizeParams::default();
    let start = Instant::now();
    let mut by_join: BTreeMap<usize, usize> = BTreeMap::new();
    let mut mixed = 0;
    for seed in 0..count {
        let g = random_instance(seed, &params).expect("generator");
        let solved = solve_clar(&g, &SolveOptions::default()).expect("solve");
        let oracle = clar_oracle(&g).expect("oracle");
        assert_eq!(solved.value, oracle.value, "seed {seed}");
        *by_join.entry(solved.stats.join_size).or_default() += 1;
        if !g.odd_faces().is_empty() {
            mixed += 1;
        }
    }
    println!("{count} instances agree with the oracle ({mixed} have odd faces)");
    for (j, c) in &by_join {
        println!(
            "  |J| = {j}: {c} instances, {} LPs each",
            3u64.pow(*j as u32)
        );
    }
    println!("elapsed: {:.2?}", start.elapsed());
}

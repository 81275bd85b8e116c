//! The exact simplex kernel on its own: a fractional vertex, a degenerate
//! instance that cycles under largest-coefficient pivoting, and the Clar LP
//! of the cube.
//!
//!     cargo run --example lp_kernel

use clar::generators::named;
use clar::lp::{is_integral, solve_lp, LinearProgram};
use clar::solver::{assemble_system, instantiate, subdivide, GuessVector};

fn main() {
    // Edge LP of a triangle: the unique optimum is (1/2, 1/2, 1/2).
    let triangle = LinearProgram::new(
        vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]],
        vec![1, 1, 1],
        vec![1, 1, 1],
    );
    let out = solve_lp(&triangle);
    println!(
        "triangle edge LP: {:?} at {:?}",
        out.objective_value, out.vertex
    );

    // Beale's example, scaled to integers.
    let beale = LinearProgram::new(
        vec![
            vec![4, 0, 0, 1, -32, -4, 36],
            vec![0, 2, 0, 1, -24, -1, 6],
            vec![0, 0, 1, 0, 0, 1, 0],
        ],
        vec![0, 0, 1],
        vec![0, 0, 0, 3, -80, 2, -24],
    );
    let out = solve_lp(&beale);
    println!(
        "Beale: {:?} value {:?} after {} pivots",
        out.status, out.objective_value, out.pivots
    );

    let cube = named("cube").unwrap();
    let sys = assemble_system(&subdivide(&cube, &[]), None);
    let lp = instantiate(&sys, &GuessVector { b_u: vec![] });
    let out = solve_lp(&lp);
    let vertex = out.vertex.unwrap();
    println!(
        "cube Clar LP: {} rows, {} columns, value {}",
        lp.rows(),
        lp.columns(),
        out.objective_value.unwrap()
    );
    println!("integral vertex: {}", is_integral(&vertex));
    let chosen: Vec<&str> = lp
        .names
        .iter()
        .zip(&vertex)
        .filter(|(_, v)| !v.is_zero())
        .map(|(n, _)| n.as_str())
        .collect();
    println!("nonzero columns: {chosen:?}");
}

//! Shared corpora and brute-force references for the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clar::generators::{named, random_instance, SizeParams};
use clar::lp::{LinearProgram, Rational};
use clar::PlaneGraph;

/// Default random instances for seeds `0..count`.
pub fn corpus(count: u64) -> Vec<(u64, PlaneGraph)> {
    let params = SizeParams::default();
    (0..count)
        .map(|s| (s, random_instance(s, &params).expect("generator")))
        .collect()
}

/// Random instances whose dual has at most `max_dual_edges` edges.
pub fn small_dual_corpus(want: usize, max_dual_edges: usize) -> Vec<(u64, PlaneGraph)> {
    let params = SizeParams {
        max_vertices: 12,
        max_cells: 4,
        ..SizeParams::default()
    };
    let mut out = Vec::new();
    let mut seed = 0;
    while out.len() < want {
        let g = random_instance(seed, &params).expect("generator");
        if g.m() <= max_dual_edges {
            out.push((seed, g));
        }
        seed += 1;
        assert!(seed < 100_000, "generator rarely produces small duals");
    }
    out
}

/// Small graphs with every face odd, suitable for the blow-up: named
/// triangulations plus odd-face closures of random patches.
pub fn odd_face_sources(want: usize, max_vertices: usize) -> Vec<(String, PlaneGraph)> {
    use clar::reductions::odd_face_closure;
    let mut out: Vec<(String, PlaneGraph)> = Vec::new();
    for name in ["k4", "cycle(3)", "cycle(5)", "cycle(7)", "dodecahedron"] {
        let g = named(name).unwrap();
        let g = odd_face_closure(&g).unwrap();
        if g.n() <= max_vertices {
            out.push((name.to_string(), g));
        }
    }
    let params = SizeParams {
        max_vertices: 10,
        max_cells: 3,
        ..SizeParams::default()
    };
    let mut seed = 0;
    while out.len() < want {
        let g = random_instance(seed, &params).expect("generator");
        let closed = odd_face_closure(&g).unwrap();
        if closed.n() <= max_vertices {
            out.push((format!("closure of seed {seed}"), closed));
        }
        seed += 1;
        assert!(seed < 100_000, "too few small closures");
    }
    out
}

pub fn to_big(r: &Rational) -> BigRational {
    BigRational::new(r.numer(), r.denom())
}

/// Verdict of an LP in equality form `max c.x, Ax = b, x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Infeasible,
    Unbounded,
    Optimal(BigRational),
}

/// Solves `A_S x = rhs` over the rationals. Returns `None` unless the
/// columns are independent and the system is consistent.
fn solve_subset(
    a: &[Vec<BigRational>],
    rhs: &[BigRational],
    cols: &[usize],
) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let k = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|i| {
            cols.iter()
                .map(|&j| a[i][j].clone())
                .chain([rhs[i].clone()])
                .collect()
        })
        .collect();
    let mut r = 0;
    for c in 0..k {
        let p = (r..rows).find(|&i| !m[i][c].is_zero())?;
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some((0..k).map(|i| m[i][k].clone()).collect())
}

/// All basic feasible solutions of `Ax = rhs, x >= 0`, by trying every
/// column subset.
fn basic_feasible_solutions(
    a: &[Vec<BigRational>],
    rhs: &[BigRational],
    n: usize,
) -> Vec<Vec<BigRational>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let cols: Vec<usize> = (0..n).filter(|j| mask >> j & 1 == 1).collect();
        if cols.len() > a.len() {
            continue;
        }
        if let Some(xs) = solve_subset(a, rhs, &cols) {
            if xs.iter().all(|x| !x.is_negative()) {
                let mut full = vec![BigRational::zero(); n];
                for (&j, x) in cols.iter().zip(xs) {
                    full[j] = x;
                }
                out.push(full);
            }
        }
    }
    out
}

fn dot(c: &[BigRational], x: &[BigRational]) -> BigRational {
    c.iter()
        .zip(x)
        .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
}

/// Brute-force reference: vertices of the polyhedron and extreme rays of
/// its recession cone, the latter as vertices of `{d >= 0, Ad = 0, 1.d = 1}`.
pub fn brute_lp(p: &LinearProgram) -> Verdict {
    let big = |v: i64| BigRational::from_integer(BigInt::from(v));
    let n = p.columns();
    let a: Vec<Vec<BigRational>> =
        p.a.iter()
            .map(|row| row.iter().map(|&v| big(v)).collect())
            .collect();
    let b: Vec<BigRational> = p.b.iter().map(|&v| big(v)).collect();
    let c: Vec<BigRational> = p.objective.iter().map(|&v| big(v)).collect();
    let vertices = basic_feasible_solutions(&a, &b, n);
    if vertices.is_empty() {
        return Verdict::Infeasible;
    }
    let mut cone = a.clone();
    cone.push(vec![big(1); n]);
    let mut cone_rhs = vec![BigRational::zero(); a.len()];
    cone_rhs.push(big(1));
    if basic_feasible_solutions(&cone, &cone_rhs, n)
        .iter()
        .any(|d| dot(&c, d).is_positive())
    {
        return Verdict::Unbounded;
    }
    Verdict::Optimal(vertices.iter().map(|x| dot(&c, x)).max().unwrap())
}

/// A random LP with at most 6 rows and 8 columns, matrix entries in `-2..=2`.
pub fn random_lp(rng: &mut ChaCha8Rng) -> LinearProgram {
    let rows = rng.gen_range(1..=6);
    let cols = rng.gen_range(1..=8);
    let a: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-2..=2)).collect())
        .collect();
    // Half the time, take b = A x0 for a random x0 >= 0 so the LP is feasible.
    let b = if rng.gen_bool(0.5) {
        let x0: Vec<i64> = (0..cols).map(|_| rng.gen_range(0..=2)).collect();
        a.iter()
            .map(|row| row.iter().zip(&x0).map(|(p, q)| p * q).sum())
            .collect()
    } else {
        (0..rows).map(|_| rng.gen_range(-2..=2)).collect()
    };
    let c = (0..cols).map(|_| rng.gen_range(-2..=2)).collect();
    LinearProgram::new(a, b, c)
}

pub fn lp_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Beale's cycling example with slack columns, scaled to integers.
pub fn beale() -> LinearProgram {
    LinearProgram::new(
        vec![
            vec![4, 0, 0, 1, -32, -4, 36],
            vec![0, 2, 0, 1, -24, -1, 6],
            vec![0, 0, 1, 0, 0, 1, 0],
        ],
        vec![0, 0, 1],
        vec![0, 0, 0, 3, -80, 2, -24],
    )
}

/// Upper bound on the Clar number of a fullerene with `n` vertices.
pub fn ye_zhang_bound(n: usize) -> usize {
    (n - 12) / 6
}

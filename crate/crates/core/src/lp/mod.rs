//! Exact linear programming over the rationals.

mod rational;
mod simplex;

pub use rational::{is_integral, Rational};
pub use simplex::{solve_lp, solve_lp_traced, LinearProgram, LpOutcome, LpStatus};

//! Exact Clar numbers of 2-connected plane graphs.
//!
//! The Clar number is the largest number of pairwise vertex-disjoint even
//! faces on which a single perfect matching alternates. This crate computes
//! it with a fixed-parameter algorithm whose parameter is the size of a
//! shortest odd-join in the planar dual: every edge of the join is
//! subdivided, the coverage of each subdivision node is guessed from
//! `{0, 1, 2}`, and each guess is settled by an exact, integral LP.
//!
//! ```
//! use clar::{generators::named, solver::{solve_clar, SolveOptions}};
//!
//! let coronene = named("coronene").unwrap();
//! let result = solve_clar(&coronene, &SolveOptions::default()).unwrap();
//! assert_eq!(result.value, 3);
//! ```

pub mod generators;
pub mod io;
pub mod lp;
pub mod matching;
pub mod oracle;
pub mod plane_graph;
pub mod reductions;
pub mod render;
pub mod solver;
pub mod tjoin;

pub use plane_graph::{DualGraph, EdgeId, Face, FaceId, GraphError, PlaneGraph};
pub use solver::{solve_clar, ClarResult, ClarSolution, SolveError, SolveOptions};

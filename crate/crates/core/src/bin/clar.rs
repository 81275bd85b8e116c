use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use clar::generators::{named, random_instance, LatticeChoice, SizeParams};
use clar::io::{instance_to_json, parse_instance, parse_matching, solution_to_json};
use clar::lp::solve_lp_traced;
use clar::matching::has_perfect_matching;
use clar::oracle::{clar_oracle, clar_wrt_matching_oracle};
use clar::plane_graph::check_invariants;
use clar::render::render_svg;
use clar::solver::{
    assemble_system, instantiate, subdivide, GuessVector, SolveError, SolveOptions,
    DEFAULT_MAX_PARAM,
};
use clar::tjoin::odd_join_of;
use clar::PlaneGraph;

const EXIT_USAGE: u8 = 1;
const EXIT_NO_MATCHING: u8 = 2;
const EXIT_PARAM: u8 = 3;
const EXIT_INVALID: u8 = 4;

#[derive(Parser)]
#[command(
    name = "clar",
    version,
    about = "Clar numbers of 2-connected plane graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Clar number.
    Solve {
        /// Instance JSON; reads stdin when omitted or "-".
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        prune: bool,
        #[arg(long)]
        forbid_outer: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_PARAM)]
        max_param: usize,
        #[arg(long)]
        solution: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Dump the simplex tableaus of the winning guess to stderr.
        #[arg(long)]
        trace_lp: bool,
    },
    /// Brute-force reference values.
    Oracle {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Also report the best Clar set with respect to this perfect matching.
        #[arg(long)]
        wrt_matching: Option<PathBuf>,
    },
    /// Write an instance JSON to stdout.
    Gen {
        #[arg(long, conflicts_with = "random")]
        name: Option<String>,
        #[arg(long, requires = "seed")]
        random: bool,
        #[arg(long)]
        seed: Option<u64>,
        /// Maximum vertex count of a random instance.
        #[arg(long, default_value_t = 16)]
        size: usize,
        #[arg(long, default_value_t = 5)]
        cells: usize,
        #[arg(long, value_enum, default_value_t = LatticeArg::Mixed)]
        lattice: LatticeArg,
    },
    /// Print the dual, its odd nodes and a shortest odd-join.
    Dual {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Validate an instance file.
    Check {
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeArg {
    Square,
    Hex,
    Mixed,
}

struct Failure(u8, String);

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure(EXIT_USAGE, msg.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = fs::read_to_string(p)
                .map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::usage(e.to_string()))?;
        }
    }
    Ok(text)
}

fn load(path: &Option<PathBuf>) -> Result<PlaneGraph, Failure> {
    let text = read_input(path)?;
    parse_instance(&text).map_err(|e| Failure(EXIT_INVALID, e.to_string()))
}

fn write(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Solve {
            input,
            jobs,
            prune,
            forbid_outer,
            max_param,
            solution,
            svg,
            trace_lp,
        } => {
            let g = load(&input)?;
            let options = SolveOptions {
                jobs,
                prune,
                forbid_outer,
                max_param,
            };
            let r = clar::solve_clar(&g, &options).map_err(|e| match e {
                SolveError::NoPerfectMatching => Failure(EXIT_NO_MATCHING, e.to_string()),
                SolveError::ParameterTooLarge { .. } => Failure(EXIT_PARAM, e.to_string()),
                other => Failure(EXIT_INVALID, other.to_string()),
            })?;
            println!("clar_number: {}", r.value);
            println!("odd_faces: {}", r.stats.terminals);
            println!("join_size: {}", r.stats.join_size);
            println!("lps_solved: {}", r.stats.lps_solved);
            if prune {
                println!("pruned: {}", r.stats.pruned);
            }
            let faces: Vec<String> = r
                .solution
                .faces
                .iter()
                .map(|&f| format!("{:?}", g.face(f).vertices))
                .collect();
            println!("faces: [{}]", faces.join(", "));
            if trace_lp {
                let sub = subdivide(&g, &r.join.edges);
                let exclude = if forbid_outer { g.outer_face() } else { None };
                let sys = assemble_system(&sub, exclude);
                let guess = GuessVector {
                    b_u: r.solution.witness_guess.clone().unwrap_or_default(),
                };
                solve_lp_traced(&instantiate(&sys, &guess), &mut io::stderr());
            }
            if let Some(path) = solution {
                write(&path, &solution_to_json(&g, &r))?;
            }
            if let Some(path) = svg {
                write(&path, &render_svg(&g, Some(&r.solution)))?;
            }
        }
        Command::Oracle {
            input,
            wrt_matching,
        } => {
            let g = load(&input)?;
            let code = |e: clar::oracle::OracleError| match e {
                clar::oracle::OracleError::NoPerfectMatching => {
                    Failure(EXIT_NO_MATCHING, e.to_string())
                }
                other => Failure(EXIT_PARAM, other.to_string()),
            };
            let v = clar_oracle(&g).map_err(code)?;
            println!("clar_number: {}", v.value);
            if let Some(path) = wrt_matching {
                let text = fs::read_to_string(&path)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                let m = parse_matching(&text, g.n())
                    .map_err(|e| Failure(EXIT_INVALID, e.to_string()))?;
                let k = clar_wrt_matching_oracle(&g, &m)
                    .map_err(|e| Failure(EXIT_INVALID, e.to_string()))?;
                println!("clar_number_wrt_matching: {k}");
            }
        }
        Command::Gen {
            name,
            random,
            seed,
            size,
            cells,
            lattice,
        } => {
            let g = if random {
                let params = SizeParams {
                    max_vertices: size,
                    max_cells: cells,
                    lattice: match lattice {
                        LatticeArg::Square => LatticeChoice::Square,
                        LatticeArg::Hex => LatticeChoice::Hex,
                        LatticeArg::Mixed => LatticeChoice::Mixed,
                    },
                    ..SizeParams::default()
                };
                random_instance(seed.expect("clap enforces --seed"), &params)
                    .map_err(|e| Failure::usage(e.to_string()))?
            } else if let Some(name) = name {
                named(&name).map_err(|e| Failure::usage(e.to_string()))?
            } else {
                return Err(Failure::usage("gen needs --name or --random --seed"));
            };
            println!("{}", instance_to_json(&g));
        }
        Command::Dual { input } => {
            let g = load(&input)?;
            let dual = g.dual();
            println!("faces: {}", dual.node_count());
            for f in g.faces() {
                let nbrs: Vec<String> = dual
                    .adjacency(f.id)
                    .iter()
                    .map(|(h, e)| format!("{h}({e})"))
                    .collect();
                println!("  {} len={} -> {}", f.id, f.len(), nbrs.join(" "));
            }
            let t: Vec<String> = g.odd_faces().iter().map(|f| f.to_string()).collect();
            println!("T: [{}]", t.join(", "));
            let join = odd_join_of(&g).map_err(|e| Failure(EXIT_PARAM, e.to_string()))?;
            let edges: Vec<String> = join
                .edges
                .iter()
                .map(|&e| format!("{:?}", g.edge(e)))
                .collect();
            println!("join: [{}]", edges.join(", "));
            println!("join_size: {}", join.size());
        }
        Command::Check { input } => {
            let g = load(&input)?;
            let bad = check_invariants(&g);
            for b in &bad {
                println!("violation: {b}");
            }
            if !bad.is_empty() {
                return Err(Failure(
                    EXIT_INVALID,
                    format!("{} invariant violations", bad.len()),
                ));
            }
            println!(
                "ok: n={} m={} faces={} odd_faces={} perfect_matching={}",
                g.n(),
                g.m(),
                g.face_count(),
                g.odd_faces().len(),
                has_perfect_matching(&g.to_graph())
            );
        }
    }
    Ok(())
}

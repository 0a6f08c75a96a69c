//! Command-line interface: `solve`, `verify`, `generate` and `oracle`.

mod format;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::generate::{plant_contractible, random_cactus};
use crate::graph::Edge;
use crate::oracle::brute_force_min_contractions;
use crate::solver::{solve_with_report, ContractionSolution, Mode, SolverConfig};

pub use format::{parse_edge_list, parse_instance, write_edge_list, write_instance, Instance, InputError};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "cactus-contract", version, about = "Contract a graph into a cactus with at most k edge contractions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Rand,
    Det,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide an instance and print a certificate on Yes.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "det")]
        mode: ModeArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trials per randomized query (default: min(3^(6k), trial cap)).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: Option<u64>,
        #[arg(long, default_value_t = 100_000)]
        trial_cap: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check that an edge set contracts the instance into a cactus within budget.
    Verify { instance: PathBuf, solution: PathBuf },
    /// Write a planted yes-instance and its solution (`<out>.sol`).
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustive minimum number of contractions, up to the instance's k.
    Oracle { instance: PathBuf },
}

#[derive(Debug, Serialize)]
struct Report {
    answer: &'static str,
    k: usize,
    contracted_edges: Vec<[usize; 2]>,
    quotient_edges: Vec<[usize; 2]>,
    mode: &'static str,
    trials_used: u64,
    seed: u64,
    elapsed_ms: u128,
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> Result<Instance, InputError> {
    parse_instance(&read(path)?)
}

fn fail(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(EXIT_ERROR)
}

fn one_based(edges: impl IntoIterator<Item = Edge>) -> Vec<[usize; 2]> {
    edges.into_iter().map(|Edge(u, v)| [u + 1, v + 1]).collect()
}

/// Quotient edges named by the smallest original vertex of each part.
fn quotient_edges(sol: &ContractionSolution) -> Vec<[usize; 2]> {
    let w = &sol.witness;
    let mut out: Vec<[usize; 2]> = sol
        .quotient
        .edges()
        .map(|Edge(a, b)| [w.label(a) + 1, w.label(b) + 1])
        .collect();
    out.sort_unstable();
    out
}

pub fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Solve {
            instance,
            mode,
            seed,
            trials,
            trial_cap,
            json,
        } => cmd_solve(&instance, mode, seed, trials, trial_cap, json),
        Command::Verify { instance, solution } => cmd_verify(&instance, &solution),
        Command::Generate { n, k, seed, out } => cmd_generate(n, k, seed, &out),
        Command::Oracle { instance } => cmd_oracle(&instance),
    }
}

pub fn cmd_solve(
    path: &Path,
    mode: ModeArg,
    seed: u64,
    trials: Option<u64>,
    trial_cap: u64,
    json: bool,
) -> ExitCode {
    let inst = match load(path) {
        Ok(i) => i,
        Err(e) => return fail(e),
    };
    let cfg = SolverConfig {
        mode: match mode {
            ModeArg::Rand => Mode::Randomized,
            ModeArg::Det => Mode::Deterministic,
        },
        trials,
        seed,
        trial_cap,
    };
    let start = Instant::now();
    let report = match solve_with_report(&inst.g, inst.k, &cfg) {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let elapsed_ms = start.elapsed().as_millis();
    let out = Report {
        answer: if report.solution.is_some() { "yes" } else { "no" },
        k: inst.k,
        contracted_edges: report.solution.as_ref().map_or_else(Vec::new, |s| one_based(s.f.iter().copied())),
        quotient_edges: report.solution.as_ref().map_or_else(Vec::new, quotient_edges),
        mode: match mode {
            ModeArg::Rand => "rand",
            ModeArg::Det => "det",
        },
        trials_used: report.trials_used,
        seed,
        elapsed_ms,
    };
    if json {
        println!("{}", serde_json::to_string(&out).expect("report serializes"));
    } else {
        println!("answer: {}", out.answer);
        println!("k: {}", out.k);
        if let Some(sol) = &report.solution {
            println!("contractions: {}", sol.size);
            for [u, v] in &out.contracted_edges {
                println!("e {u} {v}");
            }
            println!("quotient: {} vertices, {} edges", sol.quotient.n(), sol.quotient.m());
        }
        println!("mode: {} seed: {} trials: {}", out.mode, seed, out.trials_used);
    }
    ExitCode::from(if report.solution.is_some() { EXIT_YES } else { EXIT_NO })
}

pub fn cmd_verify(path: &Path, solution: &Path) -> ExitCode {
    let checked = load(path).and_then(|inst| {
        let f = parse_edge_list(&read(solution)?, &inst.g)?;
        Ok((inst, f))
    });
    let (inst, f) = match checked {
        Ok(x) => x,
        Err(e) => return fail(e),
    };
    let sol = match ContractionSolution::new(&inst.g, &f) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    if sol.certifies(&inst.g, inst.k) {
        println!("valid: {} contractions, budget {}", sol.size, inst.k);
        ExitCode::from(EXIT_YES)
    } else {
        println!("invalid: {} contractions, budget {}", sol.size, inst.k);
        ExitCode::from(EXIT_NO)
    }
}

pub fn cmd_generate(n: usize, k: usize, seed: u64, out: &Path) -> ExitCode {
    if k == 0 || n <= k {
        return fail(format!("need k >= 1 and n > k (got n={n}, k={k})"));
    }
    let t = random_cactus(n - k, seed);
    let planted = match plant_contractible(&t, k, seed) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let comment = format!("planted instance n={n} k={k} seed={seed}");
    let sidecar = {
        let mut s = out.as_os_str().to_owned();
        s.push(".sol");
        PathBuf::from(s)
    };
    let written = std::fs::write(out, write_instance(&planted.g, k, &comment))
        .and_then(|_| std::fs::write(&sidecar, write_edge_list(&planted.forest())));
    match written {
        Ok(()) => ExitCode::from(EXIT_YES),
        Err(e) => fail(format!("{}: {e}", out.display())),
    }
}

pub fn cmd_oracle(path: &Path) -> ExitCode {
    let inst = match load(path) {
        Ok(i) => i,
        Err(e) => return fail(e),
    };
    match brute_force_min_contractions(&inst.g, inst.k) {
        Ok(r) => {
            match r.optimum {
                Some(o) => println!("{o}"),
                None => println!("UNSAT within {}", inst.k),
            }
            ExitCode::from(if r.optimum.is_some() { EXIT_YES } else { EXIT_NO })
        }
        Err(e) => fail(e),
    }
}

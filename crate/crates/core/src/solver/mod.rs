//! The decision procedure: colored trials on 2-connected graphs, randomized
//! and deterministic drivers, and the reduction over blocks.

mod special;
mod trial;

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::coloring::{random_coloring, Coloring};
use crate::error::{Error, Result};
use crate::graph::{blocks, contract_edges, is_cactus, spanning_forest, Edge, Graph, VertexSet, WitnessStructure};
use crate::universal::{coloring_family, ColoringFamily};

pub use special::{detect_two_cable_paths, solve_cycle_special};
pub use trial::two_connected_trial;

/// A certificate: contracting `f` turns the graph into the cactus `quotient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionSolution {
    /// A forest; every edge performs one contraction.
    pub f: Vec<Edge>,
    pub size: usize,
    pub quotient: Graph,
    pub witness: WitnessStructure,
}

impl ContractionSolution {
    /// Contracts `f` (reduced to a spanning forest) in `g`.
    pub fn new(g: &Graph, f: &[Edge]) -> Result<ContractionSolution> {
        let mut f: Vec<Edge> = f.iter().map(|e| Edge::new(e.0, e.1)).collect();
        f.sort_unstable();
        f.dedup();
        let f = spanning_forest(g.n(), &f);
        let (quotient, witness) = contract_edges(g, &f)?;
        Ok(ContractionSolution {
            size: f.len(),
            f,
            quotient,
            witness,
        })
    }

    /// Whether this certifies a Yes answer for budget `k` on `g`.
    pub fn certifies(&self, g: &Graph, k: usize) -> bool {
        self.size <= k
            && self.size == spanning_forest(g.n(), &self.f).len()
            && contract_edges(g, &self.f).is_ok_and(|(q, _)| q == self.quotient)
            && is_cactus(&self.quotient).unwrap_or(false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Randomized,
    Deterministic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub mode: Mode,
    /// Trials per randomized query; `None` means `min(3^(6k), trial_cap)`.
    pub trials: Option<u64>,
    pub seed: u64,
    pub trial_cap: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            mode: Mode::Deterministic,
            trials: None,
            seed: 0,
            trial_cap: 100_000,
        }
    }
}

impl SolverConfig {
    pub fn randomized(seed: u64) -> Self {
        SolverConfig {
            mode: Mode::Randomized,
            seed,
            ..Default::default()
        }
    }

    pub fn deterministic() -> Self {
        Self::default()
    }

    fn trials_for(&self, k: usize) -> u64 {
        self.trials.unwrap_or_else(|| {
            let full = 3u64.checked_pow(6 * k as u32).unwrap_or(u64::MAX);
            full.min(self.trial_cap)
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub solution: Option<ContractionSolution>,
    /// Colored trials run across all queries.
    pub trials_used: u64,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn mix(parts: &[u64]) -> u64 {
    parts.iter().fold(0, |acc, &p| splitmix(acc ^ p))
}

/// Relabels colors in order of first appearance. Trials only depend on the
/// partition into color classes, so equal canonical forms behave alike.
fn canonical(c: &Coloring) -> Coloring {
    let mut map = [0u8; 6];
    let mut next = 1;
    Coloring(
        c.0.iter()
            .map(|&x| {
                if map[x as usize] == 0 {
                    map[x as usize] = next;
                    next += 1;
                }
                map[x as usize]
            })
            .collect(),
    )
}

/// Every 3-coloring of `0..n` up to renaming colors (restricted growth strings).
struct CanonicalColorings {
    cur: Option<Vec<u8>>,
}

impl CanonicalColorings {
    fn new(n: usize) -> Self {
        CanonicalColorings {
            cur: Some(vec![1; n]),
        }
    }

    /// `S(n,1) + S(n,2) + S(n,3)`.
    fn count(n: usize) -> u128 {
        if n == 0 {
            return 1;
        }
        let p3 = 3u128.pow(n as u32);
        let p2 = 2u128.pow(n as u32);
        1 + (p2 - 2) / 2 + (p3 + 3 - 3 * p2) / 6
    }
}

impl Iterator for CanonicalColorings {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        let out = self.cur.clone()?;
        let a = self.cur.as_mut().unwrap();
        // Advance: increase the rightmost position that may grow.
        let mut i = a.len();
        self.cur = loop {
            if i <= 1 {
                break None;
            }
            i -= 1;
            let prefix_max = *a[..i].iter().max().unwrap();
            if a[i] < 3 && a[i] <= prefix_max {
                a[i] += 1;
                a[i + 1..].iter_mut().for_each(|x| *x = 1);
                break Some(a.clone());
            }
        };
        Some(Coloring(out))
    }
}

type FamilyCache = Mutex<HashMap<(usize, usize), Arc<ColoringFamily>>>;

/// Coloring families are costly to build and reused across queries.
fn cached_family(n: usize, k: usize) -> Result<Arc<ColoringFamily>> {
    static CACHE: OnceLock<FamilyCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(f) = cache.lock().unwrap().get(&(n, k)) {
        return Ok(f.clone());
    }
    let f = Arc::new(coloring_family(n, k)?);
    cache.lock().unwrap().insert((n, k), f.clone());
    Ok(f)
}

/// Deterministic trial colorings for budget `k` on `n` vertices: the coloring
/// family, deduplicated up to color renaming, or every canonical coloring when
/// that is no larger.
fn deterministic_colorings(n: usize, k: usize) -> Result<Box<dyn Iterator<Item = Coloring>>> {
    if 6 * k >= n {
        return Ok(Box::new(CanonicalColorings::new(n)));
    }
    let family = cached_family(n, k)?;
    if family.len() as u128 >= CanonicalColorings::count(n) {
        return Ok(Box::new(CanonicalColorings::new(n)));
    }
    let mut seen = HashSet::new();
    Ok(Box::new((0..family.len()).filter_map(move |i| {
        let c = canonical(&family.get(i));
        seen.insert(c.clone()).then_some(c)
    })))
}

/// Decides a 2-connected graph with budget `k`. `stream` separates random
/// streams of independent queries.
fn two_connected_query(g: &Graph, k: usize, cfg: &SolverConfig, stream: u64) -> Result<(Option<ContractionSolution>, u64)> {
    if is_cactus(g)? {
        return Ok((Some(ContractionSolution::new(g, &[])?), 0));
    }
    if k == 0 {
        return Ok((None, 0));
    }
    if detect_two_cable_paths(g).is_some() {
        return Ok((solve_cycle_special(g, k)?, 0));
    }
    let mut used = 0;
    let found = match cfg.mode {
        Mode::Randomized => {
            let total = cfg.trials_for(k);
            let mut found = None;
            for t in 0..total {
                used += 1;
                let f = random_coloring(g, mix(&[cfg.seed, stream, t]));
                if let Some(sol) = two_connected_trial(g, k, &f) {
                    found = Some(sol);
                    break;
                }
            }
            found
        }
        Mode::Deterministic => {
            let mut found = None;
            for f in deterministic_colorings(g.n(), k)? {
                used += 1;
                if let Some(sol) = two_connected_trial(g, k, &f) {
                    found = Some(sol);
                    break;
                }
            }
            found
        }
    };
    Ok((found, used))
}

/// Decides a 2-connected graph: `Some` certificate with at most `k`
/// contractions, or `None`. Randomized mode may miss solutions; it never
/// returns an invalid one.
pub fn solve_two_connected(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<Option<ContractionSolution>> {
    let (sol, _) = two_connected_query(g, k, cfg, 0)?;
    Ok(sol.filter(|s| checked(g, k, s)))
}

fn checked(g: &Graph, k: usize, s: &ContractionSolution) -> bool {
    let ok = s.certifies(g, k);
    debug_assert!(ok, "solver produced an invalid certificate");
    ok
}

/// Queries per block and budget in randomized mode: `ceil(3 log2 max(k, 2))`.
fn repeats(k: usize, mode: Mode) -> u64 {
    match mode {
        Mode::Deterministic => 1,
        Mode::Randomized => (3.0 * (k.max(2) as f64).log2()).ceil() as u64,
    }
}

/// Decides whether at most `k` contractions turn the connected graph `g` into
/// a cactus, returning a certificate on Yes.
pub fn solve(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<Option<ContractionSolution>> {
    Ok(solve_with_report(g, k, cfg)?.solution)
}

pub fn solve_with_report(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<SolveReport> {
    let decomposition = blocks(g)?;
    let hard: Vec<_> = decomposition
        .blocks
        .iter()
        .filter(|b| !b.is_cactus_block())
        .collect();
    let mut report = SolveReport {
        solution: None,
        trials_used: 0,
    };
    if hard.len() > k {
        return Ok(report);
    }
    let mut forest: Vec<Edge> = Vec::new();
    let mut spent = 0;
    for (i, block) in hard.iter().enumerate() {
        let later = hard.len() - i - 1;
        let cap = k - spent - later;
        let set = VertexSet::from_iter(g.n(), block.vertices.iter().copied());
        let (h, map) = g.induced(&set);
        let mut found = None;
        'budget: for kj in 1..=cap {
            for rep in 0..repeats(k, cfg.mode) {
                let stream = mix(&[i as u64, kj as u64, rep]);
                let (sol, used) = two_connected_query(&h, kj, cfg, stream)?;
                report.trials_used += used;
                if let Some(sol) = sol.filter(|s| checked(&h, kj, s)) {
                    found = Some(sol);
                    break 'budget;
                }
            }
        }
        let Some(sol) = found else {
            return Ok(report);
        };
        log::debug!("block {i} ({} vertices) needs {} contractions", h.n(), sol.size);
        spent += sol.size;
        forest.extend(sol.f.iter().map(|e| Edge::new(map[e.0], map[e.1])));
    }
    let sol = ContractionSolution::new(g, &forest)?;
    if checked(g, k, &sol) {
        report.solution = Some(sol);
    }
    Ok(report)
}

/// Convenience wrapper rejecting disconnected input explicitly.
pub fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

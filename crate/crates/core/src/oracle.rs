//! Exhaustive ground truth for the optimizing subroutines. Slow by design.

use crate::error::{Error, Result};
use crate::graph::{contract_edges, is_cactus, Edge, Graph, Vertex, VertexSet};
use crate::universal::{binomial, for_each_combination};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    /// `None` when no edge set within the cap works.
    pub optimum: Option<usize>,
    pub witness_f: Vec<Edge>,
}

const CONTRACTION_LIMIT: u128 = 10_000_000;

/// Minimum number of contractions turning `g` into a cactus, searching edge
/// sets of size at most `kmax`.
pub fn brute_force_min_contractions(g: &Graph, kmax: usize) -> Result<OracleResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges: Vec<Edge> = g.edges().collect();
    let work: u128 = (0..=kmax.min(edges.len())).map(|i| binomial(edges.len(), i)).sum();
    if work > CONTRACTION_LIMIT {
        return Err(Error::TooLarge(format!(
            "{work} edge subsets for m={}, kmax={kmax}",
            edges.len()
        )));
    }
    // The first working size is optimal: a non-forest set of that size would
    // contain a smaller forest with the same quotient, found earlier.
    for size in 0..=kmax.min(edges.len()) {
        let mut found = None;
        for_each_combination(edges.len(), size, |idx| {
            if found.is_some() {
                return;
            }
            let f: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            let (q, _) = contract_edges(g, &f).expect("subset of the graph's edges");
            if is_cactus(&q).expect("quotient of a connected graph") {
                found = Some(f);
            }
        });
        if let Some(f) = found {
            return Ok(OracleResult {
                optimum: Some(size),
                witness_f: f,
            });
        }
    }
    Ok(OracleResult {
        optimum: None,
        witness_f: Vec::new(),
    })
}

/// Components of `h[within]` by plain depth-first search.
fn pieces(h: &Graph, within: &VertexSet) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; h.n()];
    let mut out = Vec::new();
    for s in within.iter() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in h.neighbors(v) {
                if within.contains(w) && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Core test written from the definition, independently of `core_extract`.
fn core_by_definition(h: &Graph, z: &VertexSet) -> bool {
    if z.is_empty() || pieces(h, z).len() != 1 {
        return false;
    }
    let rest = h.vertex_set().difference(z);
    pieces(h, &rest).iter().all(|c| {
        if c.len() == 1 {
            return true;
        }
        let inside = |v: Vertex| h.neighbors(v).iter().filter(|&&w| c.contains(&w)).count();
        let edge_count: usize = c.iter().map(|&v| inside(v)).sum::<usize>() / 2;
        if edge_count != c.len() - 1 {
            return false;
        }
        c.iter().all(|&v| match inside(v) {
            1 => h.neighbors(v).iter().any(|&w| z.contains(w)),
            2 => h.degree(v) == 2,
            _ => false,
        })
    })
}

/// Smallest (then lexicographically first) connected core containing `required`.
pub fn brute_force_core(h: &Graph, required: &VertexSet) -> Result<VertexSet> {
    let n = h.n();
    if n > 15 {
        return Err(Error::TooLarge(format!("core search on {n} vertices")));
    }
    for size in required.len().max(1)..=n {
        let mut found = None;
        for_each_combination(n, size, |idx| {
            if found.is_some() {
                return;
            }
            let z = VertexSet::from_iter(n, idx.iter().copied());
            if required.is_subset(&z) && core_by_definition(h, &z) {
                found = Some(z);
            }
        });
        if let Some(z) = found {
            return Ok(z);
        }
    }
    Err(Error::NoCore)
}

/// Minimum-edge tree spanning `terminals`, via the smallest connected vertex
/// superset.
pub fn brute_force_steiner(g: &Graph, terminals: &VertexSet) -> Result<Vec<Edge>> {
    let n = g.n();
    if n > 12 {
        return Err(Error::TooLarge(format!("steiner search on {n} vertices")));
    }
    let others: Vec<Vertex> = g.vertices().filter(|&v| !terminals.contains(v)).collect();
    for extra in 0..=others.len() {
        let mut found = None;
        for_each_combination(others.len(), extra, |idx| {
            if found.is_some() {
                return;
            }
            let mut set = terminals.clone();
            for &i in idx {
                set.insert(others[i]);
            }
            if pieces(g, &set).len() == 1 {
                found = Some(set);
            }
        });
        if let Some(set) = found {
            return Ok(g.spanning_tree_of(&set));
        }
    }
    Err(Error::Disconnected)
}

use crate::error::{Error, Result};
use crate::graph::{contract_edges, is_cactus, Edge, Graph, Vertex, VertexSet};
use crate::universal::for_each_combination;

use super::ContractionSolution;

/// Walks from `start` to `second` and onward through degree-2 vertices of
/// `within`, returning the visited sequence if it covers `within`.
fn walk_cover(g: &Graph, within: &VertexSet, start: Vertex, second: Vertex) -> Option<Vec<Vertex>> {
    let mut seq = vec![start, second];
    let mut seen = VertexSet::from_iter(g.n(), [start, second]);
    while seq.len() < within.len() {
        let cur = *seq.last().unwrap();
        if g.degree(cur) != 2 {
            return None;
        }
        let next = g.neighbors(cur).iter().copied().find(|&w| !seen.contains(w))?;
        if !within.contains(next) {
            return None;
        }
        seen.insert(next);
        seq.push(next);
    }
    Some(seq)
}

/// Orders `q` as a cable path of `g` if possible.
fn as_cable_path(g: &Graph, q: &VertexSet) -> Option<Vec<Vertex>> {
    match q.len() {
        0 => return None,
        1 => return Some(q.to_vec()),
        _ => {}
    }
    let inner = |v: Vertex| g.neighbors(v).iter().filter(|&&w| q.contains(w)).count();
    // Internal vertices have both (and only) their neighbors inside q, so any
    // other vertex must be an end.
    let ends: Vec<Vertex> = q.iter().filter(|&v| g.degree(v) != 2 || inner(v) < 2).collect();
    if ends.len() > 2 {
        return None;
    }
    let starts: Vec<Vertex> = if ends.is_empty() { q.to_vec() } else { ends };
    for &s in &starts {
        for &t in g.neighbors(s).iter().filter(|&&t| q.contains(t)) {
            if let Some(seq) = walk_cover(g, q, s, t) {
                return Some(seq);
            }
        }
    }
    None
}

/// Splits `V(g)` into two cable paths, if possible. Endpoints of the two
/// paths are the only vertices that may have degree above two.
pub fn detect_two_cable_paths(g: &Graph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let n = g.n();
    if n < 2 || g.vertices().filter(|&v| g.degree(v) >= 3).count() > 4 {
        return None;
    }
    let all = g.vertex_set();
    for v1 in g.vertices() {
        // P = (v1): a single vertex.
        let p = VertexSet::singleton(n, v1);
        if let Some(q) = as_cable_path(g, &all.difference(&p)) {
            return Some((vec![v1], q));
        }
        for &v2 in g.neighbors(v1) {
            let mut seq = vec![v1, v2];
            let mut p = VertexSet::from_iter(n, [v1, v2]);
            loop {
                if p.len() < n {
                    if let Some(q) = as_cable_path(g, &all.difference(&p)) {
                        return Some((seq, q));
                    }
                }
                let cur = *seq.last().unwrap();
                if g.degree(cur) != 2 {
                    break;
                }
                match g.neighbors(cur).iter().copied().find(|&w| !p.contains(w)) {
                    Some(w) => {
                        p.insert(w);
                        seq.push(w);
                    }
                    None => break,
                }
            }
        }
    }
    None
}

/// Optimal solution for a graph made of two cable paths, by brute force over
/// edge sets of size at most `min(3, k)`; such graphs never need more than
/// three contractions.
pub fn solve_cycle_special(g: &Graph, k: usize) -> Result<Option<ContractionSolution>> {
    if detect_two_cable_paths(g).is_none() {
        return Err(Error::PremiseViolated("graph is not two cable paths"));
    }
    let edges: Vec<Edge> = g.edges().collect();
    for size in 0..=k.min(3) {
        let mut found = None;
        for_each_combination(edges.len(), size, |idx| {
            if found.is_some() {
                return;
            }
            let f: Vec<Edge> = idx.iter().map(|&i| edges[i]).collect();
            let (q, _) = contract_edges(g, &f).expect("edges come from the graph");
            if is_cactus(&q).expect("contraction keeps connectivity") {
                found = Some(f);
            }
        });
        if let Some(f) = found {
            return ContractionSolution::new(g, &f).map(Some);
        }
    }
    debug_assert!(k < 3, "two-cable-path graph needed more than three contractions");
    Ok(None)
}

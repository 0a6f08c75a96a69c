#![allow(dead_code)]

use std::collections::HashSet;

use cactus_contraction::graph::{blocks, Graph, Vertex};

/// All connected graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        let g = Graph::from_edges(n, edges.iter().copied()).unwrap();
        if !g.is_connected() {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<_> = edges
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                e.sort_unstable();
                e
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(g);
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Cactus test by explicit cycle enumeration: every edge on at most one cycle.
pub fn cactus_by_cycles(g: &Graph) -> bool {
    let n = g.n();
    let mut cycles: HashSet<Vec<(Vertex, Vertex)>> = HashSet::new();
    fn extend(
        g: &Graph,
        start: Vertex,
        path: &mut Vec<Vertex>,
        cycles: &mut HashSet<Vec<(Vertex, Vertex)>>,
    ) {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                let mut edges: Vec<_> = path
                    .windows(2)
                    .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
                    .collect();
                edges.push((last.min(start), last.max(start)));
                edges.sort_unstable();
                cycles.insert(edges);
            } else if w > start && !path.contains(&w) {
                path.push(w);
                extend(g, start, path, cycles);
                path.pop();
            }
        }
    }
    for s in 0..n {
        extend(g, s, &mut vec![s], &mut cycles);
    }
    let mut used = HashSet::new();
    cycles.iter().flatten().all(|e| used.insert(*e))
}

pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && blocks(g).map(|d| d.blocks.len() == 1).unwrap_or(false)
}

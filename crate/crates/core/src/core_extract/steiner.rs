use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{Edge, Graph, Vertex, VertexSet};

const INF: u32 = u32::MAX;

#[derive(Clone, Copy)]
enum Back {
    None,
    Terminal,
    Split(usize),
    Step(Vertex),
}

/// Minimum-edge tree of `g` spanning `terminals`, or `None` when it needs more
/// than `budget` edges (or the terminals are not connected in `g`).
///
/// Dynamic program over (terminal subset, tree root) pairs; exponential only in
/// the number of terminals.
pub fn steiner_tree(g: &Graph, terminals: &VertexSet, budget: usize) -> Option<Vec<Edge>> {
    let t: Vec<Vertex> = terminals.iter().collect();
    if t.len() <= 1 {
        return Some(Vec::new());
    }
    let n = g.n();
    let full = (1usize << t.len()) - 1;
    let mut dp = vec![vec![INF; n]; full + 1];
    let mut back = vec![vec![Back::None; n]; full + 1];
    for (i, &v) in t.iter().enumerate() {
        dp[1 << i][v] = 0;
        back[1 << i][v] = Back::Terminal;
    }
    let mut heap = BinaryHeap::new();
    for s in 1..=full {
        // Merge two subtrees meeting at the same root.
        let mut a = (s - 1) & s;
        while a > 0 {
            let b = s ^ a;
            if a < b {
                for v in 0..n {
                    let (x, y) = (dp[a][v], dp[b][v]);
                    if x != INF && y != INF && x + y < dp[s][v] {
                        dp[s][v] = x + y;
                        back[s][v] = Back::Split(a);
                    }
                }
            }
            a = (a - 1) & s;
        }
        // Grow the root along edges.
        let row = &mut dp[s];
        heap.clear();
        heap.extend(
            row.iter()
                .enumerate()
                .filter(|(_, &d)| d != INF)
                .map(|(v, &d)| Reverse((d, v))),
        );
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > row[v] {
                continue;
            }
            for &w in g.neighbors(v) {
                if d + 1 < row[w] {
                    row[w] = d + 1;
                    back[s][w] = Back::Step(v);
                    heap.push(Reverse((d + 1, w)));
                }
            }
        }
    }
    let root = t[0];
    let cost = dp[full][root];
    if cost == INF || cost as usize > budget {
        return None;
    }
    let mut edges = Vec::with_capacity(cost as usize);
    let mut stack = vec![(full, root)];
    while let Some((s, v)) = stack.pop() {
        match back[s][v] {
            Back::Terminal => {}
            Back::Split(a) => {
                stack.push((a, v));
                stack.push((s ^ a, v));
            }
            Back::Step(u) => {
                edges.push(Edge::new(u, v));
                stack.push((s, u));
            }
            Back::None => unreachable!("steiner backpointer missing"),
        }
    }
    edges.sort_unstable();
    edges.dedup();
    debug_assert_eq!(edges.len(), cost as usize);
    Some(edges)
}

use super::{Graph, Vertex, VertexSet};
use crate::error::{Error, Result};

/// Whether the vertex sequence `p` is a cable path of `g`: every internal
/// vertex is adjacent to exactly its two neighbors on the sequence.
pub fn is_cable_path(g: &Graph, p: &[Vertex]) -> Result<bool> {
    if p.is_empty() {
        return Err(Error::NotAPath);
    }
    let mut seen = VertexSet::new(g.n());
    for &v in p {
        if v >= g.n() {
            return Err(Error::OutOfRange { vertex: v, n: g.n() });
        }
        if !seen.insert(v) {
            return Err(Error::NotAPath);
        }
    }
    if p.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::NotAPath);
    }
    Ok(p.windows(3).all(|w| {
        let mut expect = [w[0], w[2]];
        expect.sort_unstable();
        g.neighbors(w[1]) == expect
    }))
}

/// If `set` induces a path in `g` whose internal vertices have degree two in
/// `g`, returns its vertices in path order starting from the smaller end.
/// A single vertex counts as a (trivial) path.
pub fn induced_path_order(g: &Graph, set: &VertexSet) -> Option<Vec<Vertex>> {
    let len = set.len();
    if len == 0 {
        return None;
    }
    let inner_deg = |v: Vertex| g.neighbors(v).iter().filter(|&&w| set.contains(w)).count();
    let mut ends = Vec::new();
    for v in set.iter() {
        match inner_deg(v) {
            0 if len == 1 => ends.push(v),
            1 => ends.push(v),
            2 if g.degree(v) == 2 => {}
            _ => return None,
        }
    }
    if len == 1 {
        return Some(ends);
    }
    if ends.len() != 2 {
        return None;
    }
    let mut order = Vec::with_capacity(len);
    let mut prev = usize::MAX;
    let mut cur = ends[0];
    loop {
        order.push(cur);
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| w != prev && set.contains(w));
        match next {
            Some(w) if order.len() < len => {
                prev = cur;
                cur = w;
            }
            _ => break,
        }
    }
    // A cycle-free walk must cover the whole set exactly once.
    (order.len() == len && *order.last().unwrap() == ends[1]).then_some(order)
}

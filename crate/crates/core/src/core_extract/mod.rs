//! Minimum connected cores: the closure `X̂` of a monochromatic component, the
//! marking scheme, exact Steiner trees and the branching search.

mod steiner;

use crate::coloring::{Coloring, MonoComponents, BRIDGING};
use crate::graph::{components_after_removal, induced_path_order, Graph, Vertex, VertexSet};

pub use steiner::steiner_tree;

/// `X` plus every component of `g - X` that is a single vertex, or a cable
/// path of `g` whose two ends both have a neighbor in `X`.
pub fn hat_closure(g: &Graph, x: &VertexSet) -> VertexSet {
    let mut out = x.clone();
    for c in components_after_removal(g, x) {
        if c.len() == 1 || ends_touch(g, &c, x) {
            out.union_with(&c);
        }
    }
    out
}

/// `c` is an induced cable path of `g` and both of its ends have a neighbor in `z`.
fn ends_touch(g: &Graph, c: &VertexSet, z: &VertexSet) -> bool {
    let Some(order) = induced_path_order(g, c) else {
        return false;
    };
    let touches = |v: Vertex| g.neighbors(v).iter().any(|&w| z.contains(w));
    touches(order[0]) && touches(*order.last().unwrap())
}

/// Vertices of `x` that must survive in its core: neighbors of 5-colored
/// vertices, and neighbors of every other monochromatic component with at
/// least two vertices.
pub fn mark(g: &Graph, f: &Coloring, comps: &MonoComponents, x: &VertexSet) -> VertexSet {
    let mut marked = VertexSet::new(g.n());
    for y in g.set_neighborhood(x).iter() {
        if f.get(y) == BRIDGING {
            marked.union_with(&neighbors_in(g, y, x));
        }
    }
    for (_, y) in &comps.components {
        if y.len() >= 2 && y != x {
            for v in y.iter() {
                marked.union_with(&neighbors_in(g, v, x));
            }
        }
    }
    marked
}

fn neighbors_in(g: &Graph, v: Vertex, x: &VertexSet) -> VertexSet {
    VertexSet::from_iter(g.n(), g.neighbors(v).iter().copied().filter(|&w| x.contains(w)))
}

/// Whether `z` is a connected core of `h`: `h[z]` is connected and every
/// component of `h - z` is a single vertex or a cable path of `h` with both
/// ends adjacent to `z`.
pub fn is_core(h: &Graph, z: &VertexSet) -> bool {
    h.is_connected_set(z)
        && components_after_removal(h, z)
            .iter()
            .all(|c| c.len() == 1 || ends_touch(h, c, z))
}

#[derive(Clone, Debug)]
pub struct CoreInstance {
    pub h: Graph,
    pub required: VertexSet,
    /// Maximum number of vertices in the core.
    pub budget: usize,
}

struct Search<'a> {
    h: &'a Graph,
    budget: usize,
    best: Option<VertexSet>,
    leaves: usize,
}

impl Search<'_> {
    fn bound(&self) -> usize {
        self.best.as_ref().map_or(self.budget, |b| b.len())
    }

    fn offer(&mut self, z: VertexSet) {
        let better = match &self.best {
            None => true,
            Some(b) => z.len() < b.len() || (z.len() == b.len() && z.lex_cmp(b).is_lt()),
        };
        if better {
            self.best = Some(z);
        }
    }

    fn run(&mut self, mut z: VertexSet) {
        let h = self.h;
        loop {
            if z.len() > self.bound() {
                return;
            }
            // Reduction: a pendant vertex outside Z forces its neighbor in.
            let forced = h.vertices().find_map(|v| {
                if z.contains(v) || h.degree(v) != 1 {
                    return None;
                }
                let u = h.neighbors(v)[0];
                (!z.contains(u)).then_some(u)
            });
            match forced {
                Some(u) => {
                    z.insert(u);
                }
                None => break,
            }
        }
        if let Some((u, v, w)) = self.branch_triple(&z) {
            if z.len() >= self.bound() {
                return;
            }
            for pick in [u, v, w] {
                let mut next = z.clone();
                next.insert(pick);
                self.run(next);
            }
            return;
        }
        self.leaves += 1;
        if z.is_empty() {
            // Only a cycle or a single vertex has no forced vertex and no
            // branching triple; any one vertex is a core.
            z.insert(0);
        }
        if h.is_connected_set(&z) {
            self.offer(z);
            return;
        }
        let limit = self.bound().saturating_sub(1);
        if let Some(tree) = steiner_tree(h, &z, limit) {
            for e in tree {
                z.insert(e.0);
                z.insert(e.1);
            }
            self.offer(z);
        }
    }

    /// Lexicographically smallest path `(u, v, w)` in `h - z` with `deg(v) >= 3`.
    fn branch_triple(&self, z: &VertexSet) -> Option<(Vertex, Vertex, Vertex)> {
        let h = self.h;
        for u in h.vertices().filter(|&u| !z.contains(u)) {
            for &v in h.neighbors(u) {
                if z.contains(v) || h.degree(v) < 3 {
                    continue;
                }
                if let Some(&w) = h.neighbors(v).iter().find(|&&w| w != u && !z.contains(w)) {
                    return Some((u, v, w));
                }
            }
        }
        None
    }
}

/// A minimum connected core of `inst.h` containing `inst.required` with at
/// most `inst.budget` vertices; ties go to the lexicographically smallest set.
pub fn min_connected_core(inst: &CoreInstance) -> Option<VertexSet> {
    let h = &inst.h;
    if h.n() == 0 || inst.required.len() > inst.budget {
        return None;
    }
    let mut search = Search {
        h,
        budget: inst.budget,
        best: None,
        leaves: 0,
    };
    search.run(inst.required.clone());
    debug_assert!(
        search.leaves <= 3usize.saturating_pow(inst.budget as u32),
        "search tree exceeded 3^budget leaves"
    );
    let best = search.best?;
    debug_assert!(is_core(h, &best) && inst.required.is_subset(&best));
    (best.len() <= inst.budget).then_some(best)
}

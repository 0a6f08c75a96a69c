use super::{components_within, Edge, Graph, Vertex, VertexSet};
use crate::error::{Error, Result};

/// A partition of `V(G)` into connected parts together with the quotient graph.
///
/// Parts are ordered by their smallest vertex, so quotient vertex `i` is
/// canonically labeled by `parts[i][0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessStructure {
    pub parts: Vec<Vec<Vertex>>,
    pub part_of: Vec<usize>,
    pub quotient: Graph,
}

impl WitnessStructure {
    /// Validates and wraps a partition of `V(g)`.
    pub fn from_partition(g: &Graph, parts: Vec<Vec<Vertex>>) -> Result<WitnessStructure> {
        let n = g.n();
        let mut parts: Vec<Vec<Vertex>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::InvalidPartition("empty part"));
        }
        parts.sort_unstable();
        let mut part_of = vec![usize::MAX; n];
        for (i, p) in parts.iter().enumerate() {
            for &v in p {
                if v >= n {
                    return Err(Error::OutOfRange { vertex: v, n });
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition("parts overlap"));
                }
                part_of[v] = i;
            }
            if !g.is_connected_set(&VertexSet::from_iter(n, p.iter().copied())) {
                return Err(Error::InvalidPartition("part is not connected"));
            }
        }
        if part_of.contains(&usize::MAX) {
            return Err(Error::InvalidPartition("parts do not cover the graph"));
        }
        let quotient = Graph::from_edges(
            parts.len(),
            g.edges()
                .map(|Edge(u, v)| (part_of[u], part_of[v]))
                .filter(|(a, b)| a != b),
        )?;
        Ok(WitnessStructure {
            parts,
            part_of,
            quotient,
        })
    }

    /// Canonical label of quotient vertex `i`: the smallest original vertex.
    pub fn label(&self, i: usize) -> Vertex {
        self.parts[i][0]
    }

    pub fn is_big(&self, i: usize) -> bool {
        self.parts[i].len() >= 2
    }

    /// Indices of parts with at least two vertices.
    pub fn big_parts(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.parts.len()).filter(|&i| self.is_big(i))
    }

    /// Total number of edges in spanning trees of all parts.
    pub fn cost(&self) -> usize {
        self.parts.iter().map(|p| p.len() - 1).sum()
    }

    /// A spanning forest of `g` restricted to the parts, `cost()` edges.
    pub fn forest_edges(&self, g: &Graph) -> Vec<Edge> {
        let mut out = Vec::new();
        for p in self.parts.iter().filter(|p| p.len() >= 2) {
            out.extend(g.spanning_tree_of(&VertexSet::from_iter(g.n(), p.iter().copied())));
        }
        out.sort_unstable();
        out
    }
}

/// Contracts every edge of `f`. The parts are the components of `G[V(f)]`
/// (plus singletons); the quotient is simple.
pub fn contract_edges(g: &Graph, f: &[Edge]) -> Result<(Graph, WitnessStructure)> {
    let n = g.n();
    let mut sub = Vec::with_capacity(f.len());
    for &Edge(u, v) in f {
        if !g.has_edge(u, v) {
            return Err(Error::EdgeNotInGraph(u, v));
        }
        sub.push((u, v));
    }
    // Components of the spanning subgraph (V, f).
    let h = Graph::from_edges(n, sub)?;
    let parts = components_within(&h, &VertexSet::full(n))
        .into_iter()
        .map(|c| c.to_vec())
        .collect();
    let w = WitnessStructure::from_partition(g, parts)?;
    Ok((w.quotient.clone(), w))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// A maximal acyclic subset of `f` (greedy in the given order). Its size is
/// the number of contractions `f` actually performs.
pub fn spanning_forest(n: usize, f: &[Edge]) -> Vec<Edge> {
    let mut uf = UnionFind::new(n);
    f.iter().copied().filter(|e| uf.union(e.0, e.1)).collect()
}

//! Simple undirected graphs on dense vertex ids, plus the structural queries
//! the solver needs: contraction, block decomposition, cactus recognition and
//! cable paths.

mod blocks;
mod cable;
mod contract;
mod vertex_set;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use blocks::{blocks, is_cactus, Block, BlockDecomposition};
pub use cable::{induced_path_order, is_cable_path};
pub use contract::{contract_edges, spanning_forest, WitnessStructure};
pub use vertex_set::VertexSet;

pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Edge {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }
}

/// Immutable simple graph. Neighbor lists are sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a canonical simple graph. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in ascending `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| Edge(u, v))
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood of a set: `N(S) \ S`.
    pub fn set_neighborhood(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in set.iter() {
            for &w in self.neighbors(v) {
                if !set.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return false;
        }
        let comps = components_after_removal(self, &VertexSet::new(self.n()));
        comps.len() == 1
    }

    /// Whether `set` is nonempty and induces a connected subgraph.
    pub fn is_connected_set(&self, set: &VertexSet) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        let mut seen = VertexSet::new(self.n());
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if set.contains(w) && seen.insert(w) {
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == set.len()
    }

    /// Subgraph induced on `vertices` (taken in ascending order). Returns the
    /// subgraph and the map from its ids back to ids of `self`.
    pub fn induced(&self, vertices: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map: Vec<Vertex> = vertices.iter().collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); map.len()];
        let mut m = 0;
        for (i, &v) in map.iter().enumerate() {
            for &w in self.neighbors(v) {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                }
            }
            m += adj[i].len();
        }
        (Graph { adj, m: m / 2 }, map)
    }

    /// Edges of a BFS spanning tree of `G[set]`, rooted at the smallest member.
    /// `set` must be connected.
    pub fn spanning_tree_of(&self, set: &VertexSet) -> Vec<Edge> {
        let mut edges = Vec::new();
        let Some(root) = set.first() else {
            return edges;
        };
        let mut seen = VertexSet::new(self.n());
        seen.insert(root);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if set.contains(w) && seen.insert(w) {
                    edges.push(Edge::new(v, w));
                    queue.push_back(w);
                }
            }
        }
        edges.sort_unstable();
        edges
    }
}

/// Connected components of `g - removed`, ordered by smallest vertex.
pub fn components_after_removal(g: &Graph, removed: &VertexSet) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = removed.clone();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        let mut comp = VertexSet::new(n);
        seen.insert(s);
        comp.insert(s);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if seen.insert(w) {
                    comp.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Connected components of `G[within]`, ordered by smallest vertex.
pub fn components_within(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let removed = g.vertex_set().difference(within);
    components_after_removal(g, &removed)
}

use super::{Edge, Graph, Vertex, VertexSet};
use crate::error::{Error, Result};

/// One block: a maximal 2-connected subgraph, a bridge, or an isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted ascending.
    pub vertices: Vec<Vertex>,
    /// Sorted ascending.
    pub edges: Vec<Edge>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A block is a cycle iff it is 2-connected with as many edges as vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }

    /// Edge, cycle or lone vertex.
    pub fn is_cactus_block(&self) -> bool {
        self.edges.is_empty() || self.is_bridge() || self.is_cycle()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Ordered by sorted vertex list.
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
    /// Bipartite block/cut-vertex tree as `(block index, cut vertex)` pairs.
    pub block_tree: Vec<(usize, Vertex)>,
}

struct Frame {
    v: Vertex,
    parent: Vertex,
    next: usize,
}

/// Block decomposition of a connected graph (iterative Hopcroft-Tarjan).
pub fn blocks(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut found: Vec<Block> = Vec::new();
    if n == 1 {
        found.push(Block {
            vertices: vec![0],
            edges: vec![],
        });
    } else {
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut edge_stack: Vec<Edge> = Vec::new();
        let mut stack = vec![Frame {
            v: 0,
            parent: usize::MAX,
            next: 0,
        }];
        disc[0] = time;
        low[0] = time;
        time += 1;
        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            if frame.next < g.degree(v) {
                let w = g.neighbors(v)[frame.next];
                frame.next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push(Edge::new(v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if w != frame.parent && disc[w] < disc[v] {
                    edge_stack.push(Edge::new(v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(up) = stack.last() {
                    let u = up.v;
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let tree_edge = Edge::new(u, v);
                        let mut edges = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            edges.push(e);
                            if e == tree_edge {
                                break;
                            }
                        }
                        edges.sort_unstable();
                        let mut vertices: Vec<Vertex> =
                            edges.iter().flat_map(|e| [e.0, e.1]).collect();
                        vertices.sort_unstable();
                        vertices.dedup();
                        found.push(Block { vertices, edges });
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    let mut count = vec![0usize; n];
    for b in &found {
        for &v in &b.vertices {
            count[v] += 1;
        }
    }
    let cut_vertices = VertexSet::from_iter(n, (0..n).filter(|&v| count[v] >= 2));
    let mut block_tree = Vec::new();
    for (i, b) in found.iter().enumerate() {
        for &v in &b.vertices {
            if cut_vertices.contains(v) {
                block_tree.push((i, v));
            }
        }
    }
    Ok(BlockDecomposition {
        blocks: found,
        cut_vertices,
        block_tree,
    })
}

/// Connected graph whose every block is an edge or a cycle.
pub fn is_cactus(g: &Graph) -> Result<bool> {
    Ok(blocks(g)?.blocks.iter().all(Block::is_cactus_block))
}

//! Seeded generators: random cacti, planted contractible instances and random
//! connected graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{is_cactus, Edge, Graph, Vertex, WitnessStructure};

/// A graph with a known witness structure contracting to `target` using
/// `k` contractions.
#[derive(Clone, Debug)]
pub struct PlantedInstance {
    pub g: Graph,
    pub k: usize,
    pub planted: WitnessStructure,
    pub target: Graph,
}

impl PlantedInstance {
    /// Spanning-tree edges of the planted big parts.
    pub fn forest(&self) -> Vec<Edge> {
        self.planted.forest_edges(&self.g)
    }
}

/// A connected cactus on `n` vertices, grown by hanging edges and cycles of
/// length 3 to 6 off random existing vertices.
pub fn random_cactus(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "a cactus needs at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut count = 1;
    while count < n {
        let at = rng.gen_range(0..count);
        let room = n - count;
        let len = if room >= 2 && rng.gen_bool(0.5) {
            rng.gen_range(3..=6.min(room + 1))
        } else {
            2
        };
        // A block on `len` vertices: `at` plus `len - 1` fresh ones.
        let mut prev = at;
        for _ in 1..len {
            edges.push((prev, count));
            prev = count;
            count += 1;
        }
        if len >= 3 {
            edges.push((prev, at));
        }
    }
    let g = Graph::from_edges(n, edges).expect("generated edges are valid");
    debug_assert!(is_cactus(&g).unwrap());
    g
}

/// Blows up random vertices of the cactus `t` into connected blobs with `k`
/// spanning-tree edges in total, re-attaching every edge of `t` to random blob
/// members so that contracting the blobs gives back `t` exactly.
pub fn plant_contractible(t: &Graph, k: usize, seed: u64) -> Result<PlantedInstance> {
    if k == 0 {
        return Err(Error::PremiseViolated("planting needs k >= 1"));
    }
    if !is_cactus(t)? {
        return Err(Error::PremiseViolated("target must be a cactus"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nt = t.n();
    let blobs_wanted = rng.gen_range(1..=k.min(nt));
    // Random composition of k into `blobs_wanted` positive parts.
    let mut cuts: Vec<usize> = (1..k).collect();
    cuts.shuffle(&mut rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(blobs_wanted - 1).collect();
    cuts.sort_unstable();
    cuts.push(k);
    let mut sizes = Vec::with_capacity(blobs_wanted);
    let mut last = 0;
    for c in cuts {
        sizes.push(c - last);
        last = c;
    }
    let mut centers: Vec<Vertex> = (0..nt).collect();
    centers.shuffle(&mut rng);
    centers.truncate(blobs_wanted);

    let mut blob: Vec<Vec<Vertex>> = (0..nt).map(|v| vec![v]).collect();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut next = nt;
    for (&x, &s) in centers.iter().zip(&sizes) {
        for _ in 0..s {
            let parent = *blob[x].choose(&mut rng).unwrap();
            edges.push((parent, next));
            blob[x].push(next);
            next += 1;
        }
        // Occasionally thicken the blob beyond its spanning tree.
        if blob[x].len() >= 3 && rng.gen_bool(0.3) {
            let a = *blob[x].choose(&mut rng).unwrap();
            let b = *blob[x].choose(&mut rng).unwrap();
            if a != b {
                edges.push((a, b));
            }
        }
    }
    for Edge(x, y) in t.edges() {
        let a = *blob[x].choose(&mut rng).unwrap();
        let b = *blob[y].choose(&mut rng).unwrap();
        edges.push((a, b));
        if (blob[x].len() > 1 || blob[y].len() > 1) && rng.gen_bool(0.3) {
            let a = *blob[x].choose(&mut rng).unwrap();
            let b = *blob[y].choose(&mut rng).unwrap();
            edges.push((a, b));
        }
    }
    let g = Graph::from_edges(next, edges)?;
    let planted = WitnessStructure::from_partition(&g, blob)?;
    // Each blob keeps its original id as minimum, so part i is t's vertex i.
    assert_eq!(planted.quotient, *t, "planted quotient drifted from target");
    assert_eq!(planted.cost(), k);
    Ok(PlantedInstance {
        g,
        k,
        planted,
        target: t.clone(),
    })
}

/// A random connected graph: a random spanning tree plus every other pair
/// independently with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

mod common;

use cactus_contraction::generate::random_connected_graph;
use cactus_contraction::graph::{blocks, contract_edges, is_cactus, spanning_forest, Edge, Graph};
use proptest::prelude::*;

fn graph_and_edges() -> impl Strategy<Value = (Graph, Vec<Edge>)> {
    (2usize..=9, 0.1f64..0.7, any::<u64>(), any::<u64>()).prop_map(|(n, p, seed, pick)| {
        let g = random_connected_graph(n, p, seed);
        let f = g
            .edges()
            .enumerate()
            .filter(|(i, _)| pick >> (i % 64) & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        (g, f)
    })
}

proptest! {
    #[test]
    fn contraction_depends_only_on_the_partition((g, f) in graph_and_edges()) {
        let (q, w) = contract_edges(&g, &f).unwrap();
        let forest = spanning_forest(g.n(), &f);
        let (q2, w2) = contract_edges(&g, &forest).unwrap();
        prop_assert_eq!(&q, &q2);
        prop_assert_eq!(&w.parts, &w2.parts);
        prop_assert_eq!(q.n(), g.n() - forest.len());
        prop_assert_eq!(w.cost(), forest.len());
        prop_assert!(q.is_connected());
        let mut reversed = f.clone();
        reversed.reverse();
        prop_assert_eq!(contract_edges(&g, &reversed).unwrap().0, q);
    }

    #[test]
    fn blocks_partition_the_edges(n in 1usize..=10, p in 0.05f64..0.8, seed: u64) {
        let g = random_connected_graph(n, p, seed);
        let d = blocks(&g).unwrap();
        let mut all: Vec<Edge> = d.blocks.iter().flat_map(|b| b.edges.clone()).collect();
        all.sort_unstable();
        let expected: Vec<Edge> = g.edges().collect();
        prop_assert_eq!(all, expected);
        for v in g.vertices() {
            let holding = d.blocks.iter().filter(|b| b.vertices.contains(&v)).count();
            prop_assert_eq!(holding > 1, d.cut_vertices.contains(v));
        }
        prop_assert_eq!(d.block_tree.len() + 1, d.blocks.len() + d.cut_vertices.len());
    }
}

#[test]
fn cactus_recognition_matches_cycle_enumeration() {
    for n in 1..=6 {
        for g in common::connected_graphs(n) {
            assert_eq!(is_cactus(&g).unwrap(), common::cactus_by_cycles(&g), "{g:?}");
        }
    }
    for seed in 0..300 {
        let g = random_connected_graph(8, 0.25, seed);
        assert_eq!(is_cactus(&g).unwrap(), common::cactus_by_cycles(&g), "{g:?}");
    }
}

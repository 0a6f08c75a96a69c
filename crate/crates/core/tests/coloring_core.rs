use cactus_contraction::coloring::{
    is_compatible, proper_three_coloring, pull_back, random_coloring, refine, Coloring,
};
use cactus_contraction::core_extract::{hat_closure, is_core, min_connected_core, CoreInstance};
use cactus_contraction::generate::{plant_contractible, random_cactus, random_connected_graph};
use cactus_contraction::graph::{Edge, Graph, VertexSet};
use cactus_contraction::oracle::brute_force_core;
use proptest::prelude::*;

fn reversed(g: &Graph) -> Graph {
    let n = g.n();
    Graph::from_edges(n, g.edges().map(|Edge(u, v)| (n - 1 - u, n - 1 - v))).unwrap()
}

proptest! {
    #[test]
    fn refinement_is_a_fixpoint(n in 2usize..=10, p in 0.1f64..0.6, seed: u64, cseed: u64) {
        let g = random_connected_graph(n, p, seed);
        let f = random_coloring(&g, cseed);
        let r = refine(&g, &f);
        prop_assert_eq!(refine(&g, &r), r.clone());
        for v in g.vertices() {
            prop_assert!(r.get(v) == f.get(v) || r.get(v) >= 4);
        }
    }

    #[test]
    fn refinement_ignores_vertex_order(n in 2usize..=10, p in 0.1f64..0.6, seed: u64, cseed: u64) {
        let g = random_connected_graph(n, p, seed);
        let f = random_coloring(&g, cseed);
        let flip = |c: &Coloring| Coloring(c.0.iter().rev().copied().collect());
        let r = refine(&g, &f);
        let r_rev = refine(&reversed(&g), &flip(&f));
        prop_assert_eq!(flip(&r_rev), r);
    }
}

#[test]
fn pulled_back_colorings_are_compatible() {
    for seed in 0..100 {
        let t = random_cactus(3 + (seed % 8) as usize, seed);
        let p = plant_contractible(&t, 1 + (seed % 3) as usize, seed).unwrap();
        let f = pull_back(&p.planted, &proper_three_coloring(&p.target).unwrap());
        assert!(is_compatible(&p.g, &p.planted, &f).unwrap(), "seed {seed}");
    }
}

#[test]
fn cores_are_minimum_and_respect_budget() {
    for seed in 0..300u64 {
        let n = 2 + (seed % 8) as usize;
        let h = random_connected_graph(n, 0.3, seed);
        let required = VertexSet::from_iter(n, [(seed as usize * 7) % n]);
        let want = brute_force_core(&h, &required).unwrap();
        let at = |budget| {
            min_connected_core(&CoreInstance {
                h: h.clone(),
                required: required.clone(),
                budget,
            })
        };
        let got = at(n).unwrap();
        assert_eq!(got.len(), want.len(), "{h:?}");
        assert!(is_core(&h, &got) && required.is_subset(&got));
        assert_eq!(at(want.len()).map(|z| z.len()), Some(want.len()));
        assert_eq!(at(want.len() - 1), None);
    }
}

#[test]
fn hat_closure_contains_its_seed() {
    for seed in 0..100u64 {
        let g = random_connected_graph(9, 0.3, seed);
        let x = VertexSet::from_iter(9, g.neighbors(0).iter().copied().chain([0]));
        let hat = hat_closure(&g, &x);
        assert!(x.is_subset(&hat));
        assert!(g.is_connected_set(&hat));
    }
}

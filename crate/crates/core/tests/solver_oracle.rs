use cactus_contraction::generate::{plant_contractible, random_cactus, random_connected_graph};
use cactus_contraction::graph::{contract_edges, Edge, Graph};
use cactus_contraction::oracle::brute_force_min_contractions;
use cactus_contraction::solver::{solve, Mode, SolverConfig};

fn agree(g: &Graph, label: &str) {
    let opt = brute_force_min_contractions(g, 3).unwrap().optimum;
    let det = SolverConfig::deterministic();
    for k in 0..=3 {
        let got = solve(g, k, &det).unwrap();
        let want = opt.is_some_and(|o| o <= k);
        assert_eq!(got.is_some(), want, "{label}: k={k}, oracle={opt:?}, g={g:?}");
        if let Some(s) = got {
            assert!(s.certifies(g, k));
        }
    }
}

#[test]
fn random_graphs_match_oracle() {
    let seeds: u64 = std::env::var("SEEDS").ok().and_then(|s| s.parse().ok()).unwrap_or(150);
    for seed in 0..seeds {
        let n = 4 + (seed % 4) as usize;
        let p = [0.2, 0.35, 0.5][(seed % 3) as usize];
        agree(&random_connected_graph(n, p, seed), &format!("seed {seed}"));
    }
}

#[test]
fn planted_instances_solved() {
    let det = SolverConfig::deterministic();
    for seed in 0..40 {
        let t = random_cactus(4 + (seed % 8) as usize, seed);
        let k = 1 + (seed % 3) as usize;
        let p = plant_contractible(&t, k, seed).unwrap();
        let s = solve(&p.g, k, &det).unwrap();
        assert!(s.is_some_and(|s| s.certifies(&p.g, k)), "seed {seed}: {:?}", p.g);
    }
}

#[test]
fn answers_are_monotone_in_k() {
    let det = SolverConfig::deterministic();
    for seed in 0..60 {
        let g = random_connected_graph(7, 0.45, seed);
        let answers: Vec<bool> = (0..=4).map(|k| solve(&g, k, &det).unwrap().is_some()).collect();
        assert!(answers.windows(2).all(|w| w[0] <= w[1]), "seed {seed}: {answers:?}");
    }
}

#[test]
fn blocks_add_up() {
    // Two graphs glued at one vertex need the sum of their optima.
    let det = SolverConfig::deterministic();
    for seed in 0..30 {
        let a = random_connected_graph(5, 0.6, seed);
        let b = random_connected_graph(5, 0.6, seed + 1000);
        let edges = a
            .edges()
            .map(|Edge(u, v)| (u, v))
            .chain(b.edges().map(|Edge(u, v)| (u + 4, v + 4)));
        let g = Graph::from_edges(9, edges).unwrap();
        let oa = brute_force_min_contractions(&a, 4).unwrap().optimum.unwrap();
        let ob = brute_force_min_contractions(&b, 4).unwrap().optimum.unwrap();
        let total = oa + ob;
        assert!(solve(&g, total, &det).unwrap().is_some_and(|s| s.certifies(&g, total)));
        if total > 0 {
            assert!(solve(&g, total - 1, &det).unwrap().is_none(), "seed {seed}");
        }
    }
}

#[test]
fn randomized_mode_never_claims_too_much() {
    for seed in 0..200 {
        let g = random_connected_graph(6, 0.6, seed);
        let Some(opt) = brute_force_min_contractions(&g, 4).unwrap().optimum else {
            continue;
        };
        if opt == 0 {
            continue;
        }
        let cfg = SolverConfig {
            mode: Mode::Randomized,
            trials: Some(5),
            seed,
            ..Default::default()
        };
        assert!(solve(&g, opt - 1, &cfg).unwrap().is_none(), "seed {seed}");
    }
}

#[test]
fn planted_instances_within_oracle_budget() {
    for seed in 0..40 {
        let t = random_cactus(3 + (seed % 5) as usize, seed);
        let k = 1 + (seed % 2) as usize;
        let p = plant_contractible(&t, k, seed).unwrap();
        assert_eq!(p.g.n(), t.n() + k);
        assert!(p.g.is_connected());
        let (q, _) = contract_edges(&p.g, &p.forest()).unwrap();
        assert_eq!(q, t);
        let opt = brute_force_min_contractions(&p.g, k).unwrap().optimum;
        assert!(opt.is_some_and(|o| o <= k), "seed {seed}");
    }
}

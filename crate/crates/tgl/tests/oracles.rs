//! The library against brute-force enumeration on seeded random graphs.

mod common;

use common::checks;
use common::{suite_instance, PathOracle};
use rand::rngs::StdRng;
use rand::SeedableRng;

const INSTANCES: u64 = 300;

fn each_instance(check: impl Fn(&common::Instance, &PathOracle) -> checks::Check) {
    for seed in 0..INSTANCES {
        let inst = suite_instance(seed);
        let oracle = PathOracle::new(&inst.graph, inst.interval);
        if let Err(e) = check(&inst, &oracle) {
            panic!("instance {seed} {:?} in {}: {e}", inst.graph.edges(), inst.interval);
        }
    }
}

#[test]
fn distances_match_path_enumeration() {
    each_instance(checks::distances);
}

#[test]
fn diameter_matches_path_enumeration() {
    each_instance(checks::diameter);
}

#[test]
fn closeness_matches_path_enumeration() {
    each_instance(checks::closeness);
}

#[test]
fn efficiency_matches_path_enumeration() {
    each_instance(checks::efficiency);
}

#[test]
fn betweenness_matches_min_hop_path_counting() {
    each_instance(checks::betweenness);
}

#[test]
fn topk_equals_full_closeness_slice() {
    each_instance(|inst, _| checks::topk(inst));
}

#[test]
fn katz_matches_walk_enumeration() {
    for seed in 0..INSTANCES {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 6, 12, 12, (1, 3));
        let interval = common::random_interval(&mut rng, 12);
        for beta in [0.1, 0.5, 0.9] {
            if let Err(e) = checks::katz(&g, interval, beta) {
                panic!("instance {seed}: {e}");
            }
        }
    }
}

#[test]
fn metric_ranges_and_efficiency_identity() {
    each_instance(|inst, _| checks::metric_ranges(inst));
}

#[test]
fn time_shift_and_relabeling() {
    each_instance(|inst, _| {
        let n = inst.graph.num_vertices();
        let reversed: Vec<usize> = (0..n).rev().collect();
        checks::invariances(inst, 37, &reversed)
    });
}

#[test]
fn example_betweenness_spreads_hop_counts() {
    // Each reachable ordered pair distributes credit equal to its hop count.
    let g = common::example_graph();
    let all = tgl_core::TimeInterval::UNBOUNDED;
    let oracle = PathOracle::new(&g, all);
    let expected = oracle.betweenness(g.num_edges(), g.edges());
    let b = tgl::parallel::edge_betweenness(&g, all, 1_000).unwrap();
    assert!(common::all_close(&b.scores, &expected, common::TOL));
    let n = g.num_vertices();
    let hops: u64 = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .filter_map(|(u, v)| oracle.pair_distance(u, v, tgl_core::DistanceType::MinHops))
        .sum();
    let total: f64 = b.scores.iter().sum();
    assert!((total - hops as f64).abs() < 1e-12, "{total} vs {hops}");
}

//! Comparisons of the library against the oracles. Each returns a
//! description of the first mismatch found.

use tgl::parallel;
use tgl_core::centrality::{
    select_top_k, temporal_closeness, temporal_edge_betweenness, temporal_katz, topk_closeness, ClosenessOptions,
    KatzParams,
};
use tgl_core::distance::{temporal_diameter, TemporalDistances};
use tgl_core::metrics::{clustering_coefficients, local_topological_overlaps, node_burstiness, temporal_efficiency};
use tgl_core::repr::{IncidenceLists, TrsGraph, DEFAULT_LINE_GRAPH_BUDGET};
use tgl_core::{DistanceType, OrderedEdgeList, TimeInterval};

use super::{all_close, close, Instance, PathOracle, TOL};

pub type Check = Result<(), String>;

fn kinds_for(interval: TimeInterval) -> Vec<DistanceType> {
    DistanceType::ALL.into_iter().filter(|k| *k != DistanceType::LatestDeparture || interval.is_bounded()).collect()
}

fn representations(g: &OrderedEdgeList) -> (IncidenceLists, TrsGraph) {
    (IncidenceLists::from(g), TrsGraph::from_stream(g))
}

/// All five criteria from every source on all three representations.
pub fn distances(inst: &Instance, oracle: &PathOracle) -> Check {
    let g = &inst.graph;
    let (il, trs) = representations(g);
    let reps: [(&str, &dyn TemporalDistances); 3] = [("stream", g), ("ilists", &il), ("trs", &trs)];
    for kind in DistanceType::ALL {
        for s in 0..g.num_vertices() {
            let expected = oracle.distances(s, kind);
            for (name, rep) in reps {
                let got = rep.distances(s, kind, inst.interval).values;
                if got != expected {
                    return Err(format!("{kind} from {s} on {name}: got {got:?}, expected {expected:?}"));
                }
            }
        }
    }
    Ok(())
}

pub fn diameter(inst: &Instance, oracle: &PathOracle) -> Check {
    let g = &inst.graph;
    let (il, trs) = representations(g);
    for kind in kinds_for(inst.interval) {
        let expected = oracle.diameter(kind);
        let results = [
            temporal_diameter(g, kind, inst.interval),
            temporal_diameter(&il, kind, inst.interval),
            temporal_diameter(&trs, kind, inst.interval),
            parallel::diameter(&il, kind, inst.interval),
        ];
        for got in results {
            if got.as_ref().ok() != Some(&expected) {
                return Err(format!("{kind} diameter: got {got:?}, expected {expected:?}"));
            }
        }
    }
    Ok(())
}

pub fn closeness(inst: &Instance, oracle: &PathOracle) -> Check {
    let g = &inst.graph;
    let (il, trs) = representations(g);
    let options = ClosenessOptions::default();
    for kind in kinds_for(inst.interval) {
        let expected = oracle.closeness(kind, options.zero_distance_cap);
        let results = [
            temporal_closeness(g, kind, inst.interval, options),
            temporal_closeness(&il, kind, inst.interval, options),
            temporal_closeness(&trs, kind, inst.interval, options),
            parallel::closeness(g, kind, inst.interval, options),
        ];
        for got in results {
            let got = got.map_err(|e| format!("{kind} closeness failed: {e}"))?.scores;
            if !all_close(&got, &expected, TOL) {
                return Err(format!("{kind} closeness: got {got:?}, expected {expected:?}"));
            }
        }
    }
    Ok(())
}

pub fn efficiency(inst: &Instance, oracle: &PathOracle) -> Check {
    let g = &inst.graph;
    let n = g.num_vertices();
    let options = ClosenessOptions::default();
    for kind in kinds_for(inst.interval) {
        let got = temporal_efficiency(g, kind, inst.interval, options).map_err(|e| e.to_string())?;
        let par = parallel::efficiency(g, kind, inst.interval, options).map_err(|e| e.to_string())?;
        if got != par {
            return Err(format!("{kind} efficiency: sequential {got:?} differs from parallel {par:?}"));
        }
        let expected = (n >= 2).then(|| {
            let pairs: f64 = oracle.closeness(kind, options.zero_distance_cap).iter().sum();
            pairs / (n * (n - 1)) as f64
        });
        match (got, expected) {
            (None, None) => {}
            (Some(a), Some(b)) if close(a, b, TOL) => {}
            _ => return Err(format!("{kind} efficiency: got {got:?}, expected {expected:?}")),
        }
    }
    Ok(())
}

pub fn betweenness(inst: &Instance, oracle: &PathOracle) -> Check {
    let g = &inst.graph;
    let expected = oracle.betweenness(g.num_edges(), g.edges());
    let seq = temporal_edge_betweenness(g, inst.interval, DEFAULT_LINE_GRAPH_BUDGET).map_err(|e| e.to_string())?;
    let par = parallel::edge_betweenness(g, inst.interval, DEFAULT_LINE_GRAPH_BUDGET).map_err(|e| e.to_string())?;
    if seq.scores != par.scores {
        return Err(format!("betweenness: sequential {:?} differs from parallel {:?}", seq.scores, par.scores));
    }
    if !all_close(&seq.scores, &expected, TOL) {
        return Err(format!("betweenness: got {:?}, expected {expected:?}", seq.scores));
    }
    Ok(())
}

/// Top-k equals the ranked slice of full closeness for k in {1, n/2, n}.
pub fn topk(inst: &Instance) -> Check {
    let g = &inst.graph;
    let n = g.num_vertices();
    let il = IncidenceLists::from(g);
    let options = ClosenessOptions::default();
    let mut ks = vec![1, (n / 2).max(1), n];
    ks.dedup();
    for kind in [DistanceType::Fastest, DistanceType::MinTransitionSum, DistanceType::MinHops] {
        let full = temporal_closeness(g, kind, inst.interval, options).unwrap().scores;
        for &k in &ks {
            let expected = select_top_k(full.iter().copied().enumerate().collect(), k);
            let seq = topk_closeness(&il, k, kind, inst.interval, options).map_err(|e| e.to_string())?;
            let par = parallel::topk_closeness(&il, k, kind, inst.interval, options).map_err(|e| e.to_string())?;
            if seq != expected || par != expected {
                return Err(format!("{kind} top-{k}: sequential {seq:?}, parallel {par:?}, expected {expected:?}"));
            }
        }
    }
    Ok(())
}

pub fn katz(g: &OrderedEdgeList, interval: TimeInterval, beta: f64) -> Check {
    let expected = super::katz_by_walks(g, interval, beta);
    let got = temporal_katz(g, KatzParams { beta }, interval).map_err(|e| e.to_string())?.scores;
    if !all_close(&got, &expected, TOL) {
        return Err(format!("katz(beta={beta}): got {got:?}, expected {expected:?}"));
    }
    Ok(())
}

/// Overlap and clustering lie in [0, 1]; efficiency is mean closeness over
/// `n - 1` up to 1e-12.
pub fn metric_ranges(inst: &Instance) -> Check {
    let g = &inst.graph;
    for (name, values) in [
        ("overlap", local_topological_overlaps(g, inst.interval)),
        ("clustering", clustering_coefficients(g, inst.interval)),
    ] {
        if let Some(x) = values.iter().find(|x| !(0.0..=1.0).contains(*x)) {
            return Err(format!("{name} value {x} outside [0, 1]"));
        }
    }
    for u in 0..g.num_vertices() {
        if let Some(b) = node_burstiness(g, u, inst.interval) {
            if !(-1.0..=1.0).contains(&b) {
                return Err(format!("burstiness {b} of {u} outside [-1, 1]"));
            }
        }
    }
    let n = g.num_vertices();
    if n >= 2 {
        let options = ClosenessOptions::default();
        for kind in kinds_for(inst.interval) {
            let c = temporal_closeness(g, kind, inst.interval, options).unwrap().scores;
            let mean = c.iter().sum::<f64>() / n as f64;
            let e = temporal_efficiency(g, kind, inst.interval, options).unwrap().unwrap();
            if (e - mean / (n - 1) as f64).abs() > 1e-12 {
                return Err(format!("{kind} efficiency {e} is not mean closeness {mean} over n - 1"));
            }
        }
    }
    Ok(())
}

/// Shifting every timestamp (and the interval) by `delta` leaves durations,
/// costs, hop counts and all metrics unchanged and shifts earliest arrivals
/// and latest departures by `delta`. Relabeling permutes every per-vertex
/// result accordingly.
pub fn invariances(inst: &Instance, delta: u64, perm: &[usize]) -> Check {
    let g = &inst.graph;
    let n = g.num_vertices();
    let shifted = g.shift_times(delta);
    let shift = |t: u64| t + delta;
    let interval = match inst.interval.bounded_end() {
        Some(end) => TimeInterval::new(shift(inst.interval.start()), shift(end)).unwrap(),
        None => TimeInterval::from_start(shift(inst.interval.start())),
    };
    for kind in DistanceType::ALL {
        for s in 0..n {
            let a = g.distances(s, kind, inst.interval).values;
            let b = shifted.distances(s, kind, interval).values;
            let expected: Vec<_> = match kind {
                DistanceType::EarliestArrival => a.iter().map(|x| x.map(shift)).collect(),
                DistanceType::LatestDeparture => a
                    .iter()
                    .enumerate()
                    .map(|(v, x)| if v == s && !inst.interval.is_bounded() { *x } else { x.map(shift) })
                    .collect(),
                _ => a.clone(),
            };
            if b != expected {
                return Err(format!("{kind} from {s} after shifting by {delta}: {b:?} vs {expected:?}"));
            }
        }
    }
    let options = ClosenessOptions::default();
    for kind in kinds_for(inst.interval) {
        let a = temporal_closeness(g, kind, inst.interval, options).unwrap().scores;
        let b = temporal_closeness(&shifted, kind, interval, options).unwrap().scores;
        if a != b {
            return Err(format!("{kind} closeness changes under time shift: {a:?} vs {b:?}"));
        }
    }
    let metric_pairs = [
        (local_topological_overlaps(g, inst.interval), local_topological_overlaps(&shifted, interval)),
        (clustering_coefficients(g, inst.interval), clustering_coefficients(&shifted, interval)),
    ];
    for (a, b) in metric_pairs {
        if a != b {
            return Err(format!("metric changes under time shift: {a:?} vs {b:?}"));
        }
    }

    let relabeled = g.relabel(perm).map_err(|e| e.to_string())?;
    let permute = |values: &[f64]| {
        let mut out = vec![0.0; values.len()];
        for (v, x) in values.iter().enumerate() {
            out[perm[v]] = *x;
        }
        out
    };
    for kind in kinds_for(inst.interval) {
        let a = temporal_closeness(g, kind, inst.interval, options).unwrap().scores;
        let b = temporal_closeness(&relabeled, kind, inst.interval, options).unwrap().scores;
        if !all_close(&permute(&a), &b, 1e-12) {
            return Err(format!("{kind} closeness is not relabeling-equivariant"));
        }
        for s in 0..n {
            let a = g.distances(s, kind, inst.interval).values;
            let b = relabeled.distances(perm[s], kind, inst.interval).values;
            if (0..n).any(|v| a[v] != b[perm[v]]) {
                return Err(format!("{kind} distances from {s} are not relabeling-equivariant"));
            }
        }
    }
    let metrics = [
        (local_topological_overlaps(g, inst.interval), local_topological_overlaps(&relabeled, inst.interval)),
        (clustering_coefficients(g, inst.interval), clustering_coefficients(&relabeled, inst.interval)),
    ];
    for (a, b) in metrics {
        if !all_close(&permute(&a), &b, 1e-12) {
            return Err("metric is not relabeling-equivariant".to_string());
        }
    }
    Ok(())
}

//! Source-parallel drivers. Every function returns exactly what its
//! sequential counterpart in `tgl_core` returns, whatever the thread count.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use tgl_core::centrality::{
    betweenness_from_source, rank_order, select_top_k, vertex_closeness, BetweennessWorkspace, CentralityVector,
    ClosenessOptions, TopkSearch, BETWEENNESS_CHUNK,
};
use tgl_core::distance::{row_eccentricity, TemporalDistances};
use tgl_core::metrics::efficiency_from_closeness;
use tgl_core::repr::{IncidenceLists, LineGraph};
use tgl_core::{DistanceType, Error, OrderedEdgeList, Result, Time, TimeInterval, VertexId};

pub fn closeness<D: TemporalDistances + Sync + ?Sized>(
    graph: &D,
    kind: DistanceType,
    interval: TimeInterval,
    options: ClosenessOptions,
) -> Result<CentralityVector> {
    if kind == DistanceType::LatestDeparture && !interval.is_bounded() {
        return Err(Error::UnboundedInterval);
    }
    // Validates the options once with the sequential rules on an empty range.
    if !(options.zero_distance_cap.is_finite() && options.zero_distance_cap >= 0.0) {
        return Err(Error::InvalidParameter("zero-distance cap must be finite and non-negative"));
    }
    let scores = (0..graph.num_vertices())
        .into_par_iter()
        .map(|u| vertex_closeness(graph, u, kind, interval, options))
        .collect::<Result<Vec<_>>>()?;
    Ok(CentralityVector::new(format!("closeness({kind})"), interval, scores))
}

pub fn diameter<D: TemporalDistances + Sync + ?Sized>(
    graph: &D,
    kind: DistanceType,
    interval: TimeInterval,
) -> Result<Option<Time>> {
    if kind == DistanceType::LatestDeparture && !interval.is_bounded() {
        return Err(Error::UnboundedInterval);
    }
    let eccentricities = (0..graph.num_vertices())
        .into_par_iter()
        .map(|u| row_eccentricity(u, &graph.row(u, kind, interval), kind, interval))
        .collect::<Result<Vec<_>>>()?;
    Ok(eccentricities.into_iter().flatten().max())
}

pub fn efficiency<D: TemporalDistances + Sync + ?Sized>(
    graph: &D,
    kind: DistanceType,
    interval: TimeInterval,
    options: ClosenessOptions,
) -> Result<Option<f64>> {
    if graph.num_vertices() < 2 {
        return Ok(None);
    }
    let c = closeness(graph, kind, interval, options)?;
    Ok(Some(efficiency_from_closeness(&c.scores)))
}

/// Parallel top-k closeness. The shared threshold only ever grows, and a
/// source is skipped only when it is provably below the final k-th score, so
/// the result equals the sequential one.
pub fn topk_closeness(
    g: &IncidenceLists,
    k: usize,
    kind: DistanceType,
    interval: TimeInterval,
    options: ClosenessOptions,
) -> Result<Vec<(VertexId, f64)>> {
    let n = g.num_vertices();
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    TopkSearch::new(g, kind, interval, options)?;
    // Scores are non-negative, so their bit patterns order like the values
    // and a threshold of 0.0 prunes nothing.
    let threshold = AtomicU64::new(0f64.to_bits());
    let best: Mutex<Vec<(VertexId, f64)>> = Mutex::new(Vec::with_capacity(k + 1));
    let found = rank_order(g)
        .into_par_iter()
        .map_init(
            || TopkSearch::new(g, kind, interval, options).expect("validated above"),
            |search, u| {
                let theta = f64::from_bits(threshold.load(Ordering::Acquire));
                let score = search.bounded_closeness(u, theta)?;
                if let Some(score) = score {
                    let mut best = best.lock().expect("top-k lock poisoned");
                    best.push((u, score));
                    let kept = select_top_k(std::mem::take(&mut *best), k);
                    *best = kept;
                    if best.len() == k {
                        threshold.fetch_max(best[k - 1].1.to_bits(), Ordering::AcqRel);
                    }
                }
                Ok(score.map(|s| (u, s)))
            },
        )
        .collect::<Result<Vec<_>>>()?;
    Ok(select_top_k(found.into_iter().flatten().collect(), k))
}

/// Parallel edge betweenness; see
/// [`tgl_core::centrality::temporal_edge_betweenness`]. Partial sums use the
/// same source chunks and are added in the same order.
pub fn edge_betweenness(g: &OrderedEdgeList, interval: TimeInterval, budget: usize) -> Result<CentralityVector> {
    let (restricted, index) = g.restrict_with_index(interval);
    let dlg = LineGraph::with_budget(&restricted, budget)?;
    let sources: Vec<VertexId> = (0..g.num_vertices()).collect();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(BETWEENNESS_CHUNK)
        .map(|chunk| {
            let mut ws = BetweennessWorkspace::new(g.num_vertices(), &dlg);
            let mut acc = vec![0.0; dlg.num_nodes()];
            for &s in chunk {
                betweenness_from_source(&dlg, s, &mut ws, &mut acc);
            }
            acc
        })
        .collect();
    let mut scores = vec![0.0; g.num_edges()];
    for partial in &partials {
        for (i, x) in partial.iter().enumerate() {
            scores[index[i]] += x;
        }
    }
    Ok(CentralityVector::new("edge-betweenness".to_string(), interval, scores))
}

/// Per-vertex values computed in parallel, in id order.
pub fn per_vertex<T: Send>(n: usize, f: impl Fn(VertexId) -> T + Sync + Send) -> Vec<T> {
    (0..n).into_par_iter().map(f).collect()
}

use crate::centrality::{temporal_closeness, ClosenessOptions};
use crate::distance::TemporalDistances;
use crate::{DistanceType, Result, TimeInterval};

/// Mean harmonic reciprocal distance over ordered pairs `u != v`, equal to
/// the summed closeness divided by `n (n - 1)`. `None` when `n < 2`.
pub fn temporal_efficiency<D: TemporalDistances + ?Sized>(
    graph: &D,
    kind: DistanceType,
    interval: TimeInterval,
    options: ClosenessOptions,
) -> Result<Option<f64>> {
    let n = graph.num_vertices();
    if n < 2 {
        return Ok(None);
    }
    let closeness = temporal_closeness(graph, kind, interval, options)?;
    Ok(Some(efficiency_from_closeness(&closeness.scores)))
}

/// Summed closeness over `n (n - 1)`; callers ensure `n >= 2`.
pub fn efficiency_from_closeness(scores: &[f64]) -> f64 {
    let n = scores.len() as f64;
    scores.iter().sum::<f64>() / (n * (n - 1.0))
}

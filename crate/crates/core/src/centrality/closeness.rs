use alloc::format;
use alloc::vec::Vec;

use super::CentralityVector;
use crate::distance::{pair_distance, TemporalDistances};
use crate::{DistanceType, Error, Result, Time, TimeInterval, VertexId};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosenessOptions {
    /// Contribution of a reachable vertex `v != u` at pair distance zero.
    pub zero_distance_cap: f64,
}

impl Default for ClosenessOptions {
    fn default() -> Self {
        Self { zero_distance_cap: 1.0 }
    }
}

impl ClosenessOptions {
    /// Harmonic contribution of one reachable vertex at pair distance `d`.
    #[inline]
    pub fn contribution(&self, d: Time) -> f64 {
        if d == 0 {
            self.zero_distance_cap
        } else {
            1.0 / d as f64
        }
    }

    fn validate(&self) -> Result<()> {
        if self.zero_distance_cap.is_finite() && self.zero_distance_cap >= 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidParameter("zero-distance cap must be finite and non-negative"))
        }
    }
}

/// Harmonic closeness of every vertex, computed row by row.
pub fn temporal_closeness<D: TemporalDistances + ?Sized>(
    graph: &D,
    kind: DistanceType,
    interval: TimeInterval,
    options: ClosenessOptions,
) -> Result<CentralityVector> {
    options.validate()?;
    if kind == DistanceType::LatestDeparture && !interval.is_bounded() {
        return Err(Error::UnboundedInterval);
    }
    let scores = (0..graph.num_vertices())
        .map(|u| vertex_closeness(graph, u, kind, interval, options))
        .collect::<Result<Vec<_>>>()?;
    Ok(CentralityVector::new(format!("closeness({kind})"), interval, scores))
}

/// Harmonic closeness of a single vertex.
pub fn vertex_closeness<D: TemporalDistances + ?Sized>(
    graph: &D,
    u: VertexId,
    kind: DistanceType,
    interval: TimeInterval,
    options: ClosenessOptions,
) -> Result<f64> {
    let row = graph.row(u, kind, interval);
    harmonic_closeness(u, &row, kind, interval, options)
}

/// Sum of contributions over the reachable entries `v != u` of one row, in
/// vertex order.
pub fn harmonic_closeness(
    u: VertexId,
    row: &[Option<Time>],
    kind: DistanceType,
    interval: TimeInterval,
    options: ClosenessOptions,
) -> Result<f64> {
    let mut sum = 0.0;
    for (v, value) in row.iter().enumerate() {
        if v == u {
            continue;
        }
        if let Some(value) = value {
            sum += options.contribution(pair_distance(kind, *value, interval)?);
        }
    }
    Ok(sum)
}

//! Single-source temporal distances.
//!
//! Every [`DistanceType`] is available on three representations: the edge
//! stream ([`stream`]), incidence lists ([`ilists`]) and the time-respecting
//! static graph ([`trs`]). All of them compute walk optima; cutting cycles out
//! of a temporal walk never hurts any of the five criteria, so these equal the
//! optima over vertex-simple paths.
//!
//! Conventions shared by all implementations:
//! - earliest arrival reports absolute arrival times, `EA(s) = I.start`;
//! - latest departure is target based: `LD(u)` is the latest start at `u`
//!   that still reaches the target `z`, and `LD(z) = I.end`;
//! - fastest, minimum transition sum and minimum hops report `0` for the source;
//! - `None` marks unreachable vertices.

pub mod ilists;
mod pareto;
pub mod stream;
pub mod trs;

use alloc::vec::Vec;
use core::fmt;

use crate::repr::{IncidenceLists, TrsGraph};
use crate::{DistanceType, Error, OrderedEdgeList, Result, TemporalEdge, TemporalPath, Time, TimeInterval, VertexId};

/// Distances of one single-source (or single-target) run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: VertexId,
    pub kind: DistanceType,
    pub interval: TimeInterval,
    pub values: Vec<Option<Time>>,
}

impl DistanceVector {
    pub(crate) fn new(source: VertexId, kind: DistanceType, interval: TimeInterval, values: Vec<Option<Time>>) -> Self {
        Self { source, kind, interval, values }
    }

    #[inline]
    pub fn get(&self, v: VertexId) -> Option<Time> {
        self.values[v]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn reachable_count(&self) -> usize {
        self.values.iter().filter(|d| d.is_some()).count()
    }
}

/// `vertex distance` lines, `inf` for unreachable vertices.
impl fmt::Display for DistanceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, d) in self.values.iter().enumerate() {
            match d {
                Some(d) => writeln!(f, "{v} {d}")?,
                None => writeln!(f, "{v} inf")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct PathLabel {
    pub edge: TemporalEdge,
    pub parent: Option<usize>,
}

/// Back pointers of a stream run, enough to rebuild one optimal path per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredecessorInfo {
    kind: DistanceType,
    root: VertexId,
    labels: Vec<PathLabel>,
    best: Vec<Option<usize>>,
}

impl PredecessorInfo {
    pub(crate) fn new(kind: DistanceType, root: VertexId, n: usize) -> Self {
        Self { kind, root, labels: Vec::new(), best: alloc::vec![None; n] }
    }

    pub(crate) fn push(&mut self, edge: TemporalEdge, parent: Option<usize>) -> usize {
        self.labels.push(PathLabel { edge, parent });
        self.labels.len() - 1
    }

    pub(crate) fn set_best(&mut self, v: VertexId, label: usize) {
        self.best[v] = Some(label);
    }

    pub(crate) fn best(&self, v: VertexId) -> Option<usize> {
        self.best[v]
    }

    pub fn kind(&self) -> DistanceType {
        self.kind
    }

    /// An optimal path for `v`: from the source to `v`, or for latest departure
    /// from `v` to the target. `None` when `v` is unreachable or is the root.
    pub fn reconstruct_path(&self, v: VertexId) -> Option<TemporalPath> {
        if v == self.root {
            return None;
        }
        let mut edges = Vec::new();
        let mut cursor = self.best[v];
        while let Some(i) = cursor {
            let label = &self.labels[i];
            edges.push(label.edge);
            cursor = label.parent;
            debug_assert!(edges.len() <= self.labels.len());
        }
        if edges.is_empty() {
            return None;
        }
        if self.kind != DistanceType::LatestDeparture {
            edges.reverse();
        }
        let walk = TemporalPath::new(edges).ok()?;
        if walk.is_valid() {
            Some(walk)
        } else {
            walk.remove_cycles().ok()
        }
    }
}

/// Distances plus the back pointers that produced them.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub distances: DistanceVector,
    pub predecessors: PredecessorInfo,
}

/// Temporal distance queries over one representation.
pub trait TemporalDistances {
    fn num_vertices(&self) -> usize;

    /// Distances from `source`; for [`DistanceType::LatestDeparture`],
    /// latest departures towards `source`.
    fn distances(&self, source: VertexId, kind: DistanceType, interval: TimeInterval) -> DistanceVector;

    /// Optimal raw values from `u` to every vertex. Unlike [`Self::distances`],
    /// latest departure is source based here: entry `v` is the latest start
    /// at `u` that reaches `v`, and entry `u` is `interval.end()`.
    fn row(&self, u: VertexId, kind: DistanceType, interval: TimeInterval) -> Vec<Option<Time>>;
}

impl TemporalDistances for OrderedEdgeList {
    fn num_vertices(&self) -> usize {
        OrderedEdgeList::num_vertices(self)
    }

    fn distances(&self, source: VertexId, kind: DistanceType, interval: TimeInterval) -> DistanceVector {
        stream::search(self, source, kind, interval).distances
    }

    fn row(&self, u: VertexId, kind: DistanceType, interval: TimeInterval) -> Vec<Option<Time>> {
        match kind {
            DistanceType::LatestDeparture => stream::fastest_profile(self, u, interval).latest_start,
            _ => self.distances(u, kind, interval).values,
        }
    }
}

impl TemporalDistances for IncidenceLists {
    fn num_vertices(&self) -> usize {
        IncidenceLists::num_vertices(self)
    }

    fn distances(&self, source: VertexId, kind: DistanceType, interval: TimeInterval) -> DistanceVector {
        match kind {
            DistanceType::EarliestArrival => ilists::earliest_arrival(self, source, interval),
            DistanceType::LatestDeparture => ilists::latest_departure(self, source, interval),
            DistanceType::Fastest => ilists::fastest(self, source, interval),
            DistanceType::MinTransitionSum => ilists::min_transition_sum(self, source, interval),
            DistanceType::MinHops => ilists::min_hops(self, source, interval),
        }
    }

    fn row(&self, u: VertexId, kind: DistanceType, interval: TimeInterval) -> Vec<Option<Time>> {
        match kind {
            DistanceType::LatestDeparture => ilists::fastest_profile(self, u, interval).latest_start,
            _ => self.distances(u, kind, interval).values,
        }
    }
}

impl TemporalDistances for TrsGraph {
    fn num_vertices(&self) -> usize {
        TrsGraph::num_vertices(self)
    }

    fn distances(&self, source: VertexId, kind: DistanceType, interval: TimeInterval) -> DistanceVector {
        match kind {
            DistanceType::EarliestArrival => trs::earliest_arrival(self, source, interval),
            DistanceType::LatestDeparture => trs::latest_departure(self, source, interval),
            DistanceType::Fastest => trs::fastest(self, source, interval),
            DistanceType::MinTransitionSum => trs::min_transition_sum(self, source, interval),
            DistanceType::MinHops => trs::min_hops(self, source, interval),
        }
    }

    fn row(&self, u: VertexId, kind: DistanceType, interval: TimeInterval) -> Vec<Option<Time>> {
        match kind {
            DistanceType::LatestDeparture => trs::fastest_profile(self, u, interval).latest_start,
            _ => self.distances(u, kind, interval).values,
        }
    }
}

/// Per-vertex result of a fastest-path profile run from one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastestProfile {
    /// Minimum duration to each vertex.
    pub duration: Vec<Option<Time>>,
    /// Latest start at the source that still reaches each vertex.
    pub latest_start: Vec<Option<Time>>,
}

impl FastestProfile {
    pub(crate) fn new(n: usize, source: VertexId, interval: TimeInterval) -> Self {
        let mut profile = Self { duration: alloc::vec![None; n], latest_start: alloc::vec![None; n] };
        profile.duration[source] = Some(0);
        profile.latest_start[source] = Some(interval.end());
        profile
    }

    #[inline]
    pub(crate) fn record(&mut self, v: VertexId, start: Time, arrival: Time) {
        let d = arrival - start;
        if self.duration[v].is_none_or(|best| d < best) {
            self.duration[v] = Some(d);
        }
        if self.latest_start[v].is_none_or(|best| start > best) {
            self.latest_start[v] = Some(start);
        }
    }
}

/// Converts an optimal raw value from a [`TemporalDistances::row`] into the
/// non-negative pair distance used by closeness, efficiency and diameter:
/// elapsed time `EA - I.start` for earliest arrival, remaining time
/// `I.end - LD` for latest departure, the value itself otherwise.
pub fn pair_distance(kind: DistanceType, value: Time, interval: TimeInterval) -> Result<Time> {
    match kind {
        DistanceType::EarliestArrival => Ok(value - interval.start()),
        DistanceType::LatestDeparture => match interval.bounded_end() {
            Some(end) => Ok(end - value),
            None => Err(Error::UnboundedInterval),
        },
        _ => Ok(value),
    }
}

/// Largest pair distance over ordered reachable pairs `u != v`; `None` when no
/// pair is reachable.
pub fn temporal_diameter<D: TemporalDistances + ?Sized>(
    graph: &D,
    kind: DistanceType,
    interval: TimeInterval,
) -> Result<Option<Time>> {
    if kind == DistanceType::LatestDeparture && !interval.is_bounded() {
        return Err(Error::UnboundedInterval);
    }
    let mut diameter = None;
    for u in 0..graph.num_vertices() {
        let row = graph.row(u, kind, interval);
        diameter = max_option(diameter, row_eccentricity(u, &row, kind, interval)?);
    }
    Ok(diameter)
}

/// Largest pair distance from `u` within one row.
pub fn row_eccentricity(
    u: VertexId,
    row: &[Option<Time>],
    kind: DistanceType,
    interval: TimeInterval,
) -> Result<Option<Time>> {
    let mut best = None;
    for (v, value) in row.iter().enumerate() {
        if v == u {
            continue;
        }
        if let Some(value) = value {
            best = max_option(best, Some(pair_distance(kind, *value, interval)?));
        }
    }
    Ok(best)
}

fn max_option(a: Option<Time>, b: Option<Time>) -> Option<Time> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

#[inline]
pub(crate) fn check_source(n: usize, s: VertexId) {
    assert!(s < n, "vertex {s} out of range for graph with {n} vertices");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use alloc::vec;

    #[test]
    fn diameter_examples() {
        let g = example_graph();
        assert_eq!(temporal_diameter(&g, DistanceType::Fastest, TimeInterval::UNBOUNDED), Ok(Some(7)));
        let single = OrderedEdgeList::new(2, vec![TemporalEdge::new(0, 1, 5, 2)]).unwrap();
        assert_eq!(temporal_diameter(&single, DistanceType::MinHops, TimeInterval::UNBOUNDED), Ok(Some(1)));
        let empty = OrderedEdgeList::empty(3);
        assert_eq!(temporal_diameter(&empty, DistanceType::Fastest, TimeInterval::UNBOUNDED), Ok(None));
        assert_eq!(
            temporal_diameter(&g, DistanceType::LatestDeparture, TimeInterval::UNBOUNDED),
            Err(Error::UnboundedInterval)
        );
    }

    #[test]
    fn distance_vector_text() {
        let g = example_graph();
        let dv = g.distances(C, DistanceType::EarliestArrival, TimeInterval::UNBOUNDED);
        assert_eq!(alloc::format!("{dv}"), "0 inf\n1 7\n2 0\n3 9\n");
    }

    #[test]
    fn pair_distance_conventions() {
        let i = TimeInterval::new(2, 20).unwrap();
        assert_eq!(pair_distance(DistanceType::EarliestArrival, 9, i), Ok(7));
        assert_eq!(pair_distance(DistanceType::LatestDeparture, 9, i), Ok(11));
        assert_eq!(pair_distance(DistanceType::MinHops, 3, i), Ok(3));
    }
}

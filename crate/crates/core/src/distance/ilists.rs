//! Label-setting algorithms over per-vertex incidence lists.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::ops::ControlFlow;

use super::pareto::ParetoFront;
use super::stream::edge_weight;
use super::{check_source, DistanceVector, FastestProfile};
use crate::repr::IncidenceLists;
use crate::{DistanceType, Time, TimeInterval, VertexId};

/// Dijkstra-style search in increasing arrival time.
pub fn earliest_arrival(g: &IncidenceLists, source: VertexId, interval: TimeInterval) -> DistanceVector {
    let n = g.num_vertices();
    check_source(n, source);
    let mut arrival: Vec<Option<Time>> = alloc::vec![None; n];
    arrival[source] = Some(interval.start());
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((interval.start(), source)));
    while let Some(Reverse((at, x))) = heap.pop() {
        if arrival[x] != Some(at) {
            continue;
        }
        for e in g.departures_from(x, at) {
            let reach = e.arrival();
            if reach <= interval.end() && arrival[e.v].is_none_or(|a| reach < a) {
                arrival[e.v] = Some(reach);
                heap.push(Reverse((reach, e.v)));
            }
        }
    }
    DistanceVector::new(source, DistanceType::EarliestArrival, interval, arrival)
}

/// Backward search over in-lists in decreasing departure time.
pub fn latest_departure(g: &IncidenceLists, target: VertexId, interval: TimeInterval) -> DistanceVector {
    let n = g.num_vertices();
    check_source(n, target);
    let mut departure: Vec<Option<Time>> = alloc::vec![None; n];
    departure[target] = Some(interval.end());
    let mut heap = BinaryHeap::new();
    heap.push((interval.end(), target));
    while let Some((at, y)) = heap.pop() {
        if departure[y] != Some(at) {
            continue;
        }
        for e in g.arrivals_until(y, at) {
            if e.t >= interval.start() && departure[e.u].is_none_or(|d| e.t > d) {
                departure[e.u] = Some(e.t);
                heap.push((e.t, e.u));
            }
        }
    }
    DistanceVector::new(target, DistanceType::LatestDeparture, interval, departure)
}

pub fn fastest(g: &IncidenceLists, source: VertexId, interval: TimeInterval) -> DistanceVector {
    let profile = fastest_profile(g, source, interval);
    DistanceVector::new(source, DistanceType::Fastest, interval, profile.duration)
}

/// Fastest paths by one earliest-arrival search per distinct departure time
/// of the source, latest departure first.
///
/// A search only expands vertices whose arrival improves on every later
/// start: a later start that arrives no later is never slower, so everything
/// behind such a vertex has been settled already.
pub fn fastest_profile(g: &IncidenceLists, source: VertexId, interval: TimeInterval) -> FastestProfile {
    let n = g.num_vertices();
    check_source(n, source);
    let mut profile = FastestProfile::new(n, source, interval);
    let mut arrival: Vec<Option<Time>> = alloc::vec![None; n];
    let mut heap = BinaryHeap::new();

    let departures = g.out_edges(source);
    let usable = |e: &crate::TemporalEdge| interval.admits(e) && e.v != source;
    for run in departures.chunk_by(|a, b| a.t == b.t).rev() {
        let start = run[0].t;
        if start < interval.start() {
            break;
        }
        heap.clear();
        for e in run.iter().filter(|e| usable(e)) {
            let reach = e.arrival();
            if arrival[e.v].is_none_or(|a| reach < a) {
                arrival[e.v] = Some(reach);
                profile.record(e.v, start, reach);
                heap.push(Reverse((reach, e.v)));
            }
        }
        while let Some(Reverse((at, x))) = heap.pop() {
            if arrival[x] != Some(at) {
                continue;
            }
            for e in g.departures_from(x, at).iter().filter(|e| usable(e)) {
                let reach = e.arrival();
                if arrival[e.v].is_none_or(|a| reach < a) {
                    arrival[e.v] = Some(reach);
                    profile.record(e.v, start, reach);
                    heap.push(Reverse((reach, e.v)));
                }
            }
        }
    }
    profile
}

pub fn min_transition_sum(g: &IncidenceLists, source: VertexId, interval: TimeInterval) -> DistanceVector {
    let mut search = LabelSearch::new(g, Objective::TransitionSum, interval);
    search.run(source, |_, _| ControlFlow::Continue(()));
    DistanceVector::new(source, DistanceType::MinTransitionSum, interval, search.into_distances())
}

pub fn min_hops(g: &IncidenceLists, source: VertexId, interval: TimeInterval) -> DistanceVector {
    let mut search = LabelSearch::new(g, Objective::Hops, interval);
    search.run(source, |_, _| ControlFlow::Continue(()));
    DistanceVector::new(source, DistanceType::MinHops, interval, search.into_distances())
}

/// Fastest paths by duration-ordered label setting.
pub fn fastest_label_setting(g: &IncidenceLists, source: VertexId, interval: TimeInterval) -> DistanceVector {
    let mut search = LabelSearch::new(g, Objective::Duration, interval);
    search.run(source, |_, _| ControlFlow::Continue(()));
    DistanceVector::new(source, DistanceType::Fastest, interval, search.into_distances())
}

/// Quantity minimized by [`LabelSearch`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Objective {
    Duration,
    TransitionSum,
    Hops,
}

impl Objective {
    pub(crate) fn for_kind(kind: DistanceType) -> Option<Self> {
        match kind {
            DistanceType::Fastest => Some(Objective::Duration),
            DistanceType::MinTransitionSum => Some(Objective::TransitionSum),
            DistanceType::MinHops => Some(Objective::Hops),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct QueuedLabel {
    value: Time,
    arrival: Time,
    vertex: VertexId,
    /// Cost so far, or `Time::MAX - start` for durations.
    badness: u64,
}

/// Multi-label search with per-vertex Pareto fronts over `(arrival, badness)`.
///
/// Labels leave the queue in `(value, arrival, vertex)` order and the value
/// never decreases along an extension, so the first label popped at a vertex
/// carries its optimal value.
pub(crate) struct LabelSearch<'a> {
    g: &'a IncidenceLists,
    objective: Objective,
    interval: TimeInterval,
    fronts: Vec<ParetoFront>,
    dist: Vec<Option<Time>>,
    touched: Vec<VertexId>,
    heap: BinaryHeap<Reverse<QueuedLabel>>,
}

impl<'a> LabelSearch<'a> {
    pub(crate) fn new(g: &'a IncidenceLists, objective: Objective, interval: TimeInterval) -> Self {
        let n = g.num_vertices();
        Self {
            g,
            objective,
            interval,
            fronts: alloc::vec![ParetoFront::default(); n],
            dist: alloc::vec![None; n],
            touched: Vec::new(),
            heap: BinaryHeap::new(),
        }
    }

    pub(crate) fn distances(&self) -> &[Option<Time>] {
        &self.dist
    }

    pub(crate) fn into_distances(self) -> Vec<Option<Time>> {
        self.dist
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.fronts[v].clear();
            self.dist[v] = None;
        }
        self.touched.clear();
        self.heap.clear();
    }

    fn offer(&mut self, vertex: VertexId, arrival: Time, start: Time, cost: Time) {
        let (value, badness) = match self.objective {
            Objective::Duration => (arrival - start, Time::MAX - start),
            _ => (cost, cost),
        };
        if self.fronts[vertex].insert(arrival, badness, 0) {
            self.touched.push(vertex);
            self.heap.push(Reverse(QueuedLabel { value, arrival, vertex, badness }));
        }
    }

    /// Runs from `source`. `on_settle(vertex, value)` fires once per vertex,
    /// in non-decreasing value order; breaking stops the search early.
    pub(crate) fn run(&mut self, source: VertexId, mut on_settle: impl FnMut(VertexId, Time) -> ControlFlow<()>) {
        check_source(self.g.num_vertices(), source);
        self.reset();
        self.dist[source] = Some(0);
        self.touched.push(source);
        let interval = self.interval;
        let weight = edge_weight(match self.objective {
            Objective::Hops => DistanceType::MinHops,
            _ => DistanceType::MinTransitionSum,
        });

        for e in self.g.out_edges(source) {
            if interval.admits(e) && e.v != source {
                self.offer(e.v, e.arrival(), e.t, weight(e));
            }
        }
        while let Some(Reverse(label)) = self.heap.pop() {
            let QueuedLabel { value, arrival, vertex, badness } = label;
            if !self.fronts[vertex].contains(arrival, badness) {
                continue;
            }
            if self.dist[vertex].is_none() {
                self.dist[vertex] = Some(value);
                if on_settle(vertex, value).is_break() {
                    return;
                }
            }
            let (start, cost) = match self.objective {
                Objective::Duration => (Time::MAX - badness, 0),
                _ => (0, badness),
            };
            let g = self.g;
            for e in g.departures_from(vertex, arrival) {
                if interval.admits(e) && e.v != source {
                    self.offer(e.v, e.arrival(), start, cost + weight(e));
                }
            }
        }
    }
}

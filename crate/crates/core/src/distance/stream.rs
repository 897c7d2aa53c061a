//! One-pass algorithms over the chronologically ordered edge stream.
//!
//! Edges are consumed one timestamp at a time. Edges with positive transition
//! time cannot enable anything at their own timestamp, but zero-transition
//! edges can chain within it, so they are closed over first.

use alloc::vec::Vec;

use super::pareto::ParetoFront;
use super::{check_source, DistanceVector, FastestProfile, PredecessorInfo, SearchResult};
use crate::{DistanceType, OrderedEdgeList, TemporalEdge, Time, TimeInterval, VertexId};

pub fn earliest_arrival(g: &OrderedEdgeList, source: VertexId, interval: TimeInterval) -> DistanceVector {
    earliest_arrival_search(g, source, interval).distances
}

/// Latest departure from every vertex towards `target`.
pub fn latest_departure(g: &OrderedEdgeList, target: VertexId, interval: TimeInterval) -> DistanceVector {
    latest_departure_search(g, target, interval).distances
}

pub fn fastest(g: &OrderedEdgeList, source: VertexId, interval: TimeInterval) -> DistanceVector {
    fastest_search(g, source, interval).0.distances
}

pub fn min_transition_sum(g: &OrderedEdgeList, source: VertexId, interval: TimeInterval) -> DistanceVector {
    min_cost_search(g, source, interval, DistanceType::MinTransitionSum).distances
}

pub fn min_hops(g: &OrderedEdgeList, source: VertexId, interval: TimeInterval) -> DistanceVector {
    min_cost_search(g, source, interval, DistanceType::MinHops).distances
}

/// Minimum durations and latest starts from `source` in one pass.
pub fn fastest_profile(g: &OrderedEdgeList, source: VertexId, interval: TimeInterval) -> FastestProfile {
    fastest_search(g, source, interval).1
}

/// Distances together with back pointers for path reconstruction.
pub fn search(g: &OrderedEdgeList, source: VertexId, kind: DistanceType, interval: TimeInterval) -> SearchResult {
    match kind {
        DistanceType::EarliestArrival => earliest_arrival_search(g, source, interval),
        DistanceType::LatestDeparture => latest_departure_search(g, source, interval),
        DistanceType::Fastest => fastest_search(g, source, interval).0,
        DistanceType::MinTransitionSum | DistanceType::MinHops => min_cost_search(g, source, interval, kind),
    }
}

fn earliest_arrival_search(g: &OrderedEdgeList, s: VertexId, interval: TimeInterval) -> SearchResult {
    let n = g.num_vertices();
    check_source(n, s);
    let mut arrival: Vec<Option<Time>> = alloc::vec![None; n];
    arrival[s] = Some(interval.start());
    let mut pred = PredecessorInfo::new(DistanceType::EarliestArrival, s, n);
    let mut zero: Vec<TemporalEdge> = Vec::new();
    let mut queue: Vec<VertexId> = Vec::new();

    for group in g.time_groups() {
        let t = group[0].t;
        if t < interval.start() {
            continue;
        }
        if t > interval.end() {
            break;
        }
        let active = |arrival: &[Option<Time>], x: VertexId| arrival[x].is_some_and(|a| a <= t);
        let parent = |pred: &PredecessorInfo, u: VertexId| if u == s { None } else { pred.best(u) };

        zero.clear();
        zero.extend(group.iter().filter(|e| e.lambda == 0 && interval.admits(e)));
        if !zero.is_empty() {
            zero.sort_by_key(|e| e.u);
            queue.clear();
            queue.extend(zero.iter().map(|e| e.u).filter(|&u| active(&arrival, u)));
            queue.dedup();
            while let Some(x) = queue.pop() {
                let lo = zero.partition_point(|e| e.u < x);
                for e in zero[lo..].iter().take_while(|e| e.u == x) {
                    if !active(&arrival, e.v) {
                        arrival[e.v] = Some(t);
                        let label = pred.push(*e, parent(&pred, e.u));
                        pred.set_best(e.v, label);
                        queue.push(e.v);
                    }
                }
            }
        }
        for e in group.iter().filter(|e| e.lambda > 0 && interval.admits(e)) {
            if active(&arrival, e.u) && arrival[e.v].is_none_or(|a| e.arrival() < a) {
                arrival[e.v] = Some(e.arrival());
                let label = pred.push(*e, parent(&pred, e.u));
                pred.set_best(e.v, label);
            }
        }
    }
    SearchResult {
        distances: DistanceVector::new(s, DistanceType::EarliestArrival, interval, arrival),
        predecessors: pred,
    }
}

fn latest_departure_search(g: &OrderedEdgeList, z: VertexId, interval: TimeInterval) -> SearchResult {
    let n = g.num_vertices();
    check_source(n, z);
    let mut departure: Vec<Option<Time>> = alloc::vec![None; n];
    departure[z] = Some(interval.end());
    let mut pred = PredecessorInfo::new(DistanceType::LatestDeparture, z, n);
    let mut zero: Vec<TemporalEdge> = Vec::new();
    let mut queue: Vec<VertexId> = Vec::new();

    for group in g.time_groups().rev() {
        let t = group[0].t;
        if t > interval.end() {
            continue;
        }
        if t < interval.start() {
            break;
        }
        let ready = |dep: &[Option<Time>], x: VertexId, at: Time| dep[x].is_some_and(|d| d >= at);
        let child = |pred: &PredecessorInfo, v: VertexId| if v == z { None } else { pred.best(v) };

        for e in group.iter().filter(|e| e.lambda > 0 && interval.admits(e)) {
            if ready(&departure, e.v, e.arrival()) && !ready(&departure, e.u, t) {
                departure[e.u] = Some(t);
                let label = pred.push(*e, child(&pred, e.v));
                pred.set_best(e.u, label);
            }
        }
        zero.clear();
        zero.extend(group.iter().filter(|e| e.lambda == 0 && interval.admits(e)));
        if !zero.is_empty() {
            zero.sort_by_key(|e| e.v);
            queue.clear();
            queue.extend(zero.iter().map(|e| e.v).filter(|&v| ready(&departure, v, t)));
            queue.dedup();
            while let Some(y) = queue.pop() {
                let lo = zero.partition_point(|e| e.v < y);
                for e in zero[lo..].iter().take_while(|e| e.v == y) {
                    if !ready(&departure, e.u, t) {
                        departure[e.u] = Some(t);
                        let label = pred.push(*e, child(&pred, e.v));
                        pred.set_best(e.u, label);
                        queue.push(e.u);
                    }
                }
            }
        }
    }
    SearchResult {
        distances: DistanceVector::new(z, DistanceType::LatestDeparture, interval, departure),
        predecessors: pred,
    }
}

/// Feeds admitted edges to `relax` timestamp by timestamp. Zero-transition
/// edges of a timestamp are replayed until `relax` reports no change.
fn scan_groups(g: &OrderedEdgeList, interval: TimeInterval, mut relax: impl FnMut(&TemporalEdge) -> bool) {
    for group in g.time_groups() {
        let t = group[0].t;
        if t < interval.start() {
            continue;
        }
        if t > interval.end() {
            break;
        }
        if group.iter().any(|e| e.lambda == 0) {
            loop {
                let mut changed = false;
                for e in group.iter().filter(|e| e.lambda == 0 && interval.admits(e)) {
                    changed |= relax(e);
                }
                if !changed {
                    break;
                }
            }
        }
        for e in group.iter().filter(|e| e.lambda > 0 && interval.admits(e)) {
            relax(e);
        }
    }
}

/// Per-vertex fronts of `(arrival, start)` pairs; a pair is kept unless some
/// other pair starts no earlier and arrives no later.
fn fastest_search(g: &OrderedEdgeList, s: VertexId, interval: TimeInterval) -> (SearchResult, FastestProfile) {
    let n = g.num_vertices();
    check_source(n, s);
    let mut fronts: Vec<ParetoFront> = alloc::vec![ParetoFront::default(); n];
    let mut profile = FastestProfile::new(n, s, interval);
    let mut pred = PredecessorInfo::new(DistanceType::Fastest, s, n);

    scan_groups(g, interval, |e| {
        if e.v == s {
            return false;
        }
        let (start, parent) = if e.u == s {
            (e.t, None)
        } else {
            match fronts[e.u].best_until(e.t) {
                Some(entry) => (Time::MAX - entry.badness, Some(entry.label)),
                None => return false,
            }
        };
        let arrival = e.arrival();
        let label = pred.labels.len();
        if !fronts[e.v].insert(arrival, Time::MAX - start, label) {
            return false;
        }
        pred.push(*e, parent);
        let improves = profile.duration[e.v].is_none_or(|d| arrival - start < d);
        profile.record(e.v, start, arrival);
        if improves {
            pred.set_best(e.v, label);
        }
        true
    });

    let distances = DistanceVector::new(s, DistanceType::Fastest, interval, profile.duration.clone());
    (SearchResult { distances, predecessors: pred }, profile)
}

/// Per-vertex fronts of `(arrival, cost)` labels for minimum transition sum
/// (`cost += λ`) or minimum hops (`cost += 1`).
fn min_cost_search(g: &OrderedEdgeList, s: VertexId, interval: TimeInterval, kind: DistanceType) -> SearchResult {
    let n = g.num_vertices();
    check_source(n, s);
    let weight = edge_weight(kind);
    let mut fronts: Vec<ParetoFront> = alloc::vec![ParetoFront::default(); n];
    let mut dist: Vec<Option<Time>> = alloc::vec![None; n];
    dist[s] = Some(0);
    let mut pred = PredecessorInfo::new(kind, s, n);

    scan_groups(g, interval, |e| {
        if e.v == s {
            return false;
        }
        let (cost, parent) = if e.u == s {
            (0, None)
        } else {
            match fronts[e.u].best_until(e.t) {
                Some(entry) => (entry.badness, Some(entry.label)),
                None => return false,
            }
        };
        let cost = cost + weight(e);
        let label = pred.labels.len();
        if !fronts[e.v].insert(e.arrival(), cost, label) {
            return false;
        }
        pred.push(*e, parent);
        if dist[e.v].is_none_or(|d| cost < d) {
            dist[e.v] = Some(cost);
            pred.set_best(e.v, label);
        }
        true
    });

    SearchResult { distances: DistanceVector::new(s, kind, interval, dist), predecessors: pred }
}

pub(crate) fn edge_weight(kind: DistanceType) -> fn(&TemporalEdge) -> Time {
    match kind {
        DistanceType::MinHops => |_| 1,
        _ => |e| e.lambda,
    }
}

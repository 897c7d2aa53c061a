//! Distances on the time-respecting static graph.
//!
//! A node `(v, τ)` stands for "at `v`, ready to leave at `τ`". Reaching it is
//! pure reachability, so earliest arrival, latest departure and the fastest
//! profile are sweeps over reached nodes; the cost-based criteria run Dijkstra
//! with zero-weight chain edges. A cross edge may land on a node later than
//! the real arrival `t + λ`, so reported arrivals always use the edge itself.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::stream::edge_weight;
use super::{check_source, DistanceVector, FastestProfile};
use crate::repr::TrsGraph;
use crate::{DistanceType, Time, TimeInterval, VertexId};

pub fn earliest_arrival(g: &TrsGraph, source: VertexId, interval: TimeInterval) -> DistanceVector {
    let n = g.num_vertices();
    check_source(n, source);
    let mut arrival: Vec<Option<Time>> = alloc::vec![None; n];
    arrival[source] = Some(interval.start());
    let mut reached = alloc::vec![false; g.num_nodes()];
    let mut stack = Vec::new();
    if let Some(first) = g.first_node_at_or_after(source, interval.start()) {
        reached[first] = true;
        stack.push(first);
    }
    while let Some(id) = stack.pop() {
        if let Some(next) = g.chain_successor(id) {
            if !reached[next] {
                reached[next] = true;
                stack.push(next);
            }
        }
        for c in g.cross_from(id) {
            let reach = c.edge.arrival();
            if reach > interval.end() || c.edge.v == source {
                continue;
            }
            if arrival[c.edge.v].is_none_or(|a| reach < a) {
                arrival[c.edge.v] = Some(reach);
            }
            if !reached[c.target] {
                reached[c.target] = true;
                stack.push(c.target);
            }
        }
    }
    DistanceVector::new(source, DistanceType::EarliestArrival, interval, arrival)
}

/// Backward sweep: a node is marked once leaving from it can still reach
/// `target` inside the interval.
pub fn latest_departure(g: &TrsGraph, target: VertexId, interval: TimeInterval) -> DistanceVector {
    let n = g.num_vertices();
    check_source(n, target);
    let mut departure: Vec<Option<Time>> = alloc::vec![None; n];
    departure[target] = Some(interval.end());
    let mut good = alloc::vec![false; g.num_nodes()];
    let mut stack = Vec::new();

    let mark = |id: usize, good: &mut [bool], stack: &mut Vec<usize>, departure: &mut [Option<Time>]| {
        let node = g.node(id);
        if good[id] || node.vertex == target || node.time < interval.start() {
            return;
        }
        good[id] = true;
        stack.push(id);
        if departure[node.vertex].is_none_or(|d| node.time > d) {
            departure[node.vertex] = Some(node.time);
        }
    };

    for id in g.node_range(target) {
        for c in g.cross_into(id) {
            if c.edge.v == target && c.edge.arrival() <= interval.end() {
                mark(c.source, &mut good, &mut stack, &mut departure);
            }
        }
    }
    while let Some(id) = stack.pop() {
        if let Some(prev) = g.chain_predecessor(id) {
            mark(prev, &mut good, &mut stack, &mut departure);
        }
        for c in g.cross_into(id) {
            if c.edge.arrival() <= interval.end() {
                mark(c.source, &mut good, &mut stack, &mut departure);
            }
        }
    }
    DistanceVector::new(target, DistanceType::LatestDeparture, interval, departure)
}

pub fn fastest(g: &TrsGraph, source: VertexId, interval: TimeInterval) -> DistanceVector {
    let profile = fastest_profile(g, source, interval);
    DistanceVector::new(source, DistanceType::Fastest, interval, profile.duration)
}

/// One forward sweep per departure node of the source, latest first. Nodes
/// reached from a later start are never expanded again.
pub fn fastest_profile(g: &TrsGraph, source: VertexId, interval: TimeInterval) -> FastestProfile {
    let n = g.num_vertices();
    check_source(n, source);
    let mut profile = FastestProfile::new(n, source, interval);
    let mut reached = alloc::vec![false; g.num_nodes()];
    let mut stack = Vec::new();

    for start_node in g.node_range(source).rev() {
        let start = g.node(start_node).time;
        if start < interval.start() {
            break;
        }
        if g.cross_from(start_node).is_empty() {
            continue;
        }
        reached[start_node] = true;
        stack.push(start_node);
        while let Some(id) = stack.pop() {
            if id != start_node {
                if let Some(next) = g.chain_successor(id) {
                    if !reached[next] {
                        reached[next] = true;
                        stack.push(next);
                    }
                }
            }
            for c in g.cross_from(id) {
                let reach = c.edge.arrival();
                if reach > interval.end() || c.edge.v == source {
                    continue;
                }
                profile.record(c.edge.v, start, reach);
                if !reached[c.target] {
                    reached[c.target] = true;
                    stack.push(c.target);
                }
            }
        }
    }
    profile
}

pub fn min_transition_sum(g: &TrsGraph, source: VertexId, interval: TimeInterval) -> DistanceVector {
    min_cost(g, source, interval, DistanceType::MinTransitionSum)
}

pub fn min_hops(g: &TrsGraph, source: VertexId, interval: TimeInterval) -> DistanceVector {
    min_cost(g, source, interval, DistanceType::MinHops)
}

/// Dijkstra over nodes: chain edges weigh 0, cross edges `λ` (or 1 for hops).
fn min_cost(g: &TrsGraph, source: VertexId, interval: TimeInterval, kind: DistanceType) -> DistanceVector {
    let n = g.num_vertices();
    check_source(n, source);
    let weight = edge_weight(kind);
    let mut dist: Vec<Option<Time>> = alloc::vec![None; n];
    dist[source] = Some(0);
    let mut node_dist: Vec<Option<Time>> = alloc::vec![None; g.num_nodes()];
    let mut heap = BinaryHeap::new();
    if let Some(first) = g.first_node_at_or_after(source, interval.start()) {
        node_dist[first] = Some(0);
        heap.push(Reverse((0, first)));
    }
    while let Some(Reverse((d, id))) = heap.pop() {
        if node_dist[id] != Some(d) {
            continue;
        }
        let mut relax = |target: usize, cost: Time, heap: &mut BinaryHeap<Reverse<(Time, usize)>>| {
            if node_dist[target].is_none_or(|old| cost < old) {
                node_dist[target] = Some(cost);
                heap.push(Reverse((cost, target)));
            }
        };
        if let Some(next) = g.chain_successor(id) {
            relax(next, d, &mut heap);
        }
        for c in g.cross_from(id) {
            if c.edge.arrival() > interval.end() || c.edge.v == source {
                continue;
            }
            let cost = d + weight(&c.edge);
            if dist[c.edge.v].is_none_or(|old| cost < old) {
                dist[c.edge.v] = Some(cost);
            }
            relax(c.target, cost, &mut heap);
        }
    }
    DistanceVector::new(source, kind, interval, dist)
}

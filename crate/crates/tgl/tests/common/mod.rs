//! Brute-force oracles and random instances shared by the integration tests.
//!
//! The oracles enumerate temporal paths and walks explicitly and never call
//! the search algorithms under test.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tgl_core::{OrderedEdgeList, TemporalEdge, Time, TimeInterval, VertexId};

pub const TOL: f64 = 1e-9;

/// One random instance of the oracle suite.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: OrderedEdgeList,
    pub interval: TimeInterval,
}

/// Random graph with at most `max_n` vertices and `max_m` input edges,
/// timestamps in `0..=max_t` and transition times in `lambdas`.
pub fn random_graph(
    rng: &mut StdRng,
    max_n: usize,
    max_m: usize,
    max_t: Time,
    lambdas: (Time, Time),
) -> OrderedEdgeList {
    // Sizes lean to the upper half so that most instances chain edges.
    let n = rng.random_range(2.max(max_n / 2)..=max_n);
    let m = rng.random_range(max_m / 2..=max_m);
    let edges: Vec<TemporalEdge> = (0..m)
        .map(|_| {
            TemporalEdge::new(
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..=max_t),
                rng.random_range(lambdas.0..=lambdas.1),
            )
        })
        .collect();
    if rng.random_bool(0.25) {
        // Keep the undirected expansion within the edge budget.
        let half = edges.len().div_ceil(2);
        OrderedEdgeList::new_undirected(n, edges[..half].to_vec()).unwrap()
    } else {
        OrderedEdgeList::new(n, edges).unwrap()
    }
}

pub fn random_interval(rng: &mut StdRng, max_t: Time) -> TimeInterval {
    match rng.random_range(0..3) {
        0 => TimeInterval::UNBOUNDED,
        1 => TimeInterval::from_start(rng.random_range(0..=max_t / 2)),
        _ => {
            let a = rng.random_range(0..=max_t / 2);
            TimeInterval::new(a, rng.random_range(a..=max_t + 4)).unwrap()
        }
    }
}

/// The suite's instance number `seed`: n ≤ 8, m ≤ 20, t ≤ 12, λ ∈ 0..=3.
pub fn suite_instance(seed: u64) -> Instance {
    let mut rng = StdRng::seed_from_u64(seed);
    let graph = random_graph(&mut rng, 8, 20, 12, (0, 3));
    let interval = random_interval(&mut rng, 12);
    Instance { graph, interval }
}

/// Every vertex-simple temporal path inside `interval`, as edge indices.
pub fn simple_paths(g: &OrderedEdgeList, interval: TimeInterval) -> Vec<Vec<usize>> {
    let edges = g.edges();
    let mut out = Vec::new();
    let mut visited = vec![false; g.num_vertices()];
    let mut stack = Vec::new();
    fn extend(
        edges: &[TemporalEdge],
        interval: TimeInterval,
        visited: &mut [bool],
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = edges[*stack.last().unwrap()];
        for (i, e) in edges.iter().enumerate() {
            if e.u == last.v && e.t >= last.arrival() && interval.admits(e) && !visited[e.v] {
                visited[e.v] = true;
                stack.push(i);
                out.push(stack.clone());
                extend(edges, interval, visited, stack, out);
                stack.pop();
                visited[e.v] = false;
            }
        }
    }
    for (i, e) in edges.iter().enumerate() {
        if !interval.admits(e) || e.u == e.v {
            continue;
        }
        visited[e.u] = true;
        visited[e.v] = true;
        stack.push(i);
        out.push(stack.clone());
        extend(edges, interval, &mut visited, &mut stack, &mut out);
        stack.pop();
        visited[e.u] = false;
        visited[e.v] = false;
    }
    out
}

/// Optimal values per ordered pair, from explicit path enumeration.
pub struct PathOracle {
    pub n: usize,
    pub interval: TimeInterval,
    pub paths: Vec<Vec<usize>>,
    pub earliest_arrival: Vec<Vec<Option<Time>>>,
    /// Latest start at the row vertex that still reaches the column vertex.
    pub latest_start: Vec<Vec<Option<Time>>>,
    pub fastest: Vec<Vec<Option<Time>>>,
    pub transition_sum: Vec<Vec<Option<Time>>>,
    pub hops: Vec<Vec<Option<Time>>>,
}

fn keep_min(slot: &mut Option<Time>, x: Time) {
    if slot.is_none_or(|y| x < y) {
        *slot = Some(x);
    }
}

fn keep_max(slot: &mut Option<Time>, x: Time) {
    if slot.is_none_or(|y| x > y) {
        *slot = Some(x);
    }
}

impl PathOracle {
    pub fn new(g: &OrderedEdgeList, interval: TimeInterval) -> Self {
        let n = g.num_vertices();
        let table = |diag: Time| {
            let mut t = vec![vec![None; n]; n];
            for (v, row) in t.iter_mut().enumerate() {
                row[v] = Some(diag);
            }
            t
        };
        let mut o = PathOracle {
            n,
            interval,
            paths: simple_paths(g, interval),
            earliest_arrival: table(interval.start()),
            latest_start: table(interval.end()),
            fastest: table(0),
            transition_sum: table(0),
            hops: table(0),
        };
        let edges = g.edges();
        for p in &o.paths {
            let first = edges[p[0]];
            let last = edges[*p.last().unwrap()];
            let (s, z) = (first.u, last.v);
            keep_min(&mut o.earliest_arrival[s][z], last.arrival());
            keep_max(&mut o.latest_start[s][z], first.t);
            keep_min(&mut o.fastest[s][z], last.arrival() - first.t);
            keep_min(&mut o.transition_sum[s][z], p.iter().map(|&i| edges[i].lambda).sum());
            keep_min(&mut o.hops[s][z], p.len() as Time);
        }
        o
    }

    /// What `distances(source, kind, interval)` must return.
    pub fn distances(&self, source: VertexId, kind: tgl_core::DistanceType) -> Vec<Option<Time>> {
        use tgl_core::DistanceType::*;
        match kind {
            EarliestArrival => self.earliest_arrival[source].clone(),
            LatestDeparture => (0..self.n).map(|v| self.latest_start[v][source]).collect(),
            Fastest => self.fastest[source].clone(),
            MinTransitionSum => self.transition_sum[source].clone(),
            MinHops => self.hops[source].clone(),
        }
    }

    /// Pair distance from `u` to `v` as used by closeness and diameter.
    pub fn pair_distance(&self, u: VertexId, v: VertexId, kind: tgl_core::DistanceType) -> Option<Time> {
        use tgl_core::DistanceType::*;
        match kind {
            EarliestArrival => self.earliest_arrival[u][v].map(|a| a - self.interval.start()),
            LatestDeparture => self.latest_start[u][v].map(|s| self.interval.end() - s),
            Fastest => self.fastest[u][v],
            MinTransitionSum => self.transition_sum[u][v],
            MinHops => self.hops[u][v],
        }
    }

    pub fn closeness(&self, kind: tgl_core::DistanceType, cap: f64) -> Vec<f64> {
        (0..self.n)
            .map(|u| {
                (0..self.n)
                    .filter(|&v| v != u)
                    .filter_map(|v| self.pair_distance(u, v, kind))
                    .map(|d| if d == 0 { cap } else { 1.0 / d as f64 })
                    .sum()
            })
            .collect()
    }

    pub fn diameter(&self, kind: tgl_core::DistanceType) -> Option<Time> {
        (0..self.n)
            .flat_map(|u| (0..self.n).filter(move |&v| v != u).map(move |v| (u, v)))
            .filter_map(|(u, v)| self.pair_distance(u, v, kind))
            .max()
    }

    /// Edge betweenness: every ordered pair `(s, z)` spreads one unit evenly
    /// over its minimum-hop paths, and each path credits all of its edges.
    pub fn betweenness(&self, m: usize, edges: &[TemporalEdge]) -> Vec<f64> {
        let mut scores = vec![0.0; m];
        for s in 0..self.n {
            for z in 0..self.n {
                if s == z {
                    continue;
                }
                let Some(h) = self.hops[s][z] else { continue };
                let shortest: Vec<&Vec<usize>> = self
                    .paths
                    .iter()
                    .filter(|p| edges[p[0]].u == s && edges[*p.last().unwrap()].v == z && p.len() as Time == h)
                    .collect();
                let share = 1.0 / shortest.len() as f64;
                for p in shortest {
                    for &i in p {
                        scores[i] += share;
                    }
                }
            }
        }
        scores
    }
}

/// Katz scores by enumerating every temporal walk inside `interval`.
/// Requires positive transition times so that walks are finite.
pub fn katz_by_walks(g: &OrderedEdgeList, interval: TimeInterval, beta: f64) -> Vec<f64> {
    let edges = g.edges();
    assert!(edges.iter().all(|e| e.lambda > 0));
    let mut scores = vec![0.0; g.num_vertices()];
    fn walk(edges: &[TemporalEdge], interval: TimeInterval, last: usize, weight: f64, beta: f64, scores: &mut [f64]) {
        scores[edges[last].v] += weight;
        for (i, e) in edges.iter().enumerate() {
            if e.u == edges[last].v && e.t >= edges[last].arrival() && interval.admits(e) {
                walk(edges, interval, i, weight * beta, beta, scores);
            }
        }
    }
    for (i, e) in edges.iter().enumerate() {
        if interval.admits(e) {
            walk(edges, interval, i, beta, beta, &mut scores);
        }
    }
    scores
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

pub fn all_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| close(*x, *y, tol))
}

/// The example graph on `a=0, b=1, c=2, d=3`.
pub fn example_graph() -> OrderedEdgeList {
    OrderedEdgeList::new(
        4,
        vec![
            TemporalEdge::new(0, 1, 2, 1),
            TemporalEdge::new(0, 1, 5, 2),
            TemporalEdge::new(0, 3, 1, 5),
            TemporalEdge::new(1, 3, 7, 2),
            TemporalEdge::new(2, 1, 6, 1),
            TemporalEdge::new(3, 2, 6, 2),
            TemporalEdge::new(3, 2, 8, 4),
        ],
    )
    .unwrap()
}

pub const EXAMPLE_FILE: &str = "a b 2 1\na b 5 2\na d 1 5\nb d 7 2\nc b 6 1\nd c 6 2\nd c 8 4\n";

pub mod checks;

//! Streaming temporal Katz centrality.
//!
//! `katz(v)` is the sum of `β^len` over every temporal walk inside the
//! interval that ends at `v`. One chronological pass suffices: edge
//! `(u, v, t, λ)` extends every walk that reached `u` by time `t`, so it
//! carries weight `β · (1 + W_u(t))` where `W_u(t)` is the total weight of
//! walks into `u` arriving no later than `t`. Walk weights wait in a pending
//! heap until the stream reaches their arrival time.
//!
//! Edges with `λ = 0` can feed each other within one timestamp. Their
//! weights are the fixpoint of a linear system, found by Jacobi iteration.
//! When they form a cycle the walk count is infinite and the series only
//! converges for small enough `β`; otherwise [`Error::KatzDiverges`] is
//! returned.

use alloc::collections::BinaryHeap;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::CentralityVector;
use crate::{Error, OrderedEdgeList, Result, TemporalEdge, Time, TimeInterval, VertexId};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KatzParams {
    /// Down-weight per walk edge, in `(0, 1)`.
    pub beta: f64,
}

impl Default for KatzParams {
    fn default() -> Self {
        Self { beta: 0.5 }
    }
}

impl KatzParams {
    pub fn validate(&self) -> Result<()> {
        if self.beta > 0.0 && self.beta < 1.0 {
            Ok(())
        } else {
            Err(Error::InvalidParameter("katz beta must lie in (0, 1)"))
        }
    }
}

const MAX_SWEEPS: usize = 100_000;
const CONVERGED: f64 = 1e-15;

pub fn temporal_katz(g: &OrderedEdgeList, params: KatzParams, interval: TimeInterval) -> Result<CentralityVector> {
    params.validate()?;
    let beta = params.beta;
    let n = g.num_vertices();
    let mut katz = alloc::vec![0.0; n];
    // Walk weight that has arrived at each vertex so far.
    let mut ready = alloc::vec![0.0; n];
    let mut pending: BinaryHeap<Reverse<(Time, usize)>> = BinaryHeap::new();
    let mut pending_weight: Vec<(VertexId, f64)> = Vec::new();
    let mut zero = ZeroGroup::default();

    for group in g.time_groups() {
        let t = group[0].t;
        while let Some(&Reverse((arrival, slot))) = pending.peek() {
            if arrival > t {
                break;
            }
            pending.pop();
            let (v, w) = pending_weight[slot];
            ready[v] += w;
        }

        let admitted = group.iter().filter(|e| interval.admits(e));
        zero.clear();
        zero.edges.extend(admitted.clone().filter(|e| e.lambda == 0));
        if !zero.edges.is_empty() {
            zero.solve(beta, &ready, t)?;
            for (&v, &y) in zero.vertices.iter().zip(&zero.inflow) {
                katz[v] += y;
                ready[v] += y;
            }
        }

        for e in admitted.filter(|e| e.lambda > 0) {
            let w = beta * (1.0 + ready[e.u]);
            katz[e.v] += w;
            pending.push(Reverse((e.arrival(), pending_weight.len())));
            pending_weight.push((e.v, w));
        }
    }
    Ok(CentralityVector::new(format!("katz(beta={beta})"), interval, katz))
}

/// Zero-duration edges of one timestamp and the walk weight they deliver.
#[derive(Default)]
struct ZeroGroup {
    edges: Vec<TemporalEdge>,
    /// Sorted distinct endpoints.
    vertices: Vec<VertexId>,
    /// Weight delivered to each entry of `vertices`.
    inflow: Vec<f64>,
    next: Vec<f64>,
    links: Vec<(usize, usize)>,
}

impl ZeroGroup {
    fn clear(&mut self) {
        self.edges.clear();
        self.vertices.clear();
        self.inflow.clear();
        self.next.clear();
        self.links.clear();
    }

    /// Solves `y_v = Σ_{(u,v) in group} β (1 + ready_u + y_u)`.
    fn solve(&mut self, beta: f64, ready: &[f64], time: Time) -> Result<()> {
        self.vertices.extend(self.edges.iter().flat_map(|e| [e.u, e.v]));
        self.vertices.sort_unstable();
        self.vertices.dedup();
        let local = |v: VertexId| self.vertices.binary_search(&v).expect("endpoint is listed");
        let links: Vec<(usize, usize)> = self.edges.iter().map(|e| (local(e.u), local(e.v))).collect();
        self.links = links;
        self.inflow.resize(self.vertices.len(), 0.0);
        self.next.resize(self.vertices.len(), 0.0);

        for _ in 0..MAX_SWEEPS.max(self.edges.len() + 1) {
            self.next.fill(0.0);
            for &(a, b) in &self.links {
                self.next[b] += beta * (1.0 + ready[self.vertices[a]] + self.inflow[a]);
            }
            let mut change: f64 = 0.0;
            for (old, new) in self.inflow.iter().zip(&self.next) {
                if !new.is_finite() {
                    return Err(Error::KatzDiverges { time });
                }
                change = change.max((new - old).abs() / new.abs().max(1.0));
            }
            core::mem::swap(&mut self.inflow, &mut self.next);
            if change <= CONVERGED {
                return Ok(());
            }
        }
        Err(Error::KatzDiverges { time })
    }
}

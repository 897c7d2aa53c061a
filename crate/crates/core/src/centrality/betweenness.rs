//! Temporal edge betweenness over minimum-hop walks.
//!
//! Walks from a source `s` are breadth-first searched on the line graph with
//! a virtual root adjacent to every edge leaving `s`. For a target `z` the
//! counted walks are those of minimum hop count ending at `z`; each such
//! walk adds `1 / σ_sz` to every temporal edge it uses. Accumulation runs in
//! reverse BFS order over the shortest-walk DAG.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::CentralityVector;
use crate::repr::LineGraph;
use crate::{OrderedEdgeList, Result, TimeInterval, VertexId};

/// Sources accumulated into one partial vector before it is added to the
/// total. Parallel drivers use the same grouping to reproduce the sums.
pub const BETWEENNESS_CHUNK: usize = 64;

/// Scratch buffers for [`betweenness_from_source`], sized for one line graph.
pub struct BetweennessWorkspace {
    dist: Vec<u32>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<u32>,
    vertex_dist: Vec<u32>,
    vertex_sigma: Vec<f64>,
}

const UNSEEN: u32 = u32::MAX;

impl BetweennessWorkspace {
    pub fn new(num_vertices: usize, dlg: &LineGraph) -> Self {
        let m = dlg.num_nodes();
        Self {
            dist: alloc::vec![UNSEEN; m],
            sigma: alloc::vec![0.0; m],
            delta: alloc::vec![0.0; m],
            order: Vec::with_capacity(m),
            vertex_dist: alloc::vec![UNSEEN; num_vertices],
            vertex_sigma: alloc::vec![0.0; num_vertices],
        }
    }

    fn reset(&mut self) {
        for &e in &self.order {
            let e = e as usize;
            self.dist[e] = UNSEEN;
            self.sigma[e] = 0.0;
            self.delta[e] = 0.0;
        }
        self.order.clear();
        self.vertex_dist.fill(UNSEEN);
        self.vertex_sigma.fill(0.0);
    }
}

/// Adds the dependencies of source `s` to `acc`, indexed by line-graph node.
pub fn betweenness_from_source(dlg: &LineGraph, s: VertexId, ws: &mut BetweennessWorkspace, acc: &mut [f64]) {
    ws.reset();
    for (i, e) in dlg.edges().iter().enumerate() {
        if e.u == s {
            ws.dist[i] = 1;
            ws.sigma[i] = 1.0;
            ws.order.push(i as u32);
        }
    }
    let mut head = 0;
    while head < ws.order.len() {
        let e = ws.order[head] as usize;
        head += 1;
        let next = ws.dist[e] + 1;
        for f in dlg.successors(e) {
            if ws.dist[f] == UNSEEN {
                ws.dist[f] = next;
                ws.order.push(f as u32);
            }
            if ws.dist[f] == next {
                ws.sigma[f] += ws.sigma[e];
            }
        }
    }

    for &e in &ws.order {
        let e = e as usize;
        let z = dlg.edge(e).v;
        let d = ws.dist[e];
        if d < ws.vertex_dist[z] {
            ws.vertex_dist[z] = d;
            ws.vertex_sigma[z] = 0.0;
        }
        if d == ws.vertex_dist[z] {
            ws.vertex_sigma[z] += ws.sigma[e];
        }
    }

    for &e in ws.order.iter().rev() {
        let e = e as usize;
        let z = dlg.edge(e).v;
        let mut dep = 0.0;
        if z != s && ws.dist[e] == ws.vertex_dist[z] {
            dep = ws.sigma[e] / ws.vertex_sigma[z];
        }
        let next = ws.dist[e] + 1;
        for f in dlg.successors(e) {
            if ws.dist[f] == next {
                dep += ws.sigma[e] / ws.sigma[f] * ws.delta[f];
            }
        }
        ws.delta[e] = dep;
        acc[e] += dep;
    }
}

/// Betweenness of every temporal edge of `g`, indexed like `g.edges()`.
/// Edges outside `interval` score zero. Fails when the line graph of the
/// restricted stream needs more than `budget` arcs.
pub fn temporal_edge_betweenness(
    g: &OrderedEdgeList,
    interval: TimeInterval,
    budget: usize,
) -> Result<CentralityVector> {
    let (restricted, index) = g.restrict_with_index(interval);
    let dlg = LineGraph::with_budget(&restricted, budget)?;
    let mut ws = BetweennessWorkspace::new(g.num_vertices(), &dlg);
    let mut partial = alloc::vec![0.0; dlg.num_nodes()];
    let mut scores = alloc::vec![0.0; g.num_edges()];
    let sources: Vec<VertexId> = (0..g.num_vertices()).collect();
    for chunk in sources.chunks(BETWEENNESS_CHUNK) {
        partial.fill(0.0);
        for &s in chunk {
            betweenness_from_source(&dlg, s, &mut ws, &mut partial);
        }
        for (i, x) in partial.iter().enumerate() {
            scores[index[i]] += x;
        }
    }
    Ok(CentralityVector::new("edge-betweenness".to_string(), interval, scores))
}

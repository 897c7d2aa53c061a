//! Time-respecting static graph.
//!
//! Each vertex `u` is split into one node per distinct departure time of its
//! out-edges, plus a node at `t_m(u)`, the latest arrival over its in-edges.
//! Nodes of one vertex are chained in ascending time by zero-weight edges. A
//! temporal edge `(u, v, t, λ)` becomes a cross edge of weight `λ` from
//! `(u, t)` to the first node of `v` whose time is at least `t + λ`; such a
//! node always exists because `t_m(v) >= t + λ`.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use super::csr_offsets;
use crate::{OrderedEdgeList, TemporalEdge, Time, VertexId};

/// Node `(vertex, time)` of the static expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrsNode {
    pub vertex: VertexId,
    pub time: Time,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct CrossEdge {
    pub source: usize,
    pub target: usize,
    pub edge: TemporalEdge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrsGraph {
    n: usize,
    nodes: Vec<TrsNode>,
    /// Nodes of vertex `v` are `node_offsets[v]..node_offsets[v + 1]`.
    node_offsets: Vec<usize>,
    /// Cross edges grouped by source node.
    cross: Vec<CrossEdge>,
    cross_offsets: Vec<usize>,
    /// Indices into `cross`, grouped by target node.
    reverse: Vec<usize>,
    reverse_offsets: Vec<usize>,
}

impl TrsGraph {
    pub fn from_stream(g: &OrderedEdgeList) -> Self {
        let n = g.num_vertices();
        let edges = g.edges();

        let mut latest_arrival: Vec<Option<Time>> = alloc::vec![None; n];
        for e in edges {
            let slot = &mut latest_arrival[e.v];
            *slot = Some(slot.map_or(e.arrival(), |a| a.max(e.arrival())));
        }

        // Departure times per vertex arrive sorted because the stream is.
        let mut times: Vec<(VertexId, Time)> = Vec::with_capacity(edges.len() + n);
        times.extend(edges.iter().map(|e| (e.u, e.t)));
        times.extend(latest_arrival.iter().enumerate().filter_map(|(v, a)| a.map(|a| (v, a))));
        times.sort_unstable();
        times.dedup();

        let nodes: Vec<TrsNode> = times.iter().map(|&(vertex, time)| TrsNode { vertex, time }).collect();
        let node_offsets = csr_offsets(n, nodes.iter().map(|node| node.vertex));

        let mut graph = Self {
            n,
            nodes,
            node_offsets,
            cross: Vec::new(),
            cross_offsets: Vec::new(),
            reverse: Vec::new(),
            reverse_offsets: Vec::new(),
        };

        let mut cross: Vec<CrossEdge> = edges
            .iter()
            .map(|e| {
                let source = graph.node_at(e.u, e.t).expect("departure node exists");
                let target = graph.first_node_at_or_after(e.v, e.arrival()).expect("t_m bounds every arrival");
                CrossEdge { source, target, edge: *e }
            })
            .collect();
        cross.sort_by_key(|c| c.source);
        let node_count = graph.nodes.len();
        graph.cross_offsets = csr_offsets(node_count, cross.iter().map(|c| c.source));

        let reverse_offsets = csr_offsets(node_count, cross.iter().map(|c| c.target));
        let mut reverse = alloc::vec![0usize; cross.len()];
        let mut cursor = reverse_offsets.clone();
        for (i, c) in cross.iter().enumerate() {
            reverse[cursor[c.target]] = i;
            cursor[c.target] += 1;
        }
        graph.cross = cross;
        graph.reverse = reverse;
        graph.reverse_offsets = reverse_offsets;
        graph
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[TrsNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> TrsNode {
        self.nodes[id]
    }

    /// Node ids of vertex `v`, ascending in time.
    #[inline]
    pub fn node_range(&self, v: VertexId) -> Range<usize> {
        self.node_offsets[v]..self.node_offsets[v + 1]
    }

    pub fn node_at(&self, v: VertexId, t: Time) -> Option<usize> {
        let range = self.node_range(v);
        let slice = &self.nodes[range.clone()];
        slice.binary_search_by_key(&t, |node| node.time).ok().map(|i| range.start + i)
    }

    /// Earliest node of `v` with time `>= t`.
    #[inline]
    pub fn first_node_at_or_after(&self, v: VertexId, t: Time) -> Option<usize> {
        let range = self.node_range(v);
        let i = self.nodes[range.clone()].partition_point(|node| node.time < t);
        (range.start + i < range.end).then_some(range.start + i)
    }

    /// Zero-weight successor of `id` on its vertex chain.
    #[inline]
    pub fn chain_successor(&self, id: usize) -> Option<usize> {
        let next = id + 1;
        (next < self.nodes.len() && self.nodes[next].vertex == self.nodes[id].vertex).then_some(next)
    }

    #[inline]
    pub fn chain_predecessor(&self, id: usize) -> Option<usize> {
        (id > 0 && self.nodes[id - 1].vertex == self.nodes[id].vertex).then(|| id - 1)
    }

    #[inline]
    pub(crate) fn cross_from(&self, id: usize) -> &[CrossEdge] {
        &self.cross[self.cross_offsets[id]..self.cross_offsets[id + 1]]
    }

    #[inline]
    pub(crate) fn cross_into(&self, id: usize) -> impl Iterator<Item = &CrossEdge> {
        self.reverse[self.reverse_offsets[id]..self.reverse_offsets[id + 1]].iter().map(|&i| &self.cross[i])
    }

    /// All chain edges as `(from, to)` node pairs.
    pub fn chain_edges(&self) -> impl Iterator<Item = (TrsNode, TrsNode)> + '_ {
        self.nodes.windows(2).filter(|w| w[0].vertex == w[1].vertex).map(|w| (w[0], w[1]))
    }

    /// All cross edges as `(from, to, weight)`.
    pub fn cross_edges(&self) -> impl Iterator<Item = (TrsNode, TrsNode, Time)> + '_ {
        self.cross.iter().map(|c| (self.nodes[c.source], self.nodes[c.target], c.edge.lambda))
    }

    pub fn num_static_edges(&self) -> usize {
        self.chain_edges().count() + self.cross.len()
    }
}

impl From<&OrderedEdgeList> for TrsGraph {
    fn from(g: &OrderedEdgeList) -> Self {
        Self::from_stream(g)
    }
}

impl fmt::Display for TrsGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# trs: nodes={} edges={}", self.num_nodes(), self.num_static_edges())?;
        for node in &self.nodes {
            writeln!(f, "node {} {}", node.vertex, node.time)?;
        }
        for (a, b) in self.chain_edges() {
            writeln!(f, "edge {} {} {} {} 0", a.vertex, a.time, b.vertex, b.time)?;
        }
        for (a, b, w) in self.cross_edges() {
            writeln!(f, "edge {} {} {} {} {}", a.vertex, a.time, b.vertex, b.time, w)?;
        }
        Ok(())
    }
}

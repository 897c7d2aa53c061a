use alloc::vec::Vec;
use core::fmt;

use super::csr_offsets;
use crate::{OrderedEdgeList, TemporalEdge, Time, VertexId};

/// Per-vertex temporal out- and in-edge lists.
///
/// Out-lists are sorted by availability time, in-lists by arrival time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceLists {
    n: usize,
    out_offsets: Vec<usize>,
    out_edges: Vec<TemporalEdge>,
    in_offsets: Vec<usize>,
    in_edges: Vec<TemporalEdge>,
    directed: bool,
}

impl IncidenceLists {
    pub fn from_stream(g: &OrderedEdgeList) -> Self {
        let n = g.num_vertices();
        let edges = g.edges();

        let out_offsets = csr_offsets(n, edges.iter().map(|e| e.u));
        let mut out_edges = alloc::vec![TemporalEdge::new(0, 0, 0, 0); edges.len()];
        let mut cursor = out_offsets.clone();
        // Stream order is time order, so each bucket comes out sorted.
        for e in edges {
            out_edges[cursor[e.u]] = *e;
            cursor[e.u] += 1;
        }

        let in_offsets = csr_offsets(n, edges.iter().map(|e| e.v));
        let mut in_edges = alloc::vec![TemporalEdge::new(0, 0, 0, 0); edges.len()];
        let mut cursor = in_offsets.clone();
        for e in edges {
            in_edges[cursor[e.v]] = *e;
            cursor[e.v] += 1;
        }
        for v in 0..n {
            in_edges[in_offsets[v]..in_offsets[v + 1]].sort_by_key(|e| e.arrival());
        }

        Self { n, out_offsets, out_edges, in_offsets, in_edges, directed: g.is_directed() }
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.out_edges.len()
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Out-edges of `v` by ascending availability time.
    #[inline]
    pub fn out_edges(&self, v: VertexId) -> &[TemporalEdge] {
        &self.out_edges[self.out_offsets[v]..self.out_offsets[v + 1]]
    }

    /// In-edges of `v` by ascending arrival time.
    #[inline]
    pub fn in_edges(&self, v: VertexId) -> &[TemporalEdge] {
        &self.in_edges[self.in_offsets[v]..self.in_offsets[v + 1]]
    }

    /// Out-edges of `v` that depart at or after `t`.
    #[inline]
    pub fn departures_from(&self, v: VertexId, t: Time) -> &[TemporalEdge] {
        let out = self.out_edges(v);
        &out[out.partition_point(|e| e.t < t)..]
    }

    /// In-edges of `v` that arrive at or before `t`.
    #[inline]
    pub fn arrivals_until(&self, v: VertexId, t: Time) -> &[TemporalEdge] {
        let inc = self.in_edges(v);
        &inc[..inc.partition_point(|e| e.arrival() <= t)]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_offsets[v + 1] - self.out_offsets[v]
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_offsets[v + 1] - self.in_offsets[v]
    }
}

impl From<&OrderedEdgeList> for IncidenceLists {
    fn from(g: &OrderedEdgeList) -> Self {
        Self::from_stream(g)
    }
}

impl fmt::Display for IncidenceLists {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# incidence lists: n={} m={}", self.n, self.num_edges())?;
        for v in 0..self.n {
            write!(f, "{v}:")?;
            for e in self.out_edges(v) {
                write!(f, " {e}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

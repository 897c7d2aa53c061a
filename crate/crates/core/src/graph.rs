//! The edge stream: all temporal edges ordered by availability time.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{Error, Result, TemporalEdge, Time, TimeInterval, VertexId};

/// Temporal graph in stream form.
///
/// Edges are sorted non-decreasingly by availability time; ties keep the order
/// in which the edges were supplied.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrderedEdgeList {
    n: usize,
    edges: Vec<TemporalEdge>,
    directed: bool,
}

/// Cleaning passes applied by [`OrderedEdgeList::normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NormalizeOptions {
    pub remove_self_loops: bool,
    /// Drop exact `(u, v, t, λ)` repeats, keeping the first occurrence.
    pub deduplicate: bool,
    /// Subtract the smallest availability time from every timestamp.
    pub shift_time_origin: bool,
}

impl OrderedEdgeList {
    /// Directed graph from edges in any order. Edges are stably sorted by `t`.
    pub fn new(n: usize, mut edges: Vec<TemporalEdge>) -> Result<Self> {
        check_vertices(n, &edges)?;
        edges.sort_by_key(|e| e.t);
        Ok(Self { n, edges, directed: true })
    }

    /// Undirected graph: every edge is expanded into a forward and a backward
    /// copy with equal timestamps. Self-loops are kept once.
    pub fn new_undirected(n: usize, edges: Vec<TemporalEdge>) -> Result<Self> {
        check_vertices(n, &edges)?;
        let mut expanded = Vec::with_capacity(edges.len() * 2);
        for e in edges {
            expanded.push(e);
            if !e.is_self_loop() {
                expanded.push(e.reversed());
            }
        }
        expanded.sort_by_key(|e| e.t);
        Ok(Self { n, edges: expanded, directed: false })
    }

    /// Wraps edges that are already in stream order.
    pub fn from_sorted(n: usize, edges: Vec<TemporalEdge>, directed: bool) -> Result<Self> {
        check_vertices(n, &edges)?;
        if let Some(index) = edges.windows(2).position(|w| w[0].t > w[1].t) {
            return Err(Error::UnsortedEdges { index: index + 1 });
        }
        Ok(Self { n, edges, directed })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new(), directed: true }
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<TemporalEdge> {
        self.edges
    }

    /// False when the graph was built by undirected expansion.
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Sub-graph of the edges with `t >= start` and `t + λ <= end`.
    pub fn restrict_to_interval(&self, interval: TimeInterval) -> Self {
        Self {
            n: self.n,
            edges: self.edges.iter().filter(|e| interval.admits(e)).copied().collect(),
            directed: self.directed,
        }
    }

    /// [`Self::restrict_to_interval`] plus, per kept edge, its index in `self`.
    pub fn restrict_with_index(&self, interval: TimeInterval) -> (Self, Vec<usize>) {
        let index: Vec<usize> = (0..self.edges.len()).filter(|&i| interval.admits(&self.edges[i])).collect();
        let edges = index.iter().map(|&i| self.edges[i]).collect();
        (Self { n: self.n, edges, directed: self.directed }, index)
    }

    pub fn normalize(&self, options: NormalizeOptions) -> Self {
        let mut edges: Vec<TemporalEdge> = self.edges.clone();
        if options.remove_self_loops {
            edges.retain(|e| !e.is_self_loop());
        }
        if options.deduplicate {
            // Exact duplicates share t, so they sit in the same timestamp run.
            let mut kept = Vec::with_capacity(edges.len());
            let mut seen = BTreeSet::new();
            for run in edges.chunk_by(|a, b| a.t == b.t) {
                seen.clear();
                kept.extend(run.iter().filter(|e| seen.insert(**e)));
            }
            edges = kept;
        }
        if options.shift_time_origin {
            if let Some(origin) = edges.first().map(|e| e.t) {
                for e in &mut edges {
                    e.t -= origin;
                }
            }
        }
        Self { n: self.n, edges, directed: self.directed }
    }

    /// Same graph with every vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter("permutation length differs from vertex count"));
        }
        let edges =
            self.edges.iter().map(|e| TemporalEdge::new(perm[e.u], perm[e.v], e.t, e.lambda)).collect::<Vec<_>>();
        check_vertices(self.n, &edges)?;
        Ok(Self { n: self.n, edges, directed: self.directed })
    }

    /// Same graph with every availability time increased by `delta`.
    pub fn shift_times(&self, delta: Time) -> Self {
        let edges = self.edges.iter().map(|e| TemporalEdge::new(e.u, e.v, e.t + delta, e.lambda)).collect();
        Self { n: self.n, edges, directed: self.directed }
    }

    /// Sorted distinct availability times `T(G)`.
    pub fn timestamps(&self) -> Vec<Time> {
        let mut ts: Vec<Time> = self.edges.iter().map(|e| e.t).collect();
        ts.dedup();
        ts
    }

    /// Runs of edges sharing one availability time, in stream order.
    pub fn time_groups(&self) -> impl DoubleEndedIterator<Item = &[TemporalEdge]> {
        self.edges.chunk_by(|a, b| a.t == b.t)
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.n];
        for e in &self.edges {
            deg[e.u] += 1;
        }
        deg
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.n];
        for e in &self.edges {
            deg[e.v] += 1;
        }
        deg
    }
}

fn check_vertices(n: usize, edges: &[TemporalEdge]) -> Result<()> {
    for e in edges {
        let worst = e.u.max(e.v);
        if worst >= n {
            return Err(Error::VertexOutOfRange { vertex: worst, n });
        }
    }
    Ok(())
}

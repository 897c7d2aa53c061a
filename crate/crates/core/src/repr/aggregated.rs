use alloc::vec::Vec;
use core::fmt;

use crate::{OrderedEdgeList, VertexId};

/// Static projection: one edge per ordered pair that carries at least one
/// temporal edge, weighted by contact frequency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregatedGraph {
    n: usize,
    /// `(u, v, frequency)` sorted by `(u, v)`.
    edges: Vec<(VertexId, VertexId, usize)>,
}

impl AggregatedGraph {
    pub fn from_stream(g: &OrderedEdgeList) -> Self {
        let mut pairs: Vec<(VertexId, VertexId)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        pairs.sort_unstable();
        let edges = pairs.chunk_by(|a, b| a == b).map(|run| (run[0].0, run[0].1, run.len())).collect();
        Self { n: g.num_vertices(), edges }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId, usize)] {
        &self.edges
    }

    /// Contact frequency of `(u, v)`, zero when absent.
    pub fn frequency(&self, u: VertexId, v: VertexId) -> usize {
        self.edges.binary_search_by_key(&(u, v), |&(a, b, _)| (a, b)).map_or(0, |i| self.edges[i].2)
    }

    pub fn total_frequency(&self) -> usize {
        self.edges.iter().map(|e| e.2).sum()
    }
}

impl From<&OrderedEdgeList> for AggregatedGraph {
    fn from(g: &OrderedEdgeList) -> Self {
        Self::from_stream(g)
    }
}

impl fmt::Display for AggregatedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# aggregated: n={} edges={}", self.n, self.edges.len())?;
        for (u, v, w) in &self.edges {
            writeln!(f, "{u} {v} {w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::TimeInterval;

    #[test]
    fn example_aggregation() {
        let aggr = AggregatedGraph::from_stream(&example_graph());
        assert_eq!(aggr.num_edges(), 5);
        assert_eq!(aggr.frequency(A, B), 2);
        assert_eq!(aggr.frequency(D, C), 2);
        assert_eq!(aggr.frequency(A, D), 1);
        assert_eq!(aggr.frequency(B, A), 0);
        assert_eq!(aggr.total_frequency(), 7);
    }

    #[test]
    fn empty_aggregation() {
        let aggr = AggregatedGraph::from_stream(&OrderedEdgeList::empty(2));
        assert_eq!(aggr.num_edges(), 0);
    }

    #[test]
    fn restriction_only_removes_static_edges() {
        let g = example_graph();
        let full = AggregatedGraph::from_stream(&g);
        let part = AggregatedGraph::from_stream(&g.restrict_to_interval(TimeInterval::new(2, 9).unwrap()));
        assert!(part.edges().iter().all(|&(u, v, _)| full.frequency(u, v) > 0));
    }
}

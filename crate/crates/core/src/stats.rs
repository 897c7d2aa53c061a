use alloc::vec::Vec;

use crate::{OrderedEdgeList, Time};

/// Summary counts of a temporal graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GraphStatistics {
    pub num_vertices: usize,
    pub num_edges: usize,
    /// `|T(G)|`.
    pub num_timestamps: usize,
    /// Distinct ordered pairs `(u, v)`, i.e. edges of the aggregated graph.
    pub num_static_edges: usize,
    pub min_in_degree: usize,
    pub max_in_degree: usize,
    pub min_out_degree: usize,
    pub max_out_degree: usize,
    pub min_time: Time,
    pub max_arrival_time: Time,
}

impl GraphStatistics {
    pub fn of(g: &OrderedEdgeList) -> Self {
        if g.num_vertices() == 0 {
            return Self::default();
        }
        let out_deg = g.out_degrees();
        let in_deg = g.in_degrees();
        let mut pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        pairs.sort_unstable();
        pairs.dedup();
        let edges = g.edges();
        Self {
            num_vertices: g.num_vertices(),
            num_edges: g.num_edges(),
            num_timestamps: g.time_groups().count(),
            num_static_edges: pairs.len(),
            min_in_degree: in_deg.iter().copied().min().unwrap_or(0),
            max_in_degree: in_deg.iter().copied().max().unwrap_or(0),
            min_out_degree: out_deg.iter().copied().min().unwrap_or(0),
            max_out_degree: out_deg.iter().copied().max().unwrap_or(0),
            min_time: edges.first().map_or(0, |e| e.t),
            max_arrival_time: edges.iter().map(|e| e.arrival()).max().unwrap_or(0),
        }
    }

    /// `(key, value)` pairs in a fixed order.
    pub fn fields(&self) -> [(&'static str, u64); 10] {
        [
            ("n", self.num_vertices as u64),
            ("m", self.num_edges as u64),
            ("timestamps", self.num_timestamps as u64),
            ("static_edges", self.num_static_edges as u64),
            ("min_in_degree", self.min_in_degree as u64),
            ("max_in_degree", self.max_in_degree as u64),
            ("min_out_degree", self.min_out_degree as u64),
            ("max_out_degree", self.max_out_degree as u64),
            ("min_time", self.min_time),
            ("max_arrival_time", self.max_arrival_time),
        ]
    }
}

pub fn get_statistics(g: &OrderedEdgeList) -> GraphStatistics {
    GraphStatistics::of(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_graph;
    use crate::TemporalEdge;
    use alloc::vec;

    #[test]
    fn example_graph_statistics() {
        let s = get_statistics(&example_graph());
        assert_eq!(s.num_vertices, 4);
        assert_eq!(s.num_edges, 7);
        assert_eq!(s.num_timestamps, 6);
        assert_eq!(s.num_static_edges, 5);
        assert_eq!(s.max_out_degree, 3);
        assert_eq!(s.min_out_degree, 1);
        assert_eq!(s.max_in_degree, 3);
        assert_eq!(s.min_in_degree, 0);
        assert_eq!(s.min_time, 1);
        assert_eq!(s.max_arrival_time, 12);
    }

    #[test]
    fn single_edge_statistics() {
        let g = OrderedEdgeList::new(2, vec![TemporalEdge::new(0, 1, 5, 2)]).unwrap();
        let s = get_statistics(&g);
        assert_eq!((s.num_vertices, s.num_edges, s.num_timestamps, s.num_static_edges), (2, 1, 1, 1));
    }

    #[test]
    fn empty_graph_statistics_are_zero() {
        assert_eq!(get_statistics(&OrderedEdgeList::empty(0)), GraphStatistics::default());
        let s = get_statistics(&OrderedEdgeList::empty(3));
        assert_eq!(s.num_vertices, 3);
        assert_eq!((s.num_edges, s.max_in_degree, s.min_out_degree), (0, 0, 0));
    }
}

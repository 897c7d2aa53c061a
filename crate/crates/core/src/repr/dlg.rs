use alloc::vec::Vec;
use core::fmt;

use super::csr_offsets;
use crate::{Error, OrderedEdgeList, Result, TemporalEdge};

/// Default cap on the number of line-graph arcs (about 1.6 GiB of indices).
pub const DEFAULT_LINE_GRAPH_BUDGET: usize = 200_000_000;

/// Directed line graph: one node per temporal edge, an arc from
/// `(u, v, t, λ)` to `(x, y, s, μ)` iff `v = x` and `t + λ <= s`.
///
/// Node `i` is the `i`-th edge of the stream it was built from. An edge never
/// links to itself, but distinct zero-transition edges at one timestamp can
/// form cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    edges: Vec<TemporalEdge>,
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl LineGraph {
    pub fn from_stream(g: &OrderedEdgeList) -> Result<Self> {
        Self::with_budget(g, DEFAULT_LINE_GRAPH_BUDGET)
    }

    /// Builds the line graph, failing when it would exceed `budget` arcs.
    pub fn with_budget(g: &OrderedEdgeList, budget: usize) -> Result<Self> {
        let edges = g.edges();
        if edges.len() > u32::MAX as usize {
            return Err(Error::LineGraphBudgetExceeded { required: edges.len(), budget });
        }
        let n = g.num_vertices();
        // Stream indices of each vertex's out-edges, in time order.
        let by_tail_offsets = csr_offsets(n, edges.iter().map(|e| e.u));
        let mut by_tail = alloc::vec![0u32; edges.len()];
        let mut cursor = by_tail_offsets.clone();
        for (i, e) in edges.iter().enumerate() {
            by_tail[cursor[e.u]] = i as u32;
            cursor[e.u] += 1;
        }
        let successors = |i: usize| {
            let e = &edges[i];
            let out = &by_tail[by_tail_offsets[e.v]..by_tail_offsets[e.v + 1]];
            let first = out.partition_point(|&j| edges[j as usize].t < e.arrival());
            out[first..].iter().copied().filter(move |&j| j as usize != i)
        };

        let mut required = 0usize;
        for i in 0..edges.len() {
            required += successors(i).count();
            if required > budget {
                return Err(Error::LineGraphBudgetExceeded { required, budget });
            }
        }

        let mut offsets = Vec::with_capacity(edges.len() + 1);
        let mut targets = Vec::with_capacity(required);
        offsets.push(0);
        for i in 0..edges.len() {
            targets.extend(successors(i));
            offsets.push(targets.len());
        }
        Ok(Self { edges: edges.to_vec(), offsets, targets })
    }

    pub fn num_nodes(&self) -> usize {
        self.edges.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.targets.len()
    }

    /// Temporal edge represented by node `i`.
    pub fn edge(&self, i: usize) -> TemporalEdge {
        self.edges[i]
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    #[inline]
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.targets[self.offsets[i]..self.offsets[i + 1]].iter().map(|&j| j as usize)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_nodes()).flat_map(move |i| self.successors(i).map(move |j| (i, j)))
    }
}

impl fmt::Display for LineGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# line graph: nodes={} arcs={}", self.num_nodes(), self.num_arcs())?;
        for (i, e) in self.edges.iter().enumerate() {
            writeln!(f, "node {i} {e}")?;
        }
        for (i, j) in self.arcs() {
            writeln!(f, "arc {i} {j}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    #[test]
    fn example_line_graph() {
        let dlg = LineGraph::from_stream(&example_graph()).unwrap();
        assert_eq!(dlg.num_nodes(), 7);
        let arcs: BTreeSet<(TemporalEdge, TemporalEdge)> =
            dlg.arcs().map(|(i, j)| (dlg.edge(i), dlg.edge(j))).collect();
        let e = TemporalEdge::new;
        let expected: BTreeSet<_> = [
            (e(A, B, 2, 1), e(B, D, 7, 2)),
            (e(A, B, 5, 2), e(B, D, 7, 2)),
            (e(C, B, 6, 1), e(B, D, 7, 2)),
            (e(A, D, 1, 5), e(D, C, 6, 2)),
            (e(A, D, 1, 5), e(D, C, 8, 4)),
        ]
        .into_iter()
        .collect();
        assert_eq!(arcs, expected);
    }

    #[test]
    fn small_line_graphs() {
        let single = OrderedEdgeList::new(2, vec![TemporalEdge::new(0, 1, 1, 1)]).unwrap();
        let dlg = LineGraph::from_stream(&single).unwrap();
        assert_eq!((dlg.num_nodes(), dlg.num_arcs()), (1, 0));

        let chain =
            OrderedEdgeList::new(3, vec![TemporalEdge::new(0, 1, 1, 1), TemporalEdge::new(1, 2, 2, 1)]).unwrap();
        let dlg = LineGraph::from_stream(&chain).unwrap();
        assert_eq!(dlg.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn zero_transition_self_loop_does_not_link_to_itself() {
        let g = OrderedEdgeList::new(1, vec![TemporalEdge::new(0, 0, 3, 0)]).unwrap();
        assert_eq!(LineGraph::from_stream(&g).unwrap().num_arcs(), 0);
    }

    #[test]
    fn budget_is_enforced() {
        let err = LineGraph::with_budget(&example_graph(), 4).unwrap_err();
        assert!(matches!(err, Error::LineGraphBudgetExceeded { budget: 4, .. }));
        assert!(LineGraph::with_budget(&example_graph(), 5).is_ok());
    }
}

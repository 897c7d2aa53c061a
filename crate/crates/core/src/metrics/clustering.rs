use alloc::vec::Vec;

use crate::{OrderedEdgeList, TimeInterval, VertexId};

/// Temporal clustering coefficient of `u` inside `interval`.
///
/// `N(u)` is the set of out-neighbors of `u` other than `u` itself. For each
/// distinct timestamp `t` the numerator counts the unordered neighbor pairs
/// `{v, w}` joined by an edge in either direction at `t`, so each term is at
/// most `C(|N(u)|, 2)` and the coefficient lies in `[0, 1]`. Vertices with
/// fewer than two neighbors and intervals without edges score 0.
pub fn temporal_clustering_coefficient(g: &OrderedEdgeList, u: VertexId, interval: TimeInterval) -> f64 {
    let mut neighbors: Vec<VertexId> =
        g.edges().iter().filter(|e| e.u == u && e.v != u && interval.admits(e)).map(|e| e.v).collect();
    neighbors.sort_unstable();
    neighbors.dedup();
    let k = neighbors.len();
    if k < 2 {
        return 0.0;
    }

    let mut timestamps = 0u64;
    let mut linked = 0u64;
    let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
    for group in g.time_groups() {
        pairs.clear();
        let mut any = false;
        for e in group.iter().filter(|e| interval.admits(e)) {
            any = true;
            if e.u != e.v && neighbors.binary_search(&e.u).is_ok() && neighbors.binary_search(&e.v).is_ok() {
                pairs.push((e.u.min(e.v), e.u.max(e.v)));
            }
        }
        if any {
            timestamps += 1;
            pairs.sort_unstable();
            pairs.dedup();
            linked += pairs.len() as u64;
        }
    }
    if timestamps == 0 {
        return 0.0;
    }
    let possible = (k * (k - 1) / 2) as f64;
    linked as f64 / (timestamps as f64 * possible)
}

/// [`temporal_clustering_coefficient`] for every vertex.
pub fn clustering_coefficients(g: &OrderedEdgeList, interval: TimeInterval) -> Vec<f64> {
    (0..g.num_vertices()).map(|u| temporal_clustering_coefficient(g, u, interval)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TemporalEdge;
    use alloc::vec;
    use proptest::prelude::*;

    const ALL: TimeInterval = TimeInterval::UNBOUNDED;

    #[test]
    fn triangle_at_one_time() {
        let edges = vec![TemporalEdge::new(0, 1, 1, 1), TemporalEdge::new(1, 2, 1, 1), TemporalEdge::new(2, 0, 1, 1)];
        let g = OrderedEdgeList::new_undirected(3, edges).unwrap();
        assert_eq!(clustering_coefficients(&g, ALL), vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn star_and_leaf() {
        let edges = (1..4).map(|v| TemporalEdge::new(0, v, v as u64, 1)).collect();
        let g = OrderedEdgeList::new_undirected(4, edges).unwrap();
        assert_eq!(temporal_clustering_coefficient(&g, 0, ALL), 0.0);
        assert_eq!(temporal_clustering_coefficient(&g, 1, ALL), 0.0);
    }

    #[test]
    fn averaged_over_timestamps() {
        // Neighbors 1 and 2 of 0 are linked at t=2 only, out of timestamps {1, 2}.
        let edges = vec![TemporalEdge::new(0, 1, 1, 1), TemporalEdge::new(0, 2, 1, 1), TemporalEdge::new(1, 2, 2, 1)];
        let g = OrderedEdgeList::new(3, edges).unwrap();
        assert_eq!(temporal_clustering_coefficient(&g, 0, ALL), 0.5);
        assert_eq!(temporal_clustering_coefficient(&g, 0, TimeInterval::new(0, 2).unwrap()), 0.0);
    }

    proptest! {
        #[test]
        fn within_unit_interval(raw in prop::collection::vec((0usize..6, 0usize..6, 0u64..6, 0u64..3), 0..30), undirected: bool) {
            let edges: Vec<_> = raw.into_iter().map(|(u, v, t, l)| TemporalEdge::new(u, v, t, l)).collect();
            let g = if undirected { OrderedEdgeList::new_undirected(6, edges) } else { OrderedEdgeList::new(6, edges) }.unwrap();
            for c in clustering_coefficients(&g, ALL) {
                prop_assert!((0.0..=1.0).contains(&c));
            }
        }
    }
}

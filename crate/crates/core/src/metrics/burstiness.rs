use alloc::vec::Vec;

use crate::{OrderedEdgeList, Time, TimeInterval, VertexId};

/// Sorted contact times and the gaps between consecutive contacts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InterContactSequence {
    times: Vec<Time>,
}

impl InterContactSequence {
    pub fn new(mut times: Vec<Time>) -> Self {
        times.sort_unstable();
        Self { times }
    }

    pub fn contacts(&self) -> &[Time] {
        &self.times
    }

    /// Consecutive differences; one fewer than the number of contacts.
    pub fn gaps(&self) -> impl ExactSizeIterator<Item = Time> + '_ {
        self.times.windows(2).map(|w| w[1] - w[0])
    }

    /// Mean gap, or `None` with fewer than two contacts.
    pub fn mean_gap(&self) -> Option<f64> {
        let k = self.gaps().len();
        (k > 0).then(|| self.gaps().map(|g| g as f64).sum::<f64>() / k as f64)
    }

    /// Population standard deviation of the gaps.
    pub fn gap_std_dev(&self) -> Option<f64> {
        let mean = self.mean_gap()?;
        let k = self.gaps().len() as f64;
        let var = self.gaps().map(|g| (g as f64 - mean) * (g as f64 - mean)).sum::<f64>() / k;
        Some(libm::sqrt(var))
    }

    /// `(σ - m) / (σ + m)` over the gaps, in `[-1, 1]`. `None` with fewer
    /// than two contacts or when every gap is zero.
    pub fn burstiness(&self) -> Option<f64> {
        let m = self.mean_gap()?;
        let s = self.gap_std_dev()?;
        (s + m > 0.0).then(|| (s - m) / (s + m))
    }
}

/// Burstiness of the contacts from `u` to `v` inside `interval`. On an
/// undirected graph these are the contacts between `u` and `v` in either
/// original direction, each counted once.
pub fn edge_burstiness(g: &OrderedEdgeList, u: VertexId, v: VertexId, interval: TimeInterval) -> Option<f64> {
    let times = g.edges().iter().filter(|e| e.u == u && e.v == v && interval.admits(e)).map(|e| e.t).collect();
    InterContactSequence::new(times).burstiness()
}

/// Burstiness of all edge times incident to `u` inside `interval`, incoming
/// and outgoing merged. Each original edge contributes one contact.
pub fn node_burstiness(g: &OrderedEdgeList, u: VertexId, interval: TimeInterval) -> Option<f64> {
    let directed = g.is_directed();
    let times = g
        .edges()
        .iter()
        .filter(|e| interval.admits(e))
        .filter(|e| e.u == u || (directed && e.v == u))
        .map(|e| e.t)
        .collect();
    InterContactSequence::new(times).burstiness()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TemporalEdge;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn periodic_is_minus_one() {
        let s = InterContactSequence::new(vec![8, 2, 5]);
        assert_eq!(s.gaps().collect::<Vec<_>>(), vec![3, 3]);
        assert_eq!(s.gap_std_dev(), Some(0.0));
        assert_eq!(s.burstiness(), Some(-1.0));
    }

    #[test]
    fn gaps_zero_and_six_give_zero() {
        let s = InterContactSequence::new(vec![1, 1, 7]);
        assert_eq!(s.mean_gap(), Some(3.0));
        assert_eq!(s.gap_std_dev(), Some(3.0));
        assert_eq!(s.burstiness(), Some(0.0));
    }

    #[test]
    fn undefined_cases() {
        assert_eq!(InterContactSequence::new(vec![4]).burstiness(), None);
        assert_eq!(InterContactSequence::new(vec![]).burstiness(), None);
        assert_eq!(InterContactSequence::new(vec![4, 4, 4]).burstiness(), None);
    }

    #[test]
    fn edge_and_node_variants() {
        let edges = vec![
            TemporalEdge::new(0, 1, 2, 1),
            TemporalEdge::new(1, 0, 5, 1),
            TemporalEdge::new(0, 1, 8, 1),
            TemporalEdge::new(2, 0, 11, 1),
        ];
        let directed = OrderedEdgeList::new(3, edges.clone()).unwrap();
        assert_eq!(edge_burstiness(&directed, 0, 1, TimeInterval::UNBOUNDED), Some(-1.0));
        assert_eq!(node_burstiness(&directed, 0, TimeInterval::UNBOUNDED), Some(-1.0));
        let undirected = OrderedEdgeList::new_undirected(3, edges).unwrap();
        assert_eq!(edge_burstiness(&undirected, 0, 1, TimeInterval::UNBOUNDED), Some(-1.0));
        assert_eq!(edge_burstiness(&undirected, 1, 0, TimeInterval::UNBOUNDED), Some(-1.0));
        assert_eq!(node_burstiness(&undirected, 0, TimeInterval::UNBOUNDED), Some(-1.0));
        assert_eq!(node_burstiness(&undirected, 2, TimeInterval::UNBOUNDED), None);
    }

    proptest! {
        #[test]
        fn bounded(times in prop::collection::vec(0u64..1000, 0..40)) {
            if let Some(b) = InterContactSequence::new(times).burstiness() {
                prop_assert!((-1.0..=1.0).contains(&b));
            }
        }

        #[test]
        fn periodic_sequences(start in 0u64..1000, step in 1u64..100, count in 2usize..30) {
            let times = (0..count as u64).map(|i| start + i * step).collect();
            prop_assert_eq!(InterContactSequence::new(times).burstiness(), Some(-1.0));
        }
    }
}

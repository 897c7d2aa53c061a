//! Top-k harmonic closeness with early termination.
//!
//! Each source runs a label-setting search that settles vertices in
//! non-decreasing distance order. After every settle the closeness of the
//! source is bounded from above by the settled sum plus the best possible
//! contribution of every still unsettled reachable vertex. Once that bound
//! drops below the current k-th best score the source cannot enter the top k.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::ControlFlow;

use super::closeness::{harmonic_closeness, ClosenessOptions};
use crate::distance::ilists::{self, LabelSearch, Objective};
use crate::repr::IncidenceLists;
use crate::{DistanceType, Error, Result, Time, TimeInterval, VertexId};

/// Relative slack under which a bound is still treated as reaching the
/// threshold, so rounding in the running sum never prunes a true member.
const PRUNE_SLACK: f64 = 1e-9;

/// Reusable per-thread state for bounded closeness evaluations.
pub struct TopkSearch<'a> {
    g: &'a IncidenceLists,
    kind: DistanceType,
    interval: TimeInterval,
    options: ClosenessOptions,
    search: LabelSearch<'a>,
}

impl<'a> TopkSearch<'a> {
    /// Fails unless `kind` is a minimizing cost criterion (fastest, minimum
    /// transition sum or minimum hops).
    pub fn new(
        g: &'a IncidenceLists,
        kind: DistanceType,
        interval: TimeInterval,
        options: ClosenessOptions,
    ) -> Result<Self> {
        let objective = Objective::for_kind(kind)
            .ok_or(Error::InvalidParameter("top-k closeness supports fastest, shortest and hop distances"))?;
        Ok(Self { g, kind, interval, options, search: LabelSearch::new(g, objective, interval) })
    }

    /// Exact closeness of `u`, or `None` once it is provably below `threshold`.
    pub fn bounded_closeness(&mut self, u: VertexId, threshold: f64) -> Result<Option<f64>> {
        let reachable = ilists::earliest_arrival(self.g, u, self.interval).reachable_count() - 1;
        let options = self.options;
        let best_remaining = |d: Time| if d == 0 { options.zero_distance_cap.max(1.0) } else { 1.0 / d as f64 };
        let pruned = |bound: f64| bound + PRUNE_SLACK * bound.max(1.0) < threshold;

        if pruned(reachable as f64 * best_remaining(0)) {
            return Ok(None);
        }
        let mut settled = 0usize;
        let mut partial = 0.0;
        let mut cut = false;
        self.search.run(u, |_, d| {
            settled += 1;
            partial += options.contribution(d);
            let bound = partial + reachable.saturating_sub(settled) as f64 * best_remaining(d);
            if pruned(bound) {
                cut = true;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if cut {
            return Ok(None);
        }
        harmonic_closeness(u, self.search.distances(), self.kind, self.interval, options).map(Some)
    }
}

/// Evaluation order for sources: out-degree descending, then id.
pub fn rank_order(g: &IncidenceLists) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = (0..g.num_vertices()).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.out_degree(v)), v));
    order
}

/// Score descending, then id ascending.
fn by_rank(a: &(VertexId, f64), b: &(VertexId, f64)) -> Ordering {
    b.1.total_cmp(&a.1).then(a.0.cmp(&b.0))
}

/// The best `k` of `scores` ordered by score descending then id ascending.
pub fn select_top_k(mut scores: Vec<(VertexId, f64)>, k: usize) -> Vec<(VertexId, f64)> {
    scores.sort_by(by_rank);
    scores.truncate(k);
    scores
}

/// The `k` vertices with the highest harmonic closeness with their exact
/// scores, ordered by score descending then id ascending.
pub fn topk_closeness(
    g: &IncidenceLists,
    k: usize,
    kind: DistanceType,
    interval: TimeInterval,
    options: ClosenessOptions,
) -> Result<Vec<(VertexId, f64)>> {
    let n = g.num_vertices();
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    let mut search = TopkSearch::new(g, kind, interval, options)?;
    let mut best: Vec<(VertexId, f64)> = Vec::with_capacity(k + 1);
    for u in rank_order(g) {
        let threshold = if best.len() == k { best[k - 1].1 } else { f64::NEG_INFINITY };
        if let Some(score) = search.bounded_closeness(u, threshold)? {
            let pos = best.partition_point(|entry| by_rank(entry, &(u, score)) == Ordering::Less);
            best.insert(pos, (u, score));
            best.truncate(k);
        }
    }
    Ok(best)
}

//! Topological overlap of neighborhoods between consecutive timestamps.
//!
//! For vertex `u` and consecutive distinct timestamps `t < t'` inside the
//! interval, the term is `|N_t(u) ∩ N_t'(u)| / sqrt(|N_t(u)| · |N_t'(u)|)`
//! where `N_t(u)` holds the vertices sharing an edge with `u` at `t` in
//! either direction. A zero denominator makes the term 0. The local overlap
//! averages the terms over all consecutive pairs; with fewer than two
//! timestamps it is 0.

use alloc::vec::Vec;

use crate::{OrderedEdgeList, TimeInterval, VertexId};

pub fn topological_overlap(g: &OrderedEdgeList, u: VertexId, interval: TimeInterval) -> f64 {
    overlaps(g, interval, Some(u))[u]
}

pub fn local_topological_overlaps(g: &OrderedEdgeList, interval: TimeInterval) -> Vec<f64> {
    overlaps(g, interval, None)
}

/// Mean local overlap over all vertices; 0 for an empty vertex set.
pub fn global_topological_overlap(g: &OrderedEdgeList, interval: TimeInterval) -> f64 {
    let local = local_topological_overlaps(g, interval);
    if local.is_empty() {
        return 0.0;
    }
    local.iter().sum::<f64>() / local.len() as f64
}

/// Sorted, deduplicated `(vertex, neighbor)` pairs at one timestamp.
fn neighborhoods(
    group: &[crate::TemporalEdge],
    interval: TimeInterval,
    only: Option<VertexId>,
    out: &mut Vec<(VertexId, VertexId)>,
) -> bool {
    out.clear();
    let mut any = false;
    for e in group.iter().filter(|e| interval.admits(e)) {
        any = true;
        if e.u == e.v {
            continue;
        }
        for (x, y) in [(e.u, e.v), (e.v, e.u)] {
            if only.is_none_or(|u| u == x) {
                out.push((x, y));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    any
}

fn overlaps(g: &OrderedEdgeList, interval: TimeInterval, only: Option<VertexId>) -> Vec<f64> {
    let n = g.num_vertices();
    let mut sums = alloc::vec![0.0; n];
    let mut prev = Vec::new();
    let mut cur = Vec::new();
    let mut timestamps = 0usize;
    for group in g.time_groups() {
        if !neighborhoods(group, interval, only, &mut cur) {
            continue;
        }
        timestamps += 1;
        if timestamps > 1 {
            accumulate(&prev, &cur, &mut sums);
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    if timestamps > 1 {
        let pairs = (timestamps - 1) as f64;
        for s in &mut sums {
            *s /= pairs;
        }
    }
    sums
}

/// Adds the overlap term of every vertex present in `a` and `b` (both sorted
/// by vertex). Vertices missing from either side have a zero denominator.
fn accumulate(a: &[(VertexId, VertexId)], b: &[(VertexId, VertexId)], sums: &mut [f64]) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (x, y) = (a[i].0, b[j].0);
        if x < y {
            i = run_end(a, i);
        } else if y < x {
            j = run_end(b, j);
        } else {
            let (ia, ib) = (run_end(a, i), run_end(b, j));
            let (na, nb) = (&a[i..ia], &b[j..ib]);
            let common = count_common(na, nb);
            sums[x] += common as f64 / libm::sqrt((na.len() * nb.len()) as f64);
            i = ia;
            j = ib;
        }
    }
}

fn run_end(list: &[(VertexId, VertexId)], start: usize) -> usize {
    let v = list[start].0;
    start + list[start..].iter().take_while(|p| p.0 == v).count()
}

fn count_common(a: &[(VertexId, VertexId)], b: &[(VertexId, VertexId)]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].1.cmp(&b[j].1) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    common
}

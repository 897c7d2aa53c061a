//! Streaming temporal PageRank.
//!
//! One chronological pass. Per admitted edge `(u, v, t, λ)`:
//! `r[u] += 1 - α`, the mass `(s[u] + 1 - α) · α` is added to both `r[v]`
//! and `s[v]`, then `s[u] *= β`. `r` is the reported score and `s` the mass
//! of walks still active at each vertex.

use alloc::format;

use super::CentralityVector;
use crate::{Error, OrderedEdgeList, Result, TimeInterval};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PageRankParams {
    /// Damping, in `(0, 1)`.
    pub alpha: f64,
    /// Decay of active mass after each transition, in `(0, 1]`.
    pub beta: f64,
}

impl Default for PageRankParams {
    fn default() -> Self {
        Self { alpha: 0.85, beta: 1.0 }
    }
}

impl PageRankParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::InvalidParameter("pagerank alpha must lie in (0, 1)"));
        }
        if !(self.beta > 0.0 && self.beta <= 1.0) {
            return Err(Error::InvalidParameter("pagerank beta must lie in (0, 1]"));
        }
        Ok(())
    }
}

pub fn temporal_pagerank(
    g: &OrderedEdgeList,
    params: PageRankParams,
    interval: TimeInterval,
) -> Result<CentralityVector> {
    params.validate()?;
    let PageRankParams { alpha, beta } = params;
    let n = g.num_vertices();
    let mut r = alloc::vec![0.0; n];
    let mut s = alloc::vec![0.0; n];
    for e in g.edges().iter().filter(|e| interval.admits(e)) {
        r[e.u] += 1.0 - alpha;
        let mass = (s[e.u] + 1.0 - alpha) * alpha;
        r[e.v] += mass;
        s[e.v] += mass;
        s[e.u] *= beta;
    }
    Ok(CentralityVector::new(format!("pagerank(alpha={alpha},beta={beta})"), interval, r))
}

//! Vertex and edge centrality measures.

mod betweenness;
mod closeness;
mod degree;
mod katz;
mod pagerank;
mod topk;

pub use betweenness::{betweenness_from_source, temporal_edge_betweenness, BetweennessWorkspace, BETWEENNESS_CHUNK};
pub use closeness::{harmonic_closeness, temporal_closeness, vertex_closeness, ClosenessOptions};
pub use degree::{temporal_degree, DegreeMode};
pub use katz::{temporal_katz, KatzParams};
pub use pagerank::{temporal_pagerank, PageRankParams};
pub use topk::{rank_order, select_top_k, topk_closeness, TopkSearch};

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::TimeInterval;

/// Per-vertex (or per-temporal-edge) scores with a short description of how
/// they were produced.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityVector {
    /// Measure name plus parameters, e.g. `closeness(fastest)`.
    pub measure: String,
    pub interval: TimeInterval,
    pub scores: Vec<f64>,
}

impl CentralityVector {
    pub fn new(measure: String, interval: TimeInterval, scores: Vec<f64>) -> Self {
        Self { measure, interval, scores }
    }

    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}

/// `id score` lines in id order.
impl fmt::Display for CentralityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.scores.iter().enumerate() {
            writeln!(f, "{i} {s}")?;
        }
        Ok(())
    }
}

//! Temporal walks and paths.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::{Error, Result, TemporalEdge, Time, VertexId};

/// Non-empty sequence of temporal edges.
///
/// Construction only checks non-emptiness; [`TemporalPath::is_valid`] tells
/// whether the sequence is a time-respecting, vertex-simple path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TemporalPath {
    edges: Vec<TemporalEdge>,
}

/// Derived quantities of a valid path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathMetrics {
    pub start: Time,
    pub arrival: Time,
    pub duration: Time,
    pub transition_sum: Time,
    pub hops: usize,
}

impl TemporalPath {
    pub fn new(edges: Vec<TemporalEdge>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::InvalidPath("a temporal path needs at least one edge"));
        }
        Ok(Self { edges })
    }

    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn source(&self) -> VertexId {
        self.edges[0].u
    }

    pub fn target(&self) -> VertexId {
        self.edges[self.edges.len() - 1].v
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices in visiting order, `len() + 1` entries.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        core::iter::once(self.edges[0].u).chain(self.edges.iter().map(|e| e.v))
    }

    /// Consecutive edges connect and each departs no earlier than the previous arrival.
    pub fn is_valid_walk(&self) -> bool {
        self.edges.windows(2).all(|w| w[0].v == w[1].u && w[0].arrival() <= w[1].t)
    }

    /// A valid walk that visits no vertex twice.
    pub fn is_valid(&self) -> bool {
        if !self.is_valid_walk() {
            return false;
        }
        let mut seen = BTreeMap::new();
        self.vertices().all(|v| seen.insert(v, ()).is_none())
    }

    pub fn metrics(&self) -> Result<PathMetrics> {
        if !self.is_valid() {
            return Err(Error::InvalidPath("edge sequence is not a time-respecting simple path"));
        }
        Ok(self.metrics_unchecked())
    }

    pub(crate) fn metrics_unchecked(&self) -> PathMetrics {
        let start = self.edges[0].t;
        let arrival = self.edges[self.edges.len() - 1].arrival();
        PathMetrics {
            start,
            arrival,
            duration: arrival - start,
            transition_sum: self.edges.iter().map(|e| e.lambda).sum(),
            hops: self.edges.len(),
        }
    }

    /// Cuts every closed sub-walk out of a valid walk.
    ///
    /// The result visits each vertex once, departs no earlier and arrives no
    /// later than the input, and is still time-respecting.
    pub fn remove_cycles(&self) -> Result<Self> {
        if !self.is_valid_walk() {
            return Err(Error::InvalidPath("edge sequence is not a temporal walk"));
        }
        // position[v] = number of kept edges when v was reached
        let mut position: BTreeMap<VertexId, usize> = BTreeMap::new();
        let mut kept: Vec<TemporalEdge> = Vec::with_capacity(self.edges.len());
        position.insert(self.edges[0].u, 0);
        for e in &self.edges {
            if let Some(&cut) = position.get(&e.v) {
                for dropped in kept.drain(cut..) {
                    position.remove(&dropped.v);
                }
                if cut == 0 {
                    // Walk returned to its source: restart it here.
                    position.clear();
                    position.insert(e.v, 0);
                }
            } else {
                kept.push(*e);
                position.insert(e.v, kept.len());
            }
        }
        if kept.is_empty() {
            return Err(Error::InvalidPath("closed walk has no simple sub-path"));
        }
        Ok(Self { edges: kept })
    }
}

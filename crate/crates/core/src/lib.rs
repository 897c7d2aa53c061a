//! Temporal graph analysis kernels.
//!
//! A temporal graph is a set of vertices and directed temporal edges
//! `(u, v, t, λ)`: the edge can be traversed starting at availability time
//! `t` and reaches `v` at `t + λ`. This crate holds the in-memory model, the
//! alternative representations (edge stream, incidence lists, time-respecting
//! static graph, directed line graph, aggregated graph) and the algorithms on
//! top of them. It is `no_std` and only needs `alloc`; file formats, the CLI
//! and thread-parallel drivers live in the `tgl` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod centrality;
pub mod correlation;
pub mod distance;
mod error;
pub mod graph;
pub mod metrics;
pub mod path;
pub mod repr;
pub mod stats;
mod types;

pub use error::Error;
pub use graph::{NormalizeOptions, OrderedEdgeList};
pub use path::{PathMetrics, TemporalPath};
pub use types::{DistanceType, TemporalEdge, Time, TimeInterval, VertexId};

pub type Result<T, E = Error> = core::result::Result<T, E>;

//! Temporal graph analysis with file formats, thread-parallel drivers and
//! the `tgl` command line on top of the `tgl-core` kernels.
//!
//! ```no_run
//! use tgl::io::load_ordered_edge_list;
//! use tgl::core::centrality::ClosenessOptions;
//! use tgl::core::{DistanceType, TimeInterval};
//!
//! let g = load_ordered_edge_list("edges.txt", true)?;
//! let closeness = tgl::parallel::closeness(&g.graph, DistanceType::Fastest, TimeInterval::UNBOUNDED, ClosenessOptions::default())?;
//! for (v, score) in closeness.scores.iter().enumerate() {
//!     println!("{} {score}", g.label(v));
//! }
//! # Ok::<(), tgl::Error>(())
//! ```

pub mod cli;
mod error;
pub mod format;
pub mod io;
pub mod parallel;

pub use error::{Error, Result};
pub use tgl_core as core;

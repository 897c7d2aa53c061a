//! Local and global temporal statistics.

mod burstiness;
mod clustering;
mod efficiency;
mod overlap;

pub use burstiness::{edge_burstiness, node_burstiness, InterContactSequence};
pub use clustering::{clustering_coefficients, temporal_clustering_coefficient};
pub use efficiency::{efficiency_from_closeness, temporal_efficiency};
pub use overlap::{global_topological_overlap, local_topological_overlaps, topological_overlap};

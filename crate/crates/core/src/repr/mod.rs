//! Alternative representations built from the edge stream.
//!
//! | representation | edge kind | size |
//! |---|---|---|
//! | [`IncidenceLists`] | temporal | `O(n + m)` |
//! | [`TrsGraph`] | static | `O(n + m)` |
//! | [`LineGraph`] | static | `O(m^2)` |
//! | [`AggregatedGraph`] | static | `O(n^2)` |
//!
//! Every representation implements `Display` with a line-oriented dump meant
//! for debugging; the format is not stable.

mod aggregated;
mod dlg;
mod ilists;
mod trs;

pub use aggregated::AggregatedGraph;
pub use dlg::{LineGraph, DEFAULT_LINE_GRAPH_BUDGET};
pub use ilists::IncidenceLists;
pub use trs::{TrsGraph, TrsNode};

use alloc::vec::Vec;

/// Offsets of a compressed sparse row layout built by counting keys.
pub(crate) fn csr_offsets(n: usize, keys: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut offsets = alloc::vec![0usize; n + 1];
    for k in keys {
        offsets[k + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    offsets
}

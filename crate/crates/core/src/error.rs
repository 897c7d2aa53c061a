use crate::{Time, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid time interval [{start}, {end}]: start exceeds end")]
    InvalidInterval { start: Time, end: Time },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },

    #[error("edges are not sorted by availability time at index {index}")]
    UnsortedEdges { index: usize },

    #[error("invalid temporal path: {0}")]
    InvalidPath(&'static str),

    #[error("directed line graph needs {required} edges, budget is {budget}")]
    LineGraphBudgetExceeded { required: usize, budget: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("latest-departure based measures need a bounded interval")]
    UnboundedInterval,

    #[error("temporal Katz walk sum diverges on a zero-transition cycle at time {time}")]
    KatzDiverges { time: Time },

    #[error("k = {k} must lie in 1..={n}")]
    InvalidK { k: usize, n: usize },

    #[error("unknown distance type")]
    UnknownDistanceType,

    #[error("score vectors differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
}

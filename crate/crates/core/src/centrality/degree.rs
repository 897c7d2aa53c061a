use alloc::string::ToString;

use super::CentralityVector;
use crate::{OrderedEdgeList, TimeInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeMode {
    In,
    Out,
}

/// Number of incident temporal edges in the given direction.
pub fn temporal_degree(g: &OrderedEdgeList, mode: DegreeMode) -> CentralityVector {
    let (degrees, name) = match mode {
        DegreeMode::In => (g.in_degrees(), "in-degree"),
        DegreeMode::Out => (g.out_degrees(), "out-degree"),
    };
    CentralityVector::new(name.to_string(), TimeInterval::UNBOUNDED, degrees.into_iter().map(|d| d as f64).collect())
}

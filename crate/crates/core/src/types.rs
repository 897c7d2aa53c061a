use core::fmt;
use core::str::FromStr;

use crate::Error;

/// Dense vertex index in `0..n`.
pub type VertexId = usize;

/// Discrete, unitless timestamp.
pub type Time = u64;

/// Directed temporal edge `(u, v, t, λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TemporalEdge {
    pub u: VertexId,
    pub v: VertexId,
    /// Availability time.
    pub t: Time,
    /// Transition time.
    pub lambda: Time,
}

impl TemporalEdge {
    pub const fn new(u: VertexId, v: VertexId, t: Time, lambda: Time) -> Self {
        Self { u, v, t, lambda }
    }

    /// Time at which the edge reaches its head.
    #[inline]
    pub const fn arrival(&self) -> Time {
        self.t.saturating_add(self.lambda)
    }

    #[inline]
    pub const fn is_self_loop(&self) -> bool {
        self.u == self.v
    }

    pub(crate) const fn reversed(&self) -> Self {
        Self::new(self.v, self.u, self.t, self.lambda)
    }
}

impl fmt::Display for TemporalEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.u, self.v, self.t, self.lambda)
    }
}

/// Restrictive time interval `[start, end]`.
///
/// An edge participates iff `t >= start` and `t + λ <= end`. The upper bound
/// may be unbounded, in which case `end()` reports [`Time::MAX`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TimeInterval {
    start: Time,
    end: Option<Time>,
}

impl TimeInterval {
    /// `[0, ∞)`.
    pub const UNBOUNDED: Self = Self { start: 0, end: None };

    pub fn new(start: Time, end: Time) -> Result<Self, Error> {
        if start > end {
            return Err(Error::InvalidInterval { start, end });
        }
        Ok(Self { start, end: Some(end) })
    }

    /// `[start, ∞)`.
    pub const fn from_start(start: Time) -> Self {
        Self { start, end: None }
    }

    #[inline]
    pub const fn start(&self) -> Time {
        self.start
    }

    #[inline]
    pub const fn end(&self) -> Time {
        match self.end {
            Some(end) => end,
            None => Time::MAX,
        }
    }

    pub const fn bounded_end(&self) -> Option<Time> {
        self.end
    }

    pub const fn is_bounded(&self) -> bool {
        self.end.is_some()
    }

    #[inline]
    pub const fn admits(&self, e: &TemporalEdge) -> bool {
        e.t >= self.start && e.arrival() <= self.end()
    }

    /// Whether `self` lies inside `other`.
    pub const fn is_within(&self, other: &TimeInterval) -> bool {
        self.start >= other.start && self.end() <= other.end()
    }
}

impl Default for TimeInterval {
    fn default() -> Self {
        Self::UNBOUNDED
    }
}

impl fmt::Display for TimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.end {
            Some(end) => write!(f, "[{}, {}]", self.start, end),
            None => write!(f, "[{}, inf)", self.start),
        }
    }
}

/// Optimality criterion for temporal paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum DistanceType {
    EarliestArrival,
    LatestDeparture,
    /// Minimum duration.
    Fastest,
    /// Minimum sum of transition times ("shortest").
    MinTransitionSum,
    MinHops,
}

impl DistanceType {
    pub const ALL: [DistanceType; 5] = [
        DistanceType::EarliestArrival,
        DistanceType::LatestDeparture,
        DistanceType::Fastest,
        DistanceType::MinTransitionSum,
        DistanceType::MinHops,
    ];

    pub const fn name(&self) -> &'static str {
        match self {
            DistanceType::EarliestArrival => "earliest-arrival",
            DistanceType::LatestDeparture => "latest-departure",
            DistanceType::Fastest => "fastest",
            DistanceType::MinTransitionSum => "min-transition-sum",
            DistanceType::MinHops => "min-hops",
        }
    }

    /// True for every criterion where smaller values are better.
    pub const fn is_minimizing(&self) -> bool {
        !matches!(self, DistanceType::LatestDeparture)
    }
}

impl fmt::Display for DistanceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DistanceType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let normalized = |c: char| if c == '_' { '-' } else { c.to_ascii_lowercase() };
        let mut buf = [0u8; 32];
        if s.len() > buf.len() || !s.is_ascii() {
            return Err(Error::UnknownDistanceType);
        }
        for (dst, c) in buf.iter_mut().zip(s.chars()) {
            *dst = normalized(c) as u8;
        }
        let key = core::str::from_utf8(&buf[..s.len()]).map_err(|_| Error::UnknownDistanceType)?;
        Ok(match key {
            "earliest-arrival" | "ea" => DistanceType::EarliestArrival,
            "latest-departure" | "ld" => DistanceType::LatestDeparture,
            "fastest" | "min-duration" => DistanceType::Fastest,
            "min-transition-sum" | "shortest" => DistanceType::MinTransitionSum,
            "min-hops" | "hops" => DistanceType::MinHops,
            _ => return Err(Error::UnknownDistanceType),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_rejects_reversed_bounds() {
        assert_eq!(TimeInterval::new(5, 3), Err(Error::InvalidInterval { start: 5, end: 3 }));
        assert!(TimeInterval::new(3, 3).is_ok());
    }

    #[test]
    fn unbounded_interval_admits_everything() {
        let e = TemporalEdge::new(0, 1, 0, Time::MAX);
        assert!(TimeInterval::UNBOUNDED.admits(&e));
        assert!(!TimeInterval::UNBOUNDED.is_bounded());
    }

    #[test]
    fn distance_type_parses_common_spellings() {
        assert_eq!("Fastest".parse::<DistanceType>(), Ok(DistanceType::Fastest));
        assert_eq!("earliest_arrival".parse::<DistanceType>(), Ok(DistanceType::EarliestArrival));
        assert_eq!("shortest".parse::<DistanceType>(), Ok(DistanceType::MinTransitionSum));
        assert!("quickest".parse::<DistanceType>().is_err());
        for kind in DistanceType::ALL {
            assert_eq!(kind.name().parse::<DistanceType>(), Ok(kind));
        }
    }
}

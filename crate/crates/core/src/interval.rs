use crate::error::CoreError;
use std::fmt;

/// A closed interval `[a, b]` with exact integer endpoints.
///
/// `[a, a]` is the empty interval: it contains no point and intersects
/// nothing. Non-empty intervals are closed on both sides, so `[0, 2]` and
/// `[2, 4]` intersect in the single point `2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub a: i64,
    pub b: i64,
}

impl Interval {
    pub fn new(a: i64, b: i64) -> Result<Self, CoreError> {
        if a > b {
            return Err(CoreError::InvalidInterval { a, b });
        }
        Ok(Interval { a, b })
    }

    /// Empty interval at coordinate `c`.
    pub fn empty(c: i64) -> Self {
        Interval { a: c, b: c }
    }

    pub fn is_empty(&self) -> bool {
        self.a == self.b
    }

    /// Point membership. Empty intervals contain nothing.
    pub fn contains(&self, p: i64) -> bool {
        self.a <= p && p <= self.b && self.a < self.b
    }

    /// Closed-interval intersection test; empty intervals intersect nothing.
    pub fn intersects(&self, other: &Interval) -> bool {
        !self.is_empty() && !other.is_empty() && self.a.max(other.a) <= self.b.min(other.b)
    }

    /// Set containment `self ⊆ other`. The empty interval is a subset of
    /// everything regardless of its coordinate.
    pub fn subset_of(&self, other: &Interval) -> bool {
        self.is_empty() || (!other.is_empty() && other.a <= self.a && self.b <= other.b)
    }

    /// Smallest interval containing both; used when merging intersecting
    /// intervals (the union of two intersecting intervals is an interval).
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            a: self.a.min(other.a),
            b: self.b.max(other.b),
        }
    }

    /// Intersection with `[lo, hi]`, collapsing to an empty interval when the
    /// overlap is empty or a single point.
    pub fn clip(&self, lo: i64, hi: i64) -> Interval {
        if self.is_empty() {
            return Interval::empty(lo);
        }
        let a = self.a.max(lo);
        let b = self.b.min(hi);
        if a >= b {
            Interval::empty(lo)
        } else {
            Interval { a, b }
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Closed interval `[lo, hi]`; `lo == hi` is a point.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInstance(format!("interval [{lo}, {hi}] is inverted")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn len(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn shifted(&self, by: &Rational) -> Interval {
        Interval { lo: &self.lo + by, hi: &self.hi + by }
    }

    /// Distance from `x` to the interval (0 inside).
    pub fn distance_to(&self, x: &Rational) -> Rational {
        if x < &self.lo {
            &self.lo - x
        } else if x > &self.hi {
            x - &self.hi
        } else {
            Rational::zero()
        }
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.lo, &self.hi).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let (lo, hi) = <(Rational, Rational)>::deserialize(deserializer)?;
        Interval::new(lo, hi).map_err(serde::de::Error::custom)
    }
}

/// Pairwise-disjoint closed intervals sorted by their left endpoints.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    /// Sorts the intervals and checks that consecutive ones are separated by
    /// a gap of positive length.
    pub fn new(mut intervals: Vec<Interval>) -> Result<Self> {
        intervals.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
        for w in intervals.windows(2) {
            if w[0].hi >= w[1].lo {
                return Err(Error::InvalidInstance(format!(
                    "intervals [{}, {}] and [{}, {}] are not disjoint",
                    w[0].lo, w[0].hi, w[1].lo, w[1].hi
                )));
            }
        }
        Ok(IntervalSet { intervals })
    }

    /// Point-intervals for each distinct value of `points`.
    pub fn from_points<'a>(points: impl IntoIterator<Item = &'a Rational>) -> Self {
        let mut xs: Vec<Rational> = points.into_iter().cloned().collect();
        xs.sort();
        xs.dedup();
        IntervalSet { intervals: xs.into_iter().map(Interval::point).collect() }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Interval> {
        self.intervals.iter()
    }

    /// `I(S)`: the smallest interval covering the whole set.
    pub fn hull(&self) -> Option<Interval> {
        let first = self.intervals.first()?;
        let last = self.intervals.last()?;
        Some(Interval { lo: first.lo.clone(), hi: last.hi.clone() })
    }

    /// Index of the interval containing `x`, by binary search.
    pub fn locate(&self, x: &Rational) -> Option<usize> {
        let idx = self.intervals.partition_point(|iv| &iv.lo <= x);
        if idx == 0 {
            return None;
        }
        self.intervals[idx - 1].contains(x).then_some(idx - 1)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.locate(x).is_some()
    }

    /// Distance from `x` to the nearest interval.
    pub fn distance_to(&self, x: &Rational) -> Option<Rational> {
        let idx = self.intervals.partition_point(|iv| &iv.lo <= x);
        let left = idx.checked_sub(1).map(|i| self.intervals[i].distance_to(x));
        let right = self.intervals.get(idx).map(|iv| iv.distance_to(x));
        match (left, right) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Smallest gap between consecutive intervals.
    pub fn min_gap(&self) -> Option<Rational> {
        self.intervals.windows(2).map(|w| &w[1].lo - &w[0].hi).min()
    }

    pub fn endpoints(&self) -> impl Iterator<Item = &Rational> {
        self.intervals.iter().flat_map(|iv| [&iv.lo, &iv.hi])
    }

    /// Image under `x -> scale * x + offset` with `scale > 0`.
    pub fn affine(&self, scale: &Rational, offset: &Rational) -> IntervalSet {
        assert!(scale.signum() > 0);
        IntervalSet {
            intervals: self
                .intervals
                .iter()
                .map(|iv| Interval { lo: &(&iv.lo * scale) + offset, hi: &(&iv.hi * scale) + offset })
                .collect(),
        }
    }
}

impl<'de> Deserialize<'de> for IntervalSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let intervals = Vec::<Interval>::deserialize(deserializer)?;
        IntervalSet::new(intervals).map_err(serde::de::Error::custom)
    }
}

impl<'a> IntoIterator for &'a IntervalSet {
    type Item = &'a Interval;
    type IntoIter = std::slice::Iter<'a, Interval>;
    fn into_iter(self) -> Self::IntoIter {
        self.intervals.iter()
    }
}

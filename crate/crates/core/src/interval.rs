//! Closed rational intervals and the handful of geometric operations the
//! constructions need.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("interval endpoints out of order: lo {lo} > hi {hi}")]
    Reversed { lo: Rational, hi: Rational },
    #[error("negative thickening factor {0}")]
    NegativeThickening(Rational),
}

/// Closed interval `[lo, hi]` with `lo <= hi`.
///
/// Degenerate intervals (`lo == hi`) are representable so outcome points can
/// be reported; game moves are checked for positive length separately.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

#[derive(Deserialize)]
struct RawInterval {
    lo: Rational,
    hi: Rational,
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawInterval::deserialize(deserializer)?;
        Interval::new(raw.lo, raw.hi).map_err(serde::de::Error::custom)
    }
}

/// How two closed intervals sit relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Disjoint,
    Overlap,
    /// The first interval is a proper subset of the second.
    FirstWithinSecond,
    /// The second interval is a proper subset of the first.
    SecondWithinFirst,
    Equal,
}

impl Relation {
    /// The relation seen from the other argument.
    pub fn swapped(self) -> Relation {
        match self {
            Relation::FirstWithinSecond => Relation::SecondWithinFirst,
            Relation::SecondWithinFirst => Relation::FirstWithinSecond,
            other => other,
        }
    }
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, IntervalError> {
        if lo > hi {
            return Err(IntervalError::Reversed { lo, hi });
        }
        Ok(Interval { lo, hi })
    }

    /// `[lo, lo + len]`; `len` must be non-negative.
    pub fn with_length(lo: Rational, len: &Rational) -> Self {
        assert!(!len.is_negative(), "negative interval length {len}");
        let hi = &lo + len;
        Interval { lo, hi }
    }

    /// Interval of length `len` centered at `center`.
    pub fn centered(center: &Rational, len: &Rational) -> Self {
        assert!(!len.is_negative(), "negative interval length {len}");
        let half = len / Rational::from_integer(2);
        Interval { lo: center - &half, hi: center + &half }
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

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn center(&self) -> Rational {
        Rational::midpoint(&self.lo, &self.hi)
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// Translate by `q`: `[lo + q, hi + q]`.
    pub fn shift(&self, q: &Rational) -> Interval {
        Interval { lo: &self.lo + q, hi: &self.hi + q }
    }

    /// The `d`-thickening `[a - d(b-a), b + d(b-a)]`.
    pub fn delta_thickening(&self, d: &Rational) -> Result<Interval, IntervalError> {
        if d.is_negative() {
            return Err(IntervalError::NegativeThickening(d.clone()));
        }
        Ok(self.expand(&(d * self.length())))
    }

    /// Grow by `pad` on both sides.
    pub fn expand(&self, pad: &Rational) -> Interval {
        Interval { lo: &self.lo - pad, hi: &self.hi + pad }
    }

    pub fn contains_point(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Closed intervals intersect, touching endpoints included.
    pub fn overlaps(&self, other: &Interval) -> bool {
        !(self.hi < other.lo || other.hi < self.lo)
    }

    pub fn is_disjoint(&self, other: &Interval) -> bool {
        !self.overlaps(other)
    }

    pub fn relate(&self, other: &Interval) -> Relation {
        relate(self, other)
    }
}

/// Exact classification of how `i` sits relative to `j`.
pub fn relate(i: &Interval, j: &Interval) -> Relation {
    if i == j {
        Relation::Equal
    } else if i.is_disjoint(j) {
        Relation::Disjoint
    } else if j.contains(i) {
        Relation::FirstWithinSecond
    } else if i.contains(j) {
        Relation::SecondWithinFirst
    } else {
        Relation::Overlap
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
pub(crate) fn iv(lo: Rational, hi: Rational) -> Interval {
    Interval::new(lo, hi).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn shift_examples() {
        assert_eq!(iv(q(0, 1), q(1, 1)).shift(&q(0, 1)), iv(q(0, 1), q(1, 1)));
        assert_eq!(iv(q(0, 1), q(1, 1)).shift(&q(1, 2)), iv(q(1, 2), q(3, 2)));
        assert_eq!(iv(q(4, 200), q(5, 200)).shift(&q(1, 50)), iv(q(8, 200), q(9, 200)));
    }

    #[test]
    fn thickening_examples() {
        let unit = iv(q(0, 1), q(1, 1));
        assert_eq!(unit.delta_thickening(&q(0, 1)).unwrap(), unit);
        assert_eq!(unit.delta_thickening(&q(1, 4)).unwrap(), iv(q(-1, 4), q(5, 4)));
        assert_eq!(
            iv(q(2, 1), q(4, 1)).delta_thickening(&q(1, 12)).unwrap(),
            iv(q(11, 6), q(25, 6))
        );
        assert!(matches!(
            unit.delta_thickening(&q(-1, 10)),
            Err(IntervalError::NegativeThickening(_))
        ));
    }

    #[test]
    fn relate_examples() {
        assert_eq!(relate(&iv(q(0, 1), q(1, 1)), &iv(q(1, 1), q(2, 1))), Relation::Overlap);
        assert_eq!(relate(&iv(q(0, 1), q(1, 1)), &iv(q(2, 1), q(3, 1))), Relation::Disjoint);
        assert_eq!(
            relate(&iv(q(1, 4), q(1, 2)), &iv(q(0, 1), q(1, 1))),
            Relation::FirstWithinSecond
        );
        assert_eq!(
            relate(&iv(q(0, 1), q(1, 1)), &iv(q(1, 4), q(1, 2))),
            Relation::SecondWithinFirst
        );
        assert_eq!(relate(&iv(q(0, 1), q(1, 1)), &iv(q(0, 1), q(1, 1))), Relation::Equal);
    }

    #[test]
    fn reversed_endpoints_rejected() {
        assert!(Interval::new(q(1, 1), q(0, 1)).is_err());
        assert!(Interval::new(q(1, 1), q(1, 1)).unwrap().is_degenerate());
    }

    #[test]
    fn serde_shape() {
        let i = iv(q(-3, 40), q(1, 2));
        let json = serde_json::to_string(&i).unwrap();
        assert_eq!(json, r#"{"lo":"-3/40","hi":"1/2"}"#);
        assert_eq!(serde_json::from_str::<Interval>(&json).unwrap(), i);
        assert!(serde_json::from_str::<Interval>(r#"{"lo":"1/1","hi":"0/1"}"#).is_err());
    }
}

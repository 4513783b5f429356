//! Subunitary sets: finite unions of closed subintervals of `[0, 1]`.
//!
//! Every truth/indeterminacy/falsehood component is one of these. Values are
//! kept in canonical form — intervals sorted ascending, pairwise disjoint,
//! touching endpoints merged — so structural equality is decidable.

use std::fmt;

use crate::error::Error;

/// A closed interval `[lo, hi]` with `0 <= lo <= hi <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self, Error> {
        if !(lo.is_finite() && hi.is_finite()) || lo < 0.0 || hi > 1.0 || lo > hi {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    /// The degenerate interval `[a, a]`.
    pub fn point(a: f64) -> Result<Self, Error> {
        if !a.is_finite() || !(0.0..=1.0).contains(&a) {
            return Err(Error::OutOfRange(a));
        }
        Ok(Self { lo: a, hi: a })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    fn distance_to(&self, x: f64) -> f64 {
        if x < self.lo {
            self.lo - x
        } else if x > self.hi {
            x - self.hi
        } else {
            0.0
        }
    }
}

/// A non-empty finite union of closed intervals within `[0, 1]`, in canonical
/// form. A crisp number is the degenerate set `[a, a]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubunitarySet {
    intervals: Vec<Interval>,
}

impl SubunitarySet {
    /// Builds a set from explicit intervals. Touching intervals merge;
    /// genuinely overlapping input is rejected. This is the constructor the
    /// text syntax goes through.
    pub fn new(intervals: Vec<Interval>) -> Result<Self, Error> {
        if intervals.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut sorted = intervals;
        sorted.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
        for pair in sorted.windows(2) {
            if pair[1].lo < pair[0].hi {
                return Err(Error::OverlappingIntervals {
                    a_lo: pair[0].lo,
                    a_hi: pair[0].hi,
                    b_lo: pair[1].lo,
                    b_hi: pair[1].hi,
                });
            }
        }
        Ok(Self {
            intervals: merge_sorted(sorted),
        })
    }

    /// Canonicalizes an arbitrary union: sorts and merges overlapping and
    /// touching intervals silently. Operator results are built through here.
    pub fn from_union(intervals: Vec<Interval>) -> Self {
        assert!(!intervals.is_empty(), "union of no intervals");
        let mut sorted = intervals;
        sorted.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(a.hi.total_cmp(&b.hi)));
        Self {
            intervals: merge_sorted(sorted),
        }
    }

    /// Promotes a crisp number `a` to the degenerate set `[a, a]`.
    pub fn crisp(a: f64) -> Result<Self, Error> {
        Ok(Self {
            intervals: vec![Interval::point(a)?],
        })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn inf(&self) -> f64 {
        self.intervals[0].lo
    }

    pub fn sup(&self) -> f64 {
        self.intervals[self.intervals.len() - 1].hi
    }

    pub fn is_crisp(&self) -> bool {
        self.intervals.len() == 1 && self.intervals[0].is_point()
    }

    /// The crisp value, when the set is a single point.
    pub fn as_crisp(&self) -> Option<f64> {
        if self.is_crisp() {
            Some(self.intervals[0].lo)
        } else {
            None
        }
    }

    /// Membership of a point, within absolute tolerance `eps`.
    pub fn contains(&self, x: f64, eps: f64) -> bool {
        self.intervals
            .iter()
            .any(|iv| iv.lo - eps <= x && x <= iv.hi + eps)
    }

    /// Structural equality within `eps`: same number of canonical intervals,
    /// every endpoint within `eps` of its counterpart.
    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.intervals.len() == other.intervals.len()
            && self
                .intervals
                .iter()
                .zip(&other.intervals)
                .all(|(a, b)| (a.lo - b.lo).abs() <= eps && (a.hi - b.hi).abs() <= eps)
    }

    /// Hausdorff distance between two sets. Used to pick the nearest family
    /// member when a topology closure check fails.
    pub fn hausdorff(&self, other: &Self) -> f64 {
        directed_hausdorff(self, other).max(directed_hausdorff(other, self))
    }
}

fn merge_sorted(sorted: Vec<Interval>) -> Vec<Interval> {
    let mut out: Vec<Interval> = Vec::with_capacity(sorted.len());
    for iv in sorted {
        match out.last_mut() {
            Some(last) if iv.lo <= last.hi => {
                if iv.hi > last.hi {
                    last.hi = iv.hi;
                }
            }
            _ => out.push(iv),
        }
    }
    out
}

fn directed_hausdorff(from: &SubunitarySet, to: &SubunitarySet) -> f64 {
    // sup over x in `from` of dist(x, `to`); the sup sits at an interval
    // endpoint of `from` or at a gap midpoint of `to` that lies inside `from`.
    let dist = |x: f64| {
        to.intervals
            .iter()
            .map(|iv| iv.distance_to(x))
            .fold(f64::INFINITY, f64::min)
    };
    let mut best: f64 = 0.0;
    for iv in &from.intervals {
        best = best.max(dist(iv.lo)).max(dist(iv.hi));
        for gap in to.intervals.windows(2) {
            let mid = (gap[0].hi + gap[1].lo) / 2.0;
            if mid > iv.lo && mid < iv.hi {
                best = best.max(dist(mid));
            }
        }
    }
    best
}

/// Renders a number with up to 12 significant digits and no trailing zeros.
/// This is the canonical number form used by every text format in the crate.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("rounded float");
    format!("{rounded}")
}

impl fmt::Display for SubunitarySet {
    /// Canonical text: crisp `0.6`, interval `[0.2,0.5]`, union
    /// `[0.1,0.2]u[0.4,0.5]`. A degenerate single interval prints as the
    /// crisp number.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(a) = self.as_crisp() {
            return write!(f, "{}", format_number(a));
        }
        for (idx, iv) in self.intervals.iter().enumerate() {
            if idx > 0 {
                write!(f, "u")?;
            }
            write!(f, "[{},{}]", format_number(iv.lo), format_number(iv.hi))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SubunitarySet {
    type Err = crate::dsl::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::dsl::parse_component(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn crisp_promotion_is_degenerate() {
        let s = SubunitarySet::crisp(0.7).unwrap();
        assert_eq!(s.inf(), 0.7);
        assert_eq!(s.sup(), 0.7);
        assert!(s.is_crisp());
        assert!(SubunitarySet::crisp(0.0).unwrap().is_crisp());
        assert!(SubunitarySet::crisp(1.0).unwrap().is_crisp());
        assert_eq!(SubunitarySet::crisp(1.2), Err(Error::OutOfRange(1.2)));
        assert_eq!(SubunitarySet::crisp(-0.1), Err(Error::OutOfRange(-0.1)));
    }

    #[test]
    fn endpoints_of_canonical_form() {
        let s = SubunitarySet::new(vec![iv(0.2, 0.3), iv(0.5, 0.8)]).unwrap();
        assert_eq!(s.inf(), 0.2);
        assert_eq!(s.sup(), 0.8);
        let full = SubunitarySet::new(vec![iv(0.0, 1.0)]).unwrap();
        assert_eq!(full.inf(), 0.0);
        assert_eq!(full.sup(), 1.0);
    }

    #[test]
    fn touching_intervals_merge_on_construction() {
        let s = SubunitarySet::new(vec![iv(0.1, 0.3), iv(0.3, 0.5)]).unwrap();
        assert_eq!(s.intervals().len(), 1);
        assert_eq!(s.inf(), 0.1);
        assert_eq!(s.sup(), 0.5);
    }

    #[test]
    fn overlapping_input_rejected_by_new_but_merged_by_from_union() {
        let err = SubunitarySet::new(vec![iv(0.1, 0.4), iv(0.3, 0.5)]);
        assert!(matches!(err, Err(Error::OverlappingIntervals { .. })));
        let s = SubunitarySet::from_union(vec![iv(0.3, 0.5), iv(0.1, 0.4)]);
        assert_eq!(s.intervals().len(), 1);
        assert_eq!((s.inf(), s.sup()), (0.1, 0.5));
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let s = SubunitarySet::new(vec![iv(0.1, 0.2), iv(0.4, 0.5)]).unwrap();
        let again = SubunitarySet::new(s.intervals().to_vec()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn membership_and_approx_eq() {
        let s = SubunitarySet::new(vec![iv(0.1, 0.2), iv(0.4, 0.5)]).unwrap();
        assert!(s.contains(0.15, 0.0));
        assert!(!s.contains(0.3, 1e-9));
        assert!(s.contains(0.2 + 5e-10, 1e-9));
        let t = SubunitarySet::new(vec![iv(0.1, 0.2 + 1e-12), iv(0.4, 0.5)]).unwrap();
        assert!(s.approx_eq(&t, 1e-9));
        let gap = SubunitarySet::new(vec![iv(0.1, 0.5)]).unwrap();
        assert!(!s.approx_eq(&gap, 1e-9));
    }

    #[test]
    fn hausdorff_distance() {
        let a = SubunitarySet::new(vec![iv(0.0, 1.0)]).unwrap();
        let b = SubunitarySet::new(vec![iv(0.0, 0.0), iv(1.0, 1.0)]).unwrap();
        assert!((a.hausdorff(&b) - 0.5).abs() < 1e-15);
        let c = SubunitarySet::new(vec![iv(0.2, 0.3)]).unwrap();
        let d = SubunitarySet::new(vec![iv(0.5, 0.6)]).unwrap();
        assert!((c.hausdorff(&d) - 0.3).abs() < 1e-15);
        assert_eq!(c.hausdorff(&c), 0.0);
    }

    #[test]
    fn number_formatting() {
        assert_eq!(format_number(0.3), "0.3");
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(0.1 + 0.2), "0.3");
        assert_eq!(format_number(0.2475), "0.2475");
        // twelve significant digits kept, thirteenth rounded away
        assert_eq!(format_number(0.1234567890123), "0.123456789012");
    }

    #[test]
    fn display_forms() {
        let s = SubunitarySet::new(vec![iv(0.1, 0.2), iv(0.4, 0.5)]).unwrap();
        assert_eq!(s.to_string(), "[0.1,0.2]u[0.4,0.5]");
        assert_eq!(SubunitarySet::crisp(0.5).unwrap().to_string(), "0.5");
        let single = SubunitarySet::new(vec![iv(0.2, 0.5)]).unwrap();
        assert_eq!(single.to_string(), "[0.2,0.5]");
    }
}

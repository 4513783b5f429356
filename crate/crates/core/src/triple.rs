//! Neutrosophic truth values: `(T, I, F)` triples with subunitary-set or
//! crisp components, plus the componentwise partial order.

use std::fmt;

use crate::error::Error;
use crate::set::{format_number, SubunitarySet};

/// A `(T, I, F)` value whose components are subunitary sets. The components
/// are independent: their sums may fall below, hit, or exceed 1.
#[derive(Debug, Clone, PartialEq)]
pub struct NeutroTriple {
    pub t: SubunitarySet,
    pub i: SubunitarySet,
    pub f: SubunitarySet,
}

impl NeutroTriple {
    pub fn new(t: SubunitarySet, i: SubunitarySet, f: SubunitarySet) -> Self {
        Self { t, i, f }
    }

    /// A triple of three crisp components.
    pub fn crisp(t: f64, i: f64, f: f64) -> Result<Self, Error> {
        Ok(Self {
            t: SubunitarySet::crisp(t)?,
            i: SubunitarySet::crisp(i)?,
            f: SubunitarySet::crisp(f)?,
        })
    }

    /// The falsehood constant `0 = (0, 0, 1)`.
    pub fn zero() -> Self {
        Self::crisp(0.0, 0.0, 1.0).expect("constant")
    }

    /// The truth constant `1 = (1, 0, 0)`.
    pub fn one() -> Self {
        Self::crisp(1.0, 0.0, 0.0).expect("constant")
    }

    /// The partial order: `x <= y` iff T grows and I, F shrink, comparing
    /// both inf and sup of each component (six inequalities).
    pub fn leq(&self, other: &Self) -> bool {
        self.t.inf() <= other.t.inf()
            && self.t.sup() <= other.t.sup()
            && self.i.inf() >= other.i.inf()
            && self.i.sup() >= other.i.sup()
            && self.f.inf() >= other.f.inf()
            && self.f.sup() >= other.f.sup()
    }

    pub fn is_crisp(&self) -> bool {
        self.t.is_crisp() && self.i.is_crisp() && self.f.is_crisp()
    }

    /// The crisp view, when every component is a point.
    pub fn as_crisp(&self) -> Option<CrispTriple> {
        Some(CrispTriple {
            t: self.t.as_crisp()?,
            i: self.i.as_crisp()?,
            f: self.f.as_crisp()?,
        })
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.t.approx_eq(&other.t, eps)
            && self.i.approx_eq(&other.i, eps)
            && self.f.approx_eq(&other.f, eps)
    }
}

impl fmt::Display for NeutroTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.t, self.i, self.f)
    }
}

impl std::str::FromStr for NeutroTriple {
    type Err = crate::dsl::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        crate::dsl::parse_triple(s)
    }
}

/// A crisp `(t, i, f)` value. This is the domain of the priority-routed
/// operators; user-facing construction validates `[0, 1]`, while operator
/// outputs use [`CrispTriple::raw`] because products of non-normalized
/// inputs can legitimately exceed 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrispTriple {
    pub t: f64,
    pub i: f64,
    pub f: f64,
}

impl CrispTriple {
    pub fn new(t: f64, i: f64, f: f64) -> Result<Self, Error> {
        for v in [t, i, f] {
            if !v.is_finite() || !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfRange(v));
            }
        }
        Ok(Self { t, i, f })
    }

    /// Unvalidated construction for operator results.
    pub fn raw(t: f64, i: f64, f: f64) -> Self {
        Self { t, i, f }
    }

    /// Back to set components; fails if a component left `[0, 1]`.
    pub fn promote(&self) -> Result<NeutroTriple, Error> {
        NeutroTriple::crisp(self.t, self.i, self.f)
    }
}

impl fmt::Display for CrispTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{},{},{}}}",
            format_number(self.t),
            format_number(self.i),
            format_number(self.f)
        )
    }
}

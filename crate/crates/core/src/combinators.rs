//! Component-level norm/conorm arithmetic on subunitary sets.
//!
//! Three scalar families each way — algebraic product, bounded, and min/max —
//! extended from crisp numbers to interval unions by the monotone-endpoint
//! rule: all six formulas are non-decreasing in each argument on `[0, 1]²`,
//! so the image of a box `[a,b] × [c,d]` is `[f(a,c), f(b,d)]`.

use std::fmt;
use std::str::FromStr;

use crate::set::{Interval, SubunitarySet};

/// Conjunction-side scalar operator on components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentNorm {
    Algebraic,
    Bounded,
    Min,
}

/// Disjunction-side scalar operator on components.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentConorm {
    Algebraic,
    Bounded,
    Max,
}

impl ComponentNorm {
    pub fn apply(self, x: f64, y: f64) -> f64 {
        match self {
            ComponentNorm::Algebraic => x * y,
            ComponentNorm::Bounded => (x + y - 1.0).max(0.0),
            ComponentNorm::Min => x.min(y),
        }
    }
}

impl ComponentConorm {
    pub fn apply(self, x: f64, y: f64) -> f64 {
        match self {
            // the 0/1 arguments are absorbing/neutral exactly; the general
            // formula only reaches them to within an ulp
            ComponentConorm::Algebraic => {
                if x == 0.0 {
                    y
                } else if y == 0.0 {
                    x
                } else if x == 1.0 || y == 1.0 {
                    1.0
                } else {
                    (x + y - x * y).min(1.0)
                }
            }
            ComponentConorm::Bounded => (x + y).min(1.0),
            ComponentConorm::Max => x.max(y),
        }
    }
}

impl fmt::Display for ComponentNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentNorm::Algebraic => "algebraic",
            ComponentNorm::Bounded => "bounded",
            ComponentNorm::Min => "min",
        })
    }
}

impl fmt::Display for ComponentConorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentConorm::Algebraic => "algebraic",
            ComponentConorm::Bounded => "bounded",
            ComponentConorm::Max => "max",
        })
    }
}

impl FromStr for ComponentNorm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "algebraic" => Ok(ComponentNorm::Algebraic),
            "bounded" => Ok(ComponentNorm::Bounded),
            "min" => Ok(ComponentNorm::Min),
            other => Err(format!(
                "unknown norm {other:?}; expected algebraic, bounded, or min"
            )),
        }
    }
}

impl FromStr for ComponentConorm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "algebraic" => Ok(ComponentConorm::Algebraic),
            "bounded" => Ok(ComponentConorm::Bounded),
            "max" => Ok(ComponentConorm::Max),
            other => Err(format!(
                "unknown conorm {other:?}; expected algebraic, bounded, or max"
            )),
        }
    }
}

/// Monotone-endpoint extension of a scalar operator to interval unions:
/// apply to the endpoints of every interval pair, union, canonicalize.
pub(crate) fn extend_monotone(
    a: &SubunitarySet,
    b: &SubunitarySet,
    f: impl Fn(f64, f64) -> f64,
) -> SubunitarySet {
    let mut pieces = Vec::with_capacity(a.intervals().len() * b.intervals().len());
    for ia in a.intervals() {
        for ib in b.intervals() {
            let lo = f(ia.lo(), ib.lo());
            let hi = f(ia.hi(), ib.hi());
            // rounding can invert endpoints whose true values tie within an ulp
            pieces.push(
                Interval::new(lo.min(hi), lo.max(hi)).expect("monotone image within [0,1]"),
            );
        }
    }
    SubunitarySet::from_union(pieces)
}

pub fn tnorm_apply(kind: ComponentNorm, a: &SubunitarySet, b: &SubunitarySet) -> SubunitarySet {
    extend_monotone(a, b, |x, y| kind.apply(x, y))
}

pub fn tconorm_apply(
    kind: ComponentConorm,
    a: &SubunitarySet,
    b: &SubunitarySet,
) -> SubunitarySet {
    extend_monotone(a, b, |x, y| kind.apply(x, y))
}

/// Pointwise reflection `a -> 1 - a`; interval order reverses.
pub fn component_negate(a: &SubunitarySet) -> SubunitarySet {
    let pieces = a
        .intervals()
        .iter()
        .map(|iv| Interval::new(1.0 - iv.hi(), 1.0 - iv.lo()).expect("reflection within [0,1]"))
        .collect();
    SubunitarySet::from_union(pieces)
}

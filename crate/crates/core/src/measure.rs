//! Vector norms, normalization, and the intuitionistic / paraconsistent /
//! plausibly-normalized classification.
//!
//! For interval-valued triples the component sum is itself a set: the
//! Minkowski sum `T ⊕ I ⊕ F`, a finite union of intervals inside `[0, 3]`.
//! Classification asks where that set sits relative to 1 — and a union with
//! a gap can straddle 1 without containing it, which is why membership of 1
//! is tracked gap-aware rather than by endpoint straddling.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::set::format_number;
use crate::triple::{CrispTriple, NeutroTriple};
use crate::DEFAULT_EPSILON;

/// How the target norm of an operation result is derived from the operand
/// norms. `Custom` carries an opaque combiner; it must return a positive
/// value for positive inputs.
#[derive(Clone)]
pub enum NormRule {
    Product,
    Average,
    Custom(Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>),
}

impl fmt::Debug for NormRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormRule::Product => f.write_str("Product"),
            NormRule::Average => f.write_str("Average"),
            NormRule::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

impl std::str::FromStr for NormRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "product" => Ok(NormRule::Product),
            "average" => Ok(NormRule::Average),
            other => Err(format!("unknown rule {other:?}; expected product or average")),
        }
    }
}

/// The component sum of a crisp triple.
pub fn vector_norm(x: &CrispTriple) -> f64 {
    x.t + x.i + x.f
}

pub fn combine_norms(rule: &NormRule, n_x: f64, n_y: f64) -> f64 {
    match rule {
        NormRule::Product => n_x * n_y,
        NormRule::Average => (n_x + n_y) / 2.0,
        NormRule::Custom(f) => f(n_x, n_y),
    }
}

/// Where the component-sum set of a triple sits relative to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumProfile {
    pub min_sum: f64,
    pub max_sum: f64,
    /// 1 is a member of the Minkowski sum (gap-aware, within epsilon).
    pub attains_one: bool,
    pub can_be_subnormal: bool,
    pub can_be_overnormal: bool,
}

/// The Minkowski sum `T ⊕ I ⊕ F` as a sorted, merged list of `(lo, hi)`
/// intervals in `[0, 3]`.
pub fn sum_support(x: &NeutroTriple) -> Vec<(f64, f64)> {
    let mut acc: Vec<(f64, f64)> = x
        .t
        .intervals()
        .iter()
        .map(|iv| (iv.lo(), iv.hi()))
        .collect();
    for comp in [&x.i, &x.f] {
        let mut next = Vec::with_capacity(acc.len() * comp.intervals().len());
        for &(lo, hi) in &acc {
            for iv in comp.intervals() {
                next.push((lo + iv.lo(), hi + iv.hi()));
            }
        }
        next.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(next.len());
        for (lo, hi) in next {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        acc = merged;
    }
    acc
}

pub fn sum_profile(x: &NeutroTriple) -> SumProfile {
    sum_profile_eps(x, DEFAULT_EPSILON)
}

pub fn sum_profile_eps(x: &NeutroTriple, eps: f64) -> SumProfile {
    let support = sum_support(x);
    let min_sum = support[0].0;
    let max_sum = support[support.len() - 1].1;
    let attains_one = support
        .iter()
        .any(|&(lo, hi)| lo - eps <= 1.0 && 1.0 <= hi + eps);
    SumProfile {
        min_sum,
        max_sum,
        attains_one,
        can_be_subnormal: min_sum < 1.0,
        can_be_overnormal: max_sum > 1.0,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Intuitionistic,
    Paraconsistent,
    PlausiblyNormalized,
    /// The sum set straddles 1 but a gap excludes it. Interval unions make
    /// the classical trichotomy non-exhaustive.
    Indeterminate,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Intuitionistic => "Intuitionistic",
            Classification::Paraconsistent => "Paraconsistent",
            Classification::PlausiblyNormalized => "PlausiblyNormalized",
            Classification::Indeterminate => "Indeterminate",
        })
    }
}

pub fn classify(x: &NeutroTriple) -> Classification {
    classify_eps(x, DEFAULT_EPSILON)
}

pub fn classify_eps(x: &NeutroTriple, eps: f64) -> Classification {
    let profile = sum_profile_eps(x, eps);
    if profile.attains_one {
        Classification::PlausiblyNormalized
    } else if profile.max_sum < 1.0 {
        Classification::Intuitionistic
    } else if profile.min_sum > 1.0 {
        Classification::Paraconsistent
    } else {
        Classification::Indeterminate
    }
}

/// A rescaled triple. Components stay in `[0, S]`; nothing is clamped, so a
/// component may exceed 1 when the target norm exceeds the raw sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedTriple {
    pub t: f64,
    pub i: f64,
    pub f: f64,
}

impl NormalizedTriple {
    pub fn sum(&self) -> f64 {
        self.t + self.i + self.f
    }

    pub fn exceeds_unit(&self) -> bool {
        self.t > 1.0 || self.i > 1.0 || self.f > 1.0
    }
}

impl fmt::Display for NormalizedTriple {
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

/// Rescales a crisp triple so its component sum equals `target_norm`, by
/// multiplying each component with `S / (t + i + f)`. A zero-sum triple
/// cannot be rescaled.
pub fn normalize(raw: &CrispTriple, target_norm: f64) -> Result<NormalizedTriple, Error> {
    if target_norm <= 0.0 || target_norm.is_nan() {
        return Err(Error::NonPositiveNorm(target_norm));
    }
    let sum = vector_norm(raw);
    if sum <= 0.0 {
        return Err(Error::ZeroSum);
    }
    let scale = target_norm / sum;
    Ok(NormalizedTriple {
        t: raw.t * scale,
        i: raw.i * scale,
        f: raw.f * scale,
    })
}

//! Priority-routed operators on crisp triples and the composition k-law.
//!
//! Expanding the product `∏ (T_i + I_i + F_i)` over k variables yields 3^k
//! monomials, one per assignment of a component tag to each variable. A
//! [`Priority`] — a strict weakest-to-strongest order on the tags T, I, F —
//! routes every monomial to the strongest tag appearing among its factors.
//! Summing per target component gives a k-ary conjunction/disjunction family:
//! `TIF` is the prudent conjunction, `FIT` the matching disjunction, `FTI`
//! the indeterminacy-focused disjunction, `ITF` the optimistic conjunction.
//!
//! [`routed_product`] evaluates the family in closed form (prefix-product
//! differences, any arity); [`routing_oracle`] evaluates it by literal 3^k
//! enumeration and exists solely to cross-check the closed form. Both paths
//! preserve the vector norm: the output components sum to the product of the
//! input component sums.
//!
//! The composition k-law [`klaw_pair`] (and [`klaw_triple`] for three
//! vectors) is the underlying sum over mixed products in which every
//! participating vector contributes at least one factor and each product has
//! exactly k factors.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::triple::CrispTriple;

/// Component tag, in canonical T, I, F order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tag {
    T,
    I,
    F,
}

pub const TAGS: [Tag; 3] = [Tag::T, Tag::I, Tag::F];

impl Tag {
    fn index(self) -> usize {
        match self {
            Tag::T => 0,
            Tag::I => 1,
            Tag::F => 2,
        }
    }

    fn letter(self) -> char {
        match self {
            Tag::T => 'T',
            Tag::I => 'I',
            Tag::F => 'F',
        }
    }
}

/// A strict total order on the three tags, listed weakest to strongest.
/// Spelled as a three-letter string (`TIF`, `FIT`, ...) in flags and text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Priority {
    weakest_to_strongest: [Tag; 3],
}

impl Priority {
    pub fn new(weakest_to_strongest: [Tag; 3]) -> Result<Self, Error> {
        let mut seen = [false; 3];
        for tag in weakest_to_strongest {
            if seen[tag.index()] {
                return Err(Error::InvalidPriority);
            }
            seen[tag.index()] = true;
        }
        Ok(Self {
            weakest_to_strongest,
        })
    }

    pub fn order(&self) -> [Tag; 3] {
        self.weakest_to_strongest
    }

    /// 0 = weakest, 2 = strongest.
    pub fn rank(&self, tag: Tag) -> usize {
        self.weakest_to_strongest
            .iter()
            .position(|&t| t == tag)
            .expect("priority is a permutation")
    }

    /// All six orders, in lexicographic spelling.
    pub fn all() -> [Priority; 6] {
        ["FIT", "FTI", "IFT", "ITF", "TFI", "TIF"]
            .map(|s| s.parse().expect("valid priority spelling"))
    }
}

impl FromStr for Priority {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tags: Vec<Tag> = s
            .chars()
            .map(|c| match c {
                'T' => Ok(Tag::T),
                'I' => Ok(Tag::I),
                'F' => Ok(Tag::F),
                _ => Err(Error::InvalidPriority),
            })
            .collect::<Result<_, _>>()?;
        let arr: [Tag; 3] = tags.try_into().map_err(|_| Error::InvalidPriority)?;
        Priority::new(arr)
    }
}

impl fmt::Display for Priority {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for tag in self.weakest_to_strongest {
            write!(f, "{}", tag.letter())?;
        }
        Ok(())
    }
}

fn component(v: &CrispTriple, tag: Tag) -> f64 {
    match tag {
        Tag::T => v.t,
        Tag::I => v.i,
        Tag::F => v.f,
    }
}

/// The three component vectors of a variable list: one T, I, and F sequence
/// with one entry per variable. This is the shape the composition k-law
/// consumes.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentVectors {
    t: Vec<f64>,
    i: Vec<f64>,
    f: Vec<f64>,
}

impl ComponentVectors {
    pub fn new(t: Vec<f64>, i: Vec<f64>, f: Vec<f64>) -> Result<Self, Error> {
        if t.len() != i.len() {
            return Err(Error::LengthMismatch {
                left: t.len(),
                right: i.len(),
            });
        }
        if t.len() != f.len() {
            return Err(Error::LengthMismatch {
                left: t.len(),
                right: f.len(),
            });
        }
        if t.len() < 2 {
            return Err(Error::TooFewVariables {
                got: t.len(),
                min: 2,
            });
        }
        Ok(Self { t, i, f })
    }

    pub fn from_triples(vars: &[CrispTriple]) -> Result<Self, Error> {
        Self::new(
            vars.iter().map(|v| v.t).collect(),
            vars.iter().map(|v| v.i).collect(),
            vars.iter().map(|v| v.f).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    pub fn vector(&self, tag: Tag) -> &[f64] {
        match tag {
            Tag::T => &self.t,
            Tag::I => &self.i,
            Tag::F => &self.f,
        }
    }

    /// The two-vector k-law over the chosen component vectors.
    pub fn klaw_pair(&self, a: Tag, b: Tag) -> Result<f64, Error> {
        klaw_pair(self.vector(a), self.vector(b))
    }

    /// The three-vector k-law over T, I, and F.
    pub fn klaw_triple(&self) -> Result<f64, Error> {
        klaw_triple(&self.t, &self.i, &self.f)
    }
}

/// Enumeration guard for the oracle: 3^k monomials.
pub const MAX_ORACLE_ARITY: usize = 12;
/// Enumeration guard for the two-vector k-law: 2^k assignments.
pub const MAX_PAIR_ARITY: usize = 24;
/// Enumeration guard for the three-vector k-law: 3^k assignments.
pub const MAX_TRIPLE_ARITY: usize = 15;

/// Product over a slice in a permutation-independent order (factors sorted
/// ascending first), so the routed operators are exactly invariant under
/// reordering their inputs.
fn stable_product(factors: &mut [f64]) -> f64 {
    factors.sort_by(f64::total_cmp);
    factors.iter().product()
}

/// The k-ary routed operator in closed form. With order `w1 ≺ w2 ≺ w3`:
/// component `w1` collects `∏ w1_j`, component `w2` collects
/// `∏ (w1_j + w2_j) − ∏ w1_j`, and `w3` the remaining mass, so the output
/// sums to `∏ (T_j + I_j + F_j)` by construction.
///
/// Outputs of non-normalized inputs may exceed 1; they are returned raw.
///
/// ```
/// use neutro_core::ordered::{routed_product, Priority};
/// use neutro_core::CrispTriple;
///
/// let order: Priority = "TIF".parse().unwrap();
/// let x = CrispTriple::new(0.6, 0.3, 0.1).unwrap();
/// let y = CrispTriple::new(0.5, 0.2, 0.3).unwrap();
/// let out = routed_product(order, &[x, y]).unwrap();
/// assert!((out.t - 0.30).abs() < 1e-12);
/// assert!((out.i - 0.33).abs() < 1e-12);
/// assert!((out.f - 0.37).abs() < 1e-12);
/// ```
pub fn routed_product(order: Priority, vars: &[CrispTriple]) -> Result<CrispTriple, Error> {
    let k = vars.len();
    if k < 2 {
        return Err(Error::TooFewVariables { got: k, min: 2 });
    }
    let [w1, w2, w3] = order.order();
    let mut f1: Vec<f64> = vars.iter().map(|v| component(v, w1)).collect();
    let mut f12: Vec<f64> = vars
        .iter()
        .map(|v| component(v, w1) + component(v, w2))
        .collect();
    let mut f123: Vec<f64> = vars
        .iter()
        .map(|v| component(v, w1) + component(v, w2) + component(v, w3))
        .collect();
    let p1 = stable_product(&mut f1);
    let p12 = stable_product(&mut f12);
    let p123 = stable_product(&mut f123);

    let mut out = [0.0f64; 3];
    out[w1.index()] = p1;
    out[w2.index()] = p12 - p1;
    out[w3.index()] = p123 - p12;
    Ok(CrispTriple::raw(out[0], out[1], out[2]))
}

/// Steps `digits` to the next base-`base` assignment in lexicographic order
/// (last position fastest). Returns false after the final assignment.
fn next_assignment(digits: &mut [u8], base: u8) -> bool {
    for p in (0..digits.len()).rev() {
        if digits[p] + 1 < base {
            digits[p] += 1;
            for d in &mut digits[p + 1..] {
                *d = 0;
            }
            return true;
        }
    }
    false
}

/// Literal 3^k enumeration of the routed operator: every monomial is
/// computed and added to the component of its strongest tag, in lexicographic
/// assignment order. Kept as an independent code path from
/// [`routed_product`]; the two cross-validate.
pub fn routing_oracle(order: Priority, vars: &[CrispTriple]) -> Result<CrispTriple, Error> {
    let k = vars.len();
    if k < 2 {
        return Err(Error::TooFewVariables { got: k, min: 2 });
    }
    if k > MAX_ORACLE_ARITY {
        return Err(Error::ArityGuard {
            got: k,
            max: MAX_ORACLE_ARITY,
        });
    }
    let mut acc = [0.0f64; 3];
    let mut digits = vec![0u8; k];
    loop {
        let mut prod = 1.0;
        let mut strongest = 0usize;
        for (p, &d) in digits.iter().enumerate() {
            let tag = TAGS[d as usize];
            prod *= component(&vars[p], tag);
            strongest = strongest.max(order.rank(tag));
        }
        acc[order.order()[strongest].index()] += prod;
        if !next_assignment(&mut digits, 3) {
            break;
        }
    }
    Ok(CrispTriple::raw(acc[0], acc[1], acc[2]))
}

/// The symbolic expansion behind the routed operators: for each output
/// component, the list of monomials (one tag per variable position) routed
/// to it, in lexicographic assignment order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoutedExpansion {
    pub t: Vec<Vec<Tag>>,
    pub i: Vec<Vec<Tag>>,
    pub f: Vec<Vec<Tag>>,
}

impl RoutedExpansion {
    pub fn component(&self, tag: Tag) -> &[Vec<Tag>] {
        match tag {
            Tag::T => &self.t,
            Tag::I => &self.i,
            Tag::F => &self.f,
        }
    }

    pub fn term_counts(&self) -> (usize, usize, usize) {
        (self.t.len(), self.i.len(), self.f.len())
    }
}

pub fn routed_expansion(order: Priority, k: usize) -> Result<RoutedExpansion, Error> {
    if k < 2 {
        return Err(Error::TooFewVariables { got: k, min: 2 });
    }
    if k > MAX_ORACLE_ARITY {
        return Err(Error::ArityGuard {
            got: k,
            max: MAX_ORACLE_ARITY,
        });
    }
    let mut out = RoutedExpansion {
        t: Vec::new(),
        i: Vec::new(),
        f: Vec::new(),
    };
    let mut digits = vec![0u8; k];
    loop {
        let monomial: Vec<Tag> = digits.iter().map(|&d| TAGS[d as usize]).collect();
        let strongest = monomial
            .iter()
            .map(|&t| order.rank(t))
            .max()
            .expect("non-empty monomial");
        match order.order()[strongest] {
            Tag::T => out.t.push(monomial),
            Tag::I => out.i.push(monomial),
            Tag::F => out.f.push(monomial),
        }
        if !next_assignment(&mut digits, 3) {
            break;
        }
    }
    Ok(out)
}

/// Two-vector composition k-law: the sum over all 2^k − 2 assignments of the
/// k positions to `z` or `w` that use both vectors, of the corresponding
/// k-factor products. Each assignment is paired with its complement before
/// summing, which makes the result bitwise symmetric in `z` and `w`.
pub fn klaw_pair(z: &[f64], w: &[f64]) -> Result<f64, Error> {
    if z.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: z.len(),
            right: w.len(),
        });
    }
    let k = z.len();
    if k < 2 {
        return Err(Error::TooFewVariables { got: k, min: 2 });
    }
    if k > MAX_PAIR_ARITY {
        return Err(Error::ArityGuard {
            got: k,
            max: MAX_PAIR_ARITY,
        });
    }
    let full: u64 = (1u64 << k) - 1;
    let term = |mask: u64| -> f64 {
        let mut p = 1.0;
        for pos in 0..k {
            p *= if (mask >> pos) & 1 == 1 { z[pos] } else { w[pos] };
        }
        p
    };
    let mut sum = 0.0;
    for mask in 1..full {
        let comp = full ^ mask;
        if mask < comp {
            sum += term(mask) + term(comp);
        }
    }
    Ok(sum)
}

/// Three-vector composition k-law: the sum over all assignments of the k
/// positions to the three vectors that use each vector at least once
/// (3^k − 3·2^k + 3 of them; zero when k < 3).
pub fn klaw_triple(t: &[f64], i: &[f64], f: &[f64]) -> Result<f64, Error> {
    if t.len() != i.len() {
        return Err(Error::LengthMismatch {
            left: t.len(),
            right: i.len(),
        });
    }
    if t.len() != f.len() {
        return Err(Error::LengthMismatch {
            left: t.len(),
            right: f.len(),
        });
    }
    let k = t.len();
    if k > MAX_TRIPLE_ARITY {
        return Err(Error::ArityGuard {
            got: k,
            max: MAX_TRIPLE_ARITY,
        });
    }
    if k == 0 {
        return Ok(0.0);
    }
    let vectors = [t, i, f];
    let mut sum = 0.0;
    let mut digits = vec![0u8; k];
    loop {
        let mut used = [false; 3];
        for &d in &digits {
            used[d as usize] = true;
        }
        if used == [true; 3] {
            let mut prod = 1.0;
            for (p, &d) in digits.iter().enumerate() {
                prod *= vectors[d as usize][p];
            }
            sum += prod;
        }
        if !next_assignment(&mut digits, 3) {
            break;
        }
    }
    Ok(sum)
}

/// The assignments summed by [`klaw_pair`]: `true` marks a position taken
/// from the first vector. Ascending mask order.
pub fn klaw_pair_terms(k: usize) -> Result<Vec<Vec<bool>>, Error> {
    if k < 2 {
        return Err(Error::TooFewVariables { got: k, min: 2 });
    }
    if k > MAX_PAIR_ARITY {
        return Err(Error::ArityGuard {
            got: k,
            max: MAX_PAIR_ARITY,
        });
    }
    let full: u64 = (1u64 << k) - 1;
    Ok((1..full)
        .map(|mask| (0..k).map(|pos| (mask >> pos) & 1 == 1).collect())
        .collect())
}

/// The assignments summed by [`klaw_triple`]: digit `0`/`1`/`2` marks which
/// vector a position is taken from. Lexicographic order.
pub fn klaw_triple_terms(k: usize) -> Result<Vec<Vec<u8>>, Error> {
    if k > MAX_TRIPLE_ARITY {
        return Err(Error::ArityGuard {
            got: k,
            max: MAX_TRIPLE_ARITY,
        });
    }
    let mut out = Vec::new();
    if k == 0 {
        return Ok(out);
    }
    let mut digits = vec![0u8; k];
    loop {
        let mut used = [false; 3];
        for &d in &digits {
            used[d as usize] = true;
        }
        if used == [true; 3] {
            out.push(digits.clone());
        }
        if !next_assignment(&mut digits, 3) {
            break;
        }
    }
    Ok(out)
}

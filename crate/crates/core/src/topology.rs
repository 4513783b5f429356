//! Neutrosophic sets over finite universes and the two topology checkers.
//!
//! The general construction works on families of neutrosophic sets with the
//! constants `0 = (0,0,1)` and `1 = (1,0,0)`, pointwise union/intersection,
//! and the I-preserving complement `(F, I, T)`. The alternative construction
//! works on families of subunitary subsets with the algebraic-product union
//! `A + B − A·B`, intersection `A·B`, and complement `1 − A`.
//!
//! Closure of the union axiom over arbitrary subfamilies is checked pairwise;
//! for the idempotent min/max configuration that is sufficient on a finite
//! family, and for other configurations the report carries a warning saying
//! the check was pairwise only.

use std::fmt;

use thiserror::Error as ThisError;

use crate::combinators::{tconorm_apply, tnorm_apply, ComponentConorm, ComponentNorm};
use crate::error::Error;
use crate::measure::{classify_eps, Classification};
use crate::set::SubunitarySet;
use crate::triple::NeutroTriple;
use crate::triple_ops::{nconorm, negation_swap, nnorm, NnConfig};
use crate::DEFAULT_EPSILON;

/// A total mapping from a finite universe of named elements to triples.
#[derive(Debug, Clone, PartialEq)]
pub struct NeutroSet {
    universe: Vec<String>,
    triples: Vec<NeutroTriple>,
}

impl NeutroSet {
    pub fn new(universe: Vec<String>, triples: Vec<NeutroTriple>) -> Result<Self, Error> {
        validate_universe(&universe)?;
        if universe.len() != triples.len() {
            return Err(Error::MissingElement(
                universe
                    .get(triples.len())
                    .cloned()
                    .unwrap_or_else(|| "<extra value>".to_string()),
            ));
        }
        Ok(Self { universe, triples })
    }

    /// Builds a set from `(element, triple)` pairs, which must cover the
    /// universe exactly once each.
    pub fn from_pairs(
        universe: &[String],
        pairs: Vec<(String, NeutroTriple)>,
    ) -> Result<Self, Error> {
        validate_universe(universe)?;
        let mut slots: Vec<Option<NeutroTriple>> = vec![None; universe.len()];
        for (name, triple) in pairs {
            let idx = universe
                .iter()
                .position(|e| *e == name)
                .ok_or_else(|| Error::UnknownElement(name.clone()))?;
            if slots[idx].is_some() {
                return Err(Error::DuplicateElement(name));
            }
            slots[idx] = Some(triple);
        }
        let mut triples = Vec::with_capacity(universe.len());
        for (idx, slot) in slots.into_iter().enumerate() {
            triples.push(slot.ok_or_else(|| Error::MissingElement(universe[idx].clone()))?);
        }
        Ok(Self {
            universe: universe.to_vec(),
            triples,
        })
    }

    /// The set assigning the same triple to every element.
    pub fn constant(universe: &[String], value: &NeutroTriple) -> Result<Self, Error> {
        validate_universe(universe)?;
        Ok(Self {
            universe: universe.to_vec(),
            triples: vec![value.clone(); universe.len()],
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn triples(&self) -> &[NeutroTriple] {
        &self.triples
    }

    pub fn value(&self, element: &str) -> Option<&NeutroTriple> {
        self.universe
            .iter()
            .position(|e| e == element)
            .map(|idx| &self.triples[idx])
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.universe == other.universe
            && self
                .triples
                .iter()
                .zip(&other.triples)
                .all(|(a, b)| a.approx_eq(b, eps))
    }
}

impl fmt::Display for NeutroSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (name, triple)) in self.universe.iter().zip(&self.triples).enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{name}={triple}")?;
        }
        Ok(())
    }
}

fn validate_universe(universe: &[String]) -> Result<(), Error> {
    if universe.is_empty() {
        return Err(Error::InvalidUniverse);
    }
    for (idx, name) in universe.iter().enumerate() {
        if universe[..idx].contains(name) {
            return Err(Error::InvalidUniverse);
        }
    }
    Ok(())
}

/// Pointwise disjunction of two sets over the same universe.
pub fn set_union(a: &NeutroSet, b: &NeutroSet, cfg: NnConfig) -> Result<NeutroSet, Error> {
    zip_pointwise(a, b, |x, y| nconorm(cfg, x, y))
}

/// Pointwise conjunction of two sets over the same universe.
pub fn set_intersection(a: &NeutroSet, b: &NeutroSet, cfg: NnConfig) -> Result<NeutroSet, Error> {
    zip_pointwise(a, b, |x, y| nnorm(cfg, x, y))
}

/// Pointwise `(F, I, T)` complement; indeterminacy is preserved, unlike the
/// interval complement in [`crate::triple_ops::complement`].
pub fn set_complement(a: &NeutroSet) -> NeutroSet {
    NeutroSet {
        universe: a.universe.clone(),
        triples: a.triples.iter().map(negation_swap).collect(),
    }
}

/// Containment: the six componentwise inequalities hold at every element.
pub fn set_included(a: &NeutroSet, b: &NeutroSet) -> Result<bool, Error> {
    if a.universe != b.universe {
        return Err(Error::UniverseMismatch);
    }
    Ok(a.triples.iter().zip(&b.triples).all(|(x, y)| x.leq(y)))
}

fn zip_pointwise(
    a: &NeutroSet,
    b: &NeutroSet,
    op: impl Fn(&NeutroTriple, &NeutroTriple) -> NeutroTriple,
) -> Result<NeutroSet, Error> {
    if a.universe != b.universe {
        return Err(Error::UniverseMismatch);
    }
    Ok(NeutroSet {
        universe: a.universe.clone(),
        triples: a
            .triples
            .iter()
            .zip(&b.triples)
            .map(|(x, y)| op(x, y))
            .collect(),
    })
}

/// A named family of neutrosophic sets sharing one universe.
#[derive(Debug, Clone, PartialEq)]
pub struct NeutroFamily {
    universe: Vec<String>,
    members: Vec<(String, NeutroSet)>,
}

impl NeutroFamily {
    pub fn new(universe: Vec<String>, members: Vec<(String, NeutroSet)>) -> Result<Self, Error> {
        validate_universe(&universe)?;
        for (idx, (name, set)) in members.iter().enumerate() {
            if set.universe != universe {
                return Err(Error::UniverseMismatch);
            }
            if members[..idx].iter().any(|(n, _)| n == name) {
                return Err(Error::BadMemberName(name.clone()));
            }
        }
        Ok(Self { universe, members })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn members(&self) -> &[(String, NeutroSet)] {
        &self.members
    }
}

/// A named family of subunitary sets, with the empty set tracked as a
/// distinguished flag (a subunitary set is non-empty by construction).
#[derive(Debug, Clone, PartialEq)]
pub struct SubsetFamily {
    members: Vec<(String, SubunitarySet)>,
    includes_empty: bool,
}

impl SubsetFamily {
    pub fn new(
        members: Vec<(String, SubunitarySet)>,
        includes_empty: bool,
    ) -> Result<Self, Error> {
        for (idx, (name, _)) in members.iter().enumerate() {
            if members[..idx].iter().any(|(n, _)| n == name) {
                return Err(Error::BadMemberName(name.clone()));
            }
        }
        Ok(Self {
            members,
            includes_empty,
        })
    }

    pub fn members(&self) -> &[(String, SubunitarySet)] {
        &self.members
    }

    pub fn includes_empty(&self) -> bool {
        self.includes_empty
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    ZeroMember,
    OneMember,
    EmptyMember,
    IntersectionClosed,
    UnionClosed,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::ZeroMember => "missing-zero",
            Axiom::OneMember => "missing-one",
            Axiom::EmptyMember => "missing-empty",
            Axiom::IntersectionClosed => "intersection",
            Axiom::UnionClosed => "union",
        })
    }
}

/// One axiom failure: which axiom, which members fed it, what came out, and
/// the member closest to the computed set (by Hausdorff distance).
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub axiom: Axiom,
    pub operands: Vec<String>,
    pub computed: String,
    pub nearest: Option<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let connective = match self.axiom {
            Axiom::IntersectionClosed => "∩",
            Axiom::UnionClosed => "∪",
            _ => " ",
        };
        write!(
            f,
            "VIOLATION {} {} -> {}",
            self.axiom,
            self.operands.join(connective),
            self.computed
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TopologyReport {
    pub is_topology: bool,
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl TopologyReport {
    fn from_violations(violations: Vec<Violation>, warnings: Vec<String>) -> Self {
        Self {
            is_topology: violations.is_empty(),
            violations,
            warnings,
        }
    }
}

fn set_distance(a: &NeutroSet, b: &NeutroSet) -> f64 {
    a.triples
        .iter()
        .zip(&b.triples)
        .map(|(x, y)| {
            x.t.hausdorff(&y.t)
                .max(x.i.hausdorff(&y.i))
                .max(x.f.hausdorff(&y.f))
        })
        .fold(0.0, f64::max)
}

/// Checks the general neutrosophic topology axioms on a finite family:
/// the constants 0 and 1 are members, every pairwise intersection is a
/// member, and every pairwise union is a member. Membership is equality
/// within `eps` after canonicalization. Violations are reported in
/// lexicographic member-name order; intersections include self-pairs
/// (the axiom is stated on arbitrary pairs), unions do not (the union of a
/// one-element subfamily is the member itself).
pub fn is_general_topology_eps(fam: &NeutroFamily, cfg: NnConfig, eps: f64) -> TopologyReport {
    let mut violations = Vec::new();
    let mut warnings = Vec::new();
    if cfg != NnConfig::default() {
        warnings.push(format!(
            "operators ({}, {}) are not idempotent; the arbitrary-union axiom is checked pairwise only",
            cfg.t_op, cfg.if_op
        ));
    }

    let is_member = |s: &NeutroSet| fam.members.iter().any(|(_, m)| m.approx_eq(s, eps));
    let nearest = |s: &NeutroSet| -> Option<String> {
        fam.members
            .iter()
            .map(|(name, m)| (set_distance(s, m), name))
            .min_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(b.1)))
            .map(|(_, name)| name.clone())
    };

    let zero = NeutroSet::constant(&fam.universe, &NeutroTriple::zero()).expect("valid universe");
    let one = NeutroSet::constant(&fam.universe, &NeutroTriple::one()).expect("valid universe");
    for (axiom, constant, label) in [
        (Axiom::ZeroMember, &zero, "ZERO"),
        (Axiom::OneMember, &one, "ONE"),
    ] {
        if !is_member(constant) {
            violations.push(Violation {
                axiom,
                operands: vec![label.to_string()],
                computed: constant.to_string(),
                nearest: nearest(constant),
            });
        }
    }

    let mut sorted: Vec<&(String, NeutroSet)> = fam.members.iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));

    for i in 0..sorted.len() {
        for j in i..sorted.len() {
            let met = set_intersection(&sorted[i].1, &sorted[j].1, cfg).expect("shared universe");
            if !is_member(&met) {
                violations.push(Violation {
                    axiom: Axiom::IntersectionClosed,
                    operands: vec![sorted[i].0.clone(), sorted[j].0.clone()],
                    computed: met.to_string(),
                    nearest: nearest(&met),
                });
            }
        }
    }
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            let joined = set_union(&sorted[i].1, &sorted[j].1, cfg).expect("shared universe");
            if !is_member(&joined) {
                violations.push(Violation {
                    axiom: Axiom::UnionClosed,
                    operands: vec![sorted[i].0.clone(), sorted[j].0.clone()],
                    computed: joined.to_string(),
                    nearest: nearest(&joined),
                });
            }
        }
    }

    TopologyReport::from_violations(violations, warnings)
}

pub fn is_general_topology(fam: &NeutroFamily, cfg: NnConfig) -> TopologyReport {
    is_general_topology_eps(fam, cfg, DEFAULT_EPSILON)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyClass {
    Paraconsistent,
    Intuitionistic,
    Mixed,
    General,
}

impl fmt::Display for TopologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TopologyClass::Paraconsistent => "Paraconsistent",
            TopologyClass::Intuitionistic => "Intuitionistic",
            TopologyClass::Mixed => "Mixed",
            TopologyClass::General => "General",
        })
    }
}

/// Classifies a family by the pointwise triples of its non-constant members:
/// all intuitionistic, all paraconsistent, a mix of exactly those two, or
/// general (plausibly-normalized or indeterminate triples present, or no
/// non-constant members at all). The constants 0 and 1 sum to exactly 1 and
/// are exempt.
pub fn classify_topology_eps(fam: &NeutroFamily, eps: f64) -> TopologyClass {
    let zero = NeutroSet::constant(&fam.universe, &NeutroTriple::zero()).expect("valid universe");
    let one = NeutroSet::constant(&fam.universe, &NeutroTriple::one()).expect("valid universe");
    let mut seen_intuitionistic = false;
    let mut seen_paraconsistent = false;
    let mut seen_other = false;
    let mut seen_any = false;
    for (_, member) in &fam.members {
        if member.approx_eq(&zero, eps) || member.approx_eq(&one, eps) {
            continue;
        }
        for triple in &member.triples {
            seen_any = true;
            match classify_eps(triple, eps) {
                Classification::Intuitionistic => seen_intuitionistic = true,
                Classification::Paraconsistent => seen_paraconsistent = true,
                _ => seen_other = true,
            }
        }
    }
    match (seen_any, seen_other, seen_intuitionistic, seen_paraconsistent) {
        (false, ..) | (_, true, _, _) => TopologyClass::General,
        (_, _, true, false) => TopologyClass::Intuitionistic,
        (_, _, false, true) => TopologyClass::Paraconsistent,
        _ => TopologyClass::Mixed,
    }
}

pub fn classify_topology(fam: &NeutroFamily) -> TopologyClass {
    classify_topology_eps(fam, DEFAULT_EPSILON)
}

/// Union of subunitary subsets in the alternative topology: `A + B − A·B`
/// by monotone-endpoint extension.
pub fn ant_union(a: &SubunitarySet, b: &SubunitarySet) -> SubunitarySet {
    tconorm_apply(ComponentConorm::Algebraic, a, b)
}

/// Intersection in the alternative topology: the product `A·B`.
pub fn ant_intersection(a: &SubunitarySet, b: &SubunitarySet) -> SubunitarySet {
    tnorm_apply(ComponentNorm::Algebraic, a, b)
}

/// Complement in the alternative topology: `1 − A`.
pub fn ant_complement(a: &SubunitarySet) -> SubunitarySet {
    crate::combinators::component_negate(a)
}

/// Checks the alternative construction: the empty set is present, and the
/// family of open sets is closed under pairwise union and intersection.
/// The empty set is an identity for union and absorbing for intersection,
/// so only non-empty distinct pairs need computing. Complements are closed
/// sets and are not required to be members.
pub fn is_alternative_topology_eps(fam: &SubsetFamily, eps: f64) -> TopologyReport {
    let mut violations = Vec::new();
    if !fam.includes_empty {
        violations.push(Violation {
            axiom: Axiom::EmptyMember,
            operands: vec!["∅".to_string()],
            computed: "∅".to_string(),
            nearest: None,
        });
    }

    let is_member = |s: &SubunitarySet| fam.members.iter().any(|(_, m)| m.approx_eq(s, eps));
    let nearest = |s: &SubunitarySet| -> Option<String> {
        fam.members
            .iter()
            .map(|(name, m)| (s.hausdorff(m), name))
            .min_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(b.1)))
            .map(|(_, name)| name.clone())
    };

    let mut sorted: Vec<&(String, SubunitarySet)> = fam.members.iter().collect();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));

    for (axiom, op) in [
        (
            Axiom::UnionClosed,
            ant_union as fn(&SubunitarySet, &SubunitarySet) -> SubunitarySet,
        ),
        (Axiom::IntersectionClosed, ant_intersection),
    ] {
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                let computed = op(&sorted[i].1, &sorted[j].1);
                if !is_member(&computed) {
                    violations.push(Violation {
                        axiom,
                        operands: vec![sorted[i].0.clone(), sorted[j].0.clone()],
                        computed: computed.to_string(),
                        nearest: nearest(&computed),
                    });
                }
            }
        }
    }

    TopologyReport::from_violations(violations, Vec::new())
}

pub fn is_alternative_topology(fam: &SubsetFamily) -> TopologyReport {
    is_alternative_topology_eps(fam, DEFAULT_EPSILON)
}

/// A malformed topology input file.
#[derive(Debug, Clone, PartialEq, ThisError)]
#[error("line {line}: {message}")]
pub struct FileError {
    pub line: usize,
    pub message: String,
}

fn file_err(line: usize, message: impl Into<String>) -> FileError {
    FileError {
        line,
        message: message.into(),
    }
}

/// Parses the line-oriented general-topology format:
///
/// ```text
/// universe: a b c
/// set A: a={0.5,0,0.3} b={1,0,0} c={0,0,1}
/// family: ZERO ONE A
/// ```
///
/// `ZERO` and `ONE` are reserved names expanding to the constant 0/1 sets.
pub fn parse_general_family(text: &str) -> Result<NeutroFamily, FileError> {
    let mut universe: Option<Vec<String>> = None;
    let mut sets: Vec<(String, NeutroSet)> = Vec::new();
    let mut family_names: Option<Vec<String>> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("universe:") {
            if universe.is_some() {
                return Err(file_err(line_no, "duplicate universe line"));
            }
            let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if names.is_empty() {
                return Err(file_err(line_no, "universe must name at least one element"));
            }
            for name in &names {
                if !crate::dsl::is_identifier(name) {
                    return Err(file_err(line_no, format!("bad element name {name:?}")));
                }
            }
            if let Err(e) = validate_universe(&names) {
                return Err(file_err(line_no, e.to_string()));
            }
            universe = Some(names);
        } else if let Some(rest) = line.strip_prefix("set ") {
            let Some(universe) = universe.as_ref() else {
                return Err(file_err(line_no, "set line before universe line"));
            };
            let Some((name, body)) = rest.split_once(':') else {
                return Err(file_err(line_no, "expected `set NAME: ...`"));
            };
            let name = name.trim();
            if !crate::dsl::is_identifier(name) {
                return Err(file_err(line_no, format!("bad set name {name:?}")));
            }
            if name == "ZERO" || name == "ONE" {
                return Err(file_err(line_no, format!("{name} is a reserved set name")));
            }
            if sets.iter().any(|(n, _)| n == name) {
                return Err(file_err(line_no, format!("duplicate set {name:?}")));
            }
            let pairs = parse_assignments(body, line_no)?;
            let set = NeutroSet::from_pairs(universe, pairs)
                .map_err(|e| file_err(line_no, e.to_string()))?;
            sets.push((name.to_string(), set));
        } else if let Some(rest) = line.strip_prefix("family:") {
            if family_names.is_some() {
                return Err(file_err(line_no, "duplicate family line"));
            }
            family_names = Some(rest.split_whitespace().map(str::to_string).collect());
        } else {
            return Err(file_err(
                line_no,
                format!("unrecognized directive in {line:?}"),
            ));
        }
    }

    let universe = universe.ok_or_else(|| file_err(0, "missing universe line"))?;
    let names = family_names.ok_or_else(|| file_err(0, "missing family line"))?;
    if names.is_empty() {
        return Err(file_err(0, "family must name at least one member"));
    }

    let mut members = Vec::with_capacity(names.len());
    for name in names {
        let set = match name.as_str() {
            "ZERO" => NeutroSet::constant(&universe, &NeutroTriple::zero()).expect("valid"),
            "ONE" => NeutroSet::constant(&universe, &NeutroTriple::one()).expect("valid"),
            other => sets
                .iter()
                .find(|(n, _)| n == other)
                .map(|(_, s)| s.clone())
                .ok_or_else(|| file_err(0, format!("family names undefined set {other:?}")))?,
        };
        members.push((name, set));
    }
    NeutroFamily::new(universe, members).map_err(|e| file_err(0, e.to_string()))
}

fn parse_assignments(
    body: &str,
    line_no: usize,
) -> Result<Vec<(String, NeutroTriple)>, FileError> {
    let bytes = body.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < bytes.len() {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if pos >= bytes.len() {
            break;
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos] != b'=' && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let name = &body[start..pos];
        if !crate::dsl::is_identifier(name) {
            return Err(file_err(line_no, format!("bad element name {name:?}")));
        }
        if pos >= bytes.len() || bytes[pos] != b'=' {
            return Err(file_err(line_no, format!("expected `=` after {name:?}")));
        }
        pos += 1;
        if pos >= bytes.len() || bytes[pos] != b'{' {
            return Err(file_err(line_no, format!("expected a triple after {name}=")));
        }
        let open = pos;
        while pos < bytes.len() && bytes[pos] != b'}' {
            pos += 1;
        }
        if pos >= bytes.len() {
            return Err(file_err(line_no, "unterminated triple literal"));
        }
        pos += 1;
        let triple = crate::dsl::parse_triple(&body[open..pos])
            .map_err(|e| file_err(line_no, format!("in triple for {name:?}: {e}")))?;
        out.push((name.to_string(), triple));
    }
    Ok(out)
}

/// Parses the alternative-topology format: one `open:` line per member,
/// `open: empty` for the empty set. Repeated members collapse.
pub fn parse_subset_family(text: &str) -> Result<SubsetFamily, FileError> {
    let mut members: Vec<(String, SubunitarySet)> = Vec::new();
    let mut includes_empty = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let Some(rest) = line.strip_prefix("open:") else {
            return Err(file_err(
                line_no,
                format!("unrecognized directive in {line:?}"),
            ));
        };
        let rest = rest.trim();
        if rest == "empty" {
            includes_empty = true;
            continue;
        }
        let set = crate::dsl::parse_component(rest)
            .map_err(|e| file_err(line_no, e.to_string()))?;
        let name = set.to_string();
        if !members.iter().any(|(n, _)| *n == name) {
            members.push((name, set));
        }
    }
    SubsetFamily::new(members, includes_empty).map_err(|e| file_err(0, e.to_string()))
}

//! Bottom-up formula evaluation under a configurable operator semantics.

use std::collections::HashMap;
use std::fmt;

use super::{EvalConfig, EvalMode, Formula, Negation, Node, Normalization, Span};
use crate::error::Error;
use crate::measure::{combine_norms, normalize, vector_norm};
use crate::ordered::routed_product;
use crate::triple::NeutroTriple;
use crate::triple_ops::{complement, nconorm, negation_swap, nnorm};

#[derive(Debug, Clone, PartialEq)]
pub enum EvalErrorKind {
    UnboundVariable(String),
    /// Ordered mode needs every value crisp.
    IntervalInOrderedMode,
    /// Normalization needs every participating value crisp.
    IntervalNormalization,
    ZeroSumNormalization,
    /// The combined norm target was not positive.
    NormTargetNotPositive(f64),
    /// A component left `[0, 1]`, so the result has no set representation.
    /// Routed products of over-normalized inputs and aggressive rescaling
    /// can do this.
    ComponentOutOfUnit(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalError {
    pub span: Span,
    pub kind: EvalErrorKind,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "evaluation error at offset {}: ", self.span.start)?;
        match &self.kind {
            EvalErrorKind::UnboundVariable(name) => write!(f, "unbound variable `{name}`"),
            EvalErrorKind::IntervalInOrderedMode => {
                f.write_str("ordered mode requires crisp values")
            }
            EvalErrorKind::IntervalNormalization => {
                f.write_str("normalization requires crisp values")
            }
            EvalErrorKind::ZeroSumNormalization => {
                f.write_str("zero-sum value cannot be rescaled")
            }
            EvalErrorKind::NormTargetNotPositive(v) => {
                write!(f, "norm target {v} is not positive")
            }
            EvalErrorKind::ComponentOutOfUnit(v) => {
                write!(f, "component {v} left [0, 1] and cannot be represented")
            }
        }
    }
}

impl std::error::Error for EvalError {}

/// Evaluates `f` with every free variable bound.
pub fn evaluate(
    f: &Formula,
    bindings: &HashMap<String, NeutroTriple>,
    cfg: &EvalConfig,
) -> Result<NeutroTriple, EvalError> {
    let value = eval_node(f, bindings, cfg)?;
    if let Normalization::Final(rule) = &cfg.normalization {
        let mut norms = Vec::new();
        leaf_norms(f, bindings, &mut norms)?;
        let mut target = norms[0];
        for n in &norms[1..] {
            target = combine_norms(rule, target, *n);
        }
        return rescale(value, target, f.span);
    }
    Ok(value)
}

fn eval_node(
    f: &Formula,
    bindings: &HashMap<String, NeutroTriple>,
    cfg: &EvalConfig,
) -> Result<NeutroTriple, EvalError> {
    match &f.node {
        Node::Var(name) => bindings.get(name).cloned().ok_or_else(|| EvalError {
            span: f.span,
            kind: EvalErrorKind::UnboundVariable(name.clone()),
        }),
        Node::Literal(value) => Ok(value.clone()),
        Node::Not(child) => {
            let value = eval_node(child, bindings, cfg)?;
            Ok(match cfg.negation {
                Negation::Complement => complement(&value),
                Negation::Swap => negation_swap(&value),
            })
        }
        Node::And(left, right) | Node::Or(left, right) => {
            let conjunction = matches!(f.node, Node::And(..));
            let lv = eval_node(left, bindings, cfg)?;
            let rv = eval_node(right, bindings, cfg)?;
            let raw = apply_binary(conjunction, &lv, &rv, f.span, (left.span, right.span), cfg)?;
            if let Normalization::AfterEach(rule) = &cfg.normalization {
                let nl = crisp_norm(&lv, left.span)?;
                let nr = crisp_norm(&rv, right.span)?;
                return rescale(raw, combine_norms(rule, nl, nr), f.span);
            }
            Ok(raw)
        }
    }
}

fn apply_binary(
    conjunction: bool,
    lv: &NeutroTriple,
    rv: &NeutroTriple,
    span: Span,
    operand_spans: (Span, Span),
    cfg: &EvalConfig,
) -> Result<NeutroTriple, EvalError> {
    match cfg.mode {
        EvalMode::Componentwise(nn) => Ok(if conjunction {
            nnorm(nn, lv, rv)
        } else {
            nconorm(nn, lv, rv)
        }),
        EvalMode::Ordered { conj, disj } => {
            let lc = lv.as_crisp().ok_or(EvalError {
                span: operand_spans.0,
                kind: EvalErrorKind::IntervalInOrderedMode,
            })?;
            let rc = rv.as_crisp().ok_or(EvalError {
                span: operand_spans.1,
                kind: EvalErrorKind::IntervalInOrderedMode,
            })?;
            let order = if conjunction { conj } else { disj };
            let out = routed_product(order, &[lc, rc]).expect("two variables");
            out.promote().map_err(|e| EvalError {
                span,
                kind: match e {
                    Error::OutOfRange(v) => EvalErrorKind::ComponentOutOfUnit(v),
                    _ => EvalErrorKind::ComponentOutOfUnit(f64::NAN),
                },
            })
        }
    }
}

fn crisp_norm(value: &NeutroTriple, span: Span) -> Result<f64, EvalError> {
    value
        .as_crisp()
        .map(|c| vector_norm(&c))
        .ok_or(EvalError {
            span,
            kind: EvalErrorKind::IntervalNormalization,
        })
}

fn rescale(value: NeutroTriple, target: f64, span: Span) -> Result<NeutroTriple, EvalError> {
    let crisp = value.as_crisp().ok_or(EvalError {
        span,
        kind: EvalErrorKind::IntervalNormalization,
    })?;
    let scaled = normalize(&crisp, target).map_err(|e| EvalError {
        span,
        kind: match e {
            Error::ZeroSum => EvalErrorKind::ZeroSumNormalization,
            Error::NonPositiveNorm(v) => EvalErrorKind::NormTargetNotPositive(v),
            _ => EvalErrorKind::ZeroSumNormalization,
        },
    })?;
    NeutroTriple::crisp(scaled.t, scaled.i, scaled.f).map_err(|e| EvalError {
        span,
        kind: match e {
            Error::OutOfRange(v) => EvalErrorKind::ComponentOutOfUnit(v),
            _ => EvalErrorKind::ComponentOutOfUnit(f64::NAN),
        },
    })
}

fn leaf_norms(
    f: &Formula,
    bindings: &HashMap<String, NeutroTriple>,
    out: &mut Vec<f64>,
) -> Result<(), EvalError> {
    match &f.node {
        Node::Var(name) => {
            let value = bindings.get(name).ok_or_else(|| EvalError {
                span: f.span,
                kind: EvalErrorKind::UnboundVariable(name.clone()),
            })?;
            out.push(crisp_norm(value, f.span)?);
        }
        Node::Literal(value) => out.push(crisp_norm(value, f.span)?),
        Node::Not(child) => leaf_norms(child, bindings, out)?,
        Node::And(left, right) | Node::Or(left, right) => {
            leaf_norms(left, bindings, out)?;
            leaf_norms(right, bindings, out)?;
        }
    }
    Ok(())
}

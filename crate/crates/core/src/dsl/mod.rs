//! The formula language over neutrosophic variables and literals.
//!
//! Grammar (`!` binds tightest, then `&`, then `|`; binary operators are
//! left-associative):
//!
//! ```text
//! formula  := or_expr
//! or_expr  := and_expr { "|" and_expr }
//! and_expr := unary { "&" unary }
//! unary    := "!" unary | atom
//! atom     := IDENT | triple | "(" formula ")"
//! triple   := "{" comp "," comp "," comp "}"
//! comp     := NUMBER | interval { "u" interval }
//! interval := "[" NUMBER "," NUMBER "]"
//! ```
//!
//! What the connectives mean is configured per evaluation: componentwise
//! norm/conorm pairs or the priority-routed crisp operators for `&`/`|`, and
//! either negation for `!`. Results can be rescaled after each operation or
//! once at the end, under a chosen norm rule.

mod eval;
mod parser;

use std::fmt;

use crate::triple::NeutroTriple;

pub use eval::{evaluate, EvalError, EvalErrorKind};
pub use parser::{is_identifier, parse, parse_component, parse_triple, ParseError, ParseErrorKind};

use crate::measure::NormRule;
use crate::ordered::Priority;
use crate::triple_ops::NnConfig;

/// Byte range into the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Self { start, end }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Var(String),
    Literal(NeutroTriple),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

/// A parsed formula node with its source span.
#[derive(Debug, Clone)]
pub struct Formula {
    pub node: Node,
    pub span: Span,
}

impl Formula {
    pub fn new(node: Node, span: Span) -> Self {
        Self { node, span }
    }

    /// A formula with a dummy span, for programmatic construction.
    pub fn synthetic(node: Node) -> Self {
        Self {
            node,
            span: Span::new(0, 0),
        }
    }
}

/// Equality is structural; spans are ignored.
impl PartialEq for Formula {
    fn eq(&self, other: &Self) -> bool {
        self.node == other.node
    }
}

/// How `&` and `|` evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalMode {
    /// Componentwise norm/conorm pairs; works on interval values.
    Componentwise(NnConfig),
    /// Priority-routed crisp operators; all values must be crisp.
    Ordered { conj: Priority, disj: Priority },
}

/// What `!` means.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Negation {
    /// `(F, 1 - I, T)`.
    Complement,
    /// `(F, I, T)`.
    Swap,
}

/// Whether and when results are rescaled to a rule-combined norm.
#[derive(Debug, Clone)]
pub enum Normalization {
    None,
    /// Rescale every binary result to the rule applied to its operand norms.
    AfterEach(NormRule),
    /// Rescale the final result to the rule folded left-to-right over the
    /// leaf norms, in source order.
    Final(NormRule),
}

#[derive(Debug, Clone)]
pub struct EvalConfig {
    pub mode: EvalMode,
    pub negation: Negation,
    pub normalization: Normalization,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            mode: EvalMode::Componentwise(NnConfig::default()),
            negation: Negation::Complement,
            normalization: Normalization::None,
        }
    }
}

/// Canonical triple text (`{0.6,0.3,0.1}`, `{[0.5,0.7],0.2,[0.1,0.4]}`).
pub fn format_triple(x: &NeutroTriple) -> String {
    x.to_string()
}

fn precedence(node: &Node) -> u8 {
    match node {
        Node::Or(..) => 1,
        Node::And(..) => 2,
        Node::Not(..) => 3,
        Node::Var(..) | Node::Literal(..) => 4,
    }
}

/// Canonical formula text with minimal parentheses. `parse(format_formula(f))`
/// reproduces `f` structurally.
pub fn format_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_node(&mut out, f);
    out
}

fn write_node(out: &mut String, f: &Formula) {
    match &f.node {
        Node::Var(name) => out.push_str(name),
        Node::Literal(value) => out.push_str(&value.to_string()),
        Node::Not(child) => {
            out.push('!');
            write_child(out, child, 3, false);
        }
        Node::And(left, right) => {
            write_child(out, left, 2, false);
            out.push_str(" & ");
            write_child(out, right, 2, true);
        }
        Node::Or(left, right) => {
            write_child(out, left, 1, false);
            out.push_str(" | ");
            write_child(out, right, 1, true);
        }
    }
}

fn write_child(out: &mut String, f: &Formula, op_prec: u8, strict: bool) {
    let p = precedence(&f.node);
    let parens = if strict { p <= op_prec } else { p < op_prec };
    if parens {
        out.push('(');
        write_node(out, f);
        out.push(')');
    } else {
        write_node(out, f);
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_formula(self))
    }
}

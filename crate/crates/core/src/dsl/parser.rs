//! Recursive-descent parser for formulas, triples, and components.

use std::fmt;

use super::{Formula, Node, Span};
use crate::error::Error;
use crate::set::{Interval, SubunitarySet};
use crate::triple::NeutroTriple;

#[derive(Debug, Clone, PartialEq)]
pub enum ParseErrorKind {
    Unexpected {
        expected: Vec<&'static str>,
        found: String,
    },
    NumberOutOfRange {
        value: f64,
    },
    InvalidInterval {
        lo: f64,
        hi: f64,
    },
    OverlappingIntervals,
    MalformedNumber,
}

/// A syntax or range error, anchored to a byte span of the input.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub span: Span,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn offset(&self) -> usize {
        self.span.start
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Unexpected { expected, found } => write!(
                f,
                "syntax error at offset {}: expected {}, found {}",
                self.span.start,
                expected.join(" or "),
                found
            ),
            ParseErrorKind::NumberOutOfRange { value } => write!(
                f,
                "range error at offset {}: component value {value} outside [0, 1]",
                self.span.start
            ),
            ParseErrorKind::InvalidInterval { lo, hi } => write!(
                f,
                "range error at offset {}: invalid interval [{lo}, {hi}]",
                self.span.start
            ),
            ParseErrorKind::OverlappingIntervals => write!(
                f,
                "range error at offset {}: union members overlap",
                self.span.start
            ),
            ParseErrorKind::MalformedNumber => {
                write!(f, "syntax error at offset {}: malformed number", self.span.start)
            }
        }
    }
}

impl std::error::Error for ParseError {}

/// True when `s` is a legal variable/element name:
/// `[A-Za-z_][A-Za-z0-9_]*`.
pub fn is_identifier(s: &str) -> bool {
    let bytes = s.as_bytes();
    match bytes.first() {
        Some(b) if b.is_ascii_alphabetic() || *b == b'_' => bytes[1..]
            .iter()
            .all(|b| b.is_ascii_alphanumeric() || *b == b'_'),
        _ => false,
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(b) => format!("{:?}", char::from(b)),
        }
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            span: Span::new(self.pos, (self.pos + 1).min(self.src.len().max(self.pos))),
            kind: ParseErrorKind::Unexpected {
                expected,
                found: self.found(),
            },
        }
    }

    fn expect(&mut self, b: u8, name: &'static str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.unexpected(vec![name]))
        }
    }
}

/// Parses a whole formula.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut cur = Cursor::new(text);
    let formula = parse_or(&mut cur)?;
    cur.skip_ws();
    if cur.pos < cur.src.len() {
        return Err(cur.unexpected(vec!["'&'", "'|'", "end of input"]));
    }
    Ok(formula)
}

/// Parses a standalone triple literal such as `{0.6,0.3,0.1}`.
pub fn parse_triple(text: &str) -> Result<NeutroTriple, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let (triple, _) = parse_triple_literal(&mut cur)?;
    cur.skip_ws();
    if cur.pos < cur.src.len() {
        return Err(cur.unexpected(vec!["end of input"]));
    }
    Ok(triple)
}

/// Parses a standalone component such as `0.6` or `[0.1,0.2]u[0.4,0.5]`.
pub fn parse_component(text: &str) -> Result<SubunitarySet, ParseError> {
    let mut cur = Cursor::new(text);
    let set = parse_component_inner(&mut cur)?;
    cur.skip_ws();
    if cur.pos < cur.src.len() {
        return Err(cur.unexpected(vec!["end of input"]));
    }
    Ok(set)
}

fn parse_or(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let mut lhs = parse_and(cur)?;
    loop {
        cur.skip_ws();
        if cur.eat(b'|') {
            let rhs = parse_and(cur)?;
            let span = Span::new(lhs.span.start, rhs.span.end);
            lhs = Formula::new(Node::Or(Box::new(lhs), Box::new(rhs)), span);
        } else {
            return Ok(lhs);
        }
    }
}

fn parse_and(cur: &mut Cursor) -> Result<Formula, ParseError> {
    let mut lhs = parse_unary(cur)?;
    loop {
        cur.skip_ws();
        if cur.eat(b'&') {
            let rhs = parse_unary(cur)?;
            let span = Span::new(lhs.span.start, rhs.span.end);
            lhs = Formula::new(Node::And(Box::new(lhs), Box::new(rhs)), span);
        } else {
            return Ok(lhs);
        }
    }
}

fn parse_unary(cur: &mut Cursor) -> Result<Formula, ParseError> {
    cur.skip_ws();
    if cur.peek() == Some(b'!') {
        let start = cur.pos;
        cur.bump();
        let child = parse_unary(cur)?;
        let span = Span::new(start, child.span.end);
        return Ok(Formula::new(Node::Not(Box::new(child)), span));
    }
    parse_atom(cur)
}

fn parse_atom(cur: &mut Cursor) -> Result<Formula, ParseError> {
    cur.skip_ws();
    match cur.peek() {
        Some(b'(') => {
            let start = cur.pos;
            cur.bump();
            let mut inner = parse_or(cur)?;
            cur.skip_ws();
            if !cur.eat(b')') {
                return Err(cur.unexpected(vec!["'&'", "'|'", "')'"]));
            }
            inner.span = Span::new(start, cur.pos);
            Ok(inner)
        }
        Some(b'{') => {
            let start = cur.pos;
            let (triple, _) = parse_triple_literal(cur)?;
            Ok(Formula::new(
                Node::Literal(triple),
                Span::new(start, cur.pos),
            ))
        }
        Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
            let start = cur.pos;
            while matches!(cur.peek(), Some(b) if b.is_ascii_alphanumeric() || b == b'_') {
                cur.bump();
            }
            let name = std::str::from_utf8(&cur.src[start..cur.pos])
                .expect("identifier bytes are ascii")
                .to_string();
            Ok(Formula::new(Node::Var(name), Span::new(start, cur.pos)))
        }
        _ => Err(cur.unexpected(vec!["identifier", "triple literal", "'('", "'!'"])),
    }
}

fn parse_triple_literal(cur: &mut Cursor) -> Result<(NeutroTriple, Span), ParseError> {
    cur.skip_ws();
    let start = cur.pos;
    if !cur.eat(b'{') {
        return Err(cur.unexpected(vec!["'{'"]));
    }
    let t = parse_component_inner(cur)?;
    cur.expect(b',', "','")?;
    let i = parse_component_inner(cur)?;
    cur.expect(b',', "','")?;
    let f = parse_component_inner(cur)?;
    cur.expect(b'}', "'}'")?;
    Ok((NeutroTriple::new(t, i, f), Span::new(start, cur.pos)))
}

fn parse_component_inner(cur: &mut Cursor) -> Result<SubunitarySet, ParseError> {
    cur.skip_ws();
    match cur.peek() {
        Some(b'[') => {
            let start = cur.pos;
            let mut intervals = vec![parse_interval(cur)?];
            loop {
                cur.skip_ws();
                if cur.peek() == Some(b'u') {
                    cur.bump();
                    intervals.push(parse_interval(cur)?);
                } else {
                    break;
                }
            }
            SubunitarySet::new(intervals).map_err(|e| ParseError {
                span: Span::new(start, cur.pos),
                kind: match e {
                    Error::OverlappingIntervals { .. } => ParseErrorKind::OverlappingIntervals,
                    _ => ParseErrorKind::MalformedNumber,
                },
            })
        }
        Some(b) if b.is_ascii_digit() || b == b'.' => {
            let (value, span) = parse_number(cur)?;
            SubunitarySet::crisp(value).map_err(|_| ParseError {
                span,
                kind: ParseErrorKind::NumberOutOfRange { value },
            })
        }
        _ => Err(cur.unexpected(vec!["number", "'['"])),
    }
}

fn parse_interval(cur: &mut Cursor) -> Result<Interval, ParseError> {
    cur.skip_ws();
    let start = cur.pos;
    if !cur.eat(b'[') {
        return Err(cur.unexpected(vec!["'['"]));
    }
    let (lo, lo_span) = parse_number(cur)?;
    cur.expect(b',', "','")?;
    let (hi, hi_span) = parse_number(cur)?;
    cur.expect(b']', "']'")?;
    if !(0.0..=1.0).contains(&lo) {
        return Err(ParseError {
            span: lo_span,
            kind: ParseErrorKind::NumberOutOfRange { value: lo },
        });
    }
    if !(0.0..=1.0).contains(&hi) {
        return Err(ParseError {
            span: hi_span,
            kind: ParseErrorKind::NumberOutOfRange { value: hi },
        });
    }
    Interval::new(lo, hi).map_err(|_| ParseError {
        span: Span::new(start, cur.pos),
        kind: ParseErrorKind::InvalidInterval { lo, hi },
    })
}

fn parse_number(cur: &mut Cursor) -> Result<(f64, Span), ParseError> {
    cur.skip_ws();
    let start = cur.pos;
    let mut saw_digit = false;
    while matches!(cur.peek(), Some(b) if b.is_ascii_digit()) {
        cur.bump();
        saw_digit = true;
    }
    if cur.peek() == Some(b'.') {
        cur.bump();
        while matches!(cur.peek(), Some(b) if b.is_ascii_digit()) {
            cur.bump();
            saw_digit = true;
        }
    }
    if !saw_digit {
        return Err(cur.unexpected(vec!["number"]));
    }
    let span = Span::new(start, cur.pos);
    let text = std::str::from_utf8(&cur.src[start..cur.pos]).expect("number bytes are ascii");
    match text.parse::<f64>() {
        Ok(v) => Ok((v, span)),
        Err(_) => Err(ParseError {
            span,
            kind: ParseErrorKind::MalformedNumber,
        }),
    }
}

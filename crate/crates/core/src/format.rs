//! The `thrackle-instance v1` text format.
//!
//! ```text
//! thrackle-instance v1
//! # comment lines and blank lines are ignored anywhere
//! points 3
//! 0 0
//! 1 1
//! 5/2 -3
//! hulls 2
//! 0 1
//! 0 1 2
//! ```
//!
//! Coordinates are rationals written as `int` or `int/posint` in lowest
//! terms (no leading zeros, no `+`, no `-0`); hull lines list point
//! indices. Serialization always emits this canonical spelling, so
//! parsing a serialized instance and serializing it again reproduces the
//! bytes exactly.

use crate::geom::{Point, Rational};
use crate::model::{Instance, ModelError, PointSet, VariantFlags};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected header `thrackle-instance v1`")]
    BadHeader { line: usize },
    #[error("line {line}: expected `{expected} <count>`")]
    BadCount { line: usize, expected: &'static str },
    #[error("line {line}: expected two coordinates, got `{text}`")]
    BadPoint { line: usize, text: String },
    #[error("line {line}: `{token}` is not a rational (int or int/posint, lowest terms)")]
    BadRational { line: usize, token: String },
    #[error("line {line}: `{token}` is not in lowest terms")]
    NotLowestTerms { line: usize, token: String },
    #[error("line {line}: duplicate point")]
    DuplicatePoint { line: usize },
    #[error("line {line}: `{token}` is not a point index")]
    BadIndex { line: usize, token: String },
    #[error("line {line}: point index {index} out of range ({n} points)")]
    IndexOutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: unexpected trailing content")]
    TrailingContent { line: usize },
    #[error("unexpected end of input while reading {expected}")]
    UnexpectedEof { expected: &'static str },
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Is `tok` a canonical integer: optional `-`, digits, no leading zero,
/// no `-0`?
fn is_canonical_int(tok: &str) -> bool {
    let digits = tok.strip_prefix('-').unwrap_or(tok);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return false;
    }
    if digits.len() > 1 && digits.starts_with('0') {
        return false;
    }
    !(tok.starts_with('-') && digits == "0")
}

/// Is `tok` a canonical positive integer: digits, no leading zero, > 0?
fn is_canonical_posint(tok: &str) -> bool {
    !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit()) && !tok.starts_with('0')
}

fn parse_rational(tok: &str, line: usize) -> Result<Rational, ParseError> {
    let bad = || ParseError::BadRational { line, token: tok.to_string() };
    match tok.split_once('/') {
        None => {
            if !is_canonical_int(tok) {
                return Err(bad());
            }
            let n: BigInt = tok.parse().expect("validated integer");
            Ok(Rational::from_integer(n))
        }
        Some((num, den)) => {
            if !is_canonical_int(num) || !is_canonical_posint(den) {
                return Err(bad());
            }
            let n: BigInt = num.parse().expect("validated integer");
            let d: BigInt = den.parse().expect("validated integer");
            if !num_integer::Integer::gcd(&n, &d).is_one() {
                return Err(ParseError::NotLowestTerms { line, token: tok.to_string() });
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Is `tok` a canonical unsigned count/index: digits without a leading
/// zero (or exactly `0`)?
fn parse_canonical_usize(tok: &str) -> Option<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if tok.len() > 1 && tok.starts_with('0') {
        return None;
    }
    tok.parse().ok()
}

/// Parses the text format. The returned instance carries default flags;
/// variant flags are run-time options, not part of the file.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let mut next = |expected: &'static str| -> Result<(usize, Vec<&str>), ParseError> {
        lines
            .next()
            .map(|(no, l)| (no, l.split_whitespace().collect()))
            .ok_or(ParseError::UnexpectedEof { expected })
    };

    let (line, toks) = next("header")?;
    if toks != ["thrackle-instance", "v1"] {
        return Err(ParseError::BadHeader { line });
    }

    let (line, toks) = next("points count")?;
    let n = match toks.as_slice() {
        ["points", count] => parse_canonical_usize(count)
            .ok_or(ParseError::BadCount { line, expected: "points" })?,
        _ => return Err(ParseError::BadCount { line, expected: "points" }),
    };

    let mut points = Vec::with_capacity(n);
    let mut seen = BTreeSet::new();
    for _ in 0..n {
        let (line, toks) = next("a point line")?;
        let [x, y] = toks.as_slice() else {
            return Err(ParseError::BadPoint { line, text: toks.join(" ") });
        };
        let p = Point::new(parse_rational(x, line)?, parse_rational(y, line)?);
        if !seen.insert(p.clone()) {
            return Err(ParseError::DuplicatePoint { line });
        }
        points.push(p);
    }

    let (line, toks) = next("hulls count")?;
    let m = match toks.as_slice() {
        ["hulls", count] => parse_canonical_usize(count)
            .ok_or(ParseError::BadCount { line, expected: "hulls" })?,
        _ => return Err(ParseError::BadCount { line, expected: "hulls" }),
    };

    let mut family = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, toks) = next("a hull line")?;
        let mut hull = Vec::with_capacity(toks.len());
        for tok in toks {
            let index = parse_canonical_usize(tok)
                .ok_or_else(|| ParseError::BadIndex { line, token: tok.to_string() })?;
            if index >= n {
                return Err(ParseError::IndexOutOfRange { line, index, n });
            }
            hull.push(index);
        }
        family.push(hull);
    }

    if let Some((line, _)) = lines.next() {
        return Err(ParseError::TrailingContent { line });
    }

    let points = PointSet::new(points).expect("duplicates rejected during parsing");
    Ok(Instance::new(points, family, VariantFlags::default())?)
}

/// Serializes an instance in canonical spelling: reduced rationals,
/// canonical hull index lists in family order, no comments.
pub fn serialize_instance(inst: &Instance) -> String {
    let mut out = String::new();
    out.push_str("thrackle-instance v1\n");
    let _ = writeln!(out, "points {}", inst.n());
    for p in inst.point_set().points() {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    let _ = writeln!(out, "hulls {}", inst.m());
    for hull in inst.family() {
        let line: Vec<String> = hull.indices().iter().map(|i| i.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

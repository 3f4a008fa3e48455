//! Canonical text encoding of tables.
//!
//! A semigroup is written `S:<n>:<e0>,<e1>,...` with its `n²` entries in
//! row-major order; a doppelsemigroup is `D:<n>:<left entries>:<right entries>`.
//! Entries are decimal with no whitespace. The encoding is bit-exact: every
//! value prints to exactly one string and parses back to an equal value.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::error::Error;
use crate::table::{CayleyTable, DoppelTable, MAX_ORDER};

/// A parse failure, located at the byte offset of the first bad token.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

/// Either kind of encoded value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Encoded {
    Semigroup(CayleyTable),
    /// Left and right tables, not yet checked against the doppel axioms.
    Doppel(CayleyTable, CayleyTable),
}

fn write_entries(f: &mut fmt::Formatter<'_>, t: &CayleyTable) -> fmt::Result {
    for (k, e) in t.entries().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S:{}:", self.order())?;
        write_entries(f, self)
    }
}

impl fmt::Display for DoppelTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D:{}:", self.order())?;
        write_entries(f, self.left())?;
        f.write_str(":")?;
        write_entries(f, self.right())
    }
}

/// Splits `s` on `sep`, yielding each piece with its byte offset in `s`.
fn split_offsets(s: &str, sep: char, base: usize) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = base;
    s.split(sep).map(move |piece| {
        let at = offset;
        offset += piece.len() + sep.len_utf8();
        (at, piece)
    })
}

fn parse_order(token: &str, at: usize) -> Result<usize, ParseError> {
    let n: usize = parse_number(token, at)?;
    if n == 0 || n > MAX_ORDER {
        return Err(ParseError::new(at, format!("order {n} out of range")));
    }
    Ok(n)
}

fn parse_number(token: &str, at: usize) -> Result<usize, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(
            at,
            format!("expected a decimal number, found {token:?}"),
        ));
    }
    token
        .parse()
        .map_err(|_| ParseError::new(at, format!("number {token:?} too large")))
}

fn parse_entries(n: usize, s: &str, base: usize) -> Result<CayleyTable, ParseError> {
    let mut entries = Vec::with_capacity(n * n);
    for (at, token) in split_offsets(s, ',', base) {
        if entries.len() == n * n {
            return Err(ParseError::new(
                at,
                format!("too many entries: expected {}", n * n),
            ));
        }
        let v = parse_number(token, at)?;
        if v >= n {
            return Err(ParseError::new(
                at,
                format!("entry {v} out of range for order {n}"),
            ));
        }
        entries.push(v);
    }
    if entries.len() != n * n {
        return Err(ParseError::new(
            base + s.len(),
            format!(
                "too few entries: expected {}, found {}",
                n * n,
                entries.len()
            ),
        ));
    }
    Ok(CayleyTable::new(n, entries).expect("entries validated"))
}

/// Parses either an `S:` or a `D:` encoding.
pub fn parse(s: &str) -> Result<Encoded, ParseError> {
    let parts: Vec<(usize, &str)> = split_offsets(s, ':', 0).collect();
    let (_, tag) = parts[0];
    match tag {
        "S" => {
            if parts.len() != 3 {
                return Err(arity_error(s, &parts, 3));
            }
            let n = parse_order(parts[1].1, parts[1].0)?;
            let t = parse_entries(n, parts[2].1, parts[2].0)?;
            Ok(Encoded::Semigroup(t))
        }
        "D" => {
            if parts.len() != 4 {
                return Err(arity_error(s, &parts, 4));
            }
            let n = parse_order(parts[1].1, parts[1].0)?;
            let left = parse_entries(n, parts[2].1, parts[2].0)?;
            let right = parse_entries(n, parts[3].1, parts[3].0)?;
            Ok(Encoded::Doppel(left, right))
        }
        other => Err(ParseError::new(
            0,
            format!("expected tag 'S' or 'D', found {other:?}"),
        )),
    }
}

fn arity_error(s: &str, parts: &[(usize, &str)], want: usize) -> ParseError {
    if parts.len() > want {
        ParseError::new(parts[want].0 - 1, "unexpected ':'")
    } else {
        ParseError::new(s.len(), format!("expected {want} ':'-separated fields"))
    }
}

impl FromStr for CayleyTable {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse(s)? {
            Encoded::Semigroup(t) => Ok(t),
            Encoded::Doppel(..) => Err(ParseError::new(0, "expected an 'S:' encoding")),
        }
    }
}

impl FromStr for DoppelTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse(s)? {
            Encoded::Doppel(l, r) => DoppelTable::new(l, r),
            Encoded::Semigroup(_) => Err(ParseError::new(0, "expected a 'D:' encoding").into()),
        }
    }
}

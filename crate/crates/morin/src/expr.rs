//! Text grammar for alphabets, Schur expansions, and polynomials.
//!
//! Alphabet expressions mirror the working notation: `[expr]` is a boxed
//! letter, a bare integer `n` contributes `n` unit letters, a bare
//! identifier is a variable letter, `+` concatenates and `-` separates the
//! minus side, e.g. `x - b1 - [2x]`. Expansions are sums of terms
//! `c S_{parts}`. Every renderer in this module round-trips through its
//! parser.

use crate::alphabet::{Alphabet, DiffArg, Letter};
use crate::partition::Partition;
use crate::poly::{Poly, Var};
use crate::schur::SchurExpansion;
use num::rational::BigRational;
use num::{BigInt, One, Signed};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at position {pos}: expected {expected}, found {found}")]
pub struct ParseError {
    pub pos: usize,
    pub expected: String,
    pub found: String,
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Scanner<'a> {
        Scanner { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("'{c}'"),
            None => "end of input".into(),
        };
        ParseError { pos: self.pos, expected: expected.into(), found }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.text.len()
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("integer"));
        }
        Ok(self.text[start..self.pos].parse().unwrap())
    }

    fn identifier(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return Err(self.error("identifier"));
        }
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        Ok(&self.text[start..self.pos])
    }
}

// ---------------------------------------------------------------------------
// polynomials

/// Grammar: sums of products of powers, with parentheses; an integer directly
/// followed by an identifier or `(` multiplies implicitly (`2x`, `3(x+1)`).
pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut s = Scanner::new(text);
    let p = poly_sum(&mut s)?;
    if !s.at_end() {
        return Err(s.error("end of input"));
    }
    Ok(p)
}

fn poly_sum(s: &mut Scanner) -> Result<Poly, ParseError> {
    s.skip_ws();
    let negative = s.eat('-');
    let mut acc = poly_product(s)?;
    if negative {
        acc = acc.neg();
    }
    loop {
        s.skip_ws();
        if s.eat('+') {
            acc = acc.add(&poly_product(s)?);
        } else if s.eat('-') {
            acc = acc.sub(&poly_product(s)?);
        } else {
            return Ok(acc);
        }
    }
}

fn poly_product(s: &mut Scanner) -> Result<Poly, ParseError> {
    let mut acc = poly_power(s)?;
    loop {
        s.skip_ws();
        match s.peek() {
            Some('*') => {
                s.bump();
                acc = acc.mul(&poly_power(s)?);
            }
            // implicit multiplication: `2x`, `2(...)`, `(..)(..)`, `(..)x`
            Some(c) if c.is_ascii_alphanumeric() || c == '(' => {
                acc = acc.mul(&poly_power(s)?);
            }
            _ => return Ok(acc),
        }
    }
}

fn poly_power(s: &mut Scanner) -> Result<Poly, ParseError> {
    let base = poly_atom(s)?;
    s.skip_ws();
    if s.eat('^') {
        let e = s.integer()?;
        let e: u32 = e
            .try_into()
            .map_err(|_| s.error("small exponent"))?;
        Ok(base.pow(e))
    } else {
        Ok(base)
    }
}

fn poly_atom(s: &mut Scanner) -> Result<Poly, ParseError> {
    s.skip_ws();
    match s.peek() {
        Some('(') => {
            s.bump();
            let inner = poly_sum(s)?;
            s.expect(')')?;
            Ok(inner)
        }
        Some(c) if c.is_ascii_digit() => {
            let n = s.integer()?;
            Ok(Poly::constant(BigRational::from_integer(n)))
        }
        Some(c) if c.is_ascii_alphabetic() => {
            let name = s.identifier()?;
            Ok(Poly::var(Var::new(name)))
        }
        _ => Err(s.error("'(', integer, or identifier")),
    }
}

// ---------------------------------------------------------------------------
// alphabets and difference arguments

/// Parses `term (+|-) term ...` into plus/minus alphabets.
pub fn parse_diff_arg(text: &str) -> Result<DiffArg, ParseError> {
    let mut s = Scanner::new(text);
    let mut plus = Alphabet::empty();
    let mut minus = Alphabet::empty();
    s.skip_ws();
    let mut on_minus = s.eat('-');
    loop {
        let term = alphabet_term(&mut s)?;
        if on_minus {
            minus = minus.concat(&term);
        } else {
            plus = plus.concat(&term);
        }
        s.skip_ws();
        if s.eat('+') {
            on_minus = false;
        } else if s.eat('-') {
            on_minus = true;
        } else if s.at_end() {
            return Ok(DiffArg::new(plus, minus));
        } else {
            return Err(s.error("'+', '-', or end of input"));
        }
    }
}

fn alphabet_term(s: &mut Scanner) -> Result<Alphabet, ParseError> {
    s.skip_ws();
    match s.peek() {
        Some('[') => {
            s.bump();
            let start = s.pos;
            let form = poly_sum(s)?;
            s.skip_ws();
            s.expect(']')?;
            let letter = letter_from_poly(&form).ok_or_else(|| ParseError {
                pos: start,
                expected: "integer-coefficient linear form".into(),
                found: form.to_string(),
            })?;
            Ok(Alphabet::boxed(letter))
        }
        Some(c) if c.is_ascii_digit() => {
            let n = s.integer()?;
            let n: u32 = n.try_into().map_err(|_| s.error("small letter count"))?;
            Ok(Alphabet::from_integer(n))
        }
        Some(c) if c.is_ascii_alphabetic() => {
            let name = s.identifier()?;
            Ok(Alphabet::single_var(Var::new(name)))
        }
        _ => Err(s.error("'[', integer, or identifier")),
    }
}

fn letter_from_poly(p: &Poly) -> Option<Letter> {
    let mut constant: i64 = 0;
    let mut coeffs: Vec<(Var, i64)> = Vec::new();
    for (m, c) in p.terms() {
        if !c.is_integer() {
            return None;
        }
        let c: i64 = c.to_integer().try_into().ok()?;
        match m.powers() {
            [] => constant = c,
            [(v, 1)] => coeffs.push((*v, c)),
            _ => return None,
        }
    }
    Some(Letter::from_parts(constant, coeffs))
}

/// Canonical text for an alphabet side: unit letters merged into one count,
/// plain variables bare, everything else boxed.
fn push_letter(out: &mut String, letter: &Letter) {
    let coeffs: Vec<(Var, i64)> = letter.coeffs().collect();
    match (&coeffs[..], letter.constant_part()) {
        ([(v, 1)], 0) => {
            let _ = write!(out, "{v}");
        }
        _ => {
            let _ = write!(out, "[{letter}]");
        }
    }
}

pub fn render_alphabet(a: &Alphabet) -> String {
    let units = a.letters().iter().filter(|l| l.is_unit()).count();
    let mut pieces: Vec<String> = Vec::new();
    if units > 0 {
        pieces.push(units.to_string());
    }
    for letter in a.letters().iter().filter(|l| !l.is_unit()) {
        let mut s = String::new();
        push_letter(&mut s, letter);
        pieces.push(s);
    }
    if pieces.is_empty() {
        "0".into()
    } else {
        pieces.join(" + ")
    }
}

pub fn render_diff_arg(arg: &DiffArg) -> String {
    let mut out = render_alphabet(arg.plus());
    let units = arg.minus().letters().iter().filter(|l| l.is_unit()).count();
    if units > 0 {
        let _ = write!(out, " - {units}");
    }
    for letter in arg.minus().letters().iter().filter(|l| !l.is_unit()) {
        out.push_str(" - ");
        push_letter(&mut out, letter);
    }
    out
}

// ---------------------------------------------------------------------------
// Schur expansions

/// Parses sums of `c S_{parts}` terms; the partition may be a digit string
/// (`S_{112}`), a comma list (`S_{10,12}`), or bare digits (`S_4`).
pub fn parse_expansion(text: &str) -> Result<SchurExpansion, ParseError> {
    let mut s = Scanner::new(text);
    let mut out = SchurExpansion::new();
    s.skip_ws();
    if s.at_end() {
        return Err(s.error("expansion term"));
    }
    // allow a bare "0"
    if s.peek() == Some('0') {
        let save = s.pos;
        s.bump();
        if s.at_end() {
            return Ok(out);
        }
        s.pos = save;
    }
    let mut negative = s.eat('-');
    loop {
        let (partition, coeff) = expansion_term(&mut s)?;
        let coeff = if negative { -coeff } else { coeff };
        out.add_term(partition, coeff);
        s.skip_ws();
        if s.eat('+') {
            negative = false;
        } else if s.eat('-') {
            negative = true;
        } else if s.at_end() {
            return Ok(out);
        } else {
            return Err(s.error("'+', '-', or end of input"));
        }
    }
}

fn expansion_term(s: &mut Scanner) -> Result<(Partition, BigRational), ParseError> {
    s.skip_ws();
    let mut coeff = BigRational::one();
    if s.peek().is_some_and(|c| c.is_ascii_digit()) {
        let n = s.integer()?;
        let d = if s.eat('/') { s.integer()? } else { BigInt::one() };
        coeff = BigRational::new(n, d);
        s.skip_ws();
        s.eat('*');
        s.skip_ws();
    }
    if s.identifier()? != "S" {
        return Err(s.error("'S'"));
    }
    s.expect('_')?;
    let partition = if s.eat('{') {
        let p = partition_body(s, '}')?;
        s.expect('}')?;
        p
    } else {
        partition_digits(s)?
    };
    Ok((partition, coeff))
}

fn partition_body(s: &mut Scanner, close: char) -> Result<Partition, ParseError> {
    s.skip_ws();
    let start = s.pos;
    let mut raw = String::new();
    while let Some(c) = s.peek() {
        if c == close {
            break;
        }
        raw.push(c);
        s.bump();
    }
    let raw = raw.trim();
    if raw.is_empty() {
        return Err(ParseError {
            pos: start,
            expected: "partition parts".into(),
            found: format!("'{close}'"),
        });
    }
    if raw.contains(',') {
        let mut parts = Vec::new();
        for piece in raw.split(',') {
            let piece = piece.trim();
            let part: u32 = piece.parse().map_err(|_| ParseError {
                pos: start,
                expected: "part".into(),
                found: format!("'{piece}'"),
            })?;
            parts.push(part);
        }
        Ok(Partition::new(parts))
    } else if raw.chars().all(|c| c.is_ascii_digit()) {
        Ok(Partition::new(raw.chars().map(|c| c.to_digit(10).unwrap())))
    } else {
        Err(ParseError {
            pos: start,
            expected: "digits or comma-separated parts".into(),
            found: format!("'{raw}'"),
        })
    }
}

fn partition_digits(s: &mut Scanner) -> Result<Partition, ParseError> {
    let start = s.pos;
    let mut digits = String::new();
    while s.peek().is_some_and(|c| c.is_ascii_digit()) {
        digits.push(s.bump().unwrap());
    }
    if digits.is_empty() {
        return Err(ParseError {
            pos: start,
            expected: "partition digits".into(),
            found: s
                .peek()
                .map_or("end of input".into(), |c| format!("'{c}'")),
        });
    }
    Ok(Partition::new(digits.chars().map(|c| c.to_digit(10).unwrap())))
}

/// JSON form of an expansion: a list of `{"partition": [...], "coeff": "c"}`
/// objects in canonical order, coefficients as decimal strings.
pub fn expansion_json(e: &SchurExpansion) -> serde_json::Value {
    serde_json::Value::Array(
        e.terms()
            .map(|(p, c)| {
                serde_json::json!({
                    "partition": p.parts(),
                    "coeff": c.to_string(),
                })
            })
            .collect(),
    )
}

/// JSON form of a verification/solve result.
pub fn thom_result_json(result: &crate::thom::ThomResult) -> serde_json::Value {
    serde_json::json!({
        "singularity": result.singularity,
        "r": result.r,
        "expansion": expansion_json(&result.expansion),
        "rank": result.rank,
        "verified": result.verified_against(),
        "unique": result.unique,
    })
}

/// Polynomial JSON: canonical text plus the term count.
pub fn poly_json(p: &Poly) -> serde_json::Value {
    serde_json::json!({
        "text": p.to_string(),
        "terms": p.num_terms(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Zero;

    #[test]
    fn parse_probe_argument() {
        let arg = parse_diff_arg("x - [2x1] - [2x2]").unwrap();
        assert_eq!(arg.plus().cardinality(), 1);
        assert_eq!(arg.minus().cardinality(), 2);
        assert_eq!(render_diff_arg(&arg), "x - [2x1] - [2x2]");
    }

    #[test]
    fn unboxed_integer_is_unit_letters() {
        let arg = parse_diff_arg("2").unwrap();
        assert_eq!(arg.plus(), &Alphabet::from_integer(2));
        assert!(arg.minus().is_empty());
    }

    #[test]
    fn malformed_input_is_a_parse_error() {
        let err = parse_diff_arg("x - [").unwrap_err();
        assert!(err.pos > 0);
        assert!(parse_diff_arg("x +").is_err());
        assert!(parse_diff_arg("[x1*x2]").is_err());
    }

    #[test]
    fn diff_arg_round_trip() {
        for text in [
            "x - b1 - [2x]",
            "2 - [3]",
            "x1 + x2 - [2x1] - [2x2] - [x1+x2]",
            "0 - b1 - b2",
            "[0]",
            "[-2]",
            "[2x+3]",
        ] {
            let arg = parse_diff_arg(text).unwrap();
            let rendered = render_diff_arg(&arg);
            assert_eq!(parse_diff_arg(&rendered).unwrap(), arg, "{text} -> {rendered}");
        }
    }

    #[test]
    fn parse_expansion_forms() {
        let e = parse_expansion("S_{1111}+9S_{112}+26S_{13}+24S_4").unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(
            e.to_string(),
            "S_{1111} + 9 S_{112} + 26 S_{13} + 24 S_{4}"
        );
        let again = parse_expansion(&e.to_string()).unwrap();
        assert_eq!(again, e);
    }

    #[test]
    fn parse_expansion_commas_and_signs() {
        let e = parse_expansion("2 S_{10,12} - S_{1}").unwrap();
        assert_eq!(e.len(), 2);
        let round = parse_expansion(&e.to_string()).unwrap();
        assert_eq!(round, e);
        assert!(parse_expansion("S_{}").is_err());
        assert!(parse_expansion("5").is_err());
        assert!(parse_expansion("0").unwrap().is_empty());
    }

    #[test]
    fn poly_parser_and_display_round_trip() {
        for text in [
            "x1^2 - 2*x1*x2 + 1",
            "(x1+x2)^3",
            "2x - 3",
            "-x + 5",
            "x*(x - 1)*(x + 1)",
        ] {
            let p = parse_poly(text).unwrap();
            let rendered = p.to_string();
            assert_eq!(parse_poly(&rendered).unwrap(), p, "{text} -> {rendered}");
        }
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("x1 ^").is_err());
        assert!(parse_poly("(x").is_err());
    }

    #[test]
    fn poly_parse_matches_hand_built() {
        let x = Var::new("x");
        let p = parse_poly("x^2 - 2x + 1").unwrap();
        let expected = Poly::var(x).pow(2)
            .sub(&Poly::var(x).scale(&BigRational::from_integer(BigInt::from(2))))
            .add(&Poly::one());
        assert_eq!(p, expected);
        assert!(parse_poly("0").unwrap().is_zero());
    }

    #[test]
    fn expansion_json_shape() {
        let e = parse_expansion("S_{12} + 2 S_{3}").unwrap();
        let v = expansion_json(&e);
        assert_eq!(v[0]["partition"], serde_json::json!([1, 2]));
        assert_eq!(v[0]["coeff"], "1");
        assert_eq!(v[1]["coeff"], "2");
    }
}

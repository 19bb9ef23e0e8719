//! Alphabets of boxed letters and difference arguments.
//!
//! A letter is an integer-coefficient linear form treated as a single,
//! atomic element of an alphabet: `[2x]` contributes one letter of value
//! `2x`, and the unboxed integer `n` contributes `n` copies of the unit
//! letter `1`. Letters are capped at degree one; everything evaluated in
//! this crate is built from such forms, and the cap keeps the failure mode
//! explicit instead of silently growing the ring.

use crate::poly::{Poly, Var};
use num::rational::BigRational;
use num::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphabetError {
    /// Product of two non-constant letters would leave the degree <= 1 range.
    #[error("degree overflow: product of non-constant letters {left} and {right}")]
    DegreeOverflow { left: String, right: String },
}

/// An integer-coefficient linear form, e.g. `2x`, `x1+x2`, `3`, `-b1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    coeffs: BTreeMap<Var, i64>,
    constant: i64,
}

impl Letter {
    pub fn constant(c: i64) -> Letter {
        Letter { coeffs: BTreeMap::new(), constant: c }
    }

    pub fn unit() -> Letter {
        Letter::constant(1)
    }

    pub fn var(v: Var) -> Letter {
        Letter::scaled_var(1, v)
    }

    pub fn scaled_var(c: i64, v: Var) -> Letter {
        Letter::from_parts(0, [(v, c)])
    }

    pub fn from_parts(constant: i64, coeffs: impl IntoIterator<Item = (Var, i64)>) -> Letter {
        let mut map = BTreeMap::new();
        for (v, c) in coeffs {
            if c != 0 {
                *map.entry(v).or_insert(0) += c;
            }
        }
        map.retain(|_, c| *c != 0);
        Letter { coeffs: map, constant }
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.is_constant() && self.constant == 1
    }

    pub fn constant_part(&self) -> i64 {
        self.constant
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (Var, i64)> + '_ {
        self.coeffs.iter().map(|(&v, &c)| (v, c))
    }

    pub fn negate(&self) -> Letter {
        Letter {
            coeffs: self.coeffs.iter().map(|(&v, &c)| (v, -c)).collect(),
            constant: -self.constant,
        }
    }

    /// Letter product; at most one factor may be non-constant.
    pub fn mul(&self, other: &Letter) -> Result<Letter, AlphabetError> {
        if !self.is_constant() && !other.is_constant() {
            return Err(AlphabetError::DegreeOverflow {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        let (scalar, form) = if self.is_constant() { (self.constant, other) } else { (other.constant, self) };
        Ok(Letter {
            coeffs: form
                .coeffs
                .iter()
                .filter_map(|(&v, &c)| {
                    let c = c * scalar;
                    (c != 0).then_some((v, c))
                })
                .collect(),
            constant: form.constant * scalar,
        })
    }

    pub fn as_poly(&self) -> Poly {
        let mut p = Poly::from_int(self.constant);
        for (&v, &c) in &self.coeffs {
            p = p + Poly::var(v).scale(&BigRational::from_integer(BigInt::from(c)));
        }
        p
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "{}", self.constant);
        }
        let mut first = true;
        for (&v, &c) in &self.coeffs {
            if first {
                match c {
                    1 => write!(f, "{v}")?,
                    -1 => write!(f, "-{v}")?,
                    _ => write!(f, "{c}{v}")?,
                }
                first = false;
            } else {
                let sign = if c < 0 { '-' } else { '+' };
                match c.abs() {
                    1 => write!(f, "{sign}{v}")?,
                    a => write!(f, "{sign}{a}{v}")?,
                }
            }
        }
        if self.constant != 0 {
            let sign = if self.constant < 0 { '-' } else { '+' };
            write!(f, "{sign}{}", self.constant.abs())?;
        }
        Ok(())
    }
}

/// A finite multiset of letters. Equality is multiset equality; the stored
/// order is preserved for rendering but carries no meaning.
#[derive(Clone, Eq, Debug, Default)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    pub fn empty() -> Alphabet {
        Alphabet::default()
    }

    /// The unboxed integer `n`: that many copies of the unit letter. Not to
    /// be confused with the boxed letter `[n]`.
    pub fn from_integer(n: u32) -> Alphabet {
        Alphabet { letters: vec![Letter::unit(); n as usize] }
    }

    /// A single boxed letter.
    pub fn boxed(letter: Letter) -> Alphabet {
        Alphabet { letters: vec![letter] }
    }

    pub fn single_var(v: Var) -> Alphabet {
        Alphabet::boxed(Letter::var(v))
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Alphabet {
        Alphabet { letters: letters.into_iter().collect() }
    }

    /// Fresh variables `stem1..stemN`.
    pub fn generic(stem: &str, n: u32) -> Alphabet {
        Alphabet::from_letters(
            (1..=n).map(|j| Letter::var(Var::new(&format!("{stem}{j}")))),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn cardinality(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Multiset union.
    pub fn concat(&self, other: &Alphabet) -> Alphabet {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Alphabet { letters }
    }

    /// Letter-wise product with `by`.
    pub fn scale(&self, by: &Letter) -> Result<Alphabet, AlphabetError> {
        Ok(Alphabet {
            letters: self
                .letters
                .iter()
                .map(|l| l.mul(by))
                .collect::<Result<_, _>>()?,
        })
    }

    /// Letter-wise negation (the starred alphabet).
    pub fn negate_letters(&self) -> Alphabet {
        Alphabet {
            letters: self.letters.iter().map(Letter::negate).collect(),
        }
    }

    fn sorted(&self) -> Vec<&Letter> {
        let mut v: Vec<&Letter> = self.letters.iter().collect();
        v.sort();
        v
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl std::ops::Add for &Alphabet {
    type Output = Alphabet;
    fn add(self, rhs: &Alphabet) -> Alphabet {
        self.concat(rhs)
    }
}

impl std::ops::Add for Alphabet {
    type Output = Alphabet;
    fn add(self, rhs: Alphabet) -> Alphabet {
        self.concat(&rhs)
    }
}

/// The argument `plus - minus` of a symmetric function. No cancellation is
/// performed at construction; that the value only depends on the difference
/// is a property of the evaluation, not of this container.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct DiffArg {
    plus: Alphabet,
    minus: Alphabet,
}

impl DiffArg {
    pub fn new(plus: Alphabet, minus: Alphabet) -> DiffArg {
        DiffArg { plus, minus }
    }

    pub fn from_plus(plus: Alphabet) -> DiffArg {
        DiffArg { plus, minus: Alphabet::empty() }
    }

    pub fn plus(&self) -> &Alphabet {
        &self.plus
    }

    pub fn minus(&self) -> &Alphabet {
        &self.minus
    }

    /// `(A - B) -> (B - A)`.
    pub fn swapped(&self) -> DiffArg {
        DiffArg { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// Star both sides: `(A - B) -> (A* - B*)`.
    pub fn negated_letters(&self) -> DiffArg {
        DiffArg {
            plus: self.plus.negate_letters(),
            minus: self.minus.negate_letters(),
        }
    }
}

//! Complete functions, Schur functions of difference arguments, resultants,
//! and integer-coefficient Schur expansions.
//!
//! The complete functions `S_i(A - B)` are read off the generating series
//! `prod_b (1 - bz) / prod_a (1 - az)`; a Schur function is the determinant
//! of the square matrix `S_{i_p + p - q}` built from them, with `S_k = 0`
//! for `k < 0` and `S_0 = 1`.

use crate::alphabet::{Alphabet, DiffArg};
use crate::partition::Partition;
use crate::poly::Poly;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchurError {
    #[error("partition {partition} does not fit in the {rows}x{cols} rectangle")]
    ShapeError { partition: String, rows: u32, cols: u32 },
}

/// Truncated series of complete functions `S_0, S_1, ..., S_max` of one
/// difference argument.
#[derive(Clone, Debug)]
pub struct CompleteSeries {
    arg: DiffArg,
    values: Vec<Poly>,
}

impl CompleteSeries {
    pub fn arg(&self) -> &DiffArg {
        &self.arg
    }

    pub fn max_degree(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    /// `S_i`; zero for negative `i`. Panics past the truncation point.
    pub fn value(&self, i: i64) -> Poly {
        if i < 0 {
            return Poly::zero();
        }
        self.values[i as usize].clone()
    }

    pub fn values(&self) -> &[Poly] {
        &self.values
    }
}

/// Expands the generating series of `arg` up to `z^max_degree`.
pub fn complete_series(arg: &DiffArg, max_degree: u32) -> CompleteSeries {
    let n = max_degree as usize;
    let mut series: Vec<Poly> = vec![Poly::zero(); n + 1];
    series[0] = Poly::one();
    // numerator: one pass of (1 - bz) per minus letter
    for b in arg.minus().letters() {
        let bp = b.as_poly();
        for d in (1..=n).rev() {
            let shifted = bp.mul(&series[d - 1]);
            series[d] = series[d].sub(&shifted);
        }
    }
    // denominator: 1/(1 - az) satisfies new[d] = old[d] + a * new[d-1]
    for a in arg.plus().letters() {
        let ap = a.as_poly();
        for d in 1..=n {
            let carry = ap.mul(&series[d - 1]);
            series[d] = series[d].add(&carry);
        }
    }
    CompleteSeries { arg: arg.clone(), values: series }
}

/// Determinant of a square polynomial matrix: cofactor expansion for small
/// sizes, fraction-free elimination (Bareiss) above that.
pub fn determinant(mat: Vec<Vec<Poly>>) -> Poly {
    let n = mat.len();
    debug_assert!(mat.iter().all(|row| row.len() == n));
    match n {
        0 => Poly::one(),
        1..=5 => cofactor_det(&mat, &(0..n).collect::<Vec<_>>()),
        _ => bareiss_det(mat),
    }
}

fn cofactor_det(mat: &[Vec<Poly>], cols: &[usize]) -> Poly {
    let row = mat.len() - cols.len();
    if cols.is_empty() {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = &mat[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&other| other != c)
            .collect();
        let minor = cofactor_det(mat, &rest);
        let signed = if k % 2 == 0 { entry.mul(&minor) } else { entry.mul(&minor).neg() };
        acc = acc.add(&signed);
    }
    acc
}

fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&l| !m[l][k].is_zero()) {
                Some(l) => {
                    m.swap(k, l);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("fraction-free elimination: pivot must divide");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate { det.neg() } else { det }
}

/// `S_I(arg)` by the determinant of complete functions.
pub fn schur(partition: &Partition, arg: &DiffArg) -> Poly {
    if partition.is_empty() {
        return Poly::one();
    }
    let needed = partition.largest_part() + partition.len() as u32 - 1;
    let series = complete_series(arg, needed);
    schur_from_series(partition, &series)
}

/// Same as [`schur`] but reusing a precomputed series for the argument.
pub fn schur_from_series(partition: &Partition, series: &CompleteSeries) -> Poly {
    if partition.is_empty() {
        return Poly::one();
    }
    let s = partition.len();
    let parts = partition.parts();
    let mat: Vec<Vec<Poly>> = (1..=s)
        .map(|p| {
            (1..=s)
                .map(|q| series.value(parts[p - 1] as i64 + p as i64 - q as i64))
                .collect()
        })
        .collect();
    determinant(mat)
}

/// Skew of a rectangle: `S_{(cols^rows)/I}(arg)`, computed through the
/// complement shape `(cols - i_rows, ..., cols - i_1)`.
pub fn schur_skew_rectangle(
    rows: u32,
    cols: u32,
    inner: &Partition,
    arg: &DiffArg,
) -> Result<Poly, SchurError> {
    if !Partition::rectangle(rows, cols).contains(inner) {
        return Err(SchurError::ShapeError {
            partition: inner.to_string(),
            rows,
            cols,
        });
    }
    Ok(schur(&rectangle_complement(rows, cols, inner), arg))
}

/// The complement of `inner` in a `rows x cols` box, read upside down.
pub fn rectangle_complement(rows: u32, cols: u32, inner: &Partition) -> Partition {
    let mut padded = vec![0u32; rows as usize - inner.len()];
    padded.extend_from_slice(inner.parts());
    Partition::new(padded.iter().rev().map(|&p| cols - p))
}

/// `R(A, B)`: the product of all pairwise differences of letters.
pub fn resultant(a: &Alphabet, b: &Alphabet) -> Poly {
    let mut out = Poly::one();
    for la in a.letters() {
        let pa = la.as_poly();
        for lb in b.letters() {
            out = out.mul(&pa.sub(&lb.as_poly()));
        }
    }
    out
}

/// A finite linear combination of Schur functions, keyed by partition.
/// Coefficients are exact rationals (integers in every expansion this crate
/// produces); zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, BigRational>,
}

impl SchurExpansion {
    pub fn new() -> SchurExpansion {
        SchurExpansion::default()
    }

    pub fn singleton(partition: Partition, coeff: BigRational) -> SchurExpansion {
        let mut e = SchurExpansion::new();
        e.add_term(partition, coeff);
        e
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> SchurExpansion {
        let mut e = SchurExpansion::new();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, partition: Partition, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(partition) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, partition: &Partition) -> BigRational {
        self.coeffs
            .get(partition)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &SchurExpansion) -> SchurExpansion {
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> SchurExpansion {
        if c.is_zero() {
            return SchurExpansion::new();
        }
        SchurExpansion {
            coeffs: self
                .coeffs
                .iter()
                .map(|(p, k)| (p.clone(), k * c))
                .collect(),
        }
    }

    /// Common weight of all partitions, when the expansion is homogeneous.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.coeffs.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// The sub-sum of terms whose partitions have the given `h` relative to
    /// the row length `r`.
    pub fn h_part(&self, r: u32, h: u32) -> SchurExpansion {
        SchurExpansion {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(p, _)| p.classify_h(r) == Some(h))
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn all_coeffs_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if abs.is_one() {
                write!(f, "S_{{{p}}}")?;
            } else {
                write!(f, "{abs} S_{{{p}}}")?;
            }
        }
        Ok(())
    }
}

/// Evaluates an expansion at a difference argument: the sum of
/// `coeff * S_I(arg)` over its terms, sharing one series computation.
pub fn eval_expansion(expansion: &SchurExpansion, arg: &DiffArg) -> Poly {
    let needed = expansion
        .partitions()
        .map(|p| p.largest_part() + p.len() as u32)
        .max()
        .unwrap_or(0);
    let series = complete_series(arg, needed);
    let mut out = Poly::zero();
    for (p, c) in expansion.terms() {
        out = out.add(&schur_from_series(p, &series).scale(c));
    }
    out
}

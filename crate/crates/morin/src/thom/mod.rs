//! Thom polynomials of the Morin singularities `A_i(r)`.
//!
//! The centerpiece is the function `F^(i)_r`: a Schur expansion whose
//! coefficients are Schur functions of the boxed constants `[2] + ... + [i]`,
//! and which is the 1-part of the Thom polynomial `T^{A_i}_r`. Restriction
//! equations from the probe catalog pin down the full polynomial; the solver
//! assembles them into an exact rational linear system, and the h-part
//! machinery produces the corrections beyond the 1-part.

pub mod catalog;
mod linsolve;

pub use catalog::{a_probe, i22_probe, iii22_probe, probe_set, ProbeSet, ProbeSpec};

use crate::alphabet::{Alphabet, DiffArg, Letter};
use crate::partition::{partitions_in_rectangle, partitions_of_weight, Partition};
use crate::poly::{Poly, Var};
use crate::schur::{
    complete_series, eval_expansion, resultant, schur, schur_from_series, SchurExpansion,
};
use linsolve::{solve_exact, LinOutcome};
use num::rational::BigRational;
use num::{BigInt, One, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ThomError {
    #[error("alphabet has {got} letters, expected {expected}")]
    CardinalityMismatch { expected: usize, got: usize },
    #[error("restriction system is underdetermined (solution space dimension {nullity})")]
    Underdetermined { nullity: usize },
    #[error("restriction system is inconsistent")]
    Inconsistent,
    #[error("solution has non-integer coefficient {coeff} at S_{{{partition}}}")]
    NonIntegerSolution { partition: String, coeff: String },
    #[error("residual is not in the span of the correction basis")]
    NoSolution,
    #[error("polynomial is not symmetric: leading monomial {monomial}")]
    NotSymmetric { monomial: String },
    #[error("partition {partition} does not contain the row ({r})")]
    MissingRow { partition: String, r: u32 },
    #[error("no probe data for {singularity}(r={r}): {reason}")]
    UnsupportedSingularity { singularity: String, r: u32, reason: String },
}

/// `F(A, -)` for an alphabet of `m` constant letters and row length `n`:
/// the sum over partitions `I` inside the `m x n` box of
/// `S_I(A) * S_{(n - i_m, ..., n - i_1, n + |I|)}`.
pub fn f_general(a: &Alphabet, m: u32, n: u32) -> Result<SchurExpansion, ThomError> {
    if a.cardinality() != m as usize {
        return Err(ThomError::CardinalityMismatch {
            expected: m as usize,
            got: a.cardinality(),
        });
    }
    let arg = DiffArg::from_plus(a.clone());
    let mut out = SchurExpansion::new();
    for inner in partitions_in_rectangle(m, n) {
        let coeff = schur(&inner, &arg)
            .to_rational()
            .expect("coefficient alphabet must consist of constant letters");
        if coeff.is_zero() {
            continue;
        }
        let mut padded = vec![0u32; m as usize - inner.len()];
        padded.extend_from_slice(inner.parts());
        let label = Partition::new(
            padded
                .iter()
                .rev()
                .map(|&j| n - j)
                .chain(std::iter::once(n + inner.weight())),
        );
        out.add_term(label, coeff);
    }
    Ok(out)
}

/// `F^(i)_r`: `F(A, -)` with `A = [2] + [3] + ... + [i]`, `m = i - 1`,
/// `n = r`; for `i = 1` this degenerates to the single row `S_r`.
pub fn f_ir(i: u32, r: u32) -> SchurExpansion {
    assert!(i >= 1 && r >= 1, "f_ir requires i >= 1 and r >= 1");
    let a = Alphabet::from_letters((2..=i).map(|t| Letter::constant(t as i64)));
    f_general(&a, i - 1, r).expect("cardinality is correct by construction")
}

/// Does `F^(i)_r(x - B_r) = R(x + [2x] + ... + [ix], B_r)` hold exactly?
pub fn check_fbr(i: u32, r: u32) -> bool {
    let x = catalog::var_x();
    let b = catalog::b_alphabet(r);
    let arg = DiffArg::new(Alphabet::single_var(x), b.clone());
    let lhs = eval_expansion(&f_ir(i, r), &arg);
    let rhs = resultant(&catalog::x_ladder(i), &b);
    lhs == rhs
}

/// The specializations `B_r = B_{r-1} + [px]` of the identity above:
/// exact vanishing for `p <= i`, and for `p = i + 1` equality with
/// `R(x + [2x] + ... + [ix], B_{r-1} + [(i+1)x])`.
pub fn check_cf(i: u32, r: u32, p: u32) -> bool {
    assert!((1..=i + 1).contains(&p), "check_cf requires 1 <= p <= i+1");
    let x = catalog::var_x();
    let minus = catalog::b_alphabet(r - 1)
        .concat(&Alphabet::boxed(Letter::scaled_var(p as i64, x)));
    let arg = DiffArg::new(Alphabet::single_var(x), minus.clone());
    let lhs = eval_expansion(&f_ir(i, r), &arg);
    if p <= i {
        lhs.is_zero()
    } else {
        lhs == resultant(&catalog::x_ladder(i), &minus)
    }
}

/// The Euler class of `A_i` with `k` target roots:
/// `i! x^i prod_j (y_j - ix) ... (y_j - x)`.
pub fn euler_ai(i: u32, k: u32) -> Poly {
    let x = Poly::var(catalog::var_x());
    let mut out = x.pow(i).scale(&BigRational::from_integer(factorial(i)));
    for j in 1..=k {
        let y = Poly::var(Var::new(&format!("y{j}")));
        for t in 1..=i {
            out = out.mul(&y.sub(&x.scale(&BigRational::from_integer(BigInt::from(t)))));
        }
    }
    out
}

/// The formal identity
/// `i!(-x)^i prod_j (ix - y_j)...(x - y_j)
///    = R(x + [2x] + ... + [ix], Y_k + [(i+1)x])`.
pub fn check_fid(i: u32, k: u32) -> bool {
    let x = Poly::var(catalog::var_x());
    let mut lhs = x.neg().pow(i).scale(&BigRational::from_integer(factorial(i)));
    for j in 1..=k {
        let y = Poly::var(Var::new(&format!("y{j}")));
        for t in 1..=i {
            lhs = lhs.mul(&x.scale(&BigRational::from_integer(BigInt::from(t))).sub(&y));
        }
    }
    let minus = Alphabet::from_letters((1..=k).map(|j| Letter::var(Var::new(&format!("y{j}")))))
        .concat(&Alphabet::boxed(Letter::scaled_var(
            (i + 1) as i64,
            catalog::var_x(),
        )));
    lhs == resultant(&catalog::x_ladder(i), &minus)
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Outcome of evaluating a candidate at one probe.
#[derive(Clone, Debug)]
pub struct ProbeCheck {
    pub probe: String,
    pub pass: bool,
    /// `value - rhs`; zero exactly when the probe passes.
    pub residual: Poly,
}

/// A computed (or checked) Thom polynomial together with its verification
/// record.
#[derive(Clone, Debug)]
pub struct ThomResult {
    pub singularity: String,
    pub r: u32,
    pub expansion: SchurExpansion,
    pub checks: Vec<ProbeCheck>,
    pub unique: bool,
    /// Largest `h` with a nontrivial h-part; `None` when some partition
    /// misses the row `(r)` and the notion does not apply.
    pub rank: Option<u32>,
}

impl ThomResult {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn verified_against(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.pass)
            .map(|c| c.probe.as_str())
            .collect()
    }
}

/// Evaluates `candidate` at every probe of the set and reports pass/fail
/// with exact residuals.
pub fn verify_thom(candidate: &SchurExpansion, probes: &ProbeSet) -> ThomResult {
    let checks: Vec<ProbeCheck> = probes
        .probes
        .iter()
        .map(|p| {
            let residual = eval_expansion(candidate, &p.arg).sub(&p.rhs);
            ProbeCheck {
                probe: p.name.clone(),
                pass: residual.is_zero(),
                residual,
            }
        })
        .collect();
    let all_pass = checks.iter().all(|c| c.pass);
    ThomResult {
        singularity: probes.singularity.clone(),
        r: probes.r,
        expansion: candidate.clone(),
        checks,
        unique: all_pass,
        rank: rank(candidate, probes.r).ok(),
    }
}

/// Default solver basis: all partitions of weight `i * r` containing the
/// row `(r)`.
pub fn default_basis(i: u32, r: u32) -> Vec<Partition> {
    partitions_of_weight(i * r)
        .into_iter()
        .filter(|p| p.contains(&Partition::row(r)))
        .collect()
}

/// Solves the restriction equations for the probe set over the given basis
/// (the default basis when `None`), insisting on a unique, integral solution.
pub fn solve_thom(
    probes: &ProbeSet,
    basis: Option<Vec<Partition>>,
) -> Result<ThomResult, ThomError> {
    let basis = basis.unwrap_or_else(|| default_basis(probes.i, probes.r));
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    let mut rhs: Vec<BigRational> = Vec::new();
    for probe in &probes.probes {
        let needed = basis
            .iter()
            .map(|p| p.largest_part() + p.len() as u32)
            .max()
            .unwrap_or(0);
        let series = complete_series(&probe.arg, needed);
        let columns: Vec<Poly> = basis
            .iter()
            .map(|p| schur_from_series(p, &series))
            .collect();
        // one scalar equation per monomial present anywhere in this probe
        let mut monomials = std::collections::BTreeSet::new();
        for c in &columns {
            monomials.extend(c.terms().map(|(m, _)| m.clone()));
        }
        monomials.extend(probe.rhs.terms().map(|(m, _)| m.clone()));
        for m in monomials {
            rows.push(columns.iter().map(|c| c.coeff(&m)).collect());
            rhs.push(probe.rhs.coeff(&m));
        }
    }
    let solution = match solve_exact(rows, rhs) {
        LinOutcome::Unique(x) => x,
        LinOutcome::Underdetermined { nullity } => {
            return Err(ThomError::Underdetermined { nullity })
        }
        LinOutcome::Inconsistent => return Err(ThomError::Inconsistent),
    };
    for (p, c) in basis.iter().zip(&solution) {
        if !c.is_integer() {
            return Err(ThomError::NonIntegerSolution {
                partition: p.to_string(),
                coeff: c.to_string(),
            });
        }
    }
    let expansion = SchurExpansion::from_terms(basis.into_iter().zip(solution));
    let mut result = verify_thom(&expansion, probes);
    debug_assert!(result.all_pass(), "solved expansion must verify");
    result.unique = true;
    Ok(result)
}

/// Solves `residual = sum_J c_J S_J(probe.arg)` for the correction
/// coefficients beyond a candidate's 1-part. The candidate is assumed to
/// already satisfy every other probe, and the basis partitions to vanish at
/// them (hook vanishing).
pub fn h_part_correction(
    candidate: &SchurExpansion,
    probe: &ProbeSpec,
    correction_basis: &[Partition],
) -> Result<BTreeMap<Partition, BigRational>, ThomError> {
    let residual = probe.rhs.sub(&eval_expansion(candidate, &probe.arg));
    let needed = correction_basis
        .iter()
        .map(|p| p.largest_part() + p.len() as u32)
        .max()
        .unwrap_or(0);
    let series = complete_series(&probe.arg, needed);
    let columns: Vec<Poly> = correction_basis
        .iter()
        .map(|p| schur_from_series(p, &series))
        .collect();
    let mut monomials = std::collections::BTreeSet::new();
    for c in &columns {
        monomials.extend(c.terms().map(|(m, _)| m.clone()));
    }
    monomials.extend(residual.terms().map(|(m, _)| m.clone()));
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for m in monomials {
        rows.push(columns.iter().map(|c| c.coeff(&m)).collect());
        rhs.push(residual.coeff(&m));
    }
    match solve_exact(rows, rhs) {
        LinOutcome::Unique(x) => Ok(correction_basis
            .iter()
            .cloned()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .collect()),
        LinOutcome::Underdetermined { nullity } => Err(ThomError::Underdetermined { nullity }),
        LinOutcome::Inconsistent => Err(ThomError::NoSolution),
    }
}

/// Expands a symmetric polynomial in the Schur basis of the given variables
/// by peeling graded-lex leading monomials.
pub fn schur_expand(p: &Poly, vars: &[Var]) -> Result<SchurExpansion, ThomError> {
    let alphabet = Alphabet::from_letters(vars.iter().map(|&v| Letter::var(v)));
    let arg = DiffArg::from_plus(alphabet);
    let mut work = p.clone();
    let mut out = SchurExpansion::new();
    while let Some((monomial, coeff)) = work.leading_term() {
        let exps: Vec<u32> = vars.iter().map(|&v| monomial.exponent(v)).collect();
        let known: u32 = exps.iter().sum();
        let weakly_decreasing = exps.windows(2).all(|w| w[0] >= w[1]);
        if !weakly_decreasing || known != monomial.degree() {
            return Err(ThomError::NotSymmetric {
                monomial: monomial.to_string(),
            });
        }
        let partition = Partition::new(exps);
        let coeff = coeff.clone();
        work = work.sub(&schur(&partition, &arg).scale(&coeff));
        out.add_term(partition, coeff);
    }
    Ok(out)
}

/// Checks, degree by degree, that the complete functions of the probe
/// arguments match the graded pieces of the corresponding total Chern
/// classes after the tangent-to-cotangent sign flip (every root negated).
///
/// For `(i, r)` this covers the `A_i` probe up to degree `i*r`; for the two
/// targets with a second-order probe it also covers that probe's class.
pub fn chern_crosscheck(i: u32, r: u32) -> bool {
    let x = catalog::var_x();
    let max = i * r;
    // A_i: c = (1 + (i+1)X) prod_j (1 + Y_j) / (1 + X), with X = -x,
    // Y_j = -b_j after the sign flip
    let mut numer = Poly::one().sub(&Poly::var(x).scale(&BigRational::from_integer(
        BigInt::from(i as i64 + 1),
    )));
    for j in 1..=r - 1 {
        numer = numer.mul(&Poly::one().sub(&Poly::var(Var::new(&format!("b{j}")))));
    }
    let arg = a_probe(i, i, r).arg;
    if !series_matches_ratio(&arg, &numer, &[x], max) {
        return false;
    }
    match (i, r) {
        (4, 1) => {
            let x1 = Var::new("x1");
            let x2 = Var::new("x2");
            let numer = Poly::one()
                .sub(&Poly::var(x1).scale(&BigRational::from_integer(BigInt::from(2))))
                .mul(&Poly::one().sub(&Poly::var(x2).scale(&BigRational::from_integer(
                    BigInt::from(2),
                ))));
            series_matches_ratio(&i22_probe().arg, &numer, &[x1, x2], 4)
        }
        (3, 2) => {
            let x1 = Var::new("x1");
            let x2 = Var::new("x2");
            let two = BigRational::from_integer(BigInt::from(2));
            let numer = Poly::one()
                .sub(&Poly::var(x1).scale(&two))
                .mul(&Poly::one().sub(&Poly::var(x2).scale(&two)))
                .mul(&Poly::one().sub(&Poly::var(x1)).sub(&Poly::var(x2)));
            series_matches_ratio(&iii22_probe().arg, &numer, &[x1, x2], 6)
        }
        _ => true,
    }
}

/// Does the complete series of `arg` agree, in degrees `0..=max`, with the
/// expansion of `numer / prod (1 - v)` over the denominator roots `v`?
/// The rational function is expanded by truncated geometric series,
/// independently of the generating-series code path.
fn series_matches_ratio(arg: &DiffArg, numer: &Poly, denom_roots: &[Var], max: u32) -> bool {
    let mut expanded = numer.clone();
    for &v in denom_roots {
        let mut geometric = Poly::zero();
        for e in 0..=max {
            geometric.add_term(
                crate::poly::Monomial::from_powers([(v, e)]),
                BigRational::one(),
            );
        }
        expanded = expanded.mul(&geometric);
    }
    let series = complete_series(arg, max);
    (0..=max).all(|d| series.value(d as i64) == expanded.graded_component(d))
}

/// The largest `h` with a nontrivial h-part. Every partition must contain
/// the row `(r)`.
pub fn rank(expansion: &SchurExpansion, r: u32) -> Result<u32, ThomError> {
    let mut best = 1;
    for p in expansion.partitions() {
        match p.classify_h(r) {
            Some(h) => best = best.max(h),
            None => {
                return Err(ThomError::MissingRow {
                    partition: p.to_string(),
                    r,
                })
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn prt(parts: &[u32]) -> Partition {
        Partition::new(parts.iter().copied())
    }

    fn expansion(terms: &[(&[u32], i64)]) -> SchurExpansion {
        SchurExpansion::from_terms(
            terms.iter().map(|&(p, c)| (prt(p), rat(c))),
        )
    }

    #[test]
    fn f2r_is_the_power_rule() {
        // F^(2)_r = sum_{j<=r} 2^j S_{r-j, r+j}
        for r in 1..=4u32 {
            let expected = SchurExpansion::from_terms((0..=r).map(|j| {
                (
                    Partition::new([r - j, r + j]),
                    rat(1i64 << j),
                )
            }));
            assert_eq!(f_ir(2, r), expected, "r={r}");
        }
    }

    #[test]
    fn f31_golden() {
        assert_eq!(f_ir(3, 1), expansion(&[(&[1, 1, 1], 1), (&[1, 2], 5), (&[3], 6)]));
    }

    #[test]
    fn f32_golden() {
        assert_eq!(
            f_ir(3, 2),
            expansion(&[
                (&[2, 2, 2], 1),
                (&[1, 2, 3], 5),
                (&[1, 1, 4], 6),
                (&[2, 4], 19),
                (&[1, 5], 30),
                (&[6], 36),
            ])
        );
    }

    #[test]
    fn f41_golden() {
        assert_eq!(
            f_ir(4, 1),
            expansion(&[(&[1, 1, 1, 1], 1), (&[1, 1, 2], 9), (&[1, 3], 26), (&[4], 24)])
        );
    }

    #[test]
    fn f42_golden() {
        assert_eq!(
            f_ir(4, 2),
            expansion(&[
                (&[2, 2, 2, 2], 1),
                (&[1, 2, 2, 3], 9),
                (&[1, 1, 2, 4], 26),
                (&[1, 1, 1, 5], 24),
                (&[2, 2, 4], 55),
                (&[1, 2, 5], 210),
                (&[1, 1, 6], 216),
                (&[2, 6], 391),
                (&[1, 7], 555),
                (&[8], 507),
            ])
        );
    }

    #[test]
    fn f_ir_degenerate_cases() {
        assert_eq!(f_ir(1, 3), expansion(&[(&[3], 1)]));
        let direct = f_general(&Alphabet::empty(), 0, 2).unwrap();
        assert_eq!(direct, expansion(&[(&[2], 1)]));
    }

    #[test]
    fn f_general_cardinality_error() {
        let a = Alphabet::from_letters([Letter::constant(2)]);
        assert!(matches!(
            f_general(&a, 2, 1),
            Err(ThomError::CardinalityMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn f_general_example_432() {
        // F^(3)_1 built explicitly from the two-letter alphabet [2] + [3]
        let a = Alphabet::from_letters([Letter::constant(2), Letter::constant(3)]);
        assert_eq!(
            f_general(&a, 2, 1).unwrap(),
            expansion(&[(&[1, 1, 1], 1), (&[1, 2], 5), (&[3], 6)])
        );
    }

    #[test]
    fn fbr_small_cases() {
        assert!(check_fbr(1, 1));
        assert!(check_fbr(3, 2));
        assert!(check_fbr(4, 1));
    }

    #[test]
    fn cf_small_cases() {
        assert!(check_cf(4, 1, 3));
        assert!(check_cf(4, 1, 5));
        assert!(check_cf(2, 1, 1));
        assert!(check_cf(3, 2, 4));
    }

    #[test]
    fn euler_examples() {
        let x = Poly::var(catalog::var_x());
        assert_eq!(euler_ai(1, 0), x);
        assert_eq!(euler_ai(2, 0), x.pow(2).scale(&rat(2)));
        let y1 = Poly::var(Var::new("y1"));
        assert_eq!(
            euler_ai(2, 1),
            x.pow(2)
                .scale(&rat(2))
                .mul(&(&y1 - &x.scale(&rat(2))))
                .mul(&(&y1 - &x))
        );
    }

    #[test]
    fn fid_cases() {
        assert!(check_fid(1, 0));
        assert!(check_fid(2, 1));
        assert!(check_fid(3, 2));
    }

    #[test]
    fn verify_a41_candidates() {
        let probes = probe_set(4, 1).unwrap();
        let f41 = f_ir(4, 1);
        // the bare 1-part fails exactly at the I22 probe
        let partial = verify_thom(&f41, &probes);
        assert!(!partial.all_pass());
        let failing: Vec<_> = partial.checks.iter().filter(|c| !c.pass).collect();
        assert_eq!(failing.len(), 1);
        assert_eq!(failing[0].probe, "I22");

        // adding 10 S_22 fixes it
        let full = f41.add(&SchurExpansion::singleton(prt(&[2, 2]), rat(10)));
        let result = verify_thom(&full, &probes);
        assert!(result.all_pass());
        assert_eq!(result.rank, Some(2));
    }

    #[test]
    fn verify_a1_any_r() {
        let probes = probe_set(1, 2).unwrap();
        let candidate = expansion(&[(&[2], 1)]);
        assert!(verify_thom(&candidate, &probes).all_pass());
    }

    #[test]
    fn solve_a21() {
        let result = solve_thom(&probe_set(2, 1).unwrap(), None).unwrap();
        assert_eq!(result.expansion, expansion(&[(&[1, 1], 1), (&[2], 2)]));
        assert!(result.unique);
    }

    #[test]
    fn solve_a41() {
        let result = solve_thom(&probe_set(4, 1).unwrap(), None).unwrap();
        let expected = f_ir(4, 1).add(&SchurExpansion::singleton(prt(&[2, 2]), rat(10)));
        assert_eq!(result.expansion, expected);
        assert_eq!(result.rank, Some(2));
    }

    #[test]
    fn solve_a32() {
        let result = solve_thom(&probe_set(3, 2).unwrap(), None).unwrap();
        let expected = f_ir(3, 2).add(&SchurExpansion::singleton(prt(&[3, 3]), rat(5)));
        assert_eq!(result.expansion, expected);
        assert_eq!(result.rank, Some(2));
    }

    #[test]
    fn solver_rejects_insufficient_probes() {
        // dropping the I22 probe from the A4(1) system leaves it singular
        let mut probes = probe_set(4, 1).unwrap();
        probes.probes.retain(|p| p.name != "I22");
        match solve_thom(&probes, None) {
            Err(ThomError::Underdetermined { .. }) => {}
            other => panic!("expected underdetermined, got {other:?}"),
        }
    }

    #[test]
    fn correction_a41() {
        let probes = probe_set(4, 1).unwrap();
        let i22 = probes.probes.iter().find(|p| p.name == "I22").unwrap();
        let corr = h_part_correction(&f_ir(4, 1), i22, &[prt(&[2, 2])]).unwrap();
        assert_eq!(corr.len(), 1);
        assert_eq!(corr[&prt(&[2, 2])], rat(10));
    }

    #[test]
    fn correction_a32() {
        let probes = probe_set(3, 2).unwrap();
        let iii22 = probes.probes.iter().find(|p| p.name == "III22").unwrap();
        let corr = h_part_correction(&f_ir(3, 2), iii22, &[prt(&[3, 3])]).unwrap();
        assert_eq!(corr[&prt(&[3, 3])], rat(5));
    }

    #[test]
    fn correction_of_exact_candidate_is_empty() {
        let probes = probe_set(4, 1).unwrap();
        let full = f_ir(4, 1).add(&SchurExpansion::singleton(prt(&[2, 2]), rat(10)));
        let i22 = probes.probes.iter().find(|p| p.name == "I22").unwrap();
        let corr = h_part_correction(&full, i22, &[prt(&[2, 2])]).unwrap();
        assert!(corr.is_empty());
    }

    #[test]
    fn correction_rejects_unreachable_residual() {
        // S_4 alone cannot repair the I22 residual of F^(4)_1
        let probes = probe_set(4, 1).unwrap();
        let i22 = probes.probes.iter().find(|p| p.name == "I22").unwrap();
        match h_part_correction(&f_ir(4, 1), i22, &[prt(&[4])]) {
            Err(ThomError::NoSolution) => {}
            other => panic!("expected NoSolution, got {other:?}"),
        }
    }

    #[test]
    fn schur_expand_examples() {
        let vars: Vec<Var> = (1..=3).map(|j| Var::new(&format!("x{j}"))).collect();
        let h1: Poly = vars.iter().fold(Poly::zero(), |acc, &v| acc + Poly::var(v));

        // h_1 on 2 variables
        let two = &vars[..2];
        let h1_two = Poly::var(two[0]) + Poly::var(two[1]);
        assert_eq!(
            schur_expand(&h1_two, two).unwrap(),
            expansion(&[(&[1], 1)])
        );

        // h_1^3 = S_111 + 2 S_12 + S_3
        assert_eq!(
            schur_expand(&h1.pow(3), &vars).unwrap(),
            expansion(&[(&[1, 1, 1], 1), (&[1, 2], 2), (&[3], 1)])
        );

        // h_1^2 + h_2 = S_11 + 2 S_2
        let arg = DiffArg::from_plus(Alphabet::from_letters(
            vars.iter().map(|&v| Letter::var(v)),
        ));
        let h2 = schur(&prt(&[2]), &arg);
        assert_eq!(
            schur_expand(&(h1.pow(2) + h2), &vars).unwrap(),
            expansion(&[(&[1, 1], 1), (&[2], 2)])
        );

        // non-symmetric input is rejected
        let bad = Poly::var(vars[1]);
        assert!(matches!(
            schur_expand(&bad, &vars),
            Err(ThomError::NotSymmetric { .. })
        ));
    }

    #[test]
    fn chern_crosscheck_cases() {
        assert!(chern_crosscheck(1, 1));
        assert!(chern_crosscheck(2, 2));
        assert!(chern_crosscheck(4, 1));
        assert!(chern_crosscheck(3, 2));
    }

    #[test]
    fn rank_cases() {
        let t41 = f_ir(4, 1).add(&SchurExpansion::singleton(prt(&[2, 2]), rat(10)));
        assert_eq!(rank(&t41, 1), Ok(2));
        assert_eq!(rank(&f_ir(3, 1), 1), Ok(1));
        assert_eq!(rank(&expansion(&[(&[2], 1)]), 2), Ok(1));
        assert!(matches!(
            rank(&expansion(&[(&[1, 1], 1)]), 2),
            Err(ThomError::MissingRow { .. })
        ));
    }
}

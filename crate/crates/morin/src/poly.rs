//! Sparse multivariate polynomials with exact big-rational coefficients.
//!
//! All symbolic evaluation in this crate bottoms out here. Coefficients are
//! arbitrary precision: determinant intermediates and the larger expansion
//! coefficients (507, 555, ...) overflow fixed-width types quickly enough
//! that nothing narrower is safe.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::sync::{Mutex, OnceLock};

/// An interned variable name.
///
/// Variables are ordered "naturally": by alphabetic stem, then by the numeric
/// value of a trailing digit suffix, so `b2 < b10 < x < x1 < x2 < y1`. The
/// order is independent of interning sequence, which keeps every rendering
/// deterministic across processes and test orderings.
#[derive(Clone, Copy, Debug)]
pub struct Var(&'static str);

static VAR_NAMES: OnceLock<Mutex<HashSet<&'static str>>> = OnceLock::new();

impl Var {
    /// Interns `name`. Panics on names that are not simple identifiers.
    pub fn new(name: &str) -> Var {
        let mut chars = name.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
        let tail_ok = chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        assert!(head_ok && tail_ok, "invalid variable name {name:?}");
        let table = VAR_NAMES.get_or_init(|| Mutex::new(HashSet::new()));
        let mut table = table.lock().unwrap();
        match table.get(name) {
            Some(interned) => Var(interned),
            None => {
                let interned: &'static str = Box::leak(name.to_owned().into_boxed_str());
                table.insert(interned);
                Var(interned)
            }
        }
    }

    pub fn name(self) -> &'static str {
        self.0
    }

    /// (stem, digit suffix with leading zeros stripped) used for ordering.
    fn sort_key(self) -> (&'static str, Option<&'static str>) {
        let split = self.0.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        if split == self.0.len() {
            (self.0, None)
        } else {
            (&self.0[..split], Some(self.0[split..].trim_start_matches('0')))
        }
    }
}

impl PartialEq for Var {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}
impl Eq for Var {}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, da) = self.sort_key();
        let (sb, db) = other.sort_key();
        sa.cmp(sb)
            .then_with(|| match (da, db) {
                (None, None) => Ordering::Equal,
                (None, Some(_)) => Ordering::Less,
                (Some(_), None) => Ordering::Greater,
                (Some(a), Some(b)) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
            })
            .then_with(|| self.0.cmp(other.0))
    }
}

impl std::hash::Hash for Var {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// A power product of variables; the factor list is sorted by variable and
/// stores no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial { factors: vec![(v, 1)] }
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Var, u32)>) -> Monomial {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in powers {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial { factors: map.into_iter().collect() }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn powers(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<Var, u32> = self.factors.iter().copied().collect();
        for &(v, e) in &other.factors {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial { factors: map.into_iter().collect() }
    }

    /// Entrywise quotient, when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut map: BTreeMap<Var, u32> = self.factors.iter().copied().collect();
        for &(v, e) in &other.factors {
            match map.get_mut(&v) {
                Some(have) if *have >= e => *have -= e,
                _ => return None,
            }
        }
        Some(Monomial {
            factors: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        })
    }
}

/// Graded lexicographic: total degree first, then lexicographic with the
/// earliest variable dominating.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.factors.iter();
            let mut b = other.factors.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        // a positive exponent on an earlier variable wins
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(&eb) {
                            Ordering::Equal => continue,
                            ord => return ord,
                        },
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for &(v, e) in &self.factors {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial in canonical form: no zero coefficients, terms keyed by
/// monomial in graded-lex order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::from_int(1)
    }

    pub fn from_int(n: i64) -> Poly {
        Poly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn constant(c: BigRational) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Poly {
        let mut p = Poly::zero();
        p.add_term(Monomial::var(v), BigRational::one());
        p
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Simultaneous substitution; variables absent from `bindings` are left
    /// in place.
    pub fn substitute(&self, bindings: &BTreeMap<Var, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for &(v, e) in m.powers() {
                let factor = match bindings.get(&v) {
                    Some(p) => p.pow(e),
                    None => Poly::monomial(Monomial::from_powers([(v, e)]), BigRational::one()),
                };
                term = term.mul(&factor);
            }
            out = out.add(&term);
        }
        out
    }

    /// Exact value at an integer point. The point must cover every variable
    /// of the polynomial.
    pub fn eval_at_integers(&self, point: &BTreeMap<Var, i64>) -> BigRational {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for &(v, e) in m.powers() {
                let x = point
                    .get(&v)
                    .unwrap_or_else(|| panic!("eval point missing variable {v}"));
                val *= BigRational::from_integer(BigInt::from(*x).pow(e));
            }
            total += val;
        }
        total
    }

    /// Sum of the terms of total degree exactly `d`.
    pub fn graded_component(&self, d: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact division: returns `q` with `self = q * divisor`, or `None` when
    /// no such polynomial exists.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        let (dm, dc) = divisor.leading_term().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let step = Poly::monomial(qm, qc);
            rem = rem.sub(&step.mul(divisor));
            quot = quot.add(&step);
        }
        Some(quot)
    }

    /// The value of a constant polynomial, `None` when non-constant.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::from_int(n)
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inherent:ident) => {
        impl std::ops::$trait for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$inherent(rhs)
            }
        }
        impl std::ops::$trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$inherent(&rhs)
            }
        }
        impl std::ops::$trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$inherent(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}
impl std::ops::Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(&self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // graded-lex descending
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
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
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(name: &str) -> Var {
        Var::new(name)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn var_natural_order() {
        let mut names = ["x1", "b10", "x", "b2", "y1", "b"].map(v);
        names.sort();
        let sorted: Vec<_> = names.iter().map(|v| v.name()).collect();
        assert_eq!(sorted, ["b", "b2", "b10", "x", "x1", "y1"]);
    }

    #[test]
    fn additive_inverse_cancels() {
        let x1 = Poly::var(v("x1"));
        assert!(x1.add(&x1.neg()).is_zero());
    }

    #[test]
    fn expand_product_of_linear_forms() {
        // (x1 - 2*x2)(x2 - 2*x1) = -2*x1^2 + 5*x1*x2 - 2*x2^2
        let x1 = Poly::var(v("x1"));
        let x2 = Poly::var(v("x2"));
        let p = (&x1 - &x2.scale(&rat(2))) * (&x2 - &x1.scale(&rat(2)));
        let expected = x1.pow(2).scale(&rat(-2)) + (&x1 * &x2).scale(&rat(5))
            + x2.pow(2).scale(&rat(-2));
        assert_eq!(p, expected);
        assert_eq!(p.to_string(), "-2*x1^2 + 5*x1*x2 - 2*x2^2");
    }

    #[test]
    fn mul_identity() {
        let p = Poly::var(v("x")).add(&Poly::from_int(3));
        assert_eq!(p.mul(&Poly::one()), p);
    }

    #[test]
    fn pow_cases() {
        let x = Poly::var(v("x"));
        assert_eq!(x.pow(0), Poly::one());
        let x1 = Poly::var(v("x1"));
        let x2 = Poly::var(v("x2"));
        let sq = (&x1 + &x2).pow(2);
        assert_eq!(
            sq,
            x1.pow(2) + (&x1 * &x2).scale(&rat(2)) + x2.pow(2)
        );
        assert_eq!(x.scale(&rat(2)).pow(3), x.pow(3).scale(&rat(8)));
    }

    #[test]
    fn substitute_examples() {
        let x1 = v("x1");
        let x2 = v("x2");
        let p = Poly::var(x1) * Poly::var(x2);
        let ones: BTreeMap<Var, Poly> =
            [(x1, Poly::one()), (x2, Poly::one())].into_iter().collect();
        assert_eq!(p.substitute(&ones), Poly::one());

        // x1 - 2*x2 dies under x1 -> 2*x2
        let q = Poly::var(x1) - Poly::var(x2).scale(&rat(2));
        let kill: BTreeMap<Var, Poly> =
            [(x1, Poly::var(x2).scale(&rat(2)))].into_iter().collect();
        assert!(q.substitute(&kill).is_zero());

        let x = v("x");
        let at_zero: BTreeMap<Var, Poly> = [(x, Poly::zero())].into_iter().collect();
        assert!(Poly::var(x).substitute(&at_zero).is_zero());
    }

    #[test]
    fn eval_at_integers_examples() {
        let x1 = v("x1");
        let x2 = v("x2");
        // x1*x2*(x1 - 2*x2)*(x2 - 2*x1) at (1, 1) = 1
        let p = Poly::var(x1)
            * Poly::var(x2)
            * (Poly::var(x1) - Poly::var(x2).scale(&rat(2)))
            * (Poly::var(x2) - Poly::var(x1).scale(&rat(2)));
        let pt: BTreeMap<Var, i64> = [(x1, 1), (x2, 1)].into_iter().collect();
        assert_eq!(p.eval_at_integers(&pt), rat(1));

        let q = Poly::var(x1) - Poly::var(x2).scale(&rat(2));
        let pt2: BTreeMap<Var, i64> = [(x1, 2), (x2, 1)].into_iter().collect();
        assert_eq!(q.eval_at_integers(&pt2), rat(0));

        let c = Poly::from_int(7) + Poly::var(x1);
        let pt0: BTreeMap<Var, i64> = [(x1, 0), (x2, 0)].into_iter().collect();
        assert_eq!(c.eval_at_integers(&pt0), rat(7));
    }

    #[test]
    fn graded_component_examples() {
        let x = Poly::var(v("x"));
        let p = Poly::one() + &x + x.pow(2);
        assert_eq!(p.graded_component(1), x);
        assert_eq!(x.pow(2).graded_component(2), x.pow(2));
        assert!(p.graded_component(5).is_zero());
    }

    #[test]
    fn div_exact_roundtrip() {
        let x = Poly::var(v("x"));
        let y = Poly::var(v("y"));
        let a = (&x + &y).mul(&(&x - &y));
        assert_eq!(a.div_exact(&(&x + &y)), Some(&x - &y));
        assert_eq!((&x + Poly::one()).div_exact(&x), None);
    }

    #[test]
    fn leading_term_is_graded_lex_max() {
        let x1 = v("x1");
        let x2 = v("x2");
        // x1^2 > x1*x2 > x2^2 in graded lex
        let p = Poly::var(x1) * Poly::var(x2) + Poly::var(x2).pow(2) + Poly::var(x1).pow(2);
        let (m, _) = p.leading_term().unwrap();
        assert_eq!(*m, Monomial::from_powers([(x1, 2)]));
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        let vars = ["x", "y", "z", "w"];
        proptest::collection::vec(
            (0usize..4, 0u32..4, 0u32..4, -6i64..7),
            0..5,
        )
        .prop_map(move |terms| {
            let mut p = Poly::zero();
            for (vi, e1, e2, c) in terms {
                let m = Monomial::from_powers([
                    (Var::new(vars[vi]), e1),
                    (Var::new(vars[(vi + 1) % 4]), e2),
                ]);
                p.add_term(m, rat(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
        }

        #[test]
        fn substitute_is_ring_hom(a in arb_poly(), b in arb_poly()) {
            let x = Var::new("x");
            let y = Var::new("y");
            let bind: BTreeMap<Var, Poly> = [
                (x, Poly::var(Var::new("z")).add(&Poly::one())),
                (y, Poly::var(Var::new("w")).pow(2)),
            ].into_iter().collect();
            prop_assert_eq!(
                a.mul(&b).substitute(&bind),
                a.substitute(&bind).mul(&b.substitute(&bind))
            );
            prop_assert_eq!(
                a.add(&b).substitute(&bind),
                a.substitute(&bind).add(&b.substitute(&bind))
            );
        }

        #[test]
        fn eval_matches_constant_substitution(a in arb_poly()) {
            let pt: BTreeMap<Var, i64> = [
                (Var::new("x"), 2), (Var::new("y"), -1),
                (Var::new("z"), 3), (Var::new("w"), 0),
            ].into_iter().collect();
            let bind: BTreeMap<Var, Poly> = pt
                .iter()
                .map(|(&v, &n)| (v, Poly::from_int(n)))
                .collect();
            let substituted = a.substitute(&bind);
            prop_assert_eq!(
                substituted.to_rational().unwrap(),
                a.eval_at_integers(&pt)
            );
        }
    }
}

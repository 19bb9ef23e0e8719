//! The singularity probe catalog.
//!
//! Each probe realizes one restriction equation: substituting the Chern-root
//! data of a singularity into a candidate polynomial must give zero (for a
//! different singularity of codimension at most the target's) or the Euler
//! class (for the target itself). The catalog exposes exactly the probes
//! whose data is known here -- the `A_p` family for every `(i, r)`, the
//! `I_{2,2}` probe for `r = 1` and the `III_{2,2}` probe for `r = 2` -- and
//! refuses to fabricate probe sets it cannot justify.

use super::ThomError;
use crate::alphabet::{Alphabet, DiffArg, Letter};
use crate::poly::{Poly, Var};
use crate::schur::resultant;

/// One restriction equation: evaluate the candidate at `arg`, compare with
/// `rhs` (zero for vanishing conditions, an Euler-class resultant otherwise).
#[derive(Clone, Debug)]
pub struct ProbeSpec {
    pub name: String,
    pub arg: DiffArg,
    pub rhs: Poly,
}

/// The full probe set characterizing one target Thom polynomial.
#[derive(Clone, Debug)]
pub struct ProbeSet {
    pub singularity: String,
    pub i: u32,
    pub r: u32,
    pub probes: Vec<ProbeSpec>,
}

pub(crate) fn var_x() -> Var {
    Var::new("x")
}

fn var_b(j: u32) -> Var {
    Var::new(&format!("b{j}"))
}

/// The generic alphabet `b1, .., bn`.
pub(crate) fn b_alphabet(n: u32) -> Alphabet {
    Alphabet::from_letters((1..=n).map(|j| Letter::var(var_b(j))))
}

/// `x + [2x] + [3x] + ... + [ix]` (just `x` when `i = 1`).
pub(crate) fn x_ladder(i: u32) -> Alphabet {
    let x = var_x();
    let mut a = Alphabet::single_var(x);
    for t in 2..=i {
        a = a.concat(&Alphabet::boxed(Letter::scaled_var(t as i64, x)));
    }
    a
}

/// The `A_q` probe toward the target `A_i(r)`: argument
/// `x - B_{r-1} - [(q+1)x]`, with zero right-hand side for `q < i` and the
/// Euler-class resultant for `q = i`.
pub fn a_probe(q: u32, i: u32, r: u32) -> ProbeSpec {
    let x = var_x();
    let minus = b_alphabet(r - 1).concat(&Alphabet::boxed(Letter::scaled_var(
        (q + 1) as i64,
        x,
    )));
    let arg = DiffArg::new(Alphabet::single_var(x), minus);
    let rhs = if q < i { Poly::zero() } else { euler_rhs(i, r) };
    ProbeSpec { name: format!("A{q}"), arg, rhs }
}

/// Euler-class right-hand side of the target equation:
/// `R(x + [2x] + ... + [ix], B_{r-1} + [(i+1)x])`.
pub(crate) fn euler_rhs(i: u32, r: u32) -> Poly {
    let minus = b_alphabet(r - 1).concat(&Alphabet::boxed(Letter::scaled_var(
        (i + 1) as i64,
        var_x(),
    )));
    resultant(&x_ladder(i), &minus)
}

/// The `I_{2,2}` probe (`r = 1`): vanishing at `X_2 - [2x1] - [2x2]`.
pub fn i22_probe() -> ProbeSpec {
    let x1 = Var::new("x1");
    let x2 = Var::new("x2");
    let plus = Alphabet::from_letters([Letter::var(x1), Letter::var(x2)]);
    let minus = Alphabet::from_letters([
        Letter::scaled_var(2, x1),
        Letter::scaled_var(2, x2),
    ]);
    ProbeSpec {
        name: "I22".into(),
        arg: DiffArg::new(plus, minus),
        rhs: Poly::zero(),
    }
}

/// The `III_{2,2}` probe (`r = 2`): vanishing at `X_2 - D` with
/// `D = [2x1] + [2x2] + [x1+x2]`.
pub fn iii22_probe() -> ProbeSpec {
    let x1 = Var::new("x1");
    let x2 = Var::new("x2");
    let plus = Alphabet::from_letters([Letter::var(x1), Letter::var(x2)]);
    let minus = Alphabet::from_letters([
        Letter::scaled_var(2, x1),
        Letter::scaled_var(2, x2),
        Letter::from_parts(0, [(x1, 1), (x2, 1)]),
    ]);
    ProbeSpec {
        name: "III22".into(),
        arg: DiffArg::new(plus, minus),
        rhs: Poly::zero(),
    }
}

/// Builds the probe set characterizing `T^{A_i}_r`.
///
/// The `A_0 .. A_{i-1}` vanishing probes and the `A_i` Euler probe are always
/// available. A second-order singularity enters once its codimension
/// `2(r+1)` is at most `i*r`; the catalog knows that data only for
/// `A_4(1)` (`I_{2,2}`) and `A_3(2)` (`III_{2,2}`) and reports anything else
/// as unsupported rather than solving with an incomplete equation system.
pub fn probe_set(i: u32, r: u32) -> Result<ProbeSet, ThomError> {
    if i == 0 || r == 0 {
        return Err(ThomError::UnsupportedSingularity {
            singularity: format!("A{i}"),
            r,
            reason: "indices must satisfy i >= 1, r >= 1".into(),
        });
    }
    let mut probes: Vec<ProbeSpec> = (0..i).map(|q| a_probe(q, i, r)).collect();
    if 2 * (r + 1) <= i * r {
        match (i, r) {
            (4, 1) => probes.push(i22_probe()),
            (3, 2) => probes.push(iii22_probe()),
            _ => {
                return Err(ThomError::UnsupportedSingularity {
                    singularity: format!("A{i}"),
                    r,
                    reason: format!(
                        "second-order singularities of codimension <= {} constrain this \
                         target and no probe data is available for them",
                        i * r
                    ),
                })
            }
        }
    }
    probes.push(a_probe(i, i, r));
    Ok(ProbeSet {
        singularity: format!("A{i}"),
        i,
        r,
        probes,
    })
}

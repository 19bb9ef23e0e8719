//! Exact computation with Schur functions in differences of alphabets, and
//! Thom polynomials of the Morin singularities `A_i` via restriction
//! equations.
//!
//! The crate is organized bottom-up:
//!
//! * [`partition`] -- partitions in the French (weakly increasing)
//!   convention and their diagram combinatorics;
//! * [`poly`] -- sparse exact multivariate polynomials over big rationals;
//! * [`alphabet`] -- boxed letters, alphabets, and difference arguments;
//! * [`schur`] -- complete functions, Schur determinants, resultants, and
//!   Schur expansions;
//! * [`thom`] -- the functions `F^(i)_r`, the singularity probe catalog,
//!   restriction-equation verification and solving;
//! * [`expr`] -- the text grammar shared by the CLI and the renderers.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals
//! (integers in all produced expansions) and every identity check is an
//! equality of canonical forms, not a numerical comparison.

pub mod alphabet;
pub mod expr;
pub mod partition;
pub mod poly;
pub mod schur;
pub mod thom;

pub use alphabet::{Alphabet, AlphabetError, DiffArg, Letter};
pub use partition::{partitions_in_rectangle, partitions_of_weight, Partition};
pub use poly::{Monomial, Poly, Var};
pub use schur::{
    complete_series, eval_expansion, resultant, schur, schur_skew_rectangle, CompleteSeries,
    SchurError, SchurExpansion,
};
pub use thom::{
    check_cf, check_fbr, check_fid, chern_crosscheck, euler_ai, f_general, f_ir,
    h_part_correction, probe_set, rank, schur_expand, solve_thom, verify_thom, ProbeSet,
    ProbeSpec, ThomError, ThomResult,
};

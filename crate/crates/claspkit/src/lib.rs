//! Exact computation of clasp (projector) coefficients for the C2 web category.
//!
//! The crate is organized around a small tower of exact-arithmetic layers:
//!
//! - [`arith`]: multivariate Laurent polynomials over the rationals, canonical
//!   univariate rational functions in `q`, and cyclotomic numbers for
//!   root-of-unity evaluation. No floating point anywhere.
//! - [`qnum`]: balanced quantum integers `[n]_{q^l}`, both with concrete and
//!   symbolic (generic-exponent) arguments.
//! - [`c2`]: the C2 weight lattice, positive roots, the order-8 Weyl group,
//!   dominance order, and the minimal dominating elements `d` with their
//!   inversion sets.
//! - [`rep`]: fundamental representation weight data, tensor decomposition
//!   sets, dominant weight subsequences, and dimension bookkeeping.
//! - [`clasp`]: the local intersection forms kappa — recursive and closed-form
//!   evaluators, symbolic identity certificates, the Weyl-orbit product
//!   formula, and clasp expansion certificates.
//! - [`fusion`]: specialization at a primitive `2l`-th root of unity,
//!   negligible objects, and lowest-alcove classification.
//!
//! All values are immutable after construction and freely shareable between
//! threads; every operation is a pure function of its inputs.

pub mod arith;
pub mod c2;
pub mod clasp;
pub mod fusion;
pub mod qnum;
pub mod rep;

use thiserror::Error;

/// Errors surfaced by the library. Every variant corresponds to a violated
/// precondition; valid inputs never error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero rational function")]
    DivisionByZero,
    #[error("weight ({0}, {1}) is not dominant")]
    NotDominant(i64, i64),
    #[error("weight ({0}, {1}) is not a fundamental representation weight")]
    UnknownWeight(i64, i64),
    #[error("kappa key out of domain: mu=({2}, {3}) is not in S for lambda=({0}, {1})")]
    OutOfDomain(i64, i64, i64, i64),
    #[error("dependency cycle while filling kappa table at lambda=({0}, {1}), mu=({2}, {3})")]
    CycleDetected(i64, i64, i64, i64),
    #[error("fusion parameter l={0} is too small (need l > 4)")]
    EllTooSmall(u32),
    #[error("expansion path {0:?} does not sum to the target weight")]
    BadPath(Vec<u8>),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Exact arithmetic: Laurent polynomials in `q`, `A`, `B` with big-rational
//! coefficients, canonical univariate rational functions, and cyclotomic
//! numbers.

mod cyclotomic;
mod laurent;
mod rational;

pub use cyclotomic::{cyc_eval, cyclotomic_poly, CyclotomicNumber};
pub use laurent::{LaurentPoly, Var};
pub use rational::RationalFunction;

#![no_std]
//! Exact q-calculus kernel.
//!
//! Everything here is exact: coefficients live in the field of rational
//! functions in `q` over the rationals, and analytic variables are handled
//! as truncated multivariate power series over that field.
//!
//! - [`qfield`]: rationals, polynomials in `q`, normalized rational functions in `q`
//! - [`pseries`]: truncated multivariate formal power series
//! - [`qcore`]: q-Pochhammer symbols, q-binomials, q-exponentials, basic
//!   hypergeometric series and the q-derivative
//! - [`qops`]: Heine binomial operators, the q-exponential operator, Hahn and
//!   Rogers-Szegő polynomials
//! - [`audit`]: the identity catalog and the exact verifier

extern crate alloc;

pub mod audit;
mod error;
pub mod pseries;
pub mod qcore;
pub mod qfield;
pub mod qops;

pub use error::{Error, Result};
pub use pseries::{MonomialArg, MultiIndex, MultiSeries, VarTable};
pub use qfield::{PolyQ, RatFunQ, Rational};

//! Heine binomial operators `H_n(bD_q)`, the q-exponential operator
//! `T(bD_q)`, homogeneous Hahn and Rogers-Szegő polynomials.

mod heine;
mod polys;

pub use heine::{
    bdq_pochhammer_apply, heine_apply, heine_coefficient, heine_terms, operator_apply, t_apply,
    HeineOrder, OperatorTerm,
};
pub use polys::{hahn, rogers_szego};

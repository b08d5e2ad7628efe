//! q-combinatorial primitives: q-Pochhammer symbols, Gaussian binomials,
//! q-exponentials, basic hypergeometric series and the q-derivative.

mod dq;
mod exp;
mod phi;
mod pochhammer;
mod qbinom;

pub use dq::{dq, dq_k};
pub use exp::{big_eq_exp, eq_exp};
pub use phi::{phi_series, PhiSpec};
pub use pochhammer::{
    q_factorial, q_factorial_recip, qpoch_inf, qpoch_multi, qpoch_n, qpoch_scalar,
};
pub use qbinom::{qbinom, qbinom_poly, qbinom_row};

/// `k(k-1)/2`
pub(crate) fn binom2(k: u64) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

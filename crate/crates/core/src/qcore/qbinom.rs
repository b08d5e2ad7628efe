use alloc::vec::Vec;

use crate::qfield::{PolyQ, RatFunQ};
use crate::{Error, Result};

/// Row `n` of the q-Pascal triangle: `[n, k]_q` for `k = 0..=n`, built with
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
pub fn qbinom_row(n: usize) -> Vec<PolyQ> {
    let mut row = alloc::vec![PolyQ::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(PolyQ::one());
        for k in 1..m {
            next.push(&row[k - 1] + &row[k].shift_up(k));
        }
        next.push(PolyQ::one());
        row = next;
    }
    row
}

/// Gaussian binomial `[n, k]_q` as a polynomial; zero outside `0..=n`.
pub fn qbinom_poly(n: i64, k: i64) -> Result<PolyQ> {
    if n < 0 {
        return Err(Error::NegativeBinomialIndex(n));
    }
    if k < 0 || k > n {
        return Ok(PolyQ::zero());
    }
    let k = k.min(n - k) as usize;
    Ok(qbinom_row(n as usize).swap_remove(k))
}

/// Gaussian binomial `[n, k]_q` as a rational function.
pub fn qbinom(n: i64, k: i64) -> Result<RatFunQ> {
    qbinom_poly(n, k).map(RatFunQ::from_poly)
}

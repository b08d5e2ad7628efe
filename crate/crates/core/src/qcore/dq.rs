use alloc::collections::BTreeMap;

use crate::pseries::MultiSeries;
use crate::qfield::RatFunQ;
use crate::{Error, Result};

/// q-derivative `(f(x) - f(qx)) / x` in the variable `var`.
///
/// A truncated input loses one degree of precision; an exact polynomial
/// keeps its order.
pub fn dq(f: &MultiSeries, var: &str) -> Result<MultiSeries> {
    let i = f.vars().index_of(var)?;
    let order = if f.is_exact() {
        f.order()
    } else {
        f.order().checked_sub(1).ok_or(Error::TruncationExhausted)?
    };
    let mut terms = BTreeMap::new();
    for (idx, c) in f.terms() {
        let m = idx.exponent(i);
        if let Some(lower) = idx.lowered(i) {
            if lower.total() <= order {
                terms.insert(lower, c * &RatFunQ::one_minus_q_pow(m as usize));
            }
        }
    }
    Ok(MultiSeries::from_parts(
        f.vars().clone(),
        order,
        terms,
        f.is_exact(),
    ))
}

/// `D_q^k f`.
pub fn dq_k(f: &MultiSeries, var: &str, k: u32) -> Result<MultiSeries> {
    let mut g = f.clone();
    for _ in 0..k {
        g = dq(&g, var)?;
    }
    Ok(g)
}

use crate::pseries::{MonomialArg, MultiSeries};
use crate::qfield::RatFunQ;
use crate::{Error, Result};

use super::binom2;

fn exp_series(u: &MonomialArg, order: u32, with_binom: bool) -> Result<MultiSeries> {
    if u.is_scalar() && !u.is_zero() {
        return Err(Error::NonTerminatingSeries);
    }
    let vars = u.vars();
    if u.is_zero() {
        return Ok(MultiSeries::one(vars, order));
    }
    let mut terms = alloc::vec::Vec::new();
    let mut power = RatFunQ::one();
    let mut fact = RatFunQ::one();
    for n in 0..=(order / u.degree()) {
        if n > 0 {
            power = &power * u.coeff();
            fact = &fact * &RatFunQ::one_minus_q_pow(n as usize);
        }
        let mut c = power.checked_div(&fact)?;
        if with_binom {
            c = c.mul_q_pow(binom2(n as u64));
        }
        terms.push((u.index().scaled(n), c));
    }
    MultiSeries::from_terms(vars, order, terms)
}

/// `e_q(u) = sum u^n / (q;q)_n`
pub fn eq_exp(u: &MonomialArg, order: u32) -> Result<MultiSeries> {
    exp_series(u, order, false)
}

/// `E_q(u) = sum q^binom(n,2) u^n / (q;q)_n`
pub fn big_eq_exp(u: &MonomialArg, order: u32) -> Result<MultiSeries> {
    exp_series(u, order, true)
}

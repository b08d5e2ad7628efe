use crate::pseries::{MonomialArg, MultiSeries, VarTable};
use crate::qfield::{PolyQ, RatFunQ};
use crate::{Error, Result};

use super::binom2;

/// `(c;q)_n` for a scalar `c`.
pub fn qpoch_scalar(c: &RatFunQ, n: usize) -> RatFunQ {
    let mut acc = RatFunQ::one();
    for k in 0..n {
        let factor = &RatFunQ::one() - &c.mul_q_pow(k as i64);
        acc = &acc * &factor;
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `(q;q)_n`
pub fn q_factorial(n: usize) -> RatFunQ {
    let mut acc = PolyQ::one();
    for j in 1..=n {
        acc = &acc * &PolyQ::one_minus_q_pow(j);
    }
    RatFunQ::from_poly(acc)
}

/// `1/(q;q)_m`, taken to be zero for negative `m`.
pub fn q_factorial_recip(m: i64) -> RatFunQ {
    if m < 0 {
        RatFunQ::zero()
    } else {
        q_factorial(m as usize).inv().expect("(q;q)_m is nonzero")
    }
}

/// Finite q-Pochhammer symbol `(u;q)_n = prod_{k<n} (1 - q^k u)`.
pub fn qpoch_n(u: &MonomialArg, n: i64, order: u32) -> Result<MultiSeries> {
    if n < 0 {
        return Err(Error::NegativePochhammerLength(n));
    }
    let vars = u.vars();
    if u.is_scalar() {
        return Ok(MultiSeries::constant(
            vars,
            order,
            qpoch_scalar(u.coeff(), n as usize),
        ));
    }
    let one = MultiSeries::one(vars, order);
    let mut acc = one.clone();
    for k in 0..n {
        let factor = one.sub(&u.times_q_pow(k).to_series(order))?;
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// Infinite q-Pochhammer symbol of a monomial of positive analytic degree,
/// expanded as `sum_k q^binom(k,2) (-u)^k / (q;q)_k`.
pub fn qpoch_inf(u: &MonomialArg, order: u32) -> Result<MultiSeries> {
    let vars = u.vars();
    if u.is_zero() {
        return Ok(MultiSeries::one(vars, order));
    }
    if u.is_scalar() {
        return Err(Error::NonTruncatingProduct);
    }
    let deg = u.degree();
    let neg_c = -u.coeff();
    let mut terms = alloc::vec::Vec::new();
    let mut power = RatFunQ::one();
    let mut fact = RatFunQ::one();
    for k in 0..=(order / deg) {
        if k > 0 {
            power = &power * &neg_c;
            fact = &fact * &RatFunQ::one_minus_q_pow(k as usize);
        }
        let c = power
            .mul_q_pow(binom2(k as u64))
            .checked_div(&fact)
            .expect("(q;q)_k is nonzero");
        terms.push((u.index().scaled(k), c));
    }
    MultiSeries::from_terms(vars, order, terms)
}

/// `(a_1, ..., a_m; q)_inf` as the product of the individual symbols; the
/// empty product is 1.
pub fn qpoch_multi(vars: &VarTable, args: &[MonomialArg], order: u32) -> Result<MultiSeries> {
    let mut acc = MultiSeries::one(vars, order);
    for a in args {
        vars.check_same(a.vars())?;
        acc = acc.mul(&qpoch_inf(a, order)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseries::MultiIndex;

    fn vars() -> VarTable {
        VarTable::new(&["a", "x", "y"]).unwrap()
    }

    fn mono(names: &[&str]) -> MonomialArg {
        MonomialArg::vars_product(&vars(), names).unwrap()
    }

    fn idx(e: [u32; 3]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    fn poly(c: &[i64]) -> RatFunQ {
        RatFunQ::from_poly(PolyQ::from_ints(c))
    }

    #[test]
    fn finite_symbol() {
        let a = mono(&["a"]);
        assert_eq!(qpoch_n(&a, 0, 4).unwrap(), MultiSeries::one(&vars(), 4));
        // (1 - a)(1 - q a) = 1 - (1 + q) a + q a^2
        let s = qpoch_n(&a, 2, 4).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.coeff(&idx([0, 0, 0])).unwrap(), RatFunQ::one());
        assert_eq!(s.coeff(&idx([1, 0, 0])).unwrap(), poly(&[-1, -1]));
        assert_eq!(s.coeff(&idx([2, 0, 0])).unwrap(), poly(&[0, 1]));
        assert!(s.is_exact());
        // (q^2;q)_2 = (1 - q^2)(1 - q^3)
        let q2 = MonomialArg::scalar(&vars(), RatFunQ::q_pow(2));
        let s = qpoch_n(&q2, 2, 4).unwrap();
        assert_eq!(s.constant_term(), poly(&[1, 0, -1, -1, 0, 1]));
        assert_eq!(qpoch_n(&a, -1, 4), Err(Error::NegativePochhammerLength(-1)));
    }

    #[test]
    fn infinite_symbol() {
        let x = mono(&["x"]);
        let s = qpoch_inf(&x, 2).unwrap();
        let one_minus_q = PolyQ::from_ints(&[1, -1]);
        let c1 = RatFunQ::new(PolyQ::from_ints(&[-1]), one_minus_q.clone()).unwrap();
        let c2 = RatFunQ::new(
            PolyQ::from_ints(&[0, 1]),
            &one_minus_q * &PolyQ::from_ints(&[1, 0, -1]),
        )
        .unwrap();
        assert_eq!(s.coeff(&idx([0, 1, 0])).unwrap(), c1);
        assert_eq!(s.coeff(&idx([0, 2, 0])).unwrap(), c2);
        assert_eq!(s.len(), 3);
        let zero = MonomialArg::scalar(&vars(), RatFunQ::zero());
        assert_eq!(qpoch_inf(&zero, 5).unwrap(), MultiSeries::one(&vars(), 5));
        let q = MonomialArg::scalar(&vars(), RatFunQ::q_pow(1));
        assert_eq!(qpoch_inf(&q, 5), Err(Error::NonTruncatingProduct));
        let prod = s.mul(&s.inverse().unwrap()).unwrap();
        assert_eq!(prod, MultiSeries::one(&vars(), 2));
    }

    #[test]
    fn multiple_symbol() {
        let (x, y) = (mono(&["x"]), mono(&["y"]));
        let both = qpoch_multi(&vars(), &[x.clone(), y.clone()], 6).unwrap();
        let expect = qpoch_inf(&x, 6)
            .unwrap()
            .mul(&qpoch_inf(&y, 6).unwrap())
            .unwrap();
        assert_eq!(both, expect);
        assert_eq!(
            qpoch_multi(&vars(), &[], 6).unwrap(),
            MultiSeries::one(&vars(), 6)
        );
    }

    #[test]
    fn factorial_conventions() {
        assert_eq!(q_factorial(0), RatFunQ::one());
        assert_eq!(q_factorial(2), poly(&[1, -1, -1, 1]));
        assert!(q_factorial_recip(-1).is_zero());
        assert_eq!(&q_factorial_recip(3) * &q_factorial(3), RatFunQ::one());
        assert!(qpoch_scalar(&RatFunQ::q_pow(-2), 3).is_zero());
        assert!(!qpoch_scalar(&RatFunQ::q_pow(-2), 2).is_zero());
    }
}

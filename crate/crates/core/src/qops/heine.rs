use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::pseries::{MonomialArg, MultiSeries};
use crate::qcore::{dq, q_factorial, qpoch_scalar};
use crate::qfield::RatFunQ;
use crate::{Error, Result};

/// `n` in `H_n(bD_q)`; `Infinity` selects `T(bD_q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeineOrder {
    Finite(u32),
    Infinity,
}

impl fmt::Display for HeineOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeineOrder::Finite(n) => write!(f, "{n}"),
            HeineOrder::Infinity => write!(f, "inf"),
        }
    }
}

/// Weight of `(bD_q)^k`: `(q^n;q)_k/(q;q)_k`, or `1/(q;q)_k` at infinity.
pub fn heine_coefficient(n: HeineOrder, k: u32) -> RatFunQ {
    let recip = q_factorial(k as usize).inv().expect("(q;q)_k is nonzero");
    match n {
        HeineOrder::Finite(n) => &qpoch_scalar(&RatFunQ::q_pow(n as i64), k as usize) * &recip,
        HeineOrder::Infinity => recip,
    }
}

/// One summand of an operator image: `weight * image`, where
/// `image = b^k D_q^k f`.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorTerm {
    pub k: u32,
    pub weight: RatFunQ,
    pub image: MultiSeries,
}

/// The summands of `sum_k w_k (bD_q)^k f`, truncated at the order of `f`.
///
/// The sum is finite when `b` has positive degree (the images leave the
/// truncation window) or when `f` is an exact polynomial in `var`.
pub fn heine_terms(
    n: HeineOrder,
    b: &MonomialArg,
    var: &str,
    f: &MultiSeries,
) -> Result<Vec<OperatorTerm>> {
    collect_terms(n, b, var, f).map(|(t, _)| t)
}

/// The summands and whether they are all of them.
fn collect_terms(
    n: HeineOrder,
    b: &MonomialArg,
    var: &str,
    f: &MultiSeries,
) -> Result<(Vec<OperatorTerm>, bool)> {
    f.vars().check_same(b.vars())?;
    let i = f.vars().index_of(var)?;
    if b.index().exponent(i) > 0 {
        return Err(Error::OperatorParameterDependsOnVariable(var.to_string()));
    }
    let order = f.order();
    let beta = b.degree();
    if beta == 0 && !f.is_exact() {
        return Err(Error::SumDoesNotTruncate);
    }
    let mut terms = Vec::new();
    let mut deriv = f.clone();
    let mut bk = MonomialArg::scalar(f.vars(), RatFunQ::one());
    let mut k = 0u32;
    let complete = loop {
        if deriv.is_zero() && deriv.is_exact() {
            break true;
        }
        let weight = heine_coefficient(n, k);
        if weight.is_zero() {
            break true;
        }
        let image = deriv.mul_monomial(&bk)?.truncate(order);
        terms.push(OperatorTerm { k, weight, image });
        k += 1;
        if beta > 0 && beta * k > order {
            break false;
        }
        deriv = dq(&deriv, var)?;
        bk = bk.mul(b)?;
    };
    Ok((terms, complete))
}

/// `sum_k w_k (bD_q)^k f` with the weights of [`heine_coefficient`].
pub fn operator_apply(
    n: HeineOrder,
    b: &MonomialArg,
    var: &str,
    f: &MultiSeries,
) -> Result<MultiSeries> {
    let (terms, complete) = collect_terms(n, b, var, f)?;
    let mut out = MultiSeries::zero(f.vars(), f.order());
    for t in &terms {
        out = out.add(&t.image.scale(&t.weight))?;
    }
    Ok(if complete { out } else { out.into_inexact() })
}

/// `H_n(bD_q) f`
pub fn heine_apply(n: u32, b: &MonomialArg, var: &str, f: &MultiSeries) -> Result<MultiSeries> {
    operator_apply(HeineOrder::Finite(n), b, var, f)
}

/// `T(bD_q) f`
pub fn t_apply(b: &MonomialArg, var: &str, f: &MultiSeries) -> Result<MultiSeries> {
    operator_apply(HeineOrder::Infinity, b, var, f)
}

/// `(bD_q;q)_n f = prod_{k<n} (1 - q^k b D_q) f`.
pub fn bdq_pochhammer_apply(
    n: u32,
    b: &MonomialArg,
    var: &str,
    f: &MultiSeries,
) -> Result<MultiSeries> {
    f.vars().check_same(b.vars())?;
    let mut g = f.clone();
    for k in 0..n {
        let step = dq(&g, var)?.mul_monomial(&b.times_q_pow(k as i64))?;
        g = g.sub(&step.truncate(g.order()))?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseries::{MultiIndex, VarTable};

    fn setup() -> (VarTable, MonomialArg) {
        let v = VarTable::new(&["b", "x"]).unwrap();
        let b = MonomialArg::vars_product(&v, &["b"]).unwrap();
        (v, b)
    }

    fn x_pow(v: &VarTable, m: u32, order: u32) -> MultiSeries {
        MultiSeries::polynomial(
            v,
            order,
            [(MultiIndex::new(alloc::vec![0, m]), RatFunQ::one())],
        )
        .unwrap()
    }

    #[test]
    fn order_zero_is_identity() {
        let (v, b) = setup();
        let f = x_pow(&v, 3, 6).add(&x_pow(&v, 1, 6)).unwrap();
        assert_eq!(heine_apply(0, &b, "x", &f).unwrap(), f);
    }

    #[test]
    fn first_order_on_x() {
        let (v, b) = setup();
        let out = heine_apply(1, &b, "x", &x_pow(&v, 1, 4)).unwrap();
        let expect = MultiSeries::polynomial(
            &v,
            4,
            [
                (MultiIndex::new(alloc::vec![0, 1]), RatFunQ::one()),
                (
                    MultiIndex::new(alloc::vec![1, 0]),
                    RatFunQ::one_minus_q_pow(1),
                ),
            ],
        )
        .unwrap();
        assert_eq!(out, expect);
        assert!(out.is_exact());
    }

    #[test]
    fn weights() {
        assert!(heine_coefficient(HeineOrder::Finite(0), 1).is_zero());
        assert!(heine_coefficient(HeineOrder::Finite(1), 3).is_one());
        assert_eq!(
            heine_coefficient(HeineOrder::Infinity, 2),
            q_factorial(2).inv().unwrap()
        );
    }

    #[test]
    fn scalar_parameter_needs_a_polynomial() {
        let (v, _) = setup();
        let c = MonomialArg::scalar(&v, RatFunQ::q_pow(1));
        let f = x_pow(&v, 2, 4);
        assert!(heine_apply(2, &c, "x", &f).unwrap().is_exact());
        let g = MultiSeries::from_terms(
            &v,
            4,
            [(MultiIndex::new(alloc::vec![0, 1]), RatFunQ::one())],
        )
        .unwrap();
        assert_eq!(heine_apply(2, &c, "x", &g), Err(Error::SumDoesNotTruncate));
        let x = MonomialArg::vars_product(&v, &["x"]).unwrap();
        assert!(matches!(
            heine_apply(2, &x, "x", &f),
            Err(Error::OperatorParameterDependsOnVariable(_))
        ));
    }
}

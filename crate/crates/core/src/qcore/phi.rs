use alloc::format;
use alloc::vec::Vec;

use crate::pseries::{MonomialArg, MultiSeries};
use crate::qfield::RatFunQ;
use crate::{Error, Result};

/// Parameters of `_r phi_s(a_1..a_r; b_1..b_s; q, z)`.
#[derive(Clone, Debug)]
pub struct PhiSpec {
    pub numerator: Vec<MonomialArg>,
    pub denominator: Vec<MonomialArg>,
    pub argument: MonomialArg,
}

impl PhiSpec {
    pub fn new(
        numerator: Vec<MonomialArg>,
        denominator: Vec<MonomialArg>,
        argument: MonomialArg,
    ) -> Self {
        Self {
            numerator,
            denominator,
            argument,
        }
    }
}

/// `m` when `c = q^-m` with `m >= 0`, i.e. `(c;q)_k = 0` for every `k > m`.
fn terminating_length(c: &RatFunQ) -> Option<usize> {
    match c.as_q_monomial() {
        Some((coef, e)) if num_traits::One::is_one(&coef) && e <= 0 => {
            Some(e.unsigned_abs() as usize)
        }
        _ => None,
    }
}

/// `sum_k term_k` truncated at `order`, with
/// `term_k = prod (a_i;q)_k / ((q;q)_k prod (b_j;q)_k) * [(-1)^k q^binom(k,2)]^(1+s-r) * z^k`.
///
/// A denominator symbol that vanishes inside the summation range is reported
/// as [`Error::UndefinedSeries`].
pub fn phi_series(spec: &PhiSpec, order: u32) -> Result<MultiSeries> {
    let z = &spec.argument;
    let vars = z.vars();
    for p in spec.numerator.iter().chain(&spec.denominator) {
        vars.check_same(p.vars())?;
    }
    let r = spec.numerator.len() as i64;
    let s = spec.denominator.len() as i64;
    let extra = 1 + s - r;

    let mut kmax = if z.is_zero() {
        Some(0)
    } else if z.degree() > 0 {
        Some((order / z.degree()) as usize)
    } else {
        None
    };
    for a in spec.numerator.iter().filter(|a| a.is_scalar()) {
        if let Some(m) = terminating_length(a.coeff()) {
            kmax = Some(kmax.map_or(m, |k| k.min(m)));
        }
    }
    let by_order = if z.degree() > 0 {
        Some((order / z.degree()) as usize)
    } else {
        None
    };
    let kmax = kmax.ok_or(Error::NonTerminatingSeries)?;
    let mut complete = by_order.is_none_or(|b| kmax < b) || z.is_zero();

    let one = MultiSeries::one(vars, order);
    let mut scalar = RatFunQ::one();
    let mut num_series = one.clone();
    let mut den_inv = one.clone();
    let mut total = one.clone();
    for k in 1..=kmax {
        let shift = (k - 1) as i64;
        for a in &spec.numerator {
            let step = a.times_q_pow(shift);
            if a.is_scalar() {
                scalar = &scalar * &(&RatFunQ::one() - step.coeff());
            } else {
                num_series = num_series.mul(&one.sub(&step.to_series(order))?)?;
            }
        }
        for b in &spec.denominator {
            let step = b.times_q_pow(shift);
            if b.is_scalar() {
                let f = &RatFunQ::one() - step.coeff();
                if f.is_zero() {
                    return Err(Error::UndefinedSeries {
                        k,
                        detail: format!("({};q)_{k} vanishes", b),
                    });
                }
                scalar = scalar.checked_div(&f)?;
            } else {
                den_inv = den_inv.mul(&geometric(&step, order))?;
            }
        }
        scalar = scalar.checked_div(&RatFunQ::one_minus_q_pow(k))?;
        scalar = &scalar * z.coeff();
        if extra != 0 {
            let sign = if extra % 2 == 0 { 1 } else { -1 };
            scalar = scalar
                .mul_q_pow(shift * extra)
                .scale(&crate::qfield::rat(sign));
        }
        if scalar.is_zero() {
            complete = true;
            break;
        }
        let room = order - k as u32 * z.degree();
        let body = num_series.truncate(room).mul(&den_inv.truncate(room))?;
        let zk = MonomialArg::from_index(vars, scalar.clone(), z.index().scaled(k as u32))?;
        total = total.add(&body.mul_monomial(&zk)?.truncate(order))?;
    }
    if !complete {
        total = total.into_inexact();
    }
    Ok(total)
}

/// `1 / (1 - m)` for a monomial of positive degree.
fn geometric(m: &MonomialArg, order: u32) -> MultiSeries {
    let vars = m.vars();
    let terms = (0..=order / m.degree()).map(|j| {
        let p = m.pow(j);
        (p.index().clone(), p.coeff().clone())
    });
    MultiSeries::from_terms(vars, order, terms).expect("aligned indices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseries::{MultiIndex, VarTable};
    use crate::qcore::qpoch_inf;

    fn vars() -> VarTable {
        VarTable::new(&["z"]).unwrap()
    }

    fn scalar(c: RatFunQ) -> MonomialArg {
        MonomialArg::scalar(&vars(), c)
    }

    fn zvar() -> MonomialArg {
        MonomialArg::vars_product(&vars(), &["z"]).unwrap()
    }

    #[test]
    fn q_binomial_theorem_scalar_parameter() {
        let a = scalar(RatFunQ::q_pow(3));
        let lhs = phi_series(
            &PhiSpec::new(alloc::vec![a.clone()], alloc::vec![], zvar()),
            8,
        )
        .unwrap();
        let az = zvar().times_q_pow(3);
        let rhs = qpoch_inf(&az, 8)
            .unwrap()
            .mul(&qpoch_inf(&zvar(), 8).unwrap().inverse().unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn vanishing_numerator_terminates() {
        let vars = VarTable::new(&["b", "c", "z"]).unwrap();
        let spec = PhiSpec::new(
            alloc::vec![
                MonomialArg::scalar(&vars, RatFunQ::one()),
                MonomialArg::vars_product(&vars, &["b"]).unwrap(),
            ],
            alloc::vec![MonomialArg::vars_product(&vars, &["c"]).unwrap()],
            MonomialArg::vars_product(&vars, &["z"]).unwrap(),
        );
        assert_eq!(phi_series(&spec, 6).unwrap(), MultiSeries::one(&vars, 6));
    }

    #[test]
    fn balanced_factor_on_1phi1() {
        // first coefficient of 1phi1(a; b; q, z) with scalar a = q^2, b = q^5
        let (a, b) = (RatFunQ::q_pow(2), RatFunQ::q_pow(5));
        let spec = PhiSpec::new(
            alloc::vec![scalar(a.clone())],
            alloc::vec![scalar(b.clone())],
            zvar(),
        );
        let s = phi_series(&spec, 3).unwrap();
        let one = RatFunQ::one();
        let expect = -(&(&one - &a)
            .checked_div(&(&RatFunQ::one_minus_q_pow(1) * &(&one - &b)))
            .unwrap());
        assert_eq!(s.coeff(&MultiIndex::new(alloc::vec![1])).unwrap(), expect);
    }

    #[test]
    fn zero_denominator_is_reported() {
        // (q^-1;q)_k vanishes at k = 2
        let spec = PhiSpec::new(
            alloc::vec![scalar(RatFunQ::q_pow(1))],
            alloc::vec![scalar(RatFunQ::q_pow(-1))],
            zvar(),
        );
        match phi_series(&spec, 4) {
            Err(Error::UndefinedSeries { k, .. }) => assert_eq!(k, 2),
            other => panic!("expected undefined series, got {other:?}"),
        }
    }

    #[test]
    fn scalar_argument_needs_termination() {
        let half = RatFunQ::from_rational(crate::qfield::Rational::new(1.into(), 2.into()));
        let spec = PhiSpec::new(
            alloc::vec![scalar(RatFunQ::q_pow(1))],
            alloc::vec![],
            scalar(half.clone()),
        );
        assert_eq!(phi_series(&spec, 4), Err(Error::NonTerminatingSeries));
        // 1phi0(q^-2; -; q, w) = (w q^-2; q)_2 by the q-binomial theorem
        let spec = PhiSpec::new(
            alloc::vec![scalar(RatFunQ::q_pow(-2))],
            alloc::vec![],
            scalar(half.clone()),
        );
        let s = phi_series(&spec, 4).unwrap();
        assert!(s.is_exact());
        let one = RatFunQ::one();
        let expect = &(&one - &half.mul_q_pow(-2)) * &(&one - &half.mul_q_pow(-1));
        assert_eq!(s.constant_term(), expect);
    }
}

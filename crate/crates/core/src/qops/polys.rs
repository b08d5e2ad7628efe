use crate::pseries::MultiSeries;
use crate::qcore::qbinom;
use crate::qfield::RatFunQ;
use crate::Result;

/// Homogeneous Hahn polynomial
/// `Phi_m^(alpha)(x, y|q) = sum_k [m,k] (alpha;q)_k x^k y^(m-k)`.
pub fn hahn(m: u32, alpha: &MultiSeries, x: &MultiSeries, y: &MultiSeries) -> Result<MultiSeries> {
    let vars = alpha.vars();
    vars.check_same(x.vars())?;
    vars.check_same(y.vars())?;
    let order = alpha.order().min(x.order()).min(y.order());
    let one = MultiSeries::one(vars, order);
    let ypow = powers(y, m, order)?;
    let mut out = MultiSeries::zero(vars, order);
    let mut poch = one.clone();
    let mut xk = one;
    for k in 0..=m {
        if k > 0 {
            let shifted = alpha.scale(&RatFunQ::q_pow(k as i64 - 1));
            poch = poch.mul(&MultiSeries::one(vars, order).sub(&shifted)?)?;
            xk = xk.mul(x)?;
        }
        let term = poch.mul(&xk)?.mul(&ypow[(m - k) as usize])?;
        out = out.add(&term.scale(&qbinom(m as i64, k as i64)?))?;
    }
    Ok(out)
}

/// Rogers-Szegő polynomial `r_m(b, x) = sum_k [m,k] b^k x^(m-k)`.
pub fn rogers_szego(m: u32, b: &MultiSeries, x: &MultiSeries) -> Result<MultiSeries> {
    b.vars().check_same(x.vars())?;
    let order = b.order().min(x.order());
    let xpow = powers(x, m, order)?;
    let mut out = MultiSeries::zero(b.vars(), order);
    let mut bk = MultiSeries::one(b.vars(), order);
    for k in 0..=m {
        if k > 0 {
            bk = bk.mul(b)?;
        }
        let term = bk.mul(&xpow[(m - k) as usize])?;
        out = out.add(&term.scale(&qbinom(m as i64, k as i64)?))?;
    }
    Ok(out)
}

fn powers(s: &MultiSeries, m: u32, order: u32) -> Result<alloc::vec::Vec<MultiSeries>> {
    let mut out = alloc::vec![MultiSeries::one(s.vars(), order)];
    for j in 1..=m as usize {
        let next = out[j - 1].mul(s)?;
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pseries::{MultiIndex, VarTable};
    use crate::qfield::PolyQ;

    fn setup() -> (VarTable, MultiSeries, MultiSeries) {
        let v = VarTable::new(&["x", "y"]).unwrap();
        let x = MultiSeries::variable(&v, 6, "x").unwrap();
        let y = MultiSeries::variable(&v, 6, "y").unwrap();
        (v, x, y)
    }

    fn alpha(v: &VarTable) -> MultiSeries {
        MultiSeries::constant(v, 6, RatFunQ::q_pow(3))
    }

    fn coeff(s: &MultiSeries, e: &[u32]) -> RatFunQ {
        s.coeff(&MultiIndex::new(e.to_vec())).unwrap()
    }

    #[test]
    fn hahn_low_degrees() {
        let (v, x, y) = setup();
        let a = RatFunQ::q_pow(3);
        let one = RatFunQ::one();
        assert_eq!(
            hahn(0, &alpha(&v), &x, &y).unwrap(),
            MultiSeries::one(&v, 6)
        );

        let h1 = hahn(1, &alpha(&v), &x, &y).unwrap();
        assert_eq!(h1.len(), 2);
        assert_eq!(coeff(&h1, &[0, 1]), one);
        assert_eq!(coeff(&h1, &[1, 0]), &one - &a);

        let h2 = hahn(2, &alpha(&v), &x, &y).unwrap();
        assert_eq!(h2.len(), 3);
        assert_eq!(coeff(&h2, &[0, 2]), one);
        let one_plus_q = RatFunQ::from_poly(PolyQ::from_ints(&[1, 1]));
        assert_eq!(coeff(&h2, &[1, 1]), &one_plus_q * &(&one - &a));
        assert_eq!(
            coeff(&h2, &[2, 0]),
            &(&one - &a) * &(&one - &a.mul_q_pow(1))
        );
    }

    #[test]
    fn rogers_szego_low_degrees() {
        let (v, x, b) = setup();
        assert_eq!(rogers_szego(0, &b, &x).unwrap(), MultiSeries::one(&v, 6));
        let r2 = rogers_szego(2, &b, &x).unwrap();
        assert_eq!(coeff(&r2, &[2, 0]), RatFunQ::one());
        assert_eq!(
            coeff(&r2, &[1, 1]),
            RatFunQ::from_poly(PolyQ::from_ints(&[1, 1]))
        );
        assert_eq!(coeff(&r2, &[0, 2]), RatFunQ::one());
    }

    #[test]
    fn zero_alpha_degenerates() {
        let (v, x, b) = setup();
        let zero = MultiSeries::zero(&v, 6);
        for m in 0..=6 {
            assert_eq!(
                hahn(m, &zero, &b, &x).unwrap(),
                rogers_szego(m, &b, &x).unwrap()
            );
        }
    }
}

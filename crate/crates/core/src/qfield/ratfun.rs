use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{PolyQ, Rational};
use crate::{Error, Result};

/// Rational function in `q`: `num / den` with `gcd(num, den) = 1` and `den`
/// monic. Zero is `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunQ {
    num: PolyQ,
    den: PolyQ,
}

impl RatFunQ {
    /// Builds the normalized fraction `num / den`.
    pub fn new(num: PolyQ, den: PolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: PolyQ, den: PolyQ) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den).expect("nonzero");
            if g.is_one() {
                (num, den)
            } else {
                (num.exact_div(&g), den.exact_div(&g))
            }
        };
        Self::monic_den(num, den)
    }

    fn monic_den(num: PolyQ, den: PolyQ) -> Self {
        let lead = den.leading().expect("nonzero denominator");
        if lead.is_one() {
            Self { num, den }
        } else {
            let inv = lead.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        Self {
            num: PolyQ::zero(),
            den: PolyQ::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(PolyQ::one())
    }

    pub fn from_poly(p: PolyQ) -> Self {
        Self {
            num: p,
            den: PolyQ::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(PolyQ::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::rat(n))
    }

    /// `q^n` for any integer `n`.
    pub fn q_pow(n: i64) -> Self {
        if n >= 0 {
            Self::from_poly(PolyQ::q_pow(n as usize))
        } else {
            Self {
                num: PolyQ::one(),
                den: PolyQ::q_pow(n.unsigned_abs() as usize),
            }
        }
    }

    /// `1 - q^n` for `n >= 0`.
    pub fn one_minus_q_pow(n: usize) -> Self {
        Self::from_poly(PolyQ::one_minus_q_pow(n))
    }

    pub fn num(&self) -> &PolyQ {
        &self.num
    }

    pub fn den(&self) -> &PolyQ {
        &self.den
    }

    pub fn into_parts(self) -> (PolyQ, PolyQ) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Rational value when this is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeff(0))
    }

    /// If this is `c * q^e` returns `(c, e)`.
    pub fn as_q_monomial(&self) -> Option<(Rational, i64)> {
        let single = |p: &PolyQ| p.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        if self.is_zero() || !single(&self.num) || !single(&self.den) {
            return None;
        }
        let e = self.num.low_power() as i64 - self.den.low_power() as i64;
        let c = self.num.coeff(self.num.low_power());
        Some((c, e))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        Ok(Self::monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Multiplies by `q^n` without a general gcd.
    pub fn mul_q_pow(&self, n: i64) -> Self {
        if n == 0 || self.is_zero() {
            return self.clone();
        }
        if n > 0 {
            let n = n as usize;
            let cancel = n.min(self.den.low_power());
            Self {
                num: self.num.shift_up(n - cancel),
                den: self.den.shift_down(cancel),
            }
        } else {
            let n = n.unsigned_abs() as usize;
            let cancel = n.min(self.num.low_power());
            Self {
                num: self.num.shift_down(cancel),
                den: self.den.shift_up(n - cancel),
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Exact value at `q = q0`.
    pub fn eval_at(&self, q0: &Rational) -> Result<Rational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluationPoint);
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Sum of many terms; numerators over a shared denominator are added
    /// before any gcd is taken.
    pub fn sum<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = &'a RatFunQ>,
    {
        let mut groups: Vec<(PolyQ, PolyQ)> = Vec::new();
        for t in terms {
            if t.is_zero() {
                continue;
            }
            match groups.iter_mut().find(|(d, _)| *d == t.den) {
                Some((_, n)) => *n = &*n + &t.num,
                None => groups.push((t.den.clone(), t.num.clone())),
            }
        }
        let mut acc = Self::zero();
        for (den, num) in groups {
            let term = Self::normalize(num, den);
            acc = &acc + &term;
        }
        acc
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, c, d) = (&self.num, &self.den, &rhs.num, &rhs.den);
        if b == d {
            let n = a + c;
            return if b.is_one() {
                Self::from_poly(n)
            } else {
                Self::normalize(n, b.clone())
            };
        }
        if b.is_one() {
            // gcd(a d + c, d) = gcd(c, d) = 1
            return Self {
                num: &(a * d) + c,
                den: d.clone(),
            };
        }
        if d.is_one() {
            return Self {
                num: &(c * b) + a,
                den: b.clone(),
            };
        }
        let g = b.gcd(d).expect("nonzero");
        if g.is_one() {
            return Self {
                num: &(a * d) + &(c * b),
                den: b * d,
            };
        }
        let b1 = b.exact_div(&g);
        let d1 = d.exact_div(&g);
        let n = &(a * &d1) + &(c * &b1);
        if n.is_zero() {
            return Self::zero();
        }
        let den = &b1 * d;
        // only factors of g can cancel
        let g2 = n.gcd(&g).expect("nonzero");
        if g2.is_one() {
            Self::monic_den(n, den)
        } else {
            Self::monic_den(n.exact_div(&g2), den.exact_div(&g2))
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (a, b, c, d) = (&self.num, &self.den, &rhs.num, &rhs.den);
        let cross = |n: &PolyQ, m: &PolyQ| -> (PolyQ, PolyQ) {
            if m.is_one() || n.is_constant() {
                return (n.clone(), m.clone());
            }
            let g = n.gcd(m).expect("nonzero");
            if g.is_one() {
                (n.clone(), m.clone())
            } else {
                (n.exact_div(&g), m.exact_div(&g))
            }
        };
        let (a1, d1) = cross(a, d);
        let (c1, b1) = cross(c, b);
        Self::monic_den(&a1 * &c1, &b1 * &d1)
    }
}

impl Default for RatFunQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add<&RatFunQ> for &RatFunQ {
    type Output = RatFunQ;
    fn add(self, rhs: &RatFunQ) -> RatFunQ {
        self.add_impl(rhs)
    }
}

impl Sub<&RatFunQ> for &RatFunQ {
    type Output = RatFunQ;
    fn sub(self, rhs: &RatFunQ) -> RatFunQ {
        self.add_impl(&-rhs)
    }
}

impl Mul<&RatFunQ> for &RatFunQ {
    type Output = RatFunQ;
    fn mul(self, rhs: &RatFunQ) -> RatFunQ {
        self.mul_impl(rhs)
    }
}

impl Neg for &RatFunQ {
    type Output = RatFunQ;
    fn neg(self) -> RatFunQ {
        RatFunQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunQ {
    type Output = RatFunQ;
    fn neg(self) -> RatFunQ {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunQ> for RatFunQ {
            type Output = RatFunQ;
            fn $m(self, rhs: RatFunQ) -> RatFunQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunQ> for RatFunQ {
            type Output = RatFunQ;
            fn $m(self, rhs: &RatFunQ) -> RatFunQ {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<PolyQ> for RatFunQ {
    fn from(p: PolyQ) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFunQ {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

/// `num` when the denominator is 1, otherwise `(num)/(den)`.
impl fmt::Display for RatFunQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunQ({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> PolyQ {
        PolyQ::from_ints(c)
    }

    fn r(num: &[i64], den: &[i64]) -> RatFunQ {
        RatFunQ::new(p(num), p(den)).unwrap()
    }

    fn frac(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn make_normalizes() {
        assert_eq!(r(&[1, 0, -1], &[1, -1]), RatFunQ::from_poly(p(&[1, 1])));
        assert_eq!(r(&[], &[1, -1]), RatFunQ::zero());
        assert!(r(&[], &[1, -1]).den().is_one());
        let half = r(&[2, -2], &[4]);
        assert_eq!(half.num(), &p(&[1, -1]).scale(&frac(1, 2)));
        assert!(half.den().is_one());
        assert_eq!(
            RatFunQ::new(p(&[1]), PolyQ::zero()),
            Err(Error::DivisionByZeroPolynomial)
        );
        // monic denominator
        let x = r(&[1], &[2, -2]);
        assert_eq!(x.den(), &p(&[-1, 1]));
        assert_eq!(x.num(), &PolyQ::constant(frac(-1, 2)));
    }

    #[test]
    fn field_operations() {
        let a = r(&[1], &[1, -1]);
        let b = r(&[0, -1], &[1, -1]);
        assert_eq!(&a + &b, RatFunQ::one());
        let c = RatFunQ::from_poly(p(&[1, 1]));
        assert_eq!(&c * &c.inv().unwrap(), RatFunQ::one());
        let d = r(&[1], &[1, 0, -1]);
        assert_eq!(a.checked_div(&d).unwrap(), RatFunQ::from_poly(p(&[1, 1])));
        assert_eq!(
            a.checked_div(&RatFunQ::zero()),
            Err(Error::DivisionByZeroPolynomial)
        );
    }

    #[test]
    fn evaluation() {
        assert_eq!(r(&[1], &[1, -1]).eval_at(&frac(1, 2)).unwrap(), frac(2, 1));
        assert_eq!(r(&[1, 1], &[1]).eval_at(&frac(1, 3)).unwrap(), frac(4, 3));
        assert_eq!(
            r(&[1, 0, 0, -1], &[1, -1]).eval_at(&frac(1, 2)).unwrap(),
            frac(7, 4)
        );
        assert_eq!(
            r(&[1], &[1, -1]).eval_at(&frac(1, 1)),
            Err(Error::PoleAtEvaluationPoint)
        );
    }

    #[test]
    fn q_powers() {
        let x = r(&[1, 1], &[0, 0, 1, -1]);
        for n in -4..=4 {
            assert_eq!(x.mul_q_pow(n), &x * &RatFunQ::q_pow(n), "n = {n}");
        }
        assert_eq!(RatFunQ::q_pow(-2).as_q_monomial(), Some((frac(1, 1), -2)));
        assert_eq!(
            RatFunQ::q_pow(3).scale(&frac(-2, 1)).as_q_monomial(),
            Some((frac(-2, 1), 3))
        );
        assert_eq!(r(&[1, 1], &[1]).as_q_monomial(), None);
        assert_eq!(r(&[2, -2], &[1]).pow(-2).unwrap(), r(&[1], &[4, -8, 4]));
    }

    #[test]
    fn grouped_sum_matches_fold() {
        let terms = [
            r(&[1], &[1, -1]),
            r(&[0, 1], &[1, -1]),
            r(&[1], &[1, 0, -1]),
            r(&[2, 3], &[1, 0, -1]),
            RatFunQ::q_pow(-1),
        ];
        let folded = terms.iter().fold(RatFunQ::zero(), |acc, t| &acc + t);
        assert_eq!(RatFunQ::sum(terms.iter()), folded);
    }

    #[test]
    fn display() {
        assert_eq!(r(&[1], &[1, -1]).to_string(), "(-1)/(-1 + q)");
        assert_eq!(RatFunQ::q_pow(2).to_string(), "q^2");
    }
}

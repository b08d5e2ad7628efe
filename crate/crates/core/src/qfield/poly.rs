use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{zpoly, Rational};
use crate::{Error, Result};

/// Dense univariate polynomial in `q` with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`; the highest stored coefficient is
/// never zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(alloc::vec![c])
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self { coeffs }
    }

    /// `q^power`
    pub fn q_pow(power: usize) -> Self {
        Self::monomial(Rational::one(), power)
    }

    /// `1 - q^power`; zero when `power == 0`.
    pub fn one_minus_q_pow(power: usize) -> Self {
        if power == 0 {
            return Self::zero();
        }
        let mut coeffs = alloc::vec![Rational::zero(); power + 1];
        coeffs[0] = Rational::one();
        coeffs[power] = -Rational::one();
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplicity of `q` as a factor (0 for the zero polynomial).
    pub fn low_power(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Multiplies by `q^n`.
    pub fn shift_up(&self, n: usize) -> Self {
        if self.is_zero() || n == 0 {
            return self.clone();
        }
        let mut coeffs = alloc::vec![Rational::zero(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Divides by `q^n`; the caller guarantees `n <= low_power()`.
    pub(crate) fn shift_down(&self, n: usize) -> Self {
        debug_assert!(self.is_zero() || n <= self.low_power());
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs[n..].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => {
                let inv = l.recip();
                self.scale(&inv)
            }
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &PolyQ) -> Result<(PolyQ, PolyQ)> {
        let dd = d.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let Some(da) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if da < dd {
            return Ok((Self::zero(), self.clone()));
        }
        // work on integer images: a/la and d/ld share no denominators
        let (a_int, la) = self.integer_parts();
        let (d_int, ld) = d.integer_parts();
        if let Some(q_int) = zpoly::divides(&d_int, &a_int) {
            let scale = Rational::new(ld, la);
            let quo = Self::new(
                q_int
                    .into_iter()
                    .map(|c| Rational::from_integer(c) * &scale)
                    .collect(),
            );
            return Ok((quo, Self::zero()));
        }
        let lead_inv = d.leading().expect("nonzero").recip();
        let mut rem = self.coeffs.clone();
        let mut quo = alloc::vec![Rational::zero(); da - dd + 1];
        for i in (0..=da - dd).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quo[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quo), Self::new(rem)))
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub(crate) fn exact_div(&self, d: &PolyQ) -> PolyQ {
        let (quo, rem) = self.div_rem(d).expect("nonzero divisor");
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        quo
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &PolyQ) -> Result<PolyQ> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::GcdOfZeros),
            (true, false) => return Ok(other.monic()),
            (false, true) => return Ok(self.monic()),
            _ => {}
        }
        if self.is_constant() || other.is_constant() {
            return Ok(Self::one());
        }
        let (la, lb) = (self.low_power(), other.low_power());
        let e = la.min(lb);
        let (a, _) = self.shift_down(la).integer_parts();
        let (b, _) = other.shift_down(lb).integer_parts();
        let a = zpoly::primitive(a);
        let b = zpoly::primitive(b);
        if a.len() == 1 || b.len() == 1 {
            return Ok(Self::q_pow(e));
        }
        let g = zpoly::gcd_primitive(&a, &b);
        let g = Self::new(g.into_iter().map(Rational::from_integer).collect());
        Ok(g.monic().shift_up(e))
    }

    /// Integer coefficients `c` and a positive common denominator `l` with
    /// `self = c / l`.
    pub(crate) fn integer_parts(&self) -> (Vec<BigInt>, BigInt) {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            if !c.denom().is_one() {
                l = l.lcm(c.denom());
            }
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| {
                if l.is_one() {
                    c.numer().clone()
                } else {
                    c.numer() * (&l / c.denom())
                }
            })
            .collect();
        (ints, l)
    }

    fn from_integer_parts(ints: Vec<BigInt>, l: &BigInt) -> Self {
        if l.is_one() {
            Self::new(ints.into_iter().map(Rational::from_integer).collect())
        } else {
            Self::new(
                ints.into_iter()
                    .map(|c| Rational::new(c, l.clone()))
                    .collect(),
            )
        }
    }

    fn mul_impl(&self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let (a, la) = self.integer_parts();
        let (b, lb) = rhs.integer_parts();
        let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        Self::from_integer_parts(out, &(la * lb))
    }

    fn add_impl(&self, rhs: &PolyQ, negate_rhs: bool) -> PolyQ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            let c = match (a, b, negate_rhs) {
                (Some(a), Some(b), false) => a + b,
                (Some(a), Some(b), true) => a - b,
                (Some(a), None, _) => a.clone(),
                (None, Some(b), false) => b.clone(),
                (None, Some(b), true) => -b,
                (None, None, _) => unreachable!(),
            };
            coeffs.push(c);
        }
        Self::new(coeffs)
    }
}

impl Add<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn add(self, rhs: &PolyQ) -> PolyQ {
        self.add_impl(rhs, false)
    }
}

impl Sub<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn sub(self, rhs: &PolyQ) -> PolyQ {
        self.add_impl(rhs, true)
    }
}

impl Mul<&PolyQ> for &PolyQ {
    type Output = PolyQ;
    fn mul(self, rhs: &PolyQ) -> PolyQ {
        self.mul_impl(rhs)
    }
}

impl Neg for &PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        PolyQ {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: PolyQ) -> PolyQ {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&PolyQ> for PolyQ {
            type Output = PolyQ;
            fn $m(self, rhs: &PolyQ) -> PolyQ {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for PolyQ {
    type Output = PolyQ;
    fn neg(self) -> PolyQ {
        -&self
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, mag: &Rational, power: usize) -> fmt::Result {
    let unit = mag.is_one();
    match power {
        0 => write!(f, "{mag}"),
        1 if unit => write!(f, "q"),
        1 => write!(f, "{mag}*q"),
        p if unit => write!(f, "q^{p}"),
        p => write!(f, "{mag}*q^{p}"),
    }
}

/// Ascending powers, e.g. `1 - q + 1/2*q^3`.
impl fmt::Display for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_term(f, &mag, p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(c: &[i64]) -> PolyQ {
        PolyQ::from_ints(c)
    }

    #[test]
    fn products() {
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1]), p(&[1, 0, -1]));
        assert_eq!(&PolyQ::zero() * &p(&[1, 1]), PolyQ::zero());
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1, 1]), p(&[1, 0, 0, -1]));
    }

    #[test]
    fn gcds() {
        assert_eq!(p(&[1, 0, -1]).gcd(&p(&[1, -1])).unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, -1]).gcd(&p(&[1, 1])).unwrap(), PolyQ::one());
        assert_eq!(p(&[1, 0, 0, -1]).gcd(&p(&[1, 0, -1])).unwrap(), p(&[-1, 1]));
        assert_eq!(PolyQ::zero().gcd(&PolyQ::zero()), Err(Error::GcdOfZeros));
        // q-power content is kept
        assert_eq!(p(&[0, 0, 2, 2]).gcd(&p(&[0, 3])).unwrap(), p(&[0, 1]));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let half = Rational::new(1.into(), 2.into());
        let a = p(&[1, 0, -1]).scale(&half);
        let b = p(&[3, -3]).scale(&Rational::new(2.into(), 7.into()));
        assert_eq!(a.gcd(&b).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn division() {
        let (quo, rem) = p(&[1, 0, 0, -1]).div_rem(&p(&[1, -1])).unwrap();
        assert_eq!(quo, p(&[1, 1, 1]));
        assert!(rem.is_zero());
        let (quo, rem) = p(&[1, 0, 1]).div_rem(&p(&[0, 2])).unwrap();
        assert_eq!(quo, PolyQ::monomial(Rational::new(1.into(), 2.into()), 1));
        assert_eq!(rem, PolyQ::one());
        assert_eq!(
            p(&[1]).div_rem(&PolyQ::zero()),
            Err(Error::DivisionByZeroPolynomial)
        );
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1]).to_string(), "1 - q");
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "-2*q + q^3");
        assert_eq!(PolyQ::zero().to_string(), "0");
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(p(&[1, -1]).scale(&half).to_string(), "1/2 - 1/2*q");
    }
}

//! Exact coefficient arithmetic.
//!
//! [`Rational`] is an arbitrary-precision fraction, [`PolyQ`] a dense
//! polynomial in `q` with rational coefficients and [`RatFunQ`] a rational
//! function in `q` kept in a canonical form (cancelled, monic denominator),
//! so that equality of values is equality of representations.

mod poly;
mod ratfun;
mod zpoly;

pub use poly::PolyQ;
pub use ratfun::RatFunQ;

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"a"` or `"a/b"` into a [`Rational`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    use num_bigint::BigInt;
    use num_traits::Zero;
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

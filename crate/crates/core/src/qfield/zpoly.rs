//! Dense polynomials over the integers, used only to compute gcds without
//! rational coefficient blow-up.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    if v.is_empty() {
        return v;
    }
    let mut g = content(&v);
    if v.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    if !g.is_one() {
        for c in &mut v {
            *c /= &g;
        }
    }
    v
}

fn degree(v: &[BigInt]) -> usize {
    v.len() - 1
}

/// Pseudo-remainder of `a` by `b` (both nonzero), up to a unit and a power
/// of the leading coefficient of `b`. The result is made primitive.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let lb = b.last().expect("nonzero divisor");
    let db = degree(b);
    let mut r: Vec<BigInt> = a.to_vec();
    while !r.is_empty() && r.len() > db {
        let lr = r.last().cloned().expect("nonzero");
        let shift = degree(&r) - db;
        let g = lr.gcd(lb);
        let (mr, mb) = (lb / &g, &lr / &g);
        if !mr.is_one() {
            for c in &mut r {
                *c *= &mr;
            }
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &mb * c;
        }
        trim(&mut r);
        // keep coefficients small between steps
        if r.len() > 8 {
            r = primitive(r);
        }
    }
    primitive(r)
}

/// Greatest common divisor of two nonzero primitive integer polynomials,
/// primitive with positive leading coefficient.
pub(crate) fn gcd_primitive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() {
        (a.to_vec(), b.to_vec())
    } else {
        (b.to_vec(), a.to_vec())
    };
    loop {
        if b.is_empty() {
            return primitive(a);
        }
        if b.len() == 1 {
            return alloc::vec![BigInt::one()];
        }
        let r = prem(&a, &b);
        a = b;
        b = r;
    }
}

/// Exact division test: returns the quotient when `d` divides `a` over the
/// integers.
pub(crate) fn divides(d: &[BigInt], a: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if d.len() > a.len() {
        return None;
    }
    let ld = d.last().expect("nonzero divisor");
    let dd = degree(d);
    let mut r = a.to_vec();
    let mut quo = alloc::vec![BigInt::zero(); a.len() - dd];
    while !r.is_empty() && r.len() > dd {
        let lr = r.last().cloned().expect("nonzero");
        let (c, rem) = lr.div_rem(ld);
        if !rem.is_zero() {
            return None;
        }
        let shift = degree(&r) - dd;
        for (i, x) in d.iter().enumerate() {
            r[i + shift] -= &c * x;
        }
        quo[shift] = c;
        trim(&mut r);
    }
    if r.is_empty() {
        Some(quo)
    } else {
        None
    }
}

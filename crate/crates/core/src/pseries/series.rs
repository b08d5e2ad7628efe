use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use super::{MonomialArg, MultiIndex, VarTable};
use crate::qfield::{RatFunQ, Rational};
use crate::{Error, Result};

/// Multivariate formal power series truncated at a total degree.
///
/// Every stored index has total degree at most `order` and no stored
/// coefficient is zero. Coefficients of degree `<= order` are exact; nothing
/// is known beyond `order` unless the series is flagged exact, meaning the
/// stored terms are the complete value (a polynomial).
#[derive(Clone)]
pub struct MultiSeries {
    vars: VarTable,
    order: u32,
    terms: BTreeMap<MultiIndex, RatFunQ>,
    exact: bool,
}

impl PartialEq for MultiSeries {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.order == other.order && self.terms == other.terms
    }
}

impl Eq for MultiSeries {}

impl MultiSeries {
    pub fn zero(vars: &VarTable, order: u32) -> Self {
        Self {
            vars: vars.clone(),
            order,
            terms: BTreeMap::new(),
            exact: true,
        }
    }

    pub fn one(vars: &VarTable, order: u32) -> Self {
        Self::constant(vars, order, RatFunQ::one())
    }

    pub fn constant(vars: &VarTable, order: u32, c: RatFunQ) -> Self {
        Self::monomial(vars, order, c, MultiIndex::zero(vars.len()))
    }

    /// `c * index` as an exact series; if the monomial lies beyond `order`
    /// the result is the (inexact) zero series.
    pub fn monomial(vars: &VarTable, order: u32, c: RatFunQ, index: MultiIndex) -> Self {
        debug_assert_eq!(index.arity(), vars.len());
        let mut s = Self::zero(vars, order);
        if c.is_zero() {
            return s;
        }
        if index.total() > order {
            s.exact = false;
        } else {
            s.terms.insert(index, c);
        }
        s
    }

    pub fn variable(vars: &VarTable, order: u32, name: &str) -> Result<Self> {
        let i = vars.index_of(name)?;
        Ok(Self::monomial(
            vars,
            order,
            RatFunQ::one(),
            MultiIndex::unit(vars.len(), i, 1),
        ))
    }

    /// Truncated series from a list of terms; repeated indices are summed
    /// and terms beyond `order` are dropped.
    pub fn from_terms<I>(vars: &VarTable, order: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, RatFunQ)>,
    {
        let mut s = Self::zero(vars, order);
        s.exact = false;
        for (idx, c) in terms {
            if idx.arity() != vars.len() {
                return Err(Error::IndexArity {
                    expected: vars.len(),
                    got: idx.arity(),
                });
            }
            if idx.total() <= order {
                s.accumulate(idx, c);
            }
        }
        Ok(s)
    }

    /// Exact polynomial; every term must fit within `order`.
    pub fn polynomial<I>(vars: &VarTable, order: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, RatFunQ)>,
    {
        let mut s = Self::zero(vars, order);
        for (idx, c) in terms {
            if idx.arity() != vars.len() {
                return Err(Error::IndexArity {
                    expected: vars.len(),
                    got: idx.arity(),
                });
            }
            if idx.total() > order {
                return Err(Error::BeyondTruncation {
                    total: idx.total(),
                    order,
                });
            }
            s.accumulate(idx, c);
        }
        Ok(s)
    }

    pub(crate) fn from_parts(
        vars: VarTable,
        order: u32,
        terms: BTreeMap<MultiIndex, RatFunQ>,
        exact: bool,
    ) -> Self {
        debug_assert!(terms
            .iter()
            .all(|(i, c)| i.total() <= order && !c.is_zero()));
        Self {
            vars,
            order,
            terms,
            exact,
        }
    }

    pub(crate) fn into_inexact(mut self) -> Self {
        self.exact = false;
        self
    }

    fn accumulate(&mut self, idx: MultiIndex, c: RatFunQ) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &RatFunQ)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> RatFunQ {
        self.terms
            .get(&MultiIndex::zero(self.vars.len()))
            .cloned()
            .unwrap_or_else(RatFunQ::zero)
    }

    /// Highest total degree of a stored term.
    pub fn max_total(&self) -> Option<u32> {
        self.terms.keys().next_back().map(MultiIndex::total)
    }

    /// Highest exponent of `var` among stored terms.
    pub fn max_degree_in(&self, var: usize) -> u32 {
        self.terms
            .keys()
            .map(|i| i.exponent(var))
            .max()
            .unwrap_or(0)
    }

    /// Coefficient at `idx` (zero if absent).
    pub fn coeff(&self, idx: &MultiIndex) -> Result<RatFunQ> {
        if idx.arity() != self.vars.len() {
            return Err(Error::IndexArity {
                expected: self.vars.len(),
                got: idx.arity(),
            });
        }
        if idx.total() > self.order {
            return Err(Error::BeyondTruncation {
                total: idx.total(),
                order: self.order,
            });
        }
        Ok(self.terms.get(idx).cloned().unwrap_or_else(RatFunQ::zero))
    }

    /// Drops everything beyond `order` (never raises the order).
    pub fn truncate(&self, order: u32) -> Self {
        if order >= self.order {
            return self.clone();
        }
        let mut dropped = false;
        let terms = self
            .terms
            .iter()
            .filter(|(i, _)| {
                let keep = i.total() <= order;
                dropped |= !keep;
                keep
            })
            .map(|(i, c)| (i.clone(), c.clone()))
            .collect();
        Self {
            vars: self.vars.clone(),
            order,
            terms,
            exact: self.exact && !dropped,
        }
    }

    /// Changes the truncation order. Raising it is only possible for exact
    /// series.
    pub fn with_order(&self, order: u32) -> Result<Self> {
        if order <= self.order {
            return Ok(self.truncate(order));
        }
        if !self.exact {
            return Err(Error::BeyondTruncation {
                total: order,
                order: self.order,
            });
        }
        let mut s = self.clone();
        s.order = order;
        Ok(s)
    }

    pub fn add(&self, other: &MultiSeries) -> Result<Self> {
        self.add_signed(other, false)
    }

    pub fn sub(&self, other: &MultiSeries) -> Result<Self> {
        self.add_signed(other, true)
    }

    fn add_signed(&self, other: &MultiSeries, negate: bool) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        let order = self.order.min(other.order);
        let mut out = self.truncate(order);
        let mut dropped = false;
        for (i, c) in &other.terms {
            if i.total() > order {
                dropped = true;
                continue;
            }
            if negate {
                out.accumulate(i.clone(), -c);
            } else {
                out.accumulate(i.clone(), c.clone());
            }
        }
        out.exact = out.exact && other.exact && !dropped;
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect(),
            exact: self.exact,
        }
    }

    pub fn scale(&self, c: &RatFunQ) -> Self {
        if c.is_zero() {
            let mut z = Self::zero(&self.vars, self.order);
            z.exact = self.exact;
            return z;
        }
        Self {
            vars: self.vars.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(i, x)| (i.clone(), x * c)).collect(),
            exact: self.exact,
        }
    }

    /// Cauchy product truncated at the smaller of the two orders.
    pub fn mul(&self, other: &MultiSeries) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        let order = self.order.min(other.order);
        let mut buckets: BTreeMap<MultiIndex, Vec<RatFunQ>> = BTreeMap::new();
        for (i, a) in &self.terms {
            if i.total() > order {
                break;
            }
            for (j, b) in &other.terms {
                if i.total() + j.total() > order {
                    break;
                }
                buckets.entry(i.add(j)).or_default().push(a * b);
            }
        }
        let terms = sum_buckets(buckets);
        let dropped = match (self.max_total(), other.max_total()) {
            (Some(a), Some(b)) => a + b > order,
            _ => false,
        };
        Ok(Self {
            vars: self.vars.clone(),
            order,
            terms,
            exact: self.exact && other.exact && !dropped,
        })
    }

    /// Multiplies by a monomial. The product is known up to
    /// `order + degree(m)`, which becomes its truncation order.
    pub fn mul_monomial(&self, m: &MonomialArg) -> Result<Self> {
        self.vars.check_same(m.vars())?;
        let order = self.order + m.degree();
        if m.is_zero() {
            let mut z = Self::zero(&self.vars, order);
            z.exact = self.exact;
            return Ok(z);
        }
        let terms = self
            .terms
            .iter()
            .map(|(i, c)| (i.add(m.index()), c * m.coeff()))
            .collect();
        Ok(Self {
            vars: self.vars.clone(),
            order,
            terms,
            exact: self.exact,
        })
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(&self.vars, self.order);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse to the same order. Requires a nonzero constant
    /// term.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let c_inv = c.inv()?;
        let neg_c_inv = -&c_inv;
        // homogeneous components of f, g
        let mut f_parts: Vec<Vec<(&MultiIndex, &RatFunQ)>> =
            alloc::vec![Vec::new(); self.order as usize + 1];
        for (i, a) in &self.terms {
            f_parts[i.total() as usize].push((i, a));
        }
        let zero_idx = MultiIndex::zero(self.vars.len());
        let mut g_parts: Vec<Vec<(MultiIndex, RatFunQ)>> = Vec::with_capacity(f_parts.len());
        g_parts.push(alloc::vec![(zero_idx, c_inv)]);
        for d in 1..=self.order as usize {
            let mut buckets: BTreeMap<MultiIndex, Vec<RatFunQ>> = BTreeMap::new();
            for j in 1..=d {
                for (fi, fa) in &f_parts[j] {
                    for (gi, ga) in &g_parts[d - j] {
                        buckets.entry(fi.add(gi)).or_default().push(*fa * ga);
                    }
                }
            }
            let part = sum_buckets(buckets)
                .into_iter()
                .map(|(i, s)| (i, &s * &neg_c_inv))
                .collect();
            g_parts.push(part);
        }
        let terms = g_parts.into_iter().flatten().collect();
        Ok(Self {
            vars: self.vars.clone(),
            order: self.order,
            terms,
            exact: self.exact && self.max_total() == Some(0),
        })
    }

    /// Substitutes `var -> q^j * var`.
    pub fn subst_qscale(&self, var: &str, j: i64) -> Result<Self> {
        let v = self.vars.index_of(var)?;
        Ok(Self {
            vars: self.vars.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(i, c)| (i.clone(), c.mul_q_pow(j * i.exponent(v) as i64)))
                .collect(),
            exact: self.exact,
        })
    }

    /// Evaluates every coefficient at `q = q0`.
    pub fn eval_coeffs_at(&self, q0: &Rational) -> Result<BTreeMap<MultiIndex, Rational>> {
        let mut out = BTreeMap::new();
        for (i, c) in &self.terms {
            let v = c.eval_at(q0)?;
            if !num_traits::Zero::is_zero(&v) {
                out.insert(i.clone(), v);
            }
        }
        Ok(out)
    }
}

fn sum_buckets(buckets: BTreeMap<MultiIndex, Vec<RatFunQ>>) -> BTreeMap<MultiIndex, RatFunQ> {
    buckets
        .into_iter()
        .filter_map(|(i, parts)| {
            let s = if parts.len() == 1 {
                parts.into_iter().next().expect("one part")
            } else {
                RatFunQ::sum(parts.iter())
            };
            (!s.is_zero()).then_some((i, s))
        })
        .collect()
}

/// Canonical text form: a header line with the variables and the order,
/// then one `monomial: coefficient` line per term in index order.
impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "series in (")?;
        for (i, n) in self.vars.names().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}")?;
        }
        writeln!(f, ") to order {}", self.order)?;
        for (i, c) in &self.terms {
            writeln!(f, "{}: {}", i.display(&self.vars), c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn xy() -> VarTable {
        VarTable::new(&["x", "y"]).unwrap()
    }

    fn idx(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    fn poly(vars: &VarTable, order: u32, terms: &[(&[u32], RatFunQ)]) -> MultiSeries {
        MultiSeries::polynomial(vars, order, terms.iter().map(|(e, c)| (idx(e), c.clone())))
            .unwrap()
    }

    fn geometric_x(vars: &VarTable, order: u32) -> MultiSeries {
        MultiSeries::from_terms(
            vars,
            order,
            (0..=order).map(|k| (idx(&[k, 0]), RatFunQ::one())),
        )
        .unwrap()
    }

    #[test]
    fn addition() {
        let v = xy();
        let one = RatFunQ::one();
        let f = poly(&v, 3, &[(&[0, 0], one.clone()), (&[1, 0], one.clone())]);
        let g = poly(&v, 3, &[(&[1, 0], -&one)]);
        assert_eq!(f.add(&g).unwrap(), MultiSeries::one(&v, 3));

        let x = MultiSeries::variable(&v, 3, "x").unwrap();
        let y = MultiSeries::variable(&v, 3, "y").unwrap();
        assert_eq!(
            x.add(&y).unwrap(),
            poly(&v, 3, &[(&[1, 0], one.clone()), (&[0, 1], one.clone())])
        );

        let r = RatFunQ::one()
            .checked_div(&RatFunQ::one_minus_q_pow(1))
            .unwrap();
        let s = -&RatFunQ::q_pow(1)
            .checked_div(&RatFunQ::one_minus_q_pow(1))
            .unwrap();
        let sum = poly(&v, 3, &[(&[1, 0], r)])
            .add(&poly(&v, 3, &[(&[1, 0], s)]))
            .unwrap();
        assert_eq!(sum, x);
    }

    #[test]
    fn mismatched_tables_rejected() {
        let f = MultiSeries::one(&xy(), 2);
        let g = MultiSeries::one(&VarTable::new(&["x", "z"]).unwrap(), 2);
        assert_eq!(f.add(&g), Err(Error::VarTableMismatch));
        assert_eq!(f.mul(&g), Err(Error::VarTableMismatch));
    }

    #[test]
    fn order_is_the_minimum() {
        let v = xy();
        let s = MultiSeries::one(&v, 2)
            .add(&MultiSeries::one(&v, 5))
            .unwrap();
        assert_eq!(s.order(), 2);
    }

    #[test]
    fn multiplication() {
        let v = xy();
        let one = RatFunQ::one();
        let f = poly(&v, 2, &[(&[0, 0], one.clone()), (&[1, 0], one.clone())]);
        let g = poly(&v, 2, &[(&[0, 0], one.clone()), (&[0, 1], one.clone())]);
        let expect = poly(
            &v,
            2,
            &[
                (&[0, 0], one.clone()),
                (&[1, 0], one.clone()),
                (&[0, 1], one.clone()),
                (&[1, 1], one.clone()),
            ],
        );
        assert_eq!(f.mul(&g).unwrap(), expect);

        let n = 4;
        let xn = poly(&v, n, &[(&[n, 0], one.clone())]);
        let x = MultiSeries::variable(&v, n, "x").unwrap();
        assert!(xn.mul(&x).unwrap().is_zero());

        let one_minus_x = poly(&v, n, &[(&[0, 0], one.clone()), (&[1, 0], -&one)]);
        assert_eq!(
            one_minus_x.mul(&geometric_x(&v, n)).unwrap(),
            MultiSeries::one(&v, n)
        );
    }

    #[test]
    fn inversion() {
        let v = xy();
        let one = RatFunQ::one();
        let n = 5;
        let one_minus_x = poly(&v, n, &[(&[0, 0], one.clone()), (&[1, 0], -&one)]);
        assert_eq!(one_minus_x.inverse().unwrap(), geometric_x(&v, n));
        assert_eq!(
            MultiSeries::one(&v, n).inverse().unwrap(),
            MultiSeries::one(&v, n)
        );

        let r = RatFunQ::from_poly(crate::qfield::PolyQ::from_ints(&[1, 1]));
        let f = poly(&v, 2, &[(&[0, 0], one.clone()), (&[1, 0], -&r)]);
        let expect = poly(
            &v,
            2,
            &[
                (&[0, 0], one.clone()),
                (&[1, 0], r.clone()),
                (&[2, 0], &r * &r),
            ],
        );
        assert_eq!(f.inverse().unwrap(), expect);

        let x = MultiSeries::variable(&v, 2, "x").unwrap();
        assert_eq!(x.inverse(), Err(Error::NonUnitSeries));
    }

    #[test]
    fn q_scaling() {
        let v = xy();
        let one = RatFunQ::one();
        let x2 = poly(&v, 3, &[(&[2, 0], one.clone())]);
        assert_eq!(
            x2.subst_qscale("x", 1).unwrap(),
            poly(&v, 3, &[(&[2, 0], RatFunQ::q_pow(2))])
        );

        let f = poly(
            &v,
            3,
            &[
                (&[0, 0], one.clone()),
                (&[1, 0], one.clone()),
                (&[0, 1], one.clone()),
            ],
        );
        let expect = poly(
            &v,
            3,
            &[
                (&[0, 0], one.clone()),
                (&[1, 0], RatFunQ::q_pow(2)),
                (&[0, 1], one.clone()),
            ],
        );
        assert_eq!(f.subst_qscale("x", 2).unwrap(), expect);

        let xy_ = poly(&v, 3, &[(&[1, 1], one.clone())]);
        let s = xy_.subst_qscale("x", -1).unwrap();
        let c = s.coeff(&idx(&[1, 1])).unwrap();
        assert_eq!(c, RatFunQ::one().checked_div(&RatFunQ::q_pow(1)).unwrap());
        assert!(matches!(
            f.subst_qscale("w", 1),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn coefficients() {
        let v = xy();
        let one = RatFunQ::one();
        let f = poly(&v, 3, &[(&[0, 0], one.clone()), (&[1, 0], one.clone())]);
        assert_eq!(f.pow(2).unwrap().coeff(&idx(&[2, 0])).unwrap(), one);
        assert_eq!(
            MultiSeries::one(&v, 3).coeff(&idx(&[1, 0])).unwrap(),
            RatFunQ::zero()
        );
        let g = poly(&v, 4, &[(&[0, 0], one.clone()), (&[1, 0], -&one)])
            .inverse()
            .unwrap();
        assert_eq!(g.coeff(&idx(&[3, 0])).unwrap(), one);
        assert_eq!(
            g.coeff(&idx(&[3, 2])),
            Err(Error::BeyondTruncation { total: 5, order: 4 })
        );
    }

    #[test]
    fn exactness_tracking() {
        let v = xy();
        let x = MultiSeries::variable(&v, 2, "x").unwrap();
        assert!(x.is_exact());
        assert!(x.mul(&x).unwrap().is_exact());
        assert!(!x.mul(&x).unwrap().mul(&x).unwrap().is_exact());
        assert!(!geometric_x(&v, 2).is_exact());
        assert_eq!(x.with_order(6).unwrap().order(), 6);
        assert!(geometric_x(&v, 2).with_order(6).is_err());
    }

    #[test]
    fn canonical_text() {
        let v = xy();
        let f = poly(
            &v,
            2,
            &[
                (&[0, 1], RatFunQ::from_int(3)),
                (&[1, 0], RatFunQ::q_pow(1)),
                (&[0, 0], RatFunQ::one()),
            ],
        );
        assert_eq!(
            f.to_string(),
            "series in (x, y) to order 2\n1: 1\nx: q\ny: 3\n"
        );
    }
}

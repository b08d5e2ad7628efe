use core::fmt;

use super::{MultiIndex, MultiSeries, VarTable};
use crate::qfield::RatFunQ;
use crate::{Error, Result};

/// `coeff * monomial`: a single analytic monomial with a rational-function
/// prefactor, e.g. `q^n * a * b`. This is the only argument shape accepted by
/// infinite q-Pochhammer symbols.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialArg {
    vars: VarTable,
    coeff: RatFunQ,
    index: MultiIndex,
}

impl MonomialArg {
    /// `coeff * prod(name^power)`.
    pub fn new(vars: &VarTable, coeff: RatFunQ, powers: &[(&str, u32)]) -> Result<Self> {
        let mut exps = alloc::vec![0u32; vars.len()];
        for &(name, p) in powers {
            exps[vars.index_of(name)?] += p;
        }
        Ok(Self {
            vars: vars.clone(),
            coeff,
            index: MultiIndex::new(exps),
        })
    }

    pub fn from_index(vars: &VarTable, coeff: RatFunQ, index: MultiIndex) -> Result<Self> {
        if index.arity() != vars.len() {
            return Err(Error::IndexArity {
                expected: vars.len(),
                got: index.arity(),
            });
        }
        Ok(Self {
            vars: vars.clone(),
            coeff,
            index,
        })
    }

    pub fn scalar(vars: &VarTable, coeff: RatFunQ) -> Self {
        Self {
            vars: vars.clone(),
            coeff,
            index: MultiIndex::zero(vars.len()),
        }
    }

    /// Product of the named variables with coefficient 1, e.g. `["a", "x"]`
    /// for `a*x`.
    pub fn vars_product(vars: &VarTable, names: &[&str]) -> Result<Self> {
        let mut exps = alloc::vec![0u32; vars.len()];
        for name in names {
            exps[vars.index_of(name)?] += 1;
        }
        Ok(Self {
            vars: vars.clone(),
            coeff: RatFunQ::one(),
            index: MultiIndex::new(exps),
        })
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn coeff(&self) -> &RatFunQ {
        &self.coeff
    }

    pub fn index(&self) -> &MultiIndex {
        &self.index
    }

    /// Analytic total degree.
    pub fn degree(&self) -> u32 {
        self.index.total()
    }

    pub fn is_scalar(&self) -> bool {
        self.index.total() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// Multiplies the prefactor by `q^j`.
    pub fn times_q_pow(&self, j: i64) -> Self {
        Self {
            vars: self.vars.clone(),
            coeff: self.coeff.mul_q_pow(j),
            index: self.index.clone(),
        }
    }

    pub fn scaled(&self, c: &RatFunQ) -> Self {
        Self {
            vars: self.vars.clone(),
            coeff: &self.coeff * c,
            index: self.index.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            coeff: -&self.coeff,
            index: self.index.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            vars: self.vars.clone(),
            coeff: self.coeff.pow(k as i64).expect("nonnegative power"),
            index: self.index.scaled(k),
        }
    }

    pub fn mul(&self, other: &MonomialArg) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        Ok(Self {
            vars: self.vars.clone(),
            coeff: &self.coeff * &other.coeff,
            index: self.index.add(&other.index),
        })
    }

    /// The monomial as a series; exact, of the given truncation order (empty
    /// if its degree exceeds the order).
    pub fn to_series(&self, order: u32) -> MultiSeries {
        MultiSeries::monomial(&self.vars, order, self.coeff.clone(), self.index.clone())
    }
}

impl fmt::Display for MonomialArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return write!(f, "{}", self.coeff);
        }
        if self.coeff.is_one() {
            write!(f, "{}", self.index.display(&self.vars))
        } else if (-&self.coeff).is_one() {
            write!(f, "-{}", self.index.display(&self.vars))
        } else {
            write!(f, "({})*{}", self.coeff, self.index.display(&self.vars))
        }
    }
}

impl fmt::Debug for MonomialArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialArg({self})")
    }
}

//! Truncated multivariate formal power series over [`RatFunQ`].
//!
//! Truncation is by total degree across all analytic variables. `q` is never
//! an analytic variable; it lives in the coefficients.

mod index;
mod monomial;
mod series;

pub use index::MultiIndex;
pub use monomial::MonomialArg;
pub use series::MultiSeries;

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Ordered list of distinct analytic variable names.
#[derive(Clone, Eq)]
pub struct VarTable {
    names: Arc<[String]>,
}

impl VarTable {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if n.is_empty() {
                return Err(Error::InvalidVarTable("empty variable name".into()));
            }
            if n == "q" {
                return Err(Error::InvalidVarTable(
                    "q is not an analytic variable".into(),
                ));
            }
            if out.iter().any(|m| m == n) {
                return Err(Error::InvalidVarTable(alloc::format!(
                    "duplicate variable `{n}`"
                )));
            }
            out.push(n.to_string());
        }
        Ok(Self { names: out.into() })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub(crate) fn check_same(&self, other: &VarTable) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::VarTableMismatch)
        }
    }
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

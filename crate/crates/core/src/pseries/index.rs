use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::VarTable;

/// Exponent vector aligned with a [`VarTable`].
///
/// Ordered by total degree first, then by exponents in descending
/// lexicographic order, so for `(x, y)` the degree-2 monomials come as
/// `x^2, x*y, y^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    total: u32,
    exponents: Vec<u32>,
}

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        let total = exponents.iter().sum();
        Self { total, exponents }
    }

    pub fn zero(arity: usize) -> Self {
        Self {
            total: 0,
            exponents: alloc::vec![0; arity],
        }
    }

    /// The monomial `vars[var]^power`.
    pub fn unit(arity: usize, var: usize, power: u32) -> Self {
        let mut exponents = alloc::vec![0; arity];
        exponents[var] = power;
        Self {
            total: power,
            exponents,
        }
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.arity(), other.arity());
        MultiIndex {
            total: self.total + other.total,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, k: u32) -> MultiIndex {
        MultiIndex {
            total: self.total * k,
            exponents: self.exponents.iter().map(|e| e * k).collect(),
        }
    }

    /// Lowers the exponent of `var` by one; `None` if it is zero.
    pub(crate) fn lowered(&self, var: usize) -> Option<MultiIndex> {
        if self.exponents[var] == 0 {
            return None;
        }
        let mut exponents = self.exponents.clone();
        exponents[var] -= 1;
        Some(MultiIndex {
            total: self.total - 1,
            exponents,
        })
    }

    /// Renders as `x^2*y`, or `1` for the empty monomial.
    pub fn display<'a>(&'a self, vars: &'a VarTable) -> impl fmt::Display + 'a {
        MonomialDisplay { idx: self, vars }
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total
            .cmp(&other.total)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}

struct MonomialDisplay<'a> {
    idx: &'a MultiIndex,
    vars: &'a VarTable,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &e) in self.vars.names().iter().zip(self.idx.exponents()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn graded_order() {
        let mut v = alloc::vec![
            MultiIndex::new(alloc::vec![0, 2]),
            MultiIndex::new(alloc::vec![1, 0]),
            MultiIndex::new(alloc::vec![1, 1]),
            MultiIndex::new(alloc::vec![2, 0]),
            MultiIndex::new(alloc::vec![0, 0]),
        ];
        v.sort();
        let exps: Vec<_> = v.iter().map(|i| i.exponents().to_vec()).collect();
        assert_eq!(exps, [[0, 0], [1, 0], [2, 0], [1, 1], [0, 2]]);
    }

    #[test]
    fn rendering() {
        let vars = VarTable::new(&["x", "y"]).unwrap();
        assert_eq!(
            MultiIndex::new(alloc::vec![2, 1])
                .display(&vars)
                .to_string(),
            "x^2*y"
        );
        assert_eq!(MultiIndex::zero(2).display(&vars).to_string(), "1");
    }
}

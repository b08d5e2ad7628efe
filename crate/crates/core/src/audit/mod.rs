//! The identity catalog and the exact verifier.
//!
//! Each entry pairs a direct computation (operator application or explicit
//! summation of Hahn polynomials) with a printed closed form. Both sides are
//! expanded as truncated series and compared coefficient by coefficient.

mod builders;
mod catalog;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::pseries::{MultiIndex, MultiSeries, VarTable};
use crate::qfield::{RatFunQ, Rational};
use crate::Error;

pub use builders::{leibniz_sides, LeibnizForm};
pub use catalog::catalog;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Confirmed,
    Refuted,
    Undefined,
    Skipped,
}

impl Status {
    pub const ALL: [Status; 4] = [
        Status::Confirmed,
        Status::Refuted,
        Status::Undefined,
        Status::Skipped,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Confirmed => "CONFIRMED",
            Status::Refuted => "REFUTED",
            Status::Undefined => "UNDEFINED",
            Status::Skipped => "SKIPPED",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        Status::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// First coefficient (in graded order) where the two sides differ.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub index: MultiIndex,
    pub monomial: String,
    pub lhs: RatFunQ,
    pub rhs: RatFunQ,
}

/// Outcome of evaluating every compared coefficient at a rational `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumericCheck {
    Agree,
    Disagree(String),
    Pole(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub note: String,
    pub numeric: Option<NumericCheck>,
}

impl Verdict {
    fn skipped(note: &str) -> Self {
        Self {
            status: Status::Skipped,
            witness: None,
            note: note.to_string(),
            numeric: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VariantVerdict {
    pub label: String,
    pub verdict: Verdict,
}

/// Concrete values of the integer parameters `n` and `k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Params {
    pub n: Option<u32>,
    pub k: Option<u32>,
}

impl Params {
    pub fn new(n: Option<u32>, k: Option<u32>) -> Self {
        Self { n, k }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.n, self.k) {
            (None, None) => f.write_str("-"),
            (Some(n), None) => write!(f, "n={n}"),
            (None, Some(k)) => write!(f, "k={k}"),
            (Some(n), Some(k)) => write!(f, "n={n},k={k}"),
        }
    }
}

/// Which integer parameters an entry depends on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamUse {
    None,
    N,
    K,
    NK,
}

impl ParamUse {
    pub fn uses_n(self) -> bool {
        matches!(self, ParamUse::N | ParamUse::NK)
    }

    pub fn uses_k(self) -> bool {
        matches!(self, ParamUse::K | ParamUse::NK)
    }
}

/// Failure to build one side of an identity.
#[derive(Clone, Debug, PartialEq)]
pub enum BuildError {
    /// A denominator vanishes; the printed expression has no value.
    Undefined(String),
    Kernel(Error),
}

impl From<Error> for BuildError {
    fn from(e: Error) -> Self {
        match e {
            Error::UndefinedSeries { k, detail } => {
                BuildError::Undefined(format!("zero denominator at k={k}: {detail}"))
            }
            other => BuildError::Kernel(other),
        }
    }
}

/// Inputs to a side builder.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub vars: VarTable,
    pub n: u32,
    pub k: u32,
    pub order: u32,
}

pub type Builder = fn(&Ctx) -> Result<MultiSeries, BuildError>;

/// An alternative closed form checked alongside the printed one.
#[derive(Clone, Copy, Debug)]
pub struct Variant {
    pub label: &'static str,
    pub build: Builder,
}

#[derive(Clone, Debug)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    pub location: &'static str,
    pub anchor: &'static str,
    pub vars: &'static [&'static str],
    pub params: ParamUse,
    /// `None` for entries that are skipped by policy.
    pub sides: Option<(Builder, Builder)>,
    pub variants: Vec<Variant>,
    /// Always attached to the verdict of the printed form.
    pub note: &'static str,
    pub admits: fn(Params) -> bool,
}

impl IdentitySpec {
    pub fn is_skipped(&self) -> bool {
        self.sides.is_none()
    }

    pub fn var_table(&self) -> VarTable {
        VarTable::new(self.vars).expect("catalog variable names are valid")
    }

    /// The grid used when none is given: every admissible combination of
    /// `n, k` from `{1, 2, 3}`.
    pub fn default_grid(&self) -> Vec<Params> {
        self.grid(&[1, 2, 3], &[1, 2, 3])
    }

    /// Admissible parameter assignments from the given value lists; values
    /// the entry does not use are dropped.
    pub fn grid(&self, ns: &[u32], ks: &[u32]) -> Vec<Params> {
        let ns: Vec<Option<u32>> = if self.params.uses_n() {
            ns.iter().copied().map(Some).collect()
        } else {
            alloc::vec![None]
        };
        let ks: Vec<Option<u32>> = if self.params.uses_k() {
            ks.iter().copied().map(Some).collect()
        } else {
            alloc::vec![None]
        };
        let mut out: Vec<Params> = ns
            .iter()
            .flat_map(|&n| ks.iter().map(move |&k| Params::new(n, k)))
            .filter(|p| (self.admits)(*p))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn ctx(&self, params: Params, order: u32) -> Ctx {
        Ctx {
            vars: self.var_table(),
            n: params.n.unwrap_or(0),
            k: params.k.unwrap_or(0),
            order,
        }
    }

    /// Direct computation (the oracle side).
    pub fn build_lhs(&self, params: Params, order: u32) -> Option<Result<MultiSeries, BuildError>> {
        self.sides.map(|(lhs, _)| lhs(&self.ctx(params, order)))
    }

    /// The printed closed form.
    pub fn build_rhs(&self, params: Params, order: u32) -> Option<Result<MultiSeries, BuildError>> {
        self.sides.map(|(_, rhs)| rhs(&self.ctx(params, order)))
    }

    pub fn build_variant(
        &self,
        i: usize,
        params: Params,
        order: u32,
    ) -> Option<Result<MultiSeries, BuildError>> {
        self.variants
            .get(i)
            .map(|v| (v.build)(&self.ctx(params, order)))
    }
}

/// Result of checking one entry at one parameter assignment.
#[derive(Clone, Debug, PartialEq)]
pub struct Verification {
    pub id: String,
    pub params: Params,
    pub order: u32,
    pub verdict: Verdict,
    pub variants: Vec<VariantVerdict>,
}

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum AuditError {
    #[error("unknown identity id {0:?}")]
    UnknownId(String),
    #[error("order {0} is too small to be informative (need at least 2)")]
    OrderTooSmall(u32),
    #[error("identity {id} needs parameter {name}")]
    MissingParam { id: String, name: char },
    #[error("parameters {params} are not admissible for identity {id}")]
    InvalidParams { id: String, params: Params },
    #[error("kernel error while building {id}: {source}")]
    Kernel { id: String, source: Error },
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Evaluate every compared coefficient at this `q` for confirmed forms.
    pub q_check: Option<Rational>,
}

pub fn find(id: &str) -> Option<IdentitySpec> {
    catalog()
        .into_iter()
        .find(|e| e.id.eq_ignore_ascii_case(id))
}

/// Checks one entry at one parameter assignment and truncation order.
pub fn verify(
    id: &str,
    params: Params,
    order: u32,
    opts: &VerifyOptions,
) -> Result<Verification, AuditError> {
    let entry = find(id).ok_or_else(|| AuditError::UnknownId(id.to_string()))?;
    verify_entry(&entry, params, order, opts)
}

pub fn verify_entry(
    entry: &IdentitySpec,
    params: Params,
    order: u32,
    opts: &VerifyOptions,
) -> Result<Verification, AuditError> {
    if order < 2 {
        return Err(AuditError::OrderTooSmall(order));
    }
    let id = entry.id.to_string();
    let params = Params::new(
        params.n.filter(|_| entry.params.uses_n()),
        params.k.filter(|_| entry.params.uses_k()),
    );
    for (uses, value, name) in [
        (entry.params.uses_n(), params.n, 'n'),
        (entry.params.uses_k(), params.k, 'k'),
    ] {
        if uses && value.is_none() {
            return Err(AuditError::MissingParam { id, name });
        }
    }
    if !(entry.admits)(params) {
        return Err(AuditError::InvalidParams { id, params });
    }
    let kernel = |source: Error| AuditError::Kernel {
        id: entry.id.to_string(),
        source,
    };

    let Some((lhs_build, rhs_build)) = entry.sides else {
        return Ok(Verification {
            id,
            params,
            order,
            verdict: Verdict::skipped(entry.note),
            variants: Vec::new(),
        });
    };
    let ctx = entry.ctx(params, order);
    let lhs = match lhs_build(&ctx) {
        Ok(s) => s.truncate(order),
        Err(BuildError::Kernel(e)) => return Err(kernel(e)),
        Err(BuildError::Undefined(detail)) => {
            return Err(kernel(Error::UndefinedSeries { k: 0, detail }))
        }
    };
    let judge =
        |built: Result<MultiSeries, BuildError>, note: &str| -> Result<Verdict, AuditError> {
            match built {
                Ok(rhs) => compare(&lhs, &rhs.truncate(order), note, opts).map_err(kernel),
                Err(BuildError::Undefined(detail)) => Ok(Verdict {
                    status: Status::Undefined,
                    witness: None,
                    note: join_notes(note, &detail),
                    numeric: None,
                }),
                Err(BuildError::Kernel(e)) => Err(kernel(e)),
            }
        };
    let verdict = judge(rhs_build(&ctx), entry.note)?;
    let mut variants = Vec::with_capacity(entry.variants.len());
    for v in &entry.variants {
        variants.push(VariantVerdict {
            label: v.label.to_string(),
            verdict: judge((v.build)(&ctx), "")?,
        });
    }
    Ok(Verification {
        id,
        params,
        order,
        verdict,
        variants,
    })
}

fn join_notes(a: &str, b: &str) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b.to_string(),
        (_, true) => a.to_string(),
        _ => format!("{a}; {b}"),
    }
}

/// Compares two series of the same order; the witness is the first
/// differing coefficient in graded order.
pub fn compare(
    lhs: &MultiSeries,
    rhs: &MultiSeries,
    note: &str,
    opts: &VerifyOptions,
) -> Result<Verdict, Error> {
    lhs.vars().check_same(rhs.vars())?;
    let order = lhs.order().min(rhs.order());
    let (lhs, rhs) = (lhs.truncate(order), rhs.truncate(order));
    let mut indices: Vec<&MultiIndex> = lhs
        .terms()
        .map(|(i, _)| i)
        .chain(rhs.terms().map(|(i, _)| i))
        .collect();
    indices.sort();
    indices.dedup();
    for idx in indices {
        let (a, b) = (lhs.coeff(idx)?, rhs.coeff(idx)?);
        if a != b {
            let monomial = idx.display(lhs.vars()).to_string();
            let mismatch = format!("first mismatch at {monomial}");
            return Ok(Verdict {
                status: Status::Refuted,
                witness: Some(Witness {
                    index: idx.clone(),
                    monomial,
                    lhs: a,
                    rhs: b,
                }),
                note: join_notes(note, &mismatch),
                numeric: None,
            });
        }
    }
    let numeric = opts
        .q_check
        .as_ref()
        .map(|q0| numeric_check(&lhs, &rhs, q0));
    Ok(Verdict {
        status: Status::Confirmed,
        witness: None,
        note: note.to_string(),
        numeric,
    })
}

/// Evaluates both sides coefficient-wise at `q0` and compares the rationals.
pub fn numeric_check(lhs: &MultiSeries, rhs: &MultiSeries, q0: &Rational) -> NumericCheck {
    let eval = |s: &MultiSeries| s.eval_coeffs_at(q0);
    match (eval(lhs), eval(rhs)) {
        (Ok(a), Ok(b)) => {
            let mut keys: Vec<&MultiIndex> = a.keys().chain(b.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                if a.get(k) != b.get(k) {
                    return NumericCheck::Disagree(k.display(lhs.vars()).to_string());
                }
            }
            NumericCheck::Agree
        }
        (Err(e), _) | (_, Err(e)) => NumericCheck::Pole(e.to_string()),
    }
}

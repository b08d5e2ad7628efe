//! Runs catalog entries over a parameter grid in parallel.

use std::time::{Instant, SystemTime, UNIX_EPOCH};

use qseries_core::audit::{catalog, verify_entry, AuditError, IdentitySpec, Params, VerifyOptions};
use qseries_core::Rational;
use rayon::prelude::*;

use crate::report::{Entry, GridSpec, Report, Summary};

pub const DEFAULT_ORDER: u32 = 8;
pub const DEFAULT_GRID: [u32; 3] = [1, 2, 3];

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub order: u32,
    /// Restrict to these ids; `None` runs the whole catalog.
    pub ids: Option<Vec<String>>,
    pub n_values: Vec<u32>,
    pub k_values: Vec<u32>,
    pub q_check: Option<Rational>,
    pub timings: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            order: DEFAULT_ORDER,
            ids: None,
            n_values: DEFAULT_GRID.to_vec(),
            k_values: DEFAULT_GRID.to_vec(),
            q_check: None,
            timings: true,
        }
    }
}

/// The catalog entries selected by `ids`, in catalog order.
pub fn select(ids: Option<&[String]>) -> Result<Vec<IdentitySpec>, AuditError> {
    let all = catalog();
    let Some(ids) = ids else {
        return Ok(all);
    };
    for id in ids {
        if !all.iter().any(|e| e.id.eq_ignore_ascii_case(id)) {
            return Err(AuditError::UnknownId(id.clone()));
        }
    }
    Ok(all
        .into_iter()
        .filter(|e| ids.iter().any(|id| e.id.eq_ignore_ascii_case(id)))
        .collect())
}

/// Verifies every selected entry at every admissible grid point. Entries
/// appear in catalog order, then by parameters, whatever the scheduling.
pub fn verify_all(cfg: &RunConfig) -> Result<Report, AuditError> {
    if cfg.order < 2 {
        return Err(AuditError::OrderTooSmall(cfg.order));
    }
    let entries = select(cfg.ids.as_deref())?;
    let jobs: Vec<(usize, &IdentitySpec, Params)> = entries
        .iter()
        .enumerate()
        .flat_map(|(i, e)| {
            e.grid(&cfg.n_values, &cfg.k_values)
                .into_iter()
                .map(move |p| (i, e, p))
        })
        .collect();
    let opts = VerifyOptions {
        q_check: cfg.q_check.clone(),
    };
    let mut results = jobs
        .par_iter()
        .map(|&(i, e, p)| {
            let start = Instant::now();
            let v = verify_entry(e, p, cfg.order, &opts)?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            Ok((
                i,
                p,
                Entry::from_verification(&v, cfg.timings.then_some(ms)),
            ))
        })
        .collect::<Result<Vec<_>, AuditError>>()?;
    results.sort_by_key(|(i, p, _)| (*i, *p));
    let entries: Vec<Entry> = results.into_iter().map(|(_, _, e)| e).collect();
    let generated_unix = cfg.timings.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    Ok(Report {
        order: cfg.order,
        grid: GridSpec {
            n: cfg.n_values.clone(),
            k: cfg.k_values.clone(),
        },
        ids: cfg.ids.clone(),
        q_check: cfg.q_check.as_ref().map(|q| q.to_string()),
        generated_unix,
        summary: Summary::of(&entries),
        entries,
    })
}

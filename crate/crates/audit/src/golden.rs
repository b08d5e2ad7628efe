//! Committed verdict expectations and comparison of a run against them.

use std::fmt;

use crate::report::{Entry, ParamsOut, Report, WitnessOut};

/// Verdicts computed once at order 8 on the default grid.
pub const EMBEDDED: &str = include_str!("../golden/verdicts.json");

pub fn embedded() -> Report {
    Report::from_json(EMBEDDED).expect("embedded golden file parses")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Deviation {
    pub id: String,
    pub params: ParamsOut,
    pub form: String,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for Deviation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]: expected {}, found {}",
            self.id, self.params, self.form, self.expected, self.found
        )
    }
}

/// Status (and witness monomial, if any) a golden form predicts at `order`.
///
/// A refutation whose witness lies above the truncation cannot be seen there,
/// so it predicts CONFIRMED.
fn expectation(status: &str, witness: Option<&WitnessOut>, order: u32) -> (String, Option<String>) {
    match (status, witness) {
        ("REFUTED", Some(w)) if w.total_degree() > order => ("CONFIRMED".into(), None),
        ("REFUTED", Some(w)) => ("REFUTED".into(), Some(w.monomial.clone())),
        (s, _) => (s.to_string(), None),
    }
}

fn describe(status: &str, monomial: Option<&str>) -> String {
    match monomial {
        Some(m) => format!("{status} at {m}"),
        None => status.to_string(),
    }
}

fn check_entry(golden: &Entry, run: &Entry, order: u32, out: &mut Vec<Deviation>) {
    let golden_forms: Vec<_> = golden.forms().collect();
    for (label, status, witness, _, _) in run.forms() {
        let Some(&(_, g_status, g_witness, _, _)) = golden_forms.iter().find(|f| f.0 == label)
        else {
            out.push(Deviation {
                id: run.id.clone(),
                params: run.params.clone(),
                form: label.to_string(),
                expected: "no such form".into(),
                found: status.to_string(),
            });
            continue;
        };
        let (want, want_mono) = expectation(g_status, g_witness, order);
        let found_mono = witness.map(|w| w.monomial.as_str());
        let same = want == status && (want_mono.is_none() || want_mono.as_deref() == found_mono);
        if !same {
            out.push(Deviation {
                id: run.id.clone(),
                params: run.params.clone(),
                form: label.to_string(),
                expected: describe(&want, want_mono.as_deref()),
                found: describe(
                    status,
                    if status == "REFUTED" {
                        found_mono
                    } else {
                        None
                    },
                ),
            });
        }
    }
}

/// Forms of `run` whose verdict differs from `golden`, plus any numeric
/// disagreement. Entries with parameters absent from `golden` carry no
/// expectation.
pub fn compare(golden: &Report, run: &Report) -> Vec<Deviation> {
    let mut out = Vec::new();
    for e in &run.entries {
        if let Some(g) = golden
            .entries
            .iter()
            .find(|g| g.id == e.id && g.params == e.params)
        {
            check_entry(g, e, run.order, &mut out);
        }
        for (label, _, _, _, numeric) in e.forms() {
            if let Some(n) = numeric.filter(|n| n.starts_with("disagree")) {
                out.push(Deviation {
                    id: e.id.clone(),
                    params: e.params.clone(),
                    form: label.to_string(),
                    expected: "numeric agreement".into(),
                    found: n.to_string(),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_file_is_stripped() {
        let g = embedded();
        assert_eq!(g.order, 8);
        assert!(g.generated_unix.is_none());
        assert!(g.entries.iter().all(|e| e.elapsed_ms.is_none()));
        assert!(compare(&g, &g).is_empty());
    }

    #[test]
    fn low_order_hides_high_witnesses() {
        let g = embedded();
        let t3 = g.entries.iter().find(|e| e.id == "T3").unwrap();
        let w = t3.witness.as_ref().unwrap();
        assert_eq!(expectation("REFUTED", Some(w), 1).0, "CONFIRMED");
        assert_eq!(
            expectation("REFUTED", Some(w), w.total_degree()).0,
            "REFUTED"
        );
    }

    #[test]
    fn flipped_status_is_reported() {
        let g = embedded();
        let mut run = g.clone();
        let e = run.entries.iter_mut().find(|e| e.id == "T1").unwrap();
        e.status = "REFUTED".into();
        let d = compare(&g, &run);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].id, "T1");
        assert_eq!(d[0].form, "printed");
    }

    #[test]
    fn numeric_disagreement_is_reported() {
        let g = embedded();
        let mut run = g.clone();
        run.entries[0].numeric = Some("disagree at q = 1/3".into());
        assert_eq!(compare(&g, &run).len(), 1);
    }
}

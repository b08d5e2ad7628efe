//! Verification reports and their JSON, CSV and text renderings.

use std::fmt::Write as _;

use qseries_core::audit::{NumericCheck, Status, Verdict, Verification, Witness};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSpec {
    pub n: Vec<u32>,
    pub k: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ParamsOut {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
}

impl std::fmt::Display for ParamsOut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        qseries_core::audit::Params::new(self.n, self.k).fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessOut {
    pub monomial: String,
    pub exponents: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
}

impl WitnessOut {
    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantOut {
    pub label: String,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub id: String,
    pub params: ParamsOut,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    #[serde(default)]
    pub note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<VariantOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    #[serde(rename = "CONFIRMED")]
    pub confirmed: usize,
    #[serde(rename = "REFUTED")]
    pub refuted: usize,
    #[serde(rename = "UNDEFINED")]
    pub undefined: usize,
    #[serde(rename = "SKIPPED")]
    pub skipped: usize,
}

impl Summary {
    pub fn of(entries: &[Entry]) -> Self {
        let mut s = Summary {
            total: entries.len(),
            ..Summary::default()
        };
        for e in entries {
            match Status::parse(&e.status) {
                Some(Status::Confirmed) => s.confirmed += 1,
                Some(Status::Refuted) => s.refuted += 1,
                Some(Status::Undefined) => s.undefined += 1,
                Some(Status::Skipped) => s.skipped += 1,
                None => {}
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub order: u32,
    pub grid: GridSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ids: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_check: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_unix: Option<u64>,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

fn witness_out(w: &Witness) -> WitnessOut {
    WitnessOut {
        monomial: w.monomial.clone(),
        exponents: w.index.exponents().to_vec(),
        lhs: w.lhs.to_string(),
        rhs: w.rhs.to_string(),
    }
}

fn numeric_out(n: &NumericCheck) -> String {
    match n {
        NumericCheck::Agree => "agree".to_string(),
        NumericCheck::Disagree(at) => format!("disagree at {at}"),
        NumericCheck::Pole(e) => format!("pole: {e}"),
    }
}

fn verdict_parts(v: &Verdict) -> (String, Option<WitnessOut>, Option<String>) {
    (
        v.status.as_str().to_string(),
        v.witness.as_ref().map(witness_out),
        v.numeric.as_ref().map(numeric_out),
    )
}

impl Entry {
    pub fn from_verification(v: &Verification, elapsed_ms: Option<f64>) -> Self {
        let (status, witness, numeric) = verdict_parts(&v.verdict);
        let variants = v
            .variants
            .iter()
            .map(|vv| {
                let (status, witness, numeric) = verdict_parts(&vv.verdict);
                VariantOut {
                    label: vv.label.clone(),
                    status,
                    witness,
                    note: vv.verdict.note.clone(),
                    numeric,
                }
            })
            .collect();
        Entry {
            id: v.id.clone(),
            params: ParamsOut {
                n: v.params.n,
                k: v.params.k,
            },
            status,
            witness,
            note: v.verdict.note.clone(),
            numeric,
            variants,
            elapsed_ms,
        }
    }

    pub fn forms(
        &self,
    ) -> impl Iterator<Item = (&str, &str, Option<&WitnessOut>, &str, Option<&str>)> {
        std::iter::once((
            "printed",
            self.status.as_str(),
            self.witness.as_ref(),
            self.note.as_str(),
            self.numeric.as_deref(),
        ))
        .chain(self.variants.iter().map(|v| {
            (
                v.label.as_str(),
                v.status.as_str(),
                v.witness.as_ref(),
                v.note.as_str(),
                v.numeric.as_deref(),
            )
        }))
    }
}

impl Report {
    /// Drops wall-clock data so that reports of identical runs are identical.
    pub fn strip_timings(&mut self) {
        self.generated_unix = None;
        for e in &mut self.entries {
            e.elapsed_ms = None;
        }
    }

    pub fn stripped(&self) -> Self {
        let mut r = self.clone();
        r.strip_timings();
        r
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// One row per checked form: the printed statement and each variant.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "n",
            "k",
            "order",
            "form",
            "status",
            "witness",
            "witness_lhs",
            "witness_rhs",
            "numeric",
            "note",
            "elapsed_ms",
        ])
        .expect("in-memory csv");
        let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        for e in &self.entries {
            for (i, (form, status, wit, note, numeric)) in e.forms().enumerate() {
                let elapsed = match (i, e.elapsed_ms) {
                    (0, Some(ms)) => format!("{ms:.3}"),
                    _ => String::new(),
                };
                w.write_record([
                    e.id.as_str(),
                    &opt(e.params.n),
                    &opt(e.params.k),
                    &self.order.to_string(),
                    form,
                    status,
                    wit.map(|w| w.monomial.as_str()).unwrap_or(""),
                    wit.map(|w| w.lhs.as_str()).unwrap_or(""),
                    wit.map(|w| w.rhs.as_str()).unwrap_or(""),
                    numeric.unwrap_or(""),
                    note,
                    &elapsed,
                ])
                .expect("in-memory csv");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let list = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(
            s,
            "identity audit at order {} (n in {{{}}}, k in {{{}}})",
            self.order,
            list(&self.grid.n),
            list(&self.grid.k)
        );
        if let Some(q) = &self.q_check {
            let _ = writeln!(s, "numeric check at q = {q}");
        }
        if let Some(t) = self.generated_unix {
            let _ = writeln!(s, "generated at unix time {t}");
        }
        for e in &self.entries {
            let _ = write!(s, "{:<4} {:<9} {}", e.id, e.params.to_string(), e.status);
            if let Some(ms) = e.elapsed_ms {
                let _ = write!(s, "  ({ms:.3} ms)");
            }
            s.push('\n');
            for (i, (form, status, wit, note, numeric)) in e.forms().enumerate() {
                if i > 0 {
                    let _ = writeln!(s, "     variant {form}: {status}");
                }
                if let Some(w) = wit {
                    let _ = writeln!(
                        s,
                        "       at {}: lhs = {}, rhs = {}",
                        w.monomial, w.lhs, w.rhs
                    );
                }
                if let Some(n) = numeric {
                    let _ = writeln!(s, "       numeric: {n}");
                }
                if !note.is_empty() {
                    let _ = writeln!(s, "       note: {note}");
                }
            }
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "summary: {} total, {} CONFIRMED, {} REFUTED, {} UNDEFINED, {} SKIPPED",
            m.total, m.confirmed, m.refuted, m.undefined, m.skipped
        );
        s
    }
}

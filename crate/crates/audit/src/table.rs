//! Coefficient tables of Hahn and Rogers-Szegő polynomials.

use std::fmt::Write as _;

use qseries_core::qops::{hahn, rogers_szego};
use qseries_core::{MultiIndex, MultiSeries, RatFunQ, VarTable};
use serde::Serialize;

use crate::report::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    /// Phi_m^(q^n)(b, x|q)
    Hahn,
    /// r_m(b, x|q)
    RogersSzego,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub monomial: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub m: u32,
    pub terms: Vec<Cell>,
}

/// Rows `m = 0..=m_max`; each lists the coefficients of `b^k x^(m-k)` for
/// increasing `k`, skipping zeros.
pub fn table(kind: TableKind, m_max: u32, n: u32) -> Vec<Row> {
    let vars = VarTable::new(&["b", "x"]).expect("valid names");
    let order = m_max;
    let b = MultiSeries::variable(&vars, order, "b").expect("known variable");
    let x = MultiSeries::variable(&vars, order, "x").expect("known variable");
    let alpha = MultiSeries::constant(&vars, order, RatFunQ::q_pow(n as i64));
    (0..=m_max)
        .map(|m| {
            let p = match kind {
                TableKind::Hahn => hahn(m, &alpha, &b, &x),
                TableKind::RogersSzego => rogers_szego(m, &b, &x),
            }
            .expect("shared variable table");
            let terms = (0..=m)
                .filter_map(|k| {
                    let idx = MultiIndex::new(vec![k, m - k]);
                    let c = p.coeff(&idx).expect("within order");
                    (!c.is_zero()).then(|| Cell {
                        monomial: idx.display(&vars).to_string(),
                        coeff: c.to_string(),
                    })
                })
                .collect();
            Row { m, terms }
        })
        .collect()
}

pub fn render(rows: &[Row], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["m", "monomial", "coeff"])
                .expect("in-memory csv");
            for r in rows {
                for c in &r.terms {
                    w.write_record([r.m.to_string().as_str(), &c.monomial, &c.coeff])
                        .expect("in-memory csv");
                }
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
        }
        Format::Text => {
            let mut s = String::new();
            for r in rows {
                let cells: Vec<String> = r
                    .terms
                    .iter()
                    .map(|c| format!("{}: {}", c.monomial, c.coeff))
                    .collect();
                let _ = writeln!(s, "m={}  {}", r.m, cells.join(", "));
            }
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(row: &Row) -> Vec<(&str, &str)> {
        row.terms
            .iter()
            .map(|c| (c.monomial.as_str(), c.coeff.as_str()))
            .collect()
    }

    #[test]
    fn hahn_rows() {
        let rows = table(TableKind::Hahn, 1, 1);
        assert_eq!(cells(&rows[0]), vec![("1", "1")]);
        assert_eq!(cells(&rows[1]), vec![("x", "1"), ("b", "1 - q")]);
        assert_eq!(table(TableKind::Hahn, 0, 1).len(), 1);
    }

    #[test]
    fn rogers_szego_rows() {
        let rows = table(TableKind::RogersSzego, 2, 0);
        assert_eq!(
            cells(&rows[2]),
            vec![("x^2", "1"), ("b*x", "1 + q"), ("b^2", "1")]
        );
    }
}

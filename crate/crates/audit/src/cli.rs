//! `qaudit` command line: `list`, `verify` and `table`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use qseries_core::audit::{catalog, ParamUse};
use qseries_core::qfield::parse_rational;
use qseries_core::Rational;

use crate::golden;
use crate::report::{Format, Report};
use crate::runner::{verify_all, RunConfig, DEFAULT_GRID};
use crate::table::{self, TableKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DEVIATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qaudit",
    version,
    about = "Exact audit of q-series operator identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List catalog entries with their anchors and default grids.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify catalog entries and write a report.
    Verify(VerifyArgs),
    /// Print coefficient tables of Hahn or Rogers-Szegő polynomials.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        /// Exponent n in the Hahn parameter q^n.
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, clap::Args)]
pub struct VerifyArgs {
    /// Catalog ids to verify (repeatable or comma separated); all by default.
    #[arg(long = "id", value_delimiter = ',')]
    pub ids: Vec<String>,
    /// Truncation order (total degree).
    #[arg(long, env = "QAUDIT_DEGREE", default_value_t = crate::runner::DEFAULT_ORDER)]
    pub degree: u32,
    /// Values of n, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_GRID)]
    pub n: Vec<u32>,
    /// Values of k, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_GRID)]
    pub k: Vec<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also evaluate confirmed identities at this rational q, e.g. 1/3.
    #[arg(long, value_parser = parse_q)]
    pub q_check: Option<Rational>,
    /// Leave timestamps and per-entry timings out of the report.
    #[arg(long)]
    pub no_timings: bool,
    /// Compare verdicts against this file instead of the built-in expectations.
    #[arg(long, conflicts_with = "no_golden")]
    pub golden: Option<PathBuf>,
    /// Do not compare verdicts against any expectations.
    #[arg(long)]
    pub no_golden: bool,
}

fn parse_q(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("expected NUM or NUM/DEN, got {s:?}"))
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run_from<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    match cli.command {
        Command::List { format } => {
            let _ = stdout.write_all(list(format).as_bytes());
            EXIT_OK
        }
        Command::Table {
            kind,
            m_max,
            n,
            format,
        } => {
            let rows = table::table(kind, m_max, n);
            let _ = stdout.write_all(table::render(&rows, format).as_bytes());
            EXIT_OK
        }
        Command::Verify(args) => verify(args, stdout, stderr),
    }
}

fn verify(args: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cfg = RunConfig {
        order: args.degree,
        ids: (!args.ids.is_empty()).then(|| args.ids.clone()),
        n_values: args.n.clone(),
        k_values: args.k.clone(),
        q_check: args.q_check.clone(),
        timings: !args.no_timings,
    };
    let report = match verify_all(&cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let text = report.render(args.format);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    if args.no_golden {
        return EXIT_OK;
    }
    let golden = match &args.golden {
        None => golden::embedded(),
        Some(path) => match std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|s| Report::from_json(&s).map_err(|e| e.to_string()))
        {
            Ok(g) => g,
            Err(e) => {
                let _ = writeln!(
                    stderr,
                    "error: cannot read golden file {}: {e}",
                    path.display()
                );
                return EXIT_USAGE;
            }
        },
    };
    let deviations = golden::compare(&golden, &report);
    if deviations.is_empty() {
        return EXIT_OK;
    }
    for d in &deviations {
        let _ = writeln!(stderr, "deviation: {d}");
    }
    EXIT_DEVIATION
}

fn grid_text(p: ParamUse) -> String {
    let set = DEFAULT_GRID.map(|v| v.to_string()).join(",");
    match p {
        ParamUse::None => "-".to_string(),
        ParamUse::N => format!("n in {{{set}}}"),
        ParamUse::K => format!("k in {{{set}}}"),
        ParamUse::NK => format!("n,k in {{{set}}}"),
    }
}

#[derive(serde::Serialize)]
struct ListRow {
    id: &'static str,
    policy: &'static str,
    grid: String,
    location: &'static str,
    description: &'static str,
    anchor: &'static str,
    variants: Vec<&'static str>,
}

fn list(format: Format) -> String {
    let rows: Vec<ListRow> = catalog()
        .into_iter()
        .map(|e| ListRow {
            id: e.id,
            policy: if e.is_skipped() { "SKIPPED" } else { "VERIFY" },
            grid: grid_text(e.params),
            location: e.location,
            description: e.description,
            anchor: e.anchor,
            variants: e.variants.iter().map(|v| v.label).collect(),
        })
        .collect();
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "id",
                "policy",
                "grid",
                "location",
                "description",
                "anchor",
                "variants",
            ])
            .expect("in-memory csv");
            for r in &rows {
                w.write_record([
                    r.id,
                    r.policy,
                    &r.grid,
                    r.location,
                    r.description,
                    r.anchor,
                    &r.variants.join("; "),
                ])
                .expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
        }
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                s.push_str(&format!(
                    "{:<4} {:<8} {:<16} {}\n     {}: {}\n",
                    r.id, r.policy, r.grid, r.anchor, r.location, r.description
                ));
            }
            s
        }
    }
}

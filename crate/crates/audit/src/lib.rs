//! Parallel driver, report formats and command line front end for the
//! identity auditor in `qseries-core`.

pub mod cli;
pub mod golden;
pub mod report;
pub mod runner;
pub mod table;

pub use report::{Format, Report};
pub use runner::{verify_all, RunConfig};

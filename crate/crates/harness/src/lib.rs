//! Verification suites, counterexample search and file I/O for the
//! `locdirac` command line.

pub mod canon;
pub mod catalog;
pub mod error;
pub mod io;
pub mod report;
pub mod search;
pub mod suite;
pub mod theorems;

pub use catalog::{default_catalog, Instance};
pub use error::HarnessError;
pub use report::{exit_code, write_report, CheckReport, Format, Status};
pub use search::{exhaustive_search, random_search, Filter, Property, SearchConfig, SearchOutcome};
pub use suite::{run_suite, SuiteConfig, SuiteKind};
pub use theorems::{verify_theorem, CheckOptions, HypothesisMode, TheoremId, Verdict};

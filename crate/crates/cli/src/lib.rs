//! Command-line front end: polynomial computation, rendering, verification
//! sweeps and exploratory searches over the `schubkit` library.

pub mod app;
pub mod cache;
pub mod compute;
pub mod config;
pub mod error;
pub mod input;
pub mod oracles;
pub mod report;
pub mod search;
pub mod suites;

pub use config::{Config, OutputFormat};
pub use error::{CliError, CliResult};
pub use report::{exit_code, VerificationReport, EXIT_CLAIM_FAILURE, EXIT_OPERATIONAL, EXIT_PASS};
pub use suites::{run_suite, Suite, SuiteParams};

//! Library surface of the `qcohom` command-line verifier: configuration
//! parsing, claim evaluation, report rendering, and ideal-file I/O.

pub mod claims;
pub mod config;
pub mod ideal_io;
pub mod report;

use std::time::Instant;

use config::VerifyConfig;
use report::Report;

/// Runs the configured claims and assembles the timed report.
pub fn verify(cfg: &VerifyConfig) -> Report {
    let start = Instant::now();
    let records = claims::evaluate_claims(cfg);
    Report::new(cfg, records, start.elapsed().as_millis() as u64)
}

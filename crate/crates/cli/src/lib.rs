//! Batch verification harness behind the `hgf` binary.
//!
//! The sample stream is fully determined by [`SuiteConfig`], so two runs
//! with the same configuration produce byte-identical JSON reports
//! regardless of thread count.

pub mod rng;
pub mod suite;
pub mod views;

pub use rng::Lcg;
pub use suite::{
    run_suite, sample_params, Counterexample, IdentityCounts, Sample, SuiteConfig, SuiteError, SuiteReport, Totals,
    RETRY_CAP, SCHEMA,
};

use hgf_core::catalog::{catalog, lookup};

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
}

/// Expands an id selection: `all`, or a comma list whose items are ids or
/// inclusive ranges `A..B` in catalog order.
pub fn parse_ids(spec: &str) -> Result<Vec<String>, SuiteError> {
    let spec = spec.trim();
    if spec.eq_ignore_ascii_case("all") {
        return Ok(catalog().iter().map(|e| e.id().to_string()).collect());
    }
    let position = |id: &str| -> Result<usize, SuiteError> {
        lookup(id)?;
        Ok(catalog().iter().position(|e| e.id() == id).expect("looked up"))
    };
    let mut ids = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match item.split_once("..") {
            Some((from, to)) => {
                let (i, j) = (position(from.trim())?, position(to.trim())?);
                if i > j {
                    return Err(SuiteError::Config(format!("range `{item}` runs backwards")));
                }
                ids.extend(catalog()[i..=j].iter().map(|e| e.id().to_string()));
            }
            None => ids.push(lookup(item)?.id().to_string()),
        }
    }
    if ids.is_empty() {
        return Err(SuiteError::Config("empty id list".into()));
    }
    Ok(ids)
}

//! Seeded batch verification of catalog entries.

use std::time::{Duration, Instant};

use hgf_core::catalog::{catalog, lookup, CatalogError, IdentityEntry, Verdict};
use hgf_core::field::{RatFun, Rational, Scalar};
use hgf_core::limit::{check_identity_perturbed, LimitError, PerturbedSample};
use rayon::prelude::*;
use serde::Serialize;

use crate::rng::Lcg;

/// Rejection draws per sample before giving up.
pub const RETRY_CAP: u32 = 1000;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuiteError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("no admissible sample for `{id}` at position {position} after {RETRY_CAP} draws")]
    GuardExhaustion { id: String, position: u64 },
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub ids: Vec<String>,
    pub samples: u64,
    pub nmax: u64,
    pub seed: u64,
    pub numerator_bound: u32,
    pub denominators: Vec<u32>,
    /// Worker threads; `None` uses the global pool. Not part of the report.
    #[serde(skip)]
    pub jobs: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ids: catalog().iter().map(|e| e.id().to_string()).collect(),
            samples: 200,
            nmax: 8,
            seed: 0,
            numerator_bound: 12,
            denominators: vec![1, 2, 3, 5, 7],
            jobs: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), SuiteError> {
        if self.ids.is_empty() {
            return Err(SuiteError::Config("empty id list".into()));
        }
        if self.samples == 0 {
            return Err(SuiteError::Config("samples must be positive".into()));
        }
        if self.numerator_bound == 0 || self.numerator_bound > 1 << 20 {
            return Err(SuiteError::Config("numerator bound must be in 1..=2^20".into()));
        }
        if self.denominators.is_empty() || self.denominators.contains(&0) {
            return Err(SuiteError::Config("denominators must be a nonempty set of positive integers".into()));
        }
        if self.nmax > 64 {
            return Err(SuiteError::Config("nmax must be at most 64".into()));
        }
        if self.jobs == Some(0) {
            return Err(SuiteError::Config("jobs must be positive".into()));
        }
        for id in &self.ids {
            lookup(id)?;
        }
        Ok(())
    }
}

/// One admissible draw. `perturbed` names the parameter carrying `+ t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub n: u64,
    pub params: Vec<Rational>,
    pub perturbed: Option<usize>,
    /// Draws spent, including rejected ones.
    pub draws: u32,
}

impl Sample {
    fn lifted(&self) -> PerturbedSample {
        match self.perturbed {
            Some(i) => PerturbedSample::new(self.n, self.params.clone(), i).expect("index within arity"),
            None => PerturbedSample::unperturbed(self.n, self.params.clone()),
        }
    }

    /// Parameters in scalar syntax, `+ t` included.
    pub fn rendered_params(&self) -> Vec<String> {
        self.lifted().params().iter().map(|p| p.to_string()).collect()
    }
}

fn draw(config: &SuiteConfig, rng: &mut Lcg, arity: usize, perturbed: Option<usize>) -> (u64, Vec<Rational>) {
    let n = rng.range_i64(0, config.nmax as i64) as u64;
    let bound = i64::from(config.numerator_bound);
    let params = (0..arity)
        .map(|i| {
            let p = rng.range_i64(-bound, bound);
            // limit targets are integers, where the degeneracy sits
            let q = if perturbed == Some(i) {
                1
            } else {
                config.denominators[rng.below(config.denominators.len() as u32) as usize]
            };
            Rational::new(p, i64::from(q))
        })
        .collect();
    (n, params)
}

fn admissible(entry: &IdentityEntry, n: u64, params: &[Rational], perturbed: Option<usize>) -> bool {
    let ok = match perturbed {
        Some(i) => {
            let s = PerturbedSample::new(n, params.to_vec(), i).expect("index within arity");
            entry.guards::<RatFun>(n, &s.params())
        }
        None => entry.guards(n, params),
    };
    matches!(ok, Ok(Ok(())))
}

/// The sample at `position` of the stream for `entry`. Guard-violating draws
/// are discarded and redrawn from the same stream.
pub fn sample_params(config: &SuiteConfig, entry: &IdentityEntry, position: u64) -> Result<Sample, SuiteError> {
    let mut rng = Lcg::for_sample(config.seed, entry.id(), position);
    let perturbed = entry.perturbed_param();
    for draws in 1..=RETRY_CAP {
        let (n, params) = draw(config, &mut rng, entry.arity(), perturbed);
        if admissible(entry, n, &params, perturbed) {
            return Ok(Sample { n, params, perturbed, draws });
        }
    }
    Err(SuiteError::GuardExhaustion { id: entry.id().to_string(), position })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub id: String,
    pub position: u64,
    pub n: u64,
    pub params: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCounts {
    pub id: String,
    pub holds: u64,
    pub fails: u64,
    pub skipped: u64,
    /// Draws rejected by guards before the counted samples.
    pub rejected: u64,
    pub counterexample: Option<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub holds: u64,
    pub fails: u64,
    pub skipped: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub version: &'static str,
    pub config: SuiteConfig,
    pub identities: Vec<IdentityCounts>,
    pub totals: Totals,
    pub first_counterexample: Option<Counterexample>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.totals.fails == 0
    }

    pub fn skipped_fraction(&self) -> f64 {
        let total = self.totals.holds + self.totals.fails + self.totals.skipped;
        if total == 0 {
            0.0
        } else {
            self.totals.skipped as f64 / total as f64
        }
    }

    /// Pretty JSON. Wall time is left out so equal configs give equal bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let width = self.identities.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let mut out = format!("{:<width$}  {:>7} {:>7} {:>7}\n", "id", "holds", "fails", "skipped");
        for c in &self.identities {
            out += &format!("{:<width$}  {:>7} {:>7} {:>7}\n", c.id, c.holds, c.fails, c.skipped);
        }
        out += &format!(
            "total: {} holds, {} fails, {} skipped in {:.2?}\n",
            self.totals.holds, self.totals.fails, self.totals.skipped, self.wall_time
        );
        if let Some(c) = &self.first_counterexample {
            out += &format!(
                "first counterexample: {} n={} ({}): {} != {}\n",
                c.id,
                c.n,
                c.params.join(", "),
                c.lhs,
                c.rhs
            );
        }
        out
    }
}

enum Outcome {
    Checked { verdict: Verdict<String>, sample: Sample },
    Exhausted,
}

fn render<S: Scalar>(v: Verdict<S>) -> Verdict<String> {
    match v {
        Verdict::Holds { lhs, rhs } => Verdict::Holds { lhs: lhs.to_string(), rhs: rhs.to_string() },
        Verdict::Fails { lhs, rhs } => Verdict::Fails { lhs: lhs.to_string(), rhs: rhs.to_string() },
        Verdict::Skipped { reason } => Verdict::Skipped { reason },
    }
}

fn run_one(config: &SuiteConfig, entry: &IdentityEntry, position: u64) -> Result<Outcome, SuiteError> {
    let sample = match sample_params(config, entry, position) {
        Ok(s) => s,
        Err(SuiteError::GuardExhaustion { .. }) => return Ok(Outcome::Exhausted),
        Err(e) => return Err(e),
    };
    let verdict = match sample.perturbed {
        Some(_) => match check_identity_perturbed(entry.id(), &sample.lifted()) {
            Ok(v) => render(v),
            Err(LimitError::Catalog(CatalogError::Series(e))) => Verdict::skipped(e.to_string()),
            Err(LimitError::Catalog(e)) => return Err(e.into()),
            Err(e) => Verdict::skipped(e.to_string()),
        },
        None => render(entry.check(sample.n, &sample.params)?),
    };
    Ok(Outcome::Checked { verdict, sample })
}

/// Runs every configured sample and assembles the report in stream order.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    config.validate()?;
    let start = Instant::now();
    let entries: Vec<&IdentityEntry> = config.ids.iter().map(|id| lookup(id)).collect::<Result<_, _>>()?;
    let tasks: Vec<(usize, u64)> = (0..entries.len()).flat_map(|i| (0..config.samples).map(move |p| (i, p))).collect();
    let work = || tasks.par_iter().map(|&(i, p)| run_one(config, entries[i], p)).collect::<Result<Vec<_>, _>>();
    let outcomes = match config.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| SuiteError::Config(e.to_string()))?
            .install(work)?,
        None => work()?,
    };

    let mut identities: Vec<IdentityCounts> = entries
        .iter()
        .map(|e| IdentityCounts {
            id: e.id().to_string(),
            holds: 0,
            fails: 0,
            skipped: 0,
            rejected: 0,
            counterexample: None,
        })
        .collect();
    for (&(i, position), outcome) in tasks.iter().zip(outcomes) {
        let counts = &mut identities[i];
        match outcome {
            Outcome::Exhausted => {
                counts.skipped += 1;
                counts.rejected += u64::from(RETRY_CAP);
            }
            Outcome::Checked { verdict, sample } => {
                counts.rejected += u64::from(sample.draws - 1);
                match verdict {
                    Verdict::Holds { .. } => counts.holds += 1,
                    Verdict::Skipped { .. } => counts.skipped += 1,
                    Verdict::Fails { lhs, rhs } => {
                        counts.fails += 1;
                        if counts.counterexample.is_none() {
                            counts.counterexample = Some(Counterexample {
                                id: counts.id.clone(),
                                position,
                                n: sample.n,
                                params: sample.rendered_params(),
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
    }
    let totals = Totals {
        holds: identities.iter().map(|c| c.holds).sum(),
        fails: identities.iter().map(|c| c.fails).sum(),
        skipped: identities.iter().map(|c| c.skipped).sum(),
    };
    let first_counterexample = identities.iter().find_map(|c| c.counterexample.clone());
    Ok(SuiteReport {
        schema: SCHEMA,
        version: hgf_core::VERSION,
        config: config.clone(),
        identities,
        totals,
        first_counterexample,
        wall_time: start.elapsed(),
    })
}

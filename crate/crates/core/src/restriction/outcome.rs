use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use super::MultiplicityReport;
use crate::error::{Error, Result};
use crate::sylow::default_budget;

/// Resources available to a verification campaign.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest group that may be enumerated.
    pub budget: usize,
    /// Threads used to fan out over partitions.
    pub workers: usize,
    /// Keep every multiplicity report in [`VerificationOutcome::reports`].
    pub keep_reports: bool,
    /// Report `ms` as `0`, for byte-identical output across runs.
    pub no_timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: default_budget(),
            workers: 1,
            keep_reports: false,
            no_timing: false,
        }
    }
}

impl VerifyOptions {
    /// Maps `f` over `items` on `workers` threads, preserving order.
    pub(crate) fn map<I, T, F>(&self, items: &[I], f: F) -> Result<Vec<T>>
    where
        I: Sync,
        T: Send,
        F: Fn(&I) -> Result<T> + Sync + Send,
    {
        if self.workers <= 1 {
            return items.iter().map(f).collect();
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| {
                Error::OutOfRange(format!("cannot start {} workers: {e}", self.workers))
            })?;
        pool.install(|| items.par_iter().map(f).collect())
    }
}

/// The result of checking one statement over a parameter range.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationOutcome {
    pub statement: String,
    pub params: Value,
    pub pass: bool,
    /// No instance of the statement's hypothesis occurred in the range.
    pub vacuous: bool,
    /// Number of instances checked.
    pub cases: usize,
    pub counterexamples: Vec<Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub ms: u64,
    #[serde(skip)]
    pub reports: Vec<MultiplicityReport>,
}

/// Accumulates cases while a campaign runs.
pub(crate) struct Recorder {
    start: Instant,
    pub cases: usize,
    pub counterexamples: Vec<Value>,
    pub notes: Vec<String>,
    pub reports: Vec<MultiplicityReport>,
    keep_reports: bool,
}

impl Recorder {
    pub fn new(options: &VerifyOptions) -> Self {
        Recorder {
            start: Instant::now(),
            cases: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
            reports: Vec::new(),
            keep_reports: options.keep_reports,
        }
    }

    /// Counts a case, recording `failure` as a counterexample when present.
    pub fn case(&mut self, failure: Option<Value>) {
        self.cases += 1;
        self.counterexamples.extend(failure);
    }

    pub fn fail(&mut self, failure: Value) {
        self.counterexamples.push(failure);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records the report and any broken invariant as a counterexample.
    pub fn report(&mut self, report: &MultiplicityReport) {
        if let Err(e) = report.check_invariants() {
            self.fail(serde_json::json!({ "invariant": e.to_string() }));
        }
        if self.keep_reports {
            self.reports.push(report.clone());
        }
    }

    pub fn finish(
        self,
        statement: &str,
        params: Value,
        options: &VerifyOptions,
    ) -> VerificationOutcome {
        VerificationOutcome {
            statement: statement.to_string(),
            params,
            pass: self.counterexamples.is_empty(),
            vacuous: self.cases == 0,
            cases: self.cases,
            counterexamples: self.counterexamples,
            notes: self.notes,
            ms: if options.no_timing {
                0
            } else {
                self.start.elapsed().as_millis() as u64
            },
            reports: self.reports,
        }
    }
}

//! Machine-readable verification reports.

use std::collections::BTreeMap;
use std::time::Duration;

use clustertilt::cta::RelationSet;
use clustertilt::quiver::QuiverDoc;
use clustertilt::{ClusterCategory, DynkinSpec, Quiver, TiltingObject};
use serde::Serialize;

use crate::cache::{spec_hash, TOOL_VERSION};

/// A failed check with everything needed to reproduce it.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub check: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tilting: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quiver: Option<QuiverDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub relations: Option<RelationSet>,
}

impl Failure {
    pub fn new(check: &str, detail: impl Into<String>) -> Self {
        Failure { check: check.into(), detail: detail.into(), tilting: None, quiver: None, relations: None }
    }

    pub fn at(mut self, c: &ClusterCategory, t: &TiltingObject, q: &Quiver) -> Self {
        self.tilting = Some(t.names(c));
        self.quiver = Some(q.to_doc());
        self.relations = clustertilt::cta::relations_of(q).ok();
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub spec: String,
    pub orientation: String,
    pub spec_hash: String,
    pub tool_version: String,
    pub verdict: &'static str,
    pub totals: BTreeMap<String, u64>,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl SuiteReport {
    pub fn new(suite: &str, spec: &DynkinSpec) -> Self {
        SuiteReport {
            suite: suite.into(),
            spec: spec.label(),
            orientation: spec.orientation_string(),
            spec_hash: spec_hash(spec),
            tool_version: TOOL_VERSION.into(),
            verdict: "pass",
            totals: BTreeMap::new(),
            failures: Vec::new(),
            runtime: Duration::ZERO,
        }
    }

    pub fn total(&mut self, key: &str, value: u64) {
        self.totals.insert(key.into(), value);
    }

    pub fn fail(&mut self, f: Failure) {
        self.failures.push(f);
    }

    /// Checks `got == want`, recording a failure otherwise.
    pub fn expect_eq(&mut self, check: &str, got: u64, want: u64) {
        if got != want {
            self.fail(Failure::new(check, format!("got {got}, expected {want}")));
        }
    }

    pub fn finish(mut self, runtime: Duration) -> Self {
        self.verdict = if self.failures.is_empty() { "pass" } else { "fail" };
        self.runtime = runtime;
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyOutput {
    pub verdict: &'static str,
    pub reports: Vec<SuiteReport>,
}

impl VerifyOutput {
    pub fn new(reports: Vec<SuiteReport>) -> Self {
        let verdict = if reports.iter().all(SuiteReport::passed) { "pass" } else { "fail" };
        VerifyOutput { verdict, reports }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

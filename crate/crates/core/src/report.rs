//! Verification outcomes and their per-relation aggregation.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::PolyError;
use crate::ratpoly::{fmt_rational, MPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
    ErratumCandidate,
}

/// Outcome of checking one identity at one index and parameter tuple.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub relation: String,
    pub index: Vec<i64>,
    pub params: Vec<String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

pub fn params_to_strings(params: &[Rational]) -> Vec<String> {
    params.iter().map(fmt_rational).collect()
}

impl VerificationReport {
    fn base(relation: &str, index: Vec<i64>, params: &[Rational], status: Status) -> Self {
        Self {
            suite: None,
            relation: relation.to_string(),
            index,
            params: params_to_strings(params),
            status,
            lhs: None,
            rhs: None,
            detail: None,
        }
    }

    pub fn pass(relation: &str, index: Vec<i64>, params: &[Rational]) -> Self {
        Self::base(relation, index, params, Status::Pass)
    }

    pub fn not_applicable(relation: &str, index: Vec<i64>, params: &[Rational], detail: impl Into<String>) -> Self {
        let mut r = Self::base(relation, index, params, Status::NotApplicable);
        r.detail = Some(detail.into());
        r
    }

    pub fn fail(relation: &str, index: Vec<i64>, params: &[Rational], detail: impl Into<String>) -> Self {
        let mut r = Self::base(relation, index, params, Status::Fail);
        r.detail = Some(detail.into());
        r
    }

    /// Pass iff `lhs == rhs`; a failure carries both sides.
    pub fn compare(relation: &str, index: Vec<i64>, params: &[Rational], lhs: &MPoly, rhs: &MPoly) -> Self {
        if lhs == rhs {
            return Self::pass(relation, index, params);
        }
        let mut r = Self::base(relation, index, params, Status::Fail);
        r.lhs = Some(lhs.to_string());
        r.rhs = Some(rhs.to_string());
        r.detail = Some(format!("difference {}", lhs - rhs));
        r
    }

    /// Like [`compare`](Self::compare) but the left side may have failed to divide.
    pub fn compare_result(
        relation: &str,
        index: Vec<i64>,
        params: &[Rational],
        lhs: Result<MPoly, PolyError>,
        rhs: &MPoly,
    ) -> Self {
        match lhs {
            Ok(l) => Self::compare(relation, index, params, &l, rhs),
            Err(e) => {
                let mut r = Self::fail(relation, index, params, e.to_string());
                r.rhs = Some(rhs.to_string());
                r
            }
        }
    }

    /// Pass iff `residual` is the zero polynomial.
    pub fn zero_check(relation: &str, index: Vec<i64>, params: &[Rational], residual: &MPoly) -> Self {
        Self::compare(relation, index, params, residual, &MPoly::zero())
    }

    pub fn with_suite(mut self, suite: &str) -> Self {
        self.suite = Some(suite.to_string());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    fn sort_key(&self) -> (Option<&String>, &String, &Vec<String>, &Vec<i64>) {
        (self.suite.as_ref(), &self.relation, &self.params, &self.index)
    }
}

/// Deterministic report order: suite, relation, parameters, index.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

/// Relabels failures as erratum candidates for every relation that fails at
/// least once for each parameter tuple on which it was applicable.
///
/// Failures confined to some tuples stay plain failures: they point at an
/// implementation problem rather than a wrong coefficient in a display.
pub fn classify_errata(reports: &mut [VerificationReport]) {
    let mut applicable: BTreeMap<(Option<String>, String), BTreeSet<Vec<String>>> = BTreeMap::new();
    let mut failing: BTreeMap<(Option<String>, String), BTreeSet<Vec<String>>> = BTreeMap::new();
    for r in reports.iter() {
        let key = (r.suite.clone(), r.relation.clone());
        match r.status {
            Status::Pass => {
                applicable.entry(key).or_default().insert(r.params.clone());
            }
            Status::Fail | Status::ErratumCandidate => {
                applicable.entry(key.clone()).or_default().insert(r.params.clone());
                failing.entry(key).or_default().insert(r.params.clone());
            }
            Status::NotApplicable => {}
        }
    }
    for r in reports.iter_mut() {
        if r.status != Status::Fail {
            continue;
        }
        let key = (r.suite.clone(), r.relation.clone());
        if failing.get(&key) == applicable.get(&key) {
            r.status = Status::ErratumCandidate;
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationSummary {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suite: Option<String>,
    pub relation: String,
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub erratum_candidate: usize,
}

/// Counts per relation id, in sorted order.
pub fn summarize(reports: &[VerificationReport]) -> Vec<RelationSummary> {
    let mut map: BTreeMap<(Option<String>, String), RelationSummary> = BTreeMap::new();
    for r in reports {
        let entry = map
            .entry((r.suite.clone(), r.relation.clone()))
            .or_insert_with(|| RelationSummary {
                suite: r.suite.clone(),
                relation: r.relation.clone(),
                ..Default::default()
            });
        match r.status {
            Status::Pass => entry.pass += 1,
            Status::Fail => entry.fail += 1,
            Status::NotApplicable => entry.not_applicable += 1,
            Status::ErratumCandidate => entry.erratum_candidate += 1,
        }
    }
    map.into_values().collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub erratum_candidate: usize,
}

pub fn totals(reports: &[VerificationReport]) -> Totals {
    let mut t = Totals::default();
    for r in reports {
        match r.status {
            Status::Pass => t.pass += 1,
            Status::Fail => t.fail += 1,
            Status::NotApplicable => t.not_applicable += 1,
            Status::ErratumCandidate => t.erratum_candidate += 1,
        }
    }
    t
}

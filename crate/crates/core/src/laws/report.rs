// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::group::GroupSpec;
use crate::tolerance::REL_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    ReportOnly,
    PreconditionUnmet,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::ReportOnly => "report-only",
            Verdict::PreconditionUnmet => "precondition-unmet",
        })
    }
}

/// How `lhs` is meant to compare with `rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Ge,
    Le,
    Eq,
    Subset,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Precondition {
    pub holds: bool,
    pub value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// The evaluation record of one identity or inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub group: String,
    pub set_sizes: Vec<usize>,
    pub relation: Relation,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs / rhs`; `null` when `rhs = 0 < lhs`.
    pub ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lhs_exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rhs_exact: Option<String>,
    pub preconditions: BTreeMap<String, Precondition>,
    pub verdict: Verdict,
    /// Set when the verdict is `holds` only because `rhs <= 0`.
    pub vacuous: bool,
    pub params: BTreeMap<String, f64>,
    pub seed: Option<u64>,
    pub wall_time_s: f64,
}

impl LawReport {
    /// True unless the law was checked and found false.
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fails
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

pub(crate) fn ratio(lhs: f64, rhs: f64) -> Option<f64> {
    if rhs == 0.0 {
        return if lhs == 0.0 { Some(1.0) } else { None };
    }
    let r = lhs / rhs;
    r.is_finite().then_some(r)
}

/// `a / b`, with `0 / 0 = 0`.
pub(crate) fn safe_div(a: f64, b: f64) -> f64 {
    if a == 0.0 {
        0.0
    } else {
        a / b
    }
}

pub(crate) fn big(v: u128) -> BigUint {
    BigUint::from(v)
}

pub(crate) fn big_f64(v: &BigUint) -> f64 {
    v.to_f64().unwrap_or(f64::INFINITY)
}

pub(crate) struct Builder {
    law: String,
    group: String,
    set_sizes: Vec<usize>,
    relation: Relation,
    started: Instant,
    preconditions: BTreeMap<String, Precondition>,
    params: BTreeMap<String, f64>,
    exact: (Option<String>, Option<String>),
}

impl Builder {
    pub fn new(law: &str, group: &GroupSpec, set_sizes: &[usize], relation: Relation) -> Self {
        Builder {
            law: law.to_string(),
            group: group.to_string(),
            set_sizes: set_sizes.to_vec(),
            relation,
            started: Instant::now(),
            preconditions: BTreeMap::new(),
            params: BTreeMap::new(),
            exact: (None, None),
        }
    }

    pub fn param(&mut self, name: &str, value: f64) -> &mut Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn precondition(&mut self, name: &str, holds: bool, value: Option<f64>) -> &mut Self {
        self.preconditions.insert(name.to_string(), Precondition { holds, value, note: None });
        self
    }

    pub fn precondition_note(&mut self, name: &str, holds: bool, note: &str) -> &mut Self {
        self.preconditions.insert(
            name.to_string(),
            Precondition {
                holds,
                value: None,
                note: Some(note.to_string()),
            },
        );
        self
    }

    pub fn exact(&mut self, lhs: impl ToString, rhs: impl ToString) -> &mut Self {
        self.exact = (Some(lhs.to_string()), Some(rhs.to_string()));
        self
    }

    fn preconditions_hold(&self) -> bool {
        self.preconditions.values().all(|p| p.holds)
    }

    fn build(self, lhs: f64, rhs: f64, verdict: Verdict, vacuous: bool) -> LawReport {
        LawReport {
            law: self.law,
            group: self.group,
            set_sizes: self.set_sizes,
            relation: self.relation,
            lhs,
            rhs,
            ratio: ratio(lhs, rhs),
            lhs_exact: self.exact.0,
            rhs_exact: self.exact.1,
            preconditions: self.preconditions,
            verdict,
            vacuous,
            params: self.params,
            seed: None,
            wall_time_s: self.started.elapsed().as_secs_f64(),
        }
    }

    /// Verdict from an exact comparison already carried out by the caller.
    pub fn decided(self, lhs: f64, rhs: f64, holds: bool) -> LawReport {
        let verdict = if !self.preconditions_hold() {
            Verdict::PreconditionUnmet
        } else if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        self.build(lhs, rhs, verdict, false)
    }

    /// `lhs >= rhs` up to the relative tolerance, vacuous when `rhs <= 0`.
    pub fn inequality(self, lhs: f64, rhs: f64) -> LawReport {
        if !self.preconditions_hold() {
            return self.build(lhs, rhs, Verdict::PreconditionUnmet, false);
        }
        if rhs <= 0.0 {
            return self.build(lhs, rhs, Verdict::Holds, true);
        }
        let holds = lhs >= rhs * (1.0 - REL_TOL);
        self.build(lhs, rhs, if holds { Verdict::Holds } else { Verdict::Fails }, false)
    }

    /// Exact `lhs >= rhs` on big integers, vacuous when the float `rhs <= 0`.
    pub fn exact_inequality(self, lhs: f64, rhs: f64, holds: bool) -> LawReport {
        if self.preconditions_hold() && rhs <= 0.0 {
            return self.build(lhs, rhs, Verdict::Holds, true);
        }
        self.decided(lhs, rhs, holds)
    }

    pub fn report_only(self, lhs: f64, rhs: f64) -> LawReport {
        self.build(lhs, rhs, Verdict::ReportOnly, false)
    }
}

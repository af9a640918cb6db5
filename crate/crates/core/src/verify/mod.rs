//! Verification suites: exhaustive or sampled checks of the diagram
//! calculus, the cellular structure and the determinant formulas, each
//! reported case by case.

mod golden;
mod suites;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub use golden::{golden_det_8_3, golden_gram_5_2};
pub use suites::{gram_block_check, DirectDets};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Relations,
    Order,
    Maps,
    Branching,
    Gram52,
    Recurrence,
    Closed,
    TypeA,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Relations,
        Suite::Order,
        Suite::Maps,
        Suite::Branching,
        Suite::Gram52,
        Suite::Recurrence,
        Suite::Closed,
        Suite::TypeA,
    ];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Relations => "relations",
            Suite::Order => "order",
            Suite::Maps => "maps",
            Suite::Branching => "branching",
            Suite::Gram52 => "gram52",
            Suite::Recurrence => "recurrence",
            Suite::Closed => "closed",
            Suite::TypeA => "typea",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub key: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

/// Runs one suite for ranks up to `max_n`. Cases run in parallel; the
/// report lists them in a fixed order.
pub fn run_suite(suite: Suite, max_n: usize) -> Result<SuiteReport> {
    let cases = match suite {
        Suite::Relations => suites::relations(max_n),
        Suite::Order => suites::order(max_n),
        Suite::Maps => suites::maps(max_n),
        Suite::Branching => suites::branching(max_n),
        Suite::Gram52 => suites::gram52(),
        Suite::Recurrence => suites::recurrence(max_n)?,
        Suite::Closed => suites::closed(max_n)?,
        Suite::TypeA => suites::type_a(max_n),
    };
    Ok(SuiteReport { suite: suite.to_string(), cases })
}

pub fn run_all(max_n: usize) -> Result<Vec<SuiteReport>> {
    Suite::ALL.into_iter().map(|s| run_suite(s, max_n)).collect()
}

//! Corpus runner: build each fixture from its descriptor, run the listed
//! checks, compare against expectations, and emit an aggregate summary.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use endoring_core::endoscope::{
    check_transition, generator_bound_report, is_local_module, verify_adual, verify_ausbr0,
    verify_perfect_syzygy_sequence,
};
use endoring_core::error::{Error, Result};
use endoring_core::fpmodules::{has_free_summand, is_reflexive};

use crate::descriptor::Descriptor;

#[derive(Debug, Clone, Deserialize)]
pub struct Manifest {
    pub fixtures: Vec<Fixture>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub module: Descriptor,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum Check {
    IsLocal { expect: bool },
    HasFreeSummand { expect: bool },
    Reflexive { expect: bool },
    Ausbr0 { expect: String },
    Adual { with: Descriptor, expect: String },
    PerfectSyzygy { k: usize, expect: String },
    Bounds { expect: String },
    Transition { with: Descriptor, expect: bool },
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub fixture: String,
    pub check: String,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: Vec<String>,
    pub outcomes: Vec<CheckOutcome>,
    pub pass: bool,
}

fn verdict(pass: bool, skipped: bool) -> String {
    if skipped {
        "skipped".to_string()
    } else if pass {
        "pass".to_string()
    } else {
        "fail".to_string()
    }
}

pub fn run_manifest(
    manifest: &Manifest,
    prime: u64,
    seed: u64,
    window: Option<(i64, i64)>,
) -> Result<CorpusSummary> {
    let mut outcomes = Vec::new();
    for fixture in &manifest.fixtures {
        let module = fixture.module.build(prime)?;
        for check in &fixture.checks {
            let (name, expected, observed): (&str, Value, Value) = match check {
                Check::IsLocal { expect } => {
                    let profile = is_local_module(&module, seed)?;
                    (
                        "is-local",
                        Value::Bool(*expect),
                        Value::Bool(profile.is_local),
                    )
                }
                Check::HasFreeSummand { expect } => (
                    "has-free-summand",
                    Value::Bool(*expect),
                    Value::Bool(has_free_summand(&module)?),
                ),
                Check::Reflexive { expect } => (
                    "reflexive",
                    Value::Bool(*expect),
                    Value::Bool(is_reflexive(&module)?),
                ),
                Check::Ausbr0 { expect } => {
                    let report = verify_ausbr0(&module, window)?;
                    (
                        "ausbr0",
                        Value::String(expect.clone()),
                        Value::String(verdict(report.pass, report.skipped.is_some())),
                    )
                }
                Check::Adual { with, expect } => {
                    let x = with.build(prime)?;
                    let report = verify_adual(&module, &x, window)?;
                    (
                        "adual",
                        Value::String(expect.clone()),
                        Value::String(verdict(report.pass, report.skipped.is_some())),
                    )
                }
                Check::PerfectSyzygy { k, expect } => {
                    let report = verify_perfect_syzygy_sequence(&module, *k, window)?;
                    (
                        "perfect-syzygy",
                        Value::String(expect.clone()),
                        Value::String(verdict(report.pass, report.skipped.is_some())),
                    )
                }
                Check::Bounds { expect } => {
                    let report = generator_bound_report(&module)?;
                    (
                        "bounds",
                        Value::String(expect.clone()),
                        Value::String(verdict(report.pass, false)),
                    )
                }
                Check::Transition { with, expect } => {
                    let other = with.build(prime)?;
                    (
                        "transition",
                        Value::Bool(*expect),
                        Value::Bool(check_transition(&module, &other)?),
                    )
                }
            };
            outcomes.push(CheckOutcome {
                fixture: fixture.name.clone(),
                check: name.to_string(),
                pass: expected == observed,
                expected,
                observed,
            });
        }
    }
    let total = outcomes.len();
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.pass)
        .map(|o| format!("{}: {}", o.fixture, o.check))
        .collect();
    Ok(CorpusSummary {
        total,
        passed,
        pass: failed.is_empty(),
        failed,
        outcomes,
    })
}

pub fn load_manifest(path: &str) -> Result<Manifest> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        pos: 0,
        msg: format!("cannot read manifest `{path}`: {e}"),
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        pos: 0,
        msg: format!("invalid manifest `{path}`: {e}"),
    })
}

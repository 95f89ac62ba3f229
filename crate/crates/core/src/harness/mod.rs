//! Randomised replay of the identities over generated instances.

mod gen;
mod laws;
mod shrink;

use rayon::prelude::*;
use serde::Serialize;

use crate::repr::MonotoneRepr;

pub use gen::{gen_locally_finite, gen_monotone, gen_spec, rng_for, GenConfig, InstanceSpec};
pub use laws::{check, Law, Outcome};
pub use shrink::shrink;

/// At most this many failures are listed in a report.
const MAX_LISTED: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureRecord {
    pub index: u64,
    pub instance: InstanceSpec,
    pub function: MonotoneRepr,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub law: String,
    pub negated: bool,
    pub instances: usize,
    pub passed: usize,
    pub skipped: usize,
    pub failed: usize,
    pub failures: Vec<FailureRecord>,
    pub shrunk: Option<FailureRecord>,
}

impl CheckReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// The instance a law sees at a given index.
pub fn instance(law: Law, cfg: &GenConfig, index: u64) -> InstanceSpec {
    let mut rng = rng_for(cfg, index);
    match law {
        Law::GenLocfin => gen_locally_finite(cfg, &mut rng, index),
        _ => gen_spec(cfg, &mut rng),
    }
}

/// Law outcome, flipped in negated mode (a check that the checker can fail).
pub fn evaluate(law: Law, spec: &InstanceSpec, negate: bool) -> Outcome {
    let outcome = match spec.build() {
        Ok(g) => check(law, &g),
        Err(e) => Outcome::Fail { expected: "a valid instance".into(), got: e.to_string() },
    };
    if !negate {
        return outcome;
    }
    match outcome {
        Outcome::Pass => Outcome::Fail { expected: "failure (negated law)".into(), got: "pass".into() },
        Outcome::Fail { .. } => Outcome::Pass,
        Outcome::Skip => Outcome::Skip,
    }
}

pub fn run_law(law: Law, n: usize, cfg: &GenConfig) -> CheckReport {
    run_law_with(law, n, cfg, false)
}

/// Runs `n` instances in parallel; results are merged by index, so the
/// report does not depend on scheduling.
pub fn run_law_with(law: Law, n: usize, cfg: &GenConfig, negate: bool) -> CheckReport {
    let outcomes: Vec<(InstanceSpec, Outcome)> = (0..n as u64)
        .into_par_iter()
        .map(|i| {
            let spec = instance(law, cfg, i);
            let out = evaluate(law, &spec, negate);
            (spec, out)
        })
        .collect();
    let mut report = CheckReport {
        law: law.id().to_string(),
        negated: negate,
        instances: n,
        passed: 0,
        skipped: 0,
        failed: 0,
        failures: Vec::new(),
        shrunk: None,
    };
    for (i, (spec, out)) in outcomes.into_iter().enumerate() {
        match out {
            Outcome::Pass => report.passed += 1,
            Outcome::Skip => report.skipped += 1,
            Outcome::Fail { expected, got } => {
                report.failed += 1;
                if report.failures.len() < MAX_LISTED {
                    report.failures.push(record(i as u64, spec, expected, got));
                }
            }
        }
    }
    if let Some(first) = report.failures.first() {
        let small = shrink(&first.instance, |s| evaluate(law, s, negate).is_fail());
        if let Outcome::Fail { expected, got } = evaluate(law, &small, negate) {
            report.shrunk = Some(record(first.index, small, expected, got));
        }
    }
    report
}

fn record(index: u64, instance: InstanceSpec, expected: String, got: String) -> FailureRecord {
    let function = MonotoneRepr::from(&instance.build().expect("recorded instances build"));
    FailureRecord { index, instance, function, expected, got }
}

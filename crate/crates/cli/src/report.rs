use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub claim: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    pub fn new(case: impl ToString, claim: &str, expected: impl ToString, actual: impl ToString) -> Self {
        Failure { case: case.to_string(), claim: claim.to_string(), expected: expected.to_string(), actual: actual.to_string() }
    }
}

/// Something worth recording that is not a pass/fail outcome, such as a
/// computed scalar or an exploration result.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Note {
    pub case: String,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<(String, String)>,
    /// Exploration suites never fail; their outcomes live in `notes`.
    #[serde(default)]
    pub report_only: bool,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<Note>,
    pub wall_time_ms: u128,
}

impl VerificationReport {
    pub fn new(suite: &str, n: usize) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            n,
            params: Vec::new(),
            report_only: false,
            cases_run: 0,
            cases_passed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn passed(&self) -> bool {
        self.report_only || self.failures.is_empty()
    }

    pub fn is_consistent(&self) -> bool {
        self.cases_passed <= self.cases_run && self.failures.len() == self.cases_run - self.cases_passed
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.cases_run += other.cases_run;
        self.cases_passed += other.cases_passed;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
        self.failures.sort();
        self.notes.sort();
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let status = if self.report_only {
            "REPORT"
        } else if self.passed() {
            "PASS"
        } else {
            "FAIL"
        };
        let _ = write!(s, "{status} {} n={}", self.suite, self.n);
        for (k, v) in &self.params {
            let _ = write!(s, " {k}={v}");
        }
        let _ = writeln!(s, ": {}/{} cases in {} ms", self.cases_passed, self.cases_run, self.wall_time_ms);
        for f in &self.failures {
            let _ = writeln!(s, "  {} [{}] expected {} got {}", f.case, f.claim, f.expected, f.actual);
        }
        for note in &self.notes {
            let _ = writeln!(s, "  {}: {}", note.case, note.text);
        }
        s
    }
}

/// Result of checking one case: every claim that failed, plus notes.
#[derive(Default)]
pub struct CaseOutcome {
    pub failures: Vec<Failure>,
    pub notes: Vec<Note>,
}

impl CaseOutcome {
    pub fn fail(&mut self, case: impl ToString, claim: &str, expected: impl ToString, actual: impl ToString) {
        self.failures.push(Failure::new(case, claim, expected, actual));
    }

    pub fn check(&mut self, ok: bool, case: impl ToString, claim: &str, expected: impl ToString, actual: impl ToString) {
        if !ok {
            self.fail(case, claim, expected, actual);
        }
    }

    pub fn note(&mut self, case: impl ToString, text: impl ToString) {
        self.notes.push(Note { case: case.to_string(), text: text.to_string() });
    }
}

/// Checks every case in parallel and merges the outcomes in a fixed order.
/// A case that fails several claims still counts as one failed case, with
/// its claims folded into one failure entry.
pub fn run_cases<T, F>(report: VerificationReport, cases: &[T], check: F) -> Result<VerificationReport, CliError>
where
    T: Sync,
    F: Fn(&T) -> Result<CaseOutcome, CliError> + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<CaseOutcome> = cases.par_iter().map(&check).collect::<Result<_, _>>()?;
    let mut report = report;
    for outcome in outcomes {
        report.cases_run += 1;
        match outcome.failures.len() {
            0 => report.cases_passed += 1,
            1 => report.failures.extend(outcome.failures),
            _ => report.failures.push(fold(outcome.failures)),
        }
        report.notes.extend(outcome.notes);
    }
    report.failures.sort();
    report.notes.sort();
    report.wall_time_ms = start.elapsed().as_millis();
    Ok(report)
}

fn fold(failures: Vec<Failure>) -> Failure {
    let join = |f: fn(&Failure) -> &str| failures.iter().map(f).collect::<Vec<_>>().join(" | ");
    Failure {
        case: failures[0].case.clone(),
        claim: join(|f| &f.claim),
        expected: join(|f| &f.expected),
        actual: join(|f| &f.actual),
    }
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CLAIM_FAILURE: i32 = 1;
pub const EXIT_OPERATIONAL: i32 = 2;

/// 2 if any suite hit an operational error, else 1 if any claim failed, else 0.
pub fn exit_code(results: &[Result<VerificationReport, CliError>]) -> i32 {
    if results.iter().any(|r| r.is_err()) {
        EXIT_OPERATIONAL
    } else if results.iter().any(|r| !r.as_ref().map(|r| r.passed()).unwrap_or(false)) {
        EXIT_CLAIM_FAILURE
    } else {
        EXIT_PASS
    }
}

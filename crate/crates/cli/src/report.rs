//! Machine-readable run reports.

use std::time::Instant;

use dichroma::constructions::ConstructionError;
use dichroma::decomposition::DecompositionError;
use dichroma::digraph::io::ParseError;
use dichroma::patterns::PatternError;
use dichroma::solver::SolverError;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: String,
    pub command: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub outcome: Outcome,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::BudgetExceeded => 3,
        }
    }
}

/// What a single check concluded. A failure always names its witness.
pub enum Verdict {
    Pass(Value),
    Fail(Value),
    Skipped(Value),
}

/// Ends a command early.
#[derive(Debug)]
pub enum Stop {
    /// Unreadable or malformed input; exit code 2, no report.
    Input(anyhow::Error),
    /// A search ran out of budget; exit code 3 with the checks so far.
    Budget(Value),
}

impl Stop {
    pub fn input(msg: impl std::fmt::Display) -> Self {
        Stop::Input(anyhow::anyhow!("{msg}"))
    }
}

impl From<anyhow::Error> for Stop {
    fn from(e: anyhow::Error) -> Self {
        Stop::Input(e)
    }
}

impl From<SolverError> for Stop {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::BudgetExceeded { lower, upper, nodes } => Stop::Budget(json!({
                "reason": "budget exceeded",
                "lower": lower,
                "upper": upper,
                "nodes": nodes,
            })),
            SolverError::ComponentTooLarge { size, max } => Stop::Budget(json!({
                "reason": "strong component too large for exact search",
                "size": size,
                "max": max,
            })),
            e => Stop::input(e),
        }
    }
}

impl From<PatternError> for Stop {
    fn from(e: PatternError) -> Self {
        match e {
            PatternError::BudgetExceeded { nodes } => Stop::Budget(json!({
                "reason": "budget exceeded",
                "nodes": nodes,
            })),
            e => Stop::input(e),
        }
    }
}

impl From<DecompositionError> for Stop {
    fn from(e: DecompositionError) -> Self {
        match e {
            DecompositionError::Solver(e) => e.into(),
            DecompositionError::Pattern(e) => e.into(),
            e => Stop::input(e),
        }
    }
}

impl From<ConstructionError> for Stop {
    fn from(e: ConstructionError) -> Self {
        Stop::input(e)
    }
}

impl From<ParseError> for Stop {
    fn from(e: ParseError) -> Self {
        Stop::input(e)
    }
}

/// Collects checks as a command runs.
pub struct Run {
    pub seed: Option<u64>,
    checks: Vec<Check>,
    timings: bool,
}

impl Run {
    pub fn new(timings: bool) -> Self {
        Self {
            seed: None,
            checks: Vec::new(),
            timings,
        }
    }

    /// Runs `f` as check `id`. A budget stop is recorded as a skipped check
    /// before it propagates.
    pub fn check(&mut self, id: &str, f: impl FnOnce() -> Result<Verdict, Stop>) -> Result<Status, Stop> {
        let start = Instant::now();
        let result = f();
        let elapsed_ms = if self.timings {
            start.elapsed().as_millis() as u64
        } else {
            0
        };
        let (status, value, witness) = match result {
            Ok(Verdict::Pass(v)) => (Status::Pass, v, Value::Null),
            Ok(Verdict::Fail(w)) => (Status::Fail, Value::Null, w),
            Ok(Verdict::Skipped(w)) => (Status::Skipped, Value::Null, w),
            Err(Stop::Budget(w)) => {
                self.push(id, Status::Skipped, Value::Null, w.clone(), elapsed_ms);
                return Err(Stop::Budget(w));
            }
            Err(e) => return Err(e),
        };
        self.push(id, status, value, witness, elapsed_ms);
        Ok(status)
    }

    fn push(&mut self, id: &str, status: Status, value: Value, witness: Value, elapsed_ms: u64) {
        let some = |v: Value| (!v.is_null()).then_some(v);
        let witness = match (status, some(witness)) {
            (Status::Fail, None) => Some(json!("no witness recorded")),
            (_, w) => w,
        };
        self.checks.push(Check {
            id: id.to_string(),
            status,
            value: some(value),
            witness,
            elapsed_ms,
        });
    }

    pub fn finish(self, command: Vec<String>, exhausted: bool) -> Report {
        let outcome = if exhausted {
            Outcome::BudgetExceeded
        } else if self.checks.iter().any(|c| c.status == Status::Fail) {
            Outcome::Fail
        } else {
            Outcome::Pass
        };
        Report {
            schema_version: SCHEMA_VERSION,
            tool: format!("dichroma {}", env!("CARGO_PKG_VERSION")),
            command,
            seed: self.seed,
            outcome,
            checks: self.checks,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_always_carry_a_witness() {
        let mut run = Run::new(false);
        run.check("a", || Ok(Verdict::Fail(Value::Null))).unwrap();
        run.check("b", || Ok(Verdict::Pass(json!(3)))).unwrap();
        let report = run.finish(vec!["x".into()], false);
        assert_eq!(report.outcome, Outcome::Fail);
        assert!(report.checks[0].witness.is_some());
        assert_eq!(report.checks[1].value, Some(json!(3)));
    }

    #[test]
    fn reports_round_trip() {
        let mut run = Run::new(true);
        run.seed = Some(9);
        run.check("a", || Ok(Verdict::Skipped(json!({"why": "n/a"})))).unwrap();
        let _ = run.check("b", || Err(Stop::Budget(json!({"nodes": 5}))));
        let report = run.finish(vec!["exact".into()], true);
        let text = serde_json::to_string(&report).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.exit_code(), 3);
    }
}

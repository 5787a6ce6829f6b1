use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    VerifiedInRange,
    Counterexample,
    RecordedOnly,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::VerifiedInRange => "verified-in-range",
            Verdict::Counterexample => "counterexample",
            Verdict::RecordedOnly => "recorded-only",
        })
    }
}

/// One discrepancy or recorded outcome, with enough data to replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub clause: String,
    pub indices: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inputs: Vec<String>,
    pub expected: String,
    pub actual: String,
}

impl Witness {
    pub fn new(
        clause: impl Into<String>,
        indices: Vec<u64>,
        expected: impl Into<String>,
        actual: impl Into<String>,
    ) -> Self {
        Witness {
            clause: clause.into(),
            indices,
            inputs: Vec::new(),
            expected: expected.into(),
            actual: actual.into(),
        }
    }

    pub fn with_inputs(mut self, inputs: Vec<String>) -> Self {
        self.inputs = inputs;
        self
    }
}

/// Outcome of checking one statement on one input.
///
/// `failures` is nonempty exactly when the verdict is `counterexample`.
/// Discrepancies in clauses that are not asserted (hypotheses not met,
/// boundary cases) go to `recorded` instead.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub statement: String,
    pub spec: String,
    pub range: [u64; 2],
    pub cases: u64,
    pub failures: Vec<Witness>,
    pub verdict: Verdict,
    pub seed: u64,
    pub ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub recorded: Vec<Witness>,
}

impl Report {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Copy with `ms = 0`, for byte-for-byte comparisons.
    pub fn without_timing(&self) -> Self {
        Report { ms: 0, ..self.clone() }
    }

    pub fn to_json(&self, timing: bool) -> String {
        let r = if timing { self.clone() } else { self.without_timing() };
        serde_json::to_string(&r).expect("report serializes")
    }

    pub fn is_counterexample(&self) -> bool {
        self.verdict == Verdict::Counterexample
    }
}

pub(crate) struct ReportBuilder {
    statement: String,
    spec: String,
    range: [u64; 2],
    asserted: bool,
    cases: u64,
    failures: Vec<Witness>,
    recorded: Vec<Witness>,
    start: Instant,
}

impl ReportBuilder {
    /// `asserted` is false when the statement's hypotheses do not hold;
    /// `check` then only records.
    pub fn new(statement: &str, spec: impl Into<String>, range: [u64; 2], asserted: bool) -> Self {
        ReportBuilder {
            statement: statement.into(),
            spec: spec.into(),
            range,
            asserted,
            cases: 0,
            failures: Vec::new(),
            recorded: Vec::new(),
            start: Instant::now(),
        }
    }

    pub fn asserted(&self) -> bool {
        self.asserted
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        let asserted = self.asserted;
        self.check_if(asserted, ok, witness);
    }

    /// Asserted regardless of the report's hypotheses (exact identities).
    pub fn check_always(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.check_if(true, ok, witness);
    }

    pub fn check_if(&mut self, asserted: bool, ok: bool, witness: impl FnOnce() -> Witness) {
        self.cases += 1;
        if !ok {
            if asserted {
                self.failures.push(witness());
            } else {
                self.recorded.push(witness());
            }
        }
    }

    pub fn record(&mut self, witness: Witness) {
        self.recorded.push(witness);
    }

    pub fn finish(self) -> Report {
        let verdict = if !self.failures.is_empty() {
            Verdict::Counterexample
        } else if self.asserted {
            Verdict::VerifiedInRange
        } else {
            Verdict::RecordedOnly
        };
        Report {
            statement: self.statement,
            spec: self.spec,
            range: self.range,
            cases: self.cases,
            failures: self.failures,
            verdict,
            seed: 0,
            ms: self.start.elapsed().as_millis() as u64,
            recorded: self.recorded,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_failures_and_hypotheses() {
        let mut b = ReportBuilder::new("lemma-1.2", "x", [1, 3], true);
        b.check(true, || unreachable!());
        assert_eq!(b.finish().verdict, Verdict::VerifiedInRange);

        let mut b = ReportBuilder::new("lemma-1.2", "x", [1, 3], false);
        b.check(false, || Witness::new("c", vec![1], "a", "b"));
        let r = b.finish();
        assert_eq!(r.verdict, Verdict::RecordedOnly);
        assert!(r.failures.is_empty() && r.recorded.len() == 1);

        let mut b = ReportBuilder::new("lemma-1.2", "x", [1, 3], false);
        b.check_always(false, || Witness::new("c", vec![1], "a", "b"));
        assert_eq!(b.finish().verdict, Verdict::Counterexample);
    }

    #[test]
    fn json_schema() {
        let r = ReportBuilder::new("thm-1.3", "s", [1, 2], true).finish().with_seed(9);
        let json = r.to_json(false);
        assert_eq!(
            json,
            r#"{"statement":"thm-1.3","spec":"s","range":[1,2],"cases":0,"failures":[],"verdict":"verified-in-range","seed":9,"ms":0}"#
        );
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r.without_timing());
    }
}

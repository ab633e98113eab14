//! Machine-readable suite reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use braidkit_core::hopf::AxiomReport;

pub const SCHEMA: &str = "braidkit-report/1";

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct CheckRecord {
    pub id: String,
    /// What the check reproduces, in words.
    pub anchor: String,
    pub status: Status,
    pub residual: String,
}

#[derive(Serialize, Clone, Debug)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub suite: String,
    pub version: &'static str,
    pub parameters: BTreeMap<String, Value>,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_clock_ms: Option<u64>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> SuiteReport {
        SuiteReport {
            schema: SCHEMA,
            suite: suite.to_string(),
            version: env!("CARGO_PKG_VERSION"),
            parameters: BTreeMap::new(),
            pass: true,
            checks: Vec::new(),
            wall_clock_ms: None,
            details: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), v.into());
        self
    }

    pub fn detail(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.details.insert(key.to_string(), v.into());
        self
    }

    pub fn check(&mut self, id: &str, anchor: &str, pass: bool, residual: impl Into<String>) -> &mut Self {
        self.checks.push(CheckRecord {
            id: id.to_string(),
            anchor: anchor.to_string(),
            status: if pass { Status::Pass } else { Status::Fail },
            residual: residual.into(),
        });
        self.pass &= pass;
        self
    }

    /// One record per axiom family of an exact suite.
    pub fn axioms(&mut self, prefix: &str, anchor: &str, rep: &AxiomReport) -> &mut Self {
        let summary = rep.summary();
        if summary.is_empty() {
            return self.check(prefix, anchor, false, "no identities were checked");
        }
        for (axiom, n, passed) in summary {
            let residual = match rep.failures().find(|f| f.axiom == axiom) {
                None => format!("{passed}/{n} exactly zero"),
                Some(f) => format!(
                    "{passed}/{n} exactly zero; first failure {}: {}",
                    f.element,
                    f.residual
                ),
            };
            self.check(&format!("{prefix}/{axiom}"), anchor, passed == n, residual);
        }
        self
    }

    /// Fold another report in, prefixing its check ids with its suite name.
    pub fn absorb(&mut self, other: SuiteReport) -> &mut Self {
        for c in other.checks {
            self.pass &= c.status == Status::Pass;
            self.checks.push(CheckRecord { id: format!("{}/{}", other.suite, c.id), ..c });
        }
        for (k, v) in other.details {
            self.details.insert(format!("{}/{k}", other.suite), v);
        }
        self
    }

    /// Sort checks by id; overall status is the conjunction.
    pub fn finish(mut self) -> SuiteReport {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
        self.pass = self.checks.iter().all(|c| c.status == Status::Pass);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_conjunctive() {
        let mut r = SuiteReport::new("demo");
        r.check("b", "second", true, "0").check("a", "first", false, "1e-3");
        let r = r.finish();
        assert_eq!(r.checks[0].id, "a");
        assert!(!r.pass);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["checks"][0]["status"], "fail");
        assert!(v.get("wall_clock_ms").is_none());
    }

    #[test]
    fn empty_axiom_report_fails() {
        let mut r = SuiteReport::new("demo");
        r.axioms("x", "nothing", &AxiomReport::default());
        assert!(!r.finish().pass);
    }
}

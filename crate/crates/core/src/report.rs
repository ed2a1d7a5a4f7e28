//! Pass/fail reports produced by every checker.

use serde::{Deserialize, Serialize};

/// Violations kept per axiom; the count keeps growing past this.
pub const MAX_RECORDED: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub family: String,
    pub axiom: String,
    pub checked: usize,
    pub failures: usize,
    pub passed: bool,
    /// First counterexample, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub subject: String,
    pub passed: bool,
    pub results: Vec<AxiomResult>,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            passed: true,
            results: Vec::new(),
            violations: Vec::new(),
        }
    }

    /// Starts a new axiom entry; record instances through the returned handle.
    pub fn axiom(&mut self, family: &str, axiom: &str) -> AxiomScope<'_> {
        self.results.push(AxiomResult {
            family: family.to_string(),
            axiom: axiom.to_string(),
            checked: 0,
            failures: 0,
            passed: true,
            instance: None,
            detail: None,
        });
        let idx = self.results.len() - 1;
        AxiomScope { report: self, idx }
    }

    pub fn result(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn family_passed(&self, family: &str) -> bool {
        self.results
            .iter()
            .filter(|r| r.family == family)
            .all(|r| r.passed)
    }

    pub fn failed_families(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.family.clone())
            .collect();
        out.dedup();
        out
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }

    /// Appends another report's results, prefixing their family names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        let pre = |s: &str| {
            if prefix.is_empty() {
                s.to_string()
            } else {
                format!("{prefix}/{s}")
            }
        };
        for mut r in other.results {
            r.family = pre(&r.family);
            self.results.push(r);
        }
        for mut v in other.violations {
            v.axiom = pre(&v.axiom);
            self.violations.push(v);
        }
        self.passed &= other.passed;
    }

    /// Records a failure that is not tied to an instance sweep.
    pub fn fail(&mut self, family: &str, axiom: &str, instance: String, detail: String) {
        let mut s = self.axiom(family, axiom);
        s.check(false, || (instance, detail));
    }

    pub fn summary(&self) -> String {
        let failed: usize = self.results.iter().filter(|r| !r.passed).count();
        format!(
            "{}: {} ({} axioms, {} failed)",
            self.subject,
            if self.passed { "pass" } else { "FAIL" },
            self.results.len(),
            failed
        )
    }
}

pub struct AxiomScope<'a> {
    report: &'a mut Report,
    idx: usize,
}

impl AxiomScope<'_> {
    /// Records one instance; `describe` runs only on failure.
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> (String, String)) -> bool {
        let r = &mut self.report.results[self.idx];
        r.checked += 1;
        if !ok {
            r.failures += 1;
            r.passed = false;
            self.report.passed = false;
            let recorded = r.failures <= MAX_RECORDED;
            let first = r.instance.is_none();
            if recorded || first {
                let (instance, detail) = describe();
                let axiom = r.axiom.clone();
                if first {
                    r.instance = Some(instance.clone());
                    r.detail = Some(detail.clone());
                }
                if recorded {
                    self.report.violations.push(Violation {
                        axiom,
                        instance,
                        detail,
                    });
                }
            }
        }
        ok
    }

    pub fn failures(&self) -> usize {
        self.report.results[self.idx].failures
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_counterexample_is_kept() {
        let mut r = Report::new("x");
        {
            let mut a = r.axiom("fam", "ax");
            a.check(true, || unreachable!());
            a.check(false, || ("i1".into(), "d1".into()));
            a.check(false, || ("i2".into(), "d2".into()));
        }
        assert!(!r.passed);
        let res = r.result("ax").unwrap();
        assert_eq!(res.checked, 3);
        assert_eq!(res.failures, 2);
        assert_eq!(res.instance.as_deref(), Some("i1"));
        assert_eq!(r.violations.len(), 2);
        assert_eq!(r.failed_families(), vec!["fam".to_string()]);
    }
}

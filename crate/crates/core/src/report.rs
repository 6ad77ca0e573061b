//! Pass/fail reports produced by the verifiers.

use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report { subject: subject.into(), checks: Vec::new() }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.check(name, true, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.check(name, false, Some(detail.into()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{}{}", prefix, c.name);
            self.checks.push(c);
        }
    }

    pub fn summary(&self) -> String {
        let failed: Vec<String> = self
            .failures()
            .iter()
            .map(|c| match &c.detail {
                Some(d) => format!("{} ({})", c.name, d),
                None => c.name.clone(),
            })
            .collect();
        failed.join(", ")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            write!(f, "  [{}] {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, ": {}", d)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

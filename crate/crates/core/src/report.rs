//! Structured verdicts with witnesses.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Present on every failed check: the offending set, element or word.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: true,
            witness: None,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
        });
    }

    /// Records `name` as passed when `witness` is `None`.
    pub fn check(&mut self, name: impl Into<String>, witness: Option<String>) {
        match witness {
            None => self.pass(name),
            Some(w) => self.fail(name, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {verdict}", self.subject)?;
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            match &c.witness {
                Some(w) => writeln!(f, "  {tag} {} -- witness: {w}", c.name)?,
                None => writeln!(f, "  {tag} {}", c.name)?,
            }
        }
        Ok(())
    }
}

//! PASS/FAIL reports shared by the identity and structural suites.

use std::fmt;

use serde::Serialize;

use crate::algebra::{MultiPoly, RatFun};

/// What was left over when a check failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Residual {
    Poly(MultiPoly),
    Frac(RatFun),
    Text(String),
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Poly(p) => write!(f, "{p}"),
            Residual::Frac(q) => write!(f, "{q}"),
            Residual::Text(s) => f.write_str(s),
        }
    }
}

/// One check at one parameter tuple.
#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub identity: String,
    pub params: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Residual>,
}

impl CheckEntry {
    pub fn from_poly(identity: &str, params: String, residual: MultiPoly) -> Self {
        let pass = residual.is_zero();
        Self { identity: identity.to_string(), params, pass, residual: (!pass).then_some(Residual::Poly(residual)) }
    }

    pub fn from_ratfun(identity: &str, params: String, residual: RatFun) -> Self {
        let pass = residual.is_zero();
        Self { identity: identity.to_string(), params, pass, residual: (!pass).then_some(Residual::Frac(residual)) }
    }

    pub fn outcome(identity: &str, params: String, pass: bool, detail: impl FnOnce() -> String) -> Self {
        let residual = (!pass).then(|| Residual::Text(detail()));
        Self { identity: identity.to_string(), params, pass, residual }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub entries: Vec<CheckEntry>,
    /// Observations recorded alongside the checks; never affect the verdict.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn new(entries: Vec<CheckEntry>) -> Self {
        Self { entries, notes: Vec::new() }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn passed(&self) -> usize {
        self.entries.iter().filter(|e| e.pass).count()
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.entries.extend(other.entries);
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wi = self.entries.iter().map(|e| e.identity.len()).max().unwrap_or(0);
        let wp = self.entries.iter().map(|e| e.params.len()).max().unwrap_or(0);
        for e in &self.entries {
            write!(f, "{:<wi$}  {:<wp$}  {}", e.identity, e.params, if e.pass { "PASS" } else { "FAIL" })?;
            if let Some(res) = &e.residual {
                write!(f, "  residual: {res}")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        writeln!(f, "{} of {} checks passed", self.passed(), self.entries.len())
    }
}

//! Verdict records shared by every checker.
//!
//! A report is an ordered list of labelled verdicts. Exhaustive checks carry the
//! number of cases they examined; failures always carry a witness. On countable
//! carriers a universally quantified condition can only be established up to a
//! search depth, which is recorded as [`Status::HoldsToDepth`].

use serde::ser::{Serialize, SerializeMap, Serializer};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    HoldsToDepth(usize),
    Skipped,
}

impl Status {
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail)
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HoldsToDepth(_) => "holds-to-depth",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub axiom: String,
    pub status: Status,
    pub witness: Option<Vec<String>>,
    pub cases: Option<u64>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn pass(axiom: impl Into<String>, cases: u64) -> Self {
        Verdict {
            axiom: axiom.into(),
            status: Status::Pass,
            witness: None,
            cases: Some(cases),
            note: None,
        }
    }

    pub fn fail(axiom: impl Into<String>, witness: Vec<String>) -> Self {
        Verdict {
            axiom: axiom.into(),
            status: Status::Fail,
            witness: Some(witness),
            cases: None,
            note: None,
        }
    }

    pub fn holds_to_depth(axiom: impl Into<String>, depth: usize) -> Self {
        Verdict {
            axiom: axiom.into(),
            status: Status::HoldsToDepth(depth),
            witness: None,
            cases: None,
            note: None,
        }
    }

    pub fn skipped(axiom: impl Into<String>, note: impl Into<String>) -> Self {
        Verdict {
            axiom: axiom.into(),
            status: Status::Skipped,
            witness: None,
            cases: None,
            note: Some(note.into()),
        }
    }

    /// Pass with `cases` examined, or fail with the first witness found.
    pub fn from_search(axiom: impl Into<String>, cases: u64, witness: Option<Vec<String>>) -> Self {
        match witness {
            None => Verdict::pass(axiom, cases),
            Some(w) => {
                let mut v = Verdict::fail(axiom, w);
                v.cases = Some(cases);
                v
            }
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_cases(mut self, cases: u64) -> Self {
        self.cases = Some(cases);
        self
    }

    pub fn passed(&self) -> bool {
        matches!(self.status, Status::Pass | Status::HoldsToDepth(_))
    }

    pub fn failed(&self) -> bool {
        self.status.is_failure()
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("axiom", &self.axiom)?;
        map.serialize_entry("verdict", self.status.label())?;
        if let Status::HoldsToDepth(d) = self.status {
            map.serialize_entry("depth", &d)?;
        }
        if let Some(w) = &self.witness {
            map.serialize_entry("witness", w)?;
        }
        if let Some(c) = self.cases {
            map.serialize_entry("cases", &c)?;
        }
        if let Some(n) = &self.note {
            map.serialize_entry("note", n)?;
        }
        map.end()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<28} {}", self.axiom, self.status.label())?;
        if let Status::HoldsToDepth(d) = self.status {
            write!(f, " {d}")?;
        }
        if let Some(c) = self.cases {
            write!(f, " ({c} cases)")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {}", w.join(", "))?;
        }
        if let Some(n) = &self.note {
            write!(f, " [{n}]")?;
        }
        Ok(())
    }
}

/// Ordered list of verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
#[serde(transparent)]
pub struct AxiomReport {
    pub verdicts: Vec<Verdict>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.verdicts.extend(other.verdicts);
    }

    pub fn get(&self, axiom: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    pub fn all_pass(&self) -> bool {
        !self.verdicts.iter().any(Verdict::failed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdicts serialize")
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

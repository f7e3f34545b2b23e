use std::fmt;

use serde::Serialize;

use super::{Elem, FiniteAlgebra};

/// Outcome of one axiom in a validation run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomVerdict {
    pub axiom: String,
    pub holds: bool,
    /// Lexicographically least violating tuple, by element index.
    pub witness: Option<Vec<Elem>>,
    /// The same tuple, by element name.
    pub witness_names: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// All axioms checked for one class, failures included (not fail-fast).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub algebra: String,
    pub class: String,
    pub verdicts: Vec<AxiomVerdict>,
}

impl ValidationReport {
    pub fn new(algebra: &FiniteAlgebra, class: impl Into<String>) -> ValidationReport {
        ValidationReport { algebra: algebra.name().to_string(), class: class.into(), verdicts: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomVerdict> {
        self.verdicts.iter().filter(|v| !v.holds)
    }

    pub fn verdict(&self, axiom: &str) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    pub(crate) fn push(&mut self, v: AxiomVerdict) {
        self.verdicts.push(v);
    }

    pub(crate) fn push_unmet(&mut self, axiom: impl Into<String>, note: impl Into<String>) {
        self.verdicts.push(AxiomVerdict {
            axiom: axiom.into(),
            holds: false,
            witness: None,
            witness_names: None,
            note: Some(note.into()),
        });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {} is {}", self.algebra, self.class)?;
        for v in &self.verdicts {
            let mark = if v.holds { "ok  " } else { "FAIL" };
            write!(f, "  {mark} {}", v.axiom)?;
            if let Some(w) = &v.witness_names {
                write!(f, "  witness ({})", w.join(", "))?;
            }
            if let Some(n) = &v.note {
                write!(f, "  [{n}]")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

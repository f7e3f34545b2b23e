//! Bundled algebras, embedded as data files in the algebra file format so the
//! loader is exercised on every access.

use thiserror::Error;

use crate::algebra::{parse_algebra, validate, CheckKind, FiniteAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no catalog entry `{0}` (known: A8, L3, L3star, A4, B2, T1)")]
    Unknown(String),
}

/// A bundled algebra and the classes it is expected to belong to (or not).
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: &'static str,
    pub description: &'static str,
    pub algebra: FiniteAlgebra,
    pub expected: &'static [(CheckKind, bool)],
}

struct Source {
    key: &'static str,
    description: &'static str,
    text: &'static str,
    expected: &'static [(CheckKind, bool)],
}

use CheckKind::*;

const SOURCES: [Source; 6] = [
    Source {
        key: "A8",
        description: "eight-element S-algebra whose lattice reduct is not distributive",
        text: include_str!("../data/A8.alg"),
        expected: &[(SAlgebra, true), (SAlgebraQuasi, true), (Distributive, false), (N4, false), (CongruenceOrderable, false)],
    },
    Source {
        key: "L3",
        description: "three-element MV-chain",
        text: include_str!("../data/L3.alg"),
        expected: &[(SAlgebra, true), (Mv, true), (N3, true), (CongruenceOrderable, true)],
    },
    Source {
        key: "L3star",
        description: "six-element S-chain, the doubling of L3",
        text: include_str!("../data/L3star.alg"),
        expected: &[(SAlgebra, true), (Distributive, true), (Mv, false), (N3, false), (CongruenceOrderable, false)],
    },
    Source {
        key: "A4",
        description: "four-element N4-lattice with no definable constant",
        text: include_str!("../data/A4.alg"),
        expected: &[(N4, true), (N3, false), (SAlgebra, false), (Distributive, true)],
    },
    Source {
        key: "B2",
        description: "two-element Boolean algebra",
        text: include_str!("../data/B2.alg"),
        expected: &[
            (Lattice, true),
            (Distributive, true),
            (SAlgebra, true),
            (SAlgebraQuasi, true),
            (Mv, true),
            (N4, true),
            (N3, true),
            (CongruenceOrderable, true),
        ],
    },
    Source {
        key: "T1",
        description: "trivial one-element algebra",
        text: include_str!("../data/T1.alg"),
        expected: &[(SAlgebra, true), (Mv, true)],
    },
];

pub const KEYS: [&str; 6] = ["A8", "L3", "L3star", "A4", "B2", "T1"];

fn load(s: &Source) -> CatalogEntry {
    let algebra = parse_algebra(s.text).unwrap_or_else(|e| panic!("bundled algebra {} is malformed: {e}", s.key));
    CatalogEntry { key: s.key, description: s.description, algebra, expected: s.expected }
}

pub fn get(key: &str) -> Result<FiniteAlgebra, CatalogError> {
    entry(key).map(|e| e.algebra)
}

pub fn entry(key: &str) -> Result<CatalogEntry, CatalogError> {
    SOURCES.iter().find(|s| s.key == key).map(load).ok_or_else(|| CatalogError::Unknown(key.to_string()))
}

pub fn entries() -> Vec<CatalogEntry> {
    SOURCES.iter().map(load).collect()
}

/// The raw file text of an entry.
pub fn source_text(key: &str) -> Result<&'static str, CatalogError> {
    SOURCES.iter().find(|s| s.key == key).map(|s| s.text).ok_or_else(|| CatalogError::Unknown(key.to_string()))
}

/// One line of the startup self-test.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SelfTestLine {
    pub key: &'static str,
    pub class: CheckKind,
    pub expected: bool,
    pub actual: bool,
}

impl SelfTestLine {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

/// Checks every entry against its advertised classes.
pub fn self_test() -> Vec<SelfTestLine> {
    entries()
        .into_iter()
        .flat_map(|e| {
            e.expected
                .iter()
                .map(|&(class, expected)| SelfTestLine {
                    key: e.key,
                    class,
                    expected,
                    actual: validate(&e.algebra, class).passed(),
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

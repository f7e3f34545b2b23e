//! Isomorph-free enumeration of small algebras.
//!
//! Lattices are generated first as naturally labeled bounded posets; residuated
//! classes then backtrack over the fusion table with `⇒` derived by
//! residuation, and N4/N3-lattices come from twist structures. Every candidate
//! is reduced to a canonical labeling and kept once.

pub mod canon;
mod lattices;
mod residuated;
mod twist;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use canon::{canonical_key, canonicalize, isomorphic};
pub use lattices::lattices;
pub use residuated::{residuated_structures, FuseOptions};
pub use twist::twist_structures;

use crate::algebra::{validate, CheckKind, FiniteAlgebra};
use crate::semantics::{satisfies_quasiequation, QuasiEquation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("node budget of {limit} exhausted")]
    BudgetExceeded { limit: u64 },
    #[error("constraint `{constraint}` cannot be evaluated: {msg}")]
    Constraint { constraint: String, msg: String },
}

/// Deterministic node counter.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { limit: None, used: 0 }
    }

    pub fn limited(limit: u64) -> Budget {
        Budget { limit: Some(limit), used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub(crate) fn tick(&mut self) -> Result<(), SearchError> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(SearchError::BudgetExceeded { limit }),
            _ => Ok(()),
        }
    }
}

/// The family candidates are generated from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchClass {
    /// Bounded lattices over `∧ ∨ 0 1`.
    Lattice,
    /// Commutative integral residuated lattices over `∧ ∨ * ⇒ 0 1`.
    Cirl,
    /// Three-potent CIRLs.
    ThreePotentCirl,
    /// Involutive CIRLs, with `¬`.
    InvolutiveCirl,
    /// Three-potent involutive CIRLs, with `¬`.
    SAlgebra,
    /// MV-algebras, with `¬`.
    Mv,
    /// N4-lattices over `∧ ∨ → ¬`.
    N4,
    /// N3-lattices over `∧ ∨ → ¬`.
    N3,
}

impl SearchClass {
    pub const ALL: [SearchClass; 8] = [
        SearchClass::Lattice,
        SearchClass::Cirl,
        SearchClass::ThreePotentCirl,
        SearchClass::InvolutiveCirl,
        SearchClass::SAlgebra,
        SearchClass::Mv,
        SearchClass::N4,
        SearchClass::N3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SearchClass::Lattice => "lattice",
            SearchClass::Cirl => "cirl",
            SearchClass::ThreePotentCirl => "three-potent-cirl",
            SearchClass::InvolutiveCirl => "involutive-cirl",
            SearchClass::SAlgebra => "s-algebra",
            SearchClass::Mv => "mv",
            SearchClass::N4 => "n4",
            SearchClass::N3 => "n3",
        }
    }
}

impl fmt::Display for SearchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SearchClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SearchClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown search class `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// The named check must pass (`true`) or fail (`false`).
    Check(CheckKind, bool),
    Holds(QuasiEquation),
    Fails(QuasiEquation),
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Check(k, true) => write!(f, "is {k}"),
            Constraint::Check(k, false) => write!(f, "is not {k}"),
            Constraint::Holds(q) => write!(f, "{q}"),
            Constraint::Fails(q) => write!(f, "not {q}"),
        }
    }
}

impl Constraint {
    pub fn accepts(&self, a: &FiniteAlgebra) -> Result<bool, SearchError> {
        let sat = |q: &QuasiEquation| {
            satisfies_quasiequation(a, q)
                .map(|s| s.holds)
                .map_err(|e| SearchError::Constraint { constraint: self.to_string(), msg: e.to_string() })
        };
        match self {
            Constraint::Check(k, want) => Ok(validate(a, *k).passed() == *want),
            Constraint::Holds(q) => sat(q),
            Constraint::Fails(q) => sat(q).map(|h| !h),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mode {
    First,
    Count,
    All,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "first" => Ok(Mode::First),
            "count" => Ok(Mode::Count),
            "all" => Ok(Mode::All),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub min_size: usize,
    pub max_size: usize,
    pub class: SearchClass,
    pub constraints: Vec<Constraint>,
    pub mode: Mode,
    /// Node limit; `None` searches to exhaustion.
    pub budget: Option<u64>,
}

impl SearchSpec {
    /// Sizes `1..=max_size`, collecting everything.
    pub fn new(class: SearchClass, max_size: usize) -> SearchSpec {
        SearchSpec { min_size: 1, max_size, class, constraints: Vec::new(), mode: Mode::All, budget: None }
    }

    pub fn exactly(class: SearchClass, size: usize) -> SearchSpec {
        SearchSpec { min_size: size, ..SearchSpec::new(class, size) }
    }

    pub fn with(mut self, c: Constraint) -> SearchSpec {
        self.constraints.push(c);
        self
    }

    pub fn mode(mut self, mode: Mode) -> SearchSpec {
        self.mode = mode;
        self
    }

    pub fn budget(mut self, limit: u64) -> SearchSpec {
        self.budget = Some(limit);
        self
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Kept algebras; empty in count mode.
    pub models: Vec<FiniteAlgebra>,
    pub count: usize,
    /// Per size in `min_size..=max_size`.
    pub count_by_size: Vec<(usize, usize)>,
    pub nodes: u64,
}

/// Raw candidates of one size for a class, before deduplication. The
/// callback returns `false` to stop.
fn generate(
    class: SearchClass,
    n: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(FiniteAlgebra) -> Result<bool, SearchError>,
) -> Result<(), SearchError> {
    let mut err = None;
    let mut wrap = |a: FiniteAlgebra| match visit(a) {
        Ok(go) => go,
        Err(e) => {
            err = Some(e);
            false
        }
    };
    match class {
        SearchClass::Lattice => {
            for l in lattices(n, budget)? {
                if !wrap(l) {
                    break;
                }
            }
        }
        SearchClass::N4 | SearchClass::N3 => {
            twist_structures(n, budget, &mut wrap)?;
        }
        _ => {
            let opts = FuseOptions {
                involutive: matches!(class, SearchClass::InvolutiveCirl | SearchClass::SAlgebra | SearchClass::Mv),
                three_potent: matches!(class, SearchClass::ThreePotentCirl | SearchClass::SAlgebra),
            };
            for l in lattices(n, budget)? {
                if !residuated_structures(&l, opts, budget, &mut wrap)? {
                    break;
                }
            }
        }
    }
    err.map_or(Ok(()), Err)
}

fn in_class(class: SearchClass, a: &FiniteAlgebra) -> bool {
    match class {
        SearchClass::Mv => validate(a, CheckKind::Mv).passed(),
        SearchClass::N3 => validate(a, CheckKind::N3).passed(),
        _ => true,
    }
}

/// Streams canonical representatives in deterministic order (by size, then
/// generation order). `visit` returns `false` to stop early.
pub fn enumerate_with(
    spec: &SearchSpec,
    visit: &mut dyn FnMut(&FiniteAlgebra) -> bool,
) -> Result<SearchOutcome, SearchError> {
    let mut budget = spec.budget.map_or_else(Budget::unlimited, Budget::limited);
    let mut outcome = SearchOutcome { models: Vec::new(), count: 0, count_by_size: Vec::new(), nodes: 0 };
    let mut stopped = false;
    for n in spec.min_size.max(1)..=spec.max_size {
        let mut seen = HashSet::new();
        let mut here = 0;
        generate(spec.class, n, &mut budget, &mut |cand| {
            let (key, canon) = canonicalize(&cand);
            if !seen.insert(key) || !in_class(spec.class, &canon) {
                return Ok(true);
            }
            for c in &spec.constraints {
                if !c.accepts(&canon)? {
                    return Ok(true);
                }
            }
            here += 1;
            let named = canon.with_name(format!("{}-{n}-{here}", spec.class));
            let go = visit(&named);
            if spec.mode != Mode::Count {
                outcome.models.push(named);
            }
            if spec.mode == Mode::First || !go {
                stopped = true;
                return Ok(false);
            }
            Ok(true)
        })?;
        outcome.count += here;
        outcome.count_by_size.push((n, here));
        if stopped {
            break;
        }
    }
    outcome.nodes = budget.used();
    Ok(outcome)
}

pub fn enumerate(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    enumerate_with(spec, &mut |_| true)
}

/// First model in canonical order, or `None` when the size range is exhausted.
pub fn find_model(spec: &SearchSpec) -> Result<Option<FiniteAlgebra>, SearchError> {
    let spec = SearchSpec { mode: Mode::First, ..spec.clone() };
    Ok(enumerate(&spec)?.models.into_iter().next())
}

/// Class count only.
pub fn count(spec: &SearchSpec) -> Result<usize, SearchError> {
    let spec = SearchSpec { mode: Mode::Count, ..spec.clone() };
    Ok(enumerate(&spec)?.count)
}

#[doc(hidden)]
pub fn involutions(a: &FiniteAlgebra) -> Vec<Vec<usize>> {
    residuated::anti_involutions(a)
}

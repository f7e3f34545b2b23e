//! Formulas over the connectives of Nelson's logic and its relatives.
//!
//! The abstract syntax is deliberately small: biconditionals and the
//! doubled implication `⇒²` are not nodes; they only exist as expansions
//! (see [`Formula::iff`] and [`gamma_implication`]).

mod parse;
mod print;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

pub use parse::{parse, ParseError};

/// Binary connectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum BinOp {
    /// additive conjunction `∧`
    And,
    /// additive disjunction `∨`
    Or,
    /// strong implication `⇒`
    Imp,
    /// multiplicative conjunction `*`
    Fuse,
    /// weak implication `→`
    WeakImp,
}

impl BinOp {
    pub const ALL: [BinOp; 5] = [BinOp::And, BinOp::Or, BinOp::Imp, BinOp::Fuse, BinOp::WeakImp];

    pub fn ascii(self) -> &'static str {
        match self {
            BinOp::And => "&",
            BinOp::Or => "|",
            BinOp::Imp => "=>",
            BinOp::Fuse => "*",
            BinOp::WeakImp => "->",
        }
    }
}

/// A propositional formula. Children are reference counted so that
/// substitution and schema instantiation share structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(Arc<str>),
    Zero,
    One,
    Not(Arc<Formula>),
    Bin(BinOp, Arc<Formula>, Arc<Formula>),
}

/// Simultaneous substitution of formulas for variables.
pub type Substitution = BTreeMap<Arc<str>, Formula>;

/// An ordered list of premises abbreviated by `Γ` in rule schemata.
pub type GammaList = Vec<Formula>;

impl Formula {
    pub fn var(name: &str) -> Formula {
        debug_assert!(!name.is_empty());
        Formula::Var(Arc::from(name))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Arc::new(f))
    }

    pub fn bin(op: BinOp, l: Formula, r: Formula) -> Formula {
        Formula::Bin(op, Arc::new(l), Arc::new(r))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::And, l, r)
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::Or, l, r)
    }

    pub fn imp(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::Imp, l, r)
    }

    pub fn fuse(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::Fuse, l, r)
    }

    pub fn weak_imp(l: Formula, r: Formula) -> Formula {
        Formula::bin(BinOp::WeakImp, l, r)
    }

    /// `φ ⇔ ψ := (φ ⇒ ψ) ∧ (ψ ⇒ φ)`.
    pub fn iff(l: Formula, r: Formula) -> Formula {
        Formula::and(Formula::imp(l.clone(), r.clone()), Formula::imp(r, l))
    }

    /// `φ ↔ ψ := (φ → ψ) ∧ (ψ → φ)`, the weak biconditional.
    pub fn weak_iff(l: Formula, r: Formula) -> Formula {
        Formula::and(Formula::weak_imp(l.clone(), r.clone()), Formula::weak_imp(r, l))
    }

    /// `φ² := φ * φ`.
    pub fn square(f: Formula) -> Formula {
        Formula::fuse(f.clone(), f)
    }

    /// Variables in order of first occurrence (left to right).
    pub fn vars(&self) -> Vec<Arc<str>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        self.collect_vars(&mut seen, &mut out);
        out
    }

    fn collect_vars(&self, seen: &mut BTreeSet<Arc<str>>, out: &mut Vec<Arc<str>>) {
        match self {
            Formula::Var(v) => {
                if seen.insert(v.clone()) {
                    out.push(v.clone());
                }
            }
            Formula::Zero | Formula::One => {}
            Formula::Not(f) => f.collect_vars(seen, out),
            Formula::Bin(_, l, r) => {
                l.collect_vars(seen, out);
                r.collect_vars(seen, out);
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Zero | Formula::One => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::Bin(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Number of nested `⇒` along the right spine: `a ⇒ (b ⇒ c)` has depth 2.
    pub fn imp_spine_depth(&self) -> usize {
        match self {
            Formula::Bin(BinOp::Imp, _, r) => 1 + r.imp_spine_depth(),
            _ => 0,
        }
    }

    /// Splits `l ⇒ r` into its sides.
    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Bin(BinOp::Imp, l, r) => Some((l, r)),
            _ => None,
        }
    }

    pub fn substitute(&self, sigma: &Substitution) -> Formula {
        match self {
            Formula::Var(v) => sigma.get(v).cloned().unwrap_or_else(|| self.clone()),
            Formula::Zero | Formula::One => self.clone(),
            Formula::Not(f) => Formula::not(f.substitute(sigma)),
            Formula::Bin(op, l, r) => Formula::bin(*op, l.substitute(sigma), r.substitute(sigma)),
        }
    }

    /// Connectives used by this formula.
    pub fn connectives(&self) -> BTreeSet<Connective> {
        let mut out = BTreeSet::new();
        self.collect_connectives(&mut out);
        out
    }

    fn collect_connectives(&self, out: &mut BTreeSet<Connective>) {
        match self {
            Formula::Var(_) => {}
            Formula::Zero => {
                out.insert(Connective::Zero);
            }
            Formula::One => {
                out.insert(Connective::One);
            }
            Formula::Not(f) => {
                out.insert(Connective::Not);
                f.collect_connectives(out);
            }
            Formula::Bin(op, l, r) => {
                out.insert(Connective::Bin(*op));
                l.collect_connectives(out);
                r.collect_connectives(out);
            }
        }
    }

    /// Canonical ASCII rendering; `parse(&f.render()) == Ok(f)`.
    pub fn render(&self) -> String {
        print::render(self)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Every symbol a formula can be built from, except variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    Zero,
    One,
    Not,
    Bin(BinOp),
}

/// The two languages formulas can be rewritten into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetLanguage {
    /// `⟨∧, ∨, ⇒, ¬, 0⟩`, the primitive language of `S`.
    Nelson,
    /// `⟨∧, ∨, *, ⇒, 0, 1⟩`, the language of residuated lattices with bounds.
    Residuated,
}

impl TargetLanguage {
    pub fn admits(self, c: Connective) -> bool {
        match (self, c) {
            (_, Connective::Zero) => true,
            (_, Connective::Bin(BinOp::And | BinOp::Or | BinOp::Imp)) => true,
            (TargetLanguage::Nelson, Connective::Not) => true,
            (TargetLanguage::Residuated, Connective::One | Connective::Bin(BinOp::Fuse)) => true,
            _ => false,
        }
    }
}

/// Rewrites every connective outside `target` through its definition:
/// `1 := ¬0`, `φ * ψ := ¬(φ ⇒ ¬ψ)` and `φ → ψ := φ² ⇒ ψ` into the Nelson
/// language; `¬φ := φ ⇒ 0` and `φ → ψ := φ² ⇒ ψ` into the residuated one.
///
/// Every connective has a definition in both targets, so this never fails.
pub fn expand_defined(f: &Formula, target: TargetLanguage) -> Formula {
    use TargetLanguage::*;
    match f {
        Formula::Var(_) | Formula::Zero => f.clone(),
        Formula::One => match target {
            Nelson => Formula::not(Formula::Zero),
            Residuated => Formula::One,
        },
        Formula::Not(g) => {
            let g = expand_defined(g, target);
            match target {
                Nelson => Formula::not(g),
                Residuated => Formula::imp(g, Formula::Zero),
            }
        }
        Formula::Bin(op, l, r) => {
            let l = expand_defined(l, target);
            let r = expand_defined(r, target);
            match (op, target) {
                (BinOp::Fuse, Nelson) => fuse_in_nelson(l, r),
                (BinOp::WeakImp, Nelson) => Formula::imp(fuse_in_nelson(l.clone(), l), r),
                (BinOp::WeakImp, Residuated) => Formula::imp(Formula::square(l), r),
                _ => Formula::bin(*op, l, r),
            }
        }
    }
}

fn fuse_in_nelson(l: Formula, r: Formula) -> Formula {
    Formula::not(Formula::imp(l, Formula::not(r)))
}

/// `Γ ⇒ φ` for `power == 1` and `Γ ⇒² φ` for `power == 2`: the right fold
/// `γ₁ ⇒ⁿ (γ₂ ⇒ⁿ (… ⇒ⁿ φ))`. An empty list yields `φ` itself.
pub fn gamma_implication(gamma: &[Formula], f: &Formula, power: u8) -> Formula {
    assert!(power == 1 || power == 2, "implication power must be 1 or 2");
    gamma.iter().rev().fold(f.clone(), |acc, g| {
        let mut acc = acc;
        for _ in 0..power {
            acc = Formula::imp(g.clone(), acc);
        }
        acc
    })
}

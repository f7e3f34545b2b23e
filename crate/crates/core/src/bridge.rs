//! Translations between presentations: formulas to equations, rules to
//! quasiequations, the two term-equivalent signatures of S-algebras, the
//! strong and weak implications of N4, and the doubling `A ↦ A*`.

use thiserror::Error;

use crate::algebra::{check_cibrl, check_cirl, check_involutive, AlgebraError, Elem, FiniteAlgebra, Op, ValidationReport};
use crate::calculus::RuleId;
use crate::formula::{BinOp, Connective, Formula, Substitution};
use crate::semantics::{Equation, QuasiEquation};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BridgeError {
    #[error("`{algebra}` lacks `{op}`")]
    Missing { algebra: String, op: Op },
    #[error("input is not a CIRL:\n{0}")]
    NotCirl(Box<ValidationReport>),
    #[error("doubling produced an invalid algebra:\n{0}")]
    Construction(Box<ValidationReport>),
    #[error("`{0}` is outside the residuated-lattice language")]
    NotResiduatedLanguage(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `E(φ) := φ ≈ 1`.
pub fn e_of(f: &Formula) -> Equation {
    Equation::new(f.clone(), Formula::One)
}

/// One concrete `Γ`-elaboration of a rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSpec {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
}

impl RuleSpec {
    /// The elaboration of `rule` with `Γ = g1, …, gk`.
    pub fn of(rule: RuleId, k: usize) -> RuleSpec {
        let (premises, conclusion) = rule.elaborate(k);
        RuleSpec { premises, conclusion }
    }
}

/// `E(φ₁) & … & E(φₙ) ⟹ E(φ)`.
pub fn q_of(r: &RuleSpec) -> QuasiEquation {
    QuasiEquation::new(r.premises.iter().map(e_of).collect(), e_of(&r.conclusion))
}

fn need(a: &FiniteAlgebra, ops: &[Op]) -> Result<(), BridgeError> {
    match ops.iter().find(|o| !a.has(**o)) {
        Some(&op) => Err(BridgeError::Missing { algebra: a.name().to_string(), op }),
        None => Ok(()),
    }
}

/// `⟨∧,∨,⇒,¬,0,1⟩ ↦ ⟨∧,∨,*,⇒,0,1⟩` with `x * y := ¬(x ⇒ ¬y)`.
pub fn to_s_prime(a: &FiniteAlgebra) -> Result<FiniteAlgebra, BridgeError> {
    need(a, &[Op::Imp, Op::Neg, Op::Zero])?;
    let n = |x| a.un(Op::Neg, x);
    let mut out = a.with_binary(Op::Fuse, |x, y| n(a.bin(Op::Imp, x, n(y))));
    if !a.has(Op::One) {
        out = out.with_table(Op::One, crate::algebra::Table::Constant(n(a.constant(Op::Zero).unwrap())))?;
    }
    Ok(out.without(Op::Neg))
}

/// `⟨∧,∨,*,⇒,0,1⟩ ↦ ⟨∧,∨,⇒,¬,0,1⟩` with `¬x := x ⇒ 0`.
pub fn to_s(a: &FiniteAlgebra) -> Result<FiniteAlgebra, BridgeError> {
    need(a, &[Op::Imp, Op::Zero])?;
    let z = a.constant(Op::Zero).unwrap();
    Ok(a.with_unary(Op::Neg, |x| a.bin(Op::Imp, x, z)).without(Op::Fuse))
}

/// The doubling of a CIRL: carrier `A ∪ ¬A`, the lower copy named `n_<name>`.
///
/// Upper elements are `0..n`, lower ones `n..2n`. The result is validated
/// as an involutive CIBRL before it is returned.
pub fn double(a: &FiniteAlgebra) -> Result<FiniteAlgebra, BridgeError> {
    need(a, &[Op::Fuse, Op::Imp, Op::One])?;
    let cirl = check_cirl(a);
    if !cirl.passed() {
        return Err(BridgeError::NotCirl(Box::new(cirl)));
    }
    let n = a.size();
    let one = a.constant(Op::One).unwrap();
    let up = |x: Elem| x < n;
    let base = |x: Elem| x % n;
    let neg = |x: Elem| if up(x) { x + n } else { x - n };
    let leq = |x: Elem, y: Elem| match (up(x), up(y)) {
        (true, true) => a.leq(x, y),
        (false, true) => true,
        (true, false) => false,
        (false, false) => a.leq(base(y), base(x)),
    };
    let meet = |x: Elem, y: Elem| match (up(x), up(y)) {
        (true, true) => a.meet(x, y),
        (false, false) => neg(a.join(base(x), base(y))),
        (true, false) => y,
        (false, true) => x,
    };
    let join = |x: Elem, y: Elem| match (up(x), up(y)) {
        (true, true) => a.join(x, y),
        (false, false) => neg(a.meet(base(x), base(y))),
        (true, false) => x,
        (false, true) => y,
    };
    let f = |x, y| a.bin(Op::Fuse, x, y);
    let i = |x, y| a.bin(Op::Imp, x, y);
    let fuse = |x: Elem, y: Elem| match (up(x), up(y)) {
        (true, true) => f(x, y),
        (true, false) => neg(i(x, base(y))),
        (false, true) => neg(i(y, base(x))),
        (false, false) => neg(one),
    };
    let imp = |x: Elem, y: Elem| match (up(x), up(y)) {
        (true, true) => i(x, y),
        (true, false) => neg(f(x, base(y))),
        (false, false) => i(base(y), base(x)),
        (false, true) => one,
    };
    let names = a.elements().iter().cloned().chain(a.elements().iter().map(|e| format!("n_{e}"))).collect();
    let d = FiniteAlgebra::from_fns(
        format!("{}*", a.name()),
        names,
        &[(Op::Meet, &meet), (Op::Join, &join), (Op::Fuse, &fuse), (Op::Imp, &imp)],
        &[(Op::Neg, &neg)],
        &[(Op::Zero, neg(one)), (Op::One, one)],
    )?;
    debug_assert!((0..2 * n).all(|x| (0..2 * n).all(|y| leq(x, y) == d.leq(x, y))));
    let mut report = check_cibrl(&d);
    for v in check_involutive(&d).verdicts {
        report.verdicts.push(v);
    }
    if !report.passed() {
        return Err(BridgeError::Construction(Box::new(report)));
    }
    Ok(d)
}

/// The transformed quasiequation, and the equivalent equation when the
/// input had no premises.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Starred {
    pub quasi: QuasiEquation,
    pub equation: Option<Equation>,
}

/// `q ↦ q*`: adds the premise `x ∨ ¬x ≈ x` for every variable `x`.
pub fn star_quasieq(q: &QuasiEquation) -> Result<Starred, BridgeError> {
    for f in q.formulas() {
        for c in f.connectives() {
            if !matches!(c, Connective::One | Connective::Bin(BinOp::And | BinOp::Or | BinOp::Fuse | BinOp::Imp)) {
                return Err(BridgeError::NotResiduatedLanguage(f.to_string()));
            }
        }
    }
    let lifted = |x: &Formula| Formula::or(x.clone(), Formula::not(x.clone()));
    let vars = q.vars();
    let mut premises = q.premises.clone();
    for v in &vars {
        let x = Formula::var(v);
        premises.push(Equation::new(lifted(&x), x));
    }
    let equation = q.premises.is_empty().then(|| {
        let sigma: Substitution = vars.iter().map(|v| (v.clone(), lifted(&Formula::var(v)))).collect();
        Equation::new(q.conclusion.lhs.substitute(&sigma), q.conclusion.rhs.substitute(&sigma))
    });
    Ok(Starred { quasi: QuasiEquation::new(premises, q.conclusion.clone()), equation })
}

/// Adds `x ⇒ y := (x → y) ∧ (¬y → ¬x)`.
pub fn n4_strong_implication(a: &FiniteAlgebra) -> Result<FiniteAlgebra, BridgeError> {
    need(a, &[Op::WeakImp, Op::Neg])?;
    let w = |x, y| a.bin(Op::WeakImp, x, y);
    let n = |x| a.un(Op::Neg, x);
    Ok(a.with_binary(Op::Imp, |x, y| a.meet(w(x, y), w(n(y), n(x)))))
}

/// Adds `→` from `⇒` by the long term: with `u := (x ∧ (y ⇒ y)) ⇒ y`,
/// `x → y := (x ∧ (u ⇒ u)) ⇒ u`.
pub fn spinks_weak_implication(a: &FiniteAlgebra) -> Result<FiniteAlgebra, BridgeError> {
    need(a, &[Op::Imp])?;
    let i = |x, y| a.bin(Op::Imp, x, y);
    Ok(a.with_binary(Op::WeakImp, |x, y| {
        let u = i(a.meet(x, i(y, y)), y);
        i(a.meet(x, i(u, u)), u)
    }))
}

/// Adds `→` by the short form `x → y := x ⇒ (x ⇒ y)`, adequate on N3-lattices.
pub fn n3_weak_implication(a: &FiniteAlgebra) -> Result<FiniteAlgebra, BridgeError> {
    need(a, &[Op::Imp])?;
    Ok(a.with_binary(Op::WeakImp, |x, y| a.bin(Op::Imp, x, a.bin(Op::Imp, x, y))))
}

/// The same term as a formula, for use in proofs and equations.
pub fn spinks_term(x: &Formula, y: &Formula) -> Formula {
    let u = Formula::imp(Formula::and(x.clone(), Formula::imp(y.clone(), y.clone())), y.clone());
    Formula::imp(Formula::and(x.clone(), Formula::imp(u.clone(), u.clone())), u)
}

//! Declarative structural checks. Every axiom is a [`Law`] over a fixed
//! number of elements, swept over all tuples in lexicographic order; the
//! first violating tuple is the witness.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::congruence::{principal_congruence, quotient, Congruence};
use super::report::{AxiomVerdict, ValidationReport};
use super::{AlgebraError, Elem, FiniteAlgebra, Op};
use crate::calculus::{CalculusId, RuleId};
use crate::formula::{expand_defined, Formula, TargetLanguage};
use crate::semantics::Program;

/// Largest `Γ` length at which rule quasiequations are instantiated.
pub const QUASI_GAMMA_BOUND: usize = 2;

/// A universally quantified property of `arity` elements.
pub struct Law<'a> {
    pub name: String,
    pub arity: usize,
    holds: Box<dyn Fn(&[Elem]) -> bool + 'a>,
}

impl<'a> Law<'a> {
    pub fn new(name: impl Into<String>, arity: usize, holds: impl Fn(&[Elem]) -> bool + 'a) -> Law<'a> {
        Law { name: name.into(), arity, holds: Box::new(holds) }
    }

    pub fn holds_at(&self, args: &[Elem]) -> bool {
        (self.holds)(args)
    }

    /// Lexicographically least violating tuple over a carrier of size `n`.
    pub fn first_failure(&self, n: usize) -> Option<Vec<Elem>> {
        let k = self.arity;
        let mut t = vec![0; k];
        loop {
            if !self.holds_at(&t) {
                return Some(t);
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                t[i] += 1;
                if t[i] < n {
                    break;
                }
                t[i] = 0;
            }
        }
    }
}

impl fmt::Debug for Law<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Law({}, arity {})", self.name, self.arity)
    }
}

/// The named structural classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CheckKind {
    Lattice,
    Distributive,
    Cirl,
    Cibrl,
    Involutive,
    ThreePotent,
    SAlgebra,
    SAlgebraQuasi,
    Mv,
    N4,
    N3,
    CongruenceOrderable,
}

impl CheckKind {
    pub const ALL: [CheckKind; 12] = [
        CheckKind::Lattice,
        CheckKind::Distributive,
        CheckKind::Cirl,
        CheckKind::Cibrl,
        CheckKind::Involutive,
        CheckKind::ThreePotent,
        CheckKind::SAlgebra,
        CheckKind::SAlgebraQuasi,
        CheckKind::Mv,
        CheckKind::N4,
        CheckKind::N3,
        CheckKind::CongruenceOrderable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Lattice => "lattice",
            CheckKind::Distributive => "distributive",
            CheckKind::Cirl => "cirl",
            CheckKind::Cibrl => "cibrl",
            CheckKind::Involutive => "involutive",
            CheckKind::ThreePotent => "three-potent",
            CheckKind::SAlgebra => "s-algebra",
            CheckKind::SAlgebraQuasi => "s-algebra-quasi",
            CheckKind::Mv => "mv",
            CheckKind::N4 => "n4",
            CheckKind::N3 => "n3",
            CheckKind::CongruenceOrderable => "congruence-orderable",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown class `{s}`"))
    }
}

/// Adds every operation definable from the given ones:
/// `¬x := x ⇒ 0`, `0 := ¬1`, `1 := ¬0`, `x * y := ¬(x ⇒ ¬y)`, `x → y := x² ⇒ y`.
pub(crate) fn complete(a: &FiniteAlgebra) -> FiniteAlgebra {
    let mut a = a.clone();
    loop {
        let before = a.signature();
        if !a.has(Op::Neg) && a.has(Op::Imp) && a.has(Op::Zero) {
            let z = a.constant(Op::Zero).unwrap();
            let t: Vec<Elem> = (0..a.size()).map(|x| a.bin(Op::Imp, x, z)).collect();
            a = a.with_unary(Op::Neg, |x| t[x]);
        }
        if !a.has(Op::Zero) && a.has(Op::One) && a.has(Op::Neg) {
            let z = a.un(Op::Neg, a.constant(Op::One).unwrap());
            a = a.with_table(Op::Zero, super::Table::Constant(z)).unwrap();
        }
        if !a.has(Op::One) && a.has(Op::Zero) && a.has(Op::Neg) {
            let o = a.un(Op::Neg, a.constant(Op::Zero).unwrap());
            a = a.with_table(Op::One, super::Table::Constant(o)).unwrap();
        }
        if !a.has(Op::Fuse) && a.has(Op::Imp) && a.has(Op::Neg) {
            let b = a.clone();
            a = a.with_binary(Op::Fuse, |x, y| b.un(Op::Neg, b.bin(Op::Imp, x, b.un(Op::Neg, y))));
        }
        if !a.has(Op::WeakImp) && a.has(Op::Imp) && a.has(Op::Fuse) {
            let b = a.clone();
            a = a.with_binary(Op::WeakImp, |x, y| b.bin(Op::Imp, b.bin(Op::Fuse, x, x), y));
        }
        if a.signature() == before {
            return a;
        }
    }
}

fn require(a: &FiniteAlgebra, ops: &[Op]) -> Result<(), String> {
    let missing: Vec<&str> = ops.iter().filter(|o| !a.has(**o)).map(|o| o.symbol()).collect();
    if missing.is_empty() {
        Ok(())
    } else {
        Err(format!("signature lacks {}", missing.join(" ")))
    }
}

fn lattice_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) {
    let m = move |x, y| a.meet(x, y);
    let j = move |x, y| a.join(x, y);
    laws.push(Law::new("x&y = y&x", 2, move |t| m(t[0], t[1]) == m(t[1], t[0])));
    laws.push(Law::new("x|y = y|x", 2, move |t| j(t[0], t[1]) == j(t[1], t[0])));
    laws.push(Law::new("x&(y&z) = (x&y)&z", 3, move |t| m(t[0], m(t[1], t[2])) == m(m(t[0], t[1]), t[2])));
    laws.push(Law::new("x|(y|z) = (x|y)|z", 3, move |t| j(t[0], j(t[1], t[2])) == j(j(t[0], t[1]), t[2])));
    laws.push(Law::new("x&x = x", 1, move |t| m(t[0], t[0]) == t[0]));
    laws.push(Law::new("x|x = x", 1, move |t| j(t[0], t[0]) == t[0]));
    laws.push(Law::new("x&(x|y) = x", 2, move |t| m(t[0], j(t[0], t[1])) == t[0]));
    laws.push(Law::new("x|(x&y) = x", 2, move |t| j(t[0], m(t[0], t[1])) == t[0]));
}

fn bound_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) {
    if let Some(z) = a.constant(Op::Zero) {
        laws.push(Law::new("0 <= x", 1, move |t| a.leq(z, t[0])));
    }
    if let Some(o) = a.constant(Op::One) {
        laws.push(Law::new("x <= 1", 1, move |t| a.leq(t[0], o)));
    }
}

fn distributive_law<'a>(a: &'a FiniteAlgebra) -> Law<'a> {
    let m = move |x, y| a.meet(x, y);
    let j = move |x, y| a.join(x, y);
    Law::new("x&(y|z) = (x&y)|(x&z)", 3, move |t| m(t[0], j(t[1], t[2])) == j(m(t[0], t[1]), m(t[0], t[2])))
}

fn cirl_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    require(a, &[Op::Fuse, Op::Imp, Op::One])?;
    lattice_laws(a, laws);
    let o = a.constant(Op::One).unwrap();
    let f = move |x, y| a.bin(Op::Fuse, x, y);
    let i = move |x, y| a.bin(Op::Imp, x, y);
    laws.push(Law::new("x <= 1", 1, move |t| a.leq(t[0], o)));
    laws.push(Law::new("x*y = y*x", 2, move |t| f(t[0], t[1]) == f(t[1], t[0])));
    laws.push(Law::new("x*(y*z) = (x*y)*z", 3, move |t| f(t[0], f(t[1], t[2])) == f(f(t[0], t[1]), t[2])));
    laws.push(Law::new("1*x = x", 1, move |t| f(o, t[0]) == t[0]));
    laws.push(Law::new("x*y <= z iff y <= x=>z", 3, move |t| a.leq(f(t[0], t[1]), t[2]) == a.leq(t[1], i(t[0], t[2]))));
    Ok(())
}

fn cibrl_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    require(a, &[Op::Fuse, Op::Imp, Op::One, Op::Zero])?;
    cirl_laws(a, laws)?;
    let z = a.constant(Op::Zero).unwrap();
    laws.push(Law::new("0 <= x", 1, move |t| a.leq(z, t[0])));
    Ok(())
}

fn involutive_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    require(a, &[Op::Imp, Op::Zero])?;
    let z = a.constant(Op::Zero).unwrap();
    let i = move |x, y| a.bin(Op::Imp, x, y);
    let n = move |x| i(x, z);
    laws.push(Law::new("(x=>0)=>0 = x", 1, move |t| n(n(t[0])) == t[0]));
    laws.push(Law::new("x=>y = (y=>0)=>(x=>0)", 2, move |t| i(t[0], t[1]) == i(n(t[1]), n(t[0]))));
    Ok(())
}

fn three_potent_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    require(a, &[Op::Fuse])?;
    let f = move |x, y| a.bin(Op::Fuse, x, y);
    laws.push(Law::new("x*x <= (x*x)*x", 1, move |t| a.leq(f(t[0], t[0]), f(f(t[0], t[0]), t[0]))));
    laws.push(Law::new("x*x = (x*x)*x", 1, move |t| f(t[0], t[0]) == f(f(t[0], t[0]), t[0])));
    Ok(())
}

fn s_algebra_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    cibrl_laws(a, laws)?;
    involutive_laws(a, laws)?;
    three_potent_laws(a, laws)?;
    let z = a.constant(Op::Zero).unwrap();
    laws.push(Law::new("~x = x=>0", 1, move |t| a.un(Op::Neg, t[0]) == a.bin(Op::Imp, t[0], z)));
    Ok(())
}

fn mv_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    cibrl_laws(a, laws)?;
    involutive_laws(a, laws)?;
    let f = move |x, y| a.bin(Op::Fuse, x, y);
    let i = move |x, y| a.bin(Op::Imp, x, y);
    laws.push(Law::new("x*(x=>y) = x&y", 2, move |t| f(t[0], i(t[0], t[1])) == a.meet(t[0], t[1])));
    Ok(())
}

/// Quasiequations with every `φᵢ ≈ 1` premise and `φ ≈ 1` conclusion; the
/// law's arguments are the formula variables in sorted order.
fn quasi_law<'a>(a: &'a FiniteAlgebra, name: String, premises: &[Formula], conclusion: &Formula) -> Result<Law<'a>, String> {
    let one = Formula::One;
    let mut fs: Vec<&Formula> = premises.iter().collect();
    fs.push(conclusion);
    fs.push(&one);
    let prog = Program::new(a, fs).map_err(|e| e.to_string())?;
    let k = prog.vars().len();
    let np = premises.len();
    Ok(Law::new(name, k, move |t| {
        let top = prog.eval(np + 1, t);
        (0..np).any(|i| prog.eval(i, t) != top) || prog.eval(np, t) == top
    }))
}

fn equation_law<'a>(a: &'a FiniteAlgebra, name: String, lhs: &Formula, rhs: &Formula) -> Result<Law<'a>, String> {
    let prog = Program::new(a, [lhs, rhs]).map_err(|e| e.to_string())?;
    let k = prog.vars().len();
    Ok(Law::new(name, k, move |t| prog.eval(0, t) == prog.eval(1, t)))
}

fn s_quasi_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    require(a, &[Op::Imp, Op::Neg, Op::Zero, Op::One])?;
    let nelson = |f: &Formula| expand_defined(f, TargetLanguage::Nelson);
    for ax in CalculusId::SNelson.axioms() {
        laws.push(quasi_law(a, format!("E({ax})"), &[], &nelson(&ax.schema()))?);
    }
    let x = Formula::var("x");
    let y = Formula::var("y");
    laws.push(equation_law(a, "x=>x = 1".into(), &Formula::imp(x.clone(), x.clone()), &Formula::One)?);
    for rule in RuleId::TABLE {
        let lengths = if rule.gamma_power().is_some() { QUASI_GAMMA_BOUND } else { 0 };
        for k in 0..=lengths {
            let (ps, c) = rule.elaborate(k);
            let ps: Vec<Formula> = ps.iter().map(nelson).collect();
            let name = if rule.gamma_power().is_some() { format!("Q({rule})[{k}]") } else { format!("Q({rule})") };
            laws.push(quasi_law(a, name, &ps, &nelson(&c))?);
        }
    }
    let prog = Program::new(a, [&Formula::imp(x.clone(), y.clone()), &Formula::imp(y, x), &Formula::One])
        .map_err(|e| e.to_string())?;
    laws.push(Law::new("x=>y = 1, y=>x = 1 ==> x = y", 2, move |t| {
        let top = prog.eval(2, t);
        prog.eval(0, t) != top || prog.eval(1, t) != top || t[0] == t[1]
    }));
    Ok(())
}

/// `a ⪯ b` iff `(a → b) → (a → b) = a → b`.
fn weak_leq(a: &FiniteAlgebra, x: Elem, y: Elem) -> bool {
    let w = a.bin(Op::WeakImp, x, y);
    a.bin(Op::WeakImp, w, w) == w
}

fn weak_equiv(a: &FiniteAlgebra, x: Elem, y: Elem) -> bool {
    weak_leq(a, x, y) && weak_leq(a, y, x)
}

fn n4_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    require(a, &[Op::WeakImp, Op::Neg])?;
    lattice_laws(a, laws);
    laws.push(distributive_law(a));
    let n = move |x| a.un(Op::Neg, x);
    let m = move |x, y| a.meet(x, y);
    let j = move |x, y| a.join(x, y);
    let w = move |x, y| a.bin(Op::WeakImp, x, y);
    let le = move |x, y| weak_leq(a, x, y);
    let eq = move |x, y| weak_equiv(a, x, y);
    laws.push(Law::new("~~x = x", 1, move |t| n(n(t[0])) == t[0]));
    laws.push(Law::new("~(x&y) = ~x|~y", 2, move |t| n(m(t[0], t[1])) == j(n(t[0]), n(t[1]))));
    laws.push(Law::new("~(x|y) = ~x&~y", 2, move |t| n(j(t[0], t[1])) == m(n(t[0]), n(t[1]))));
    laws.push(Law::new("x <~ x", 1, move |t| le(t[0], t[0])));
    laws.push(Law::new("x <~ y, y <~ z ==> x <~ z", 3, move |t| !(le(t[0], t[1]) && le(t[1], t[2])) || le(t[0], t[2])));
    for (sym, op) in [("&", Op::Meet), ("|", Op::Join), ("->", Op::WeakImp)] {
        let o = move |x, y| a.bin(op, x, y);
        laws.push(Law::new(format!("x ~ y ==> x{sym}z ~ y{sym}z and z{sym}x ~ z{sym}y"), 3, move |t| {
            !eq(t[0], t[1]) || (eq(o(t[0], t[2]), o(t[1], t[2])) && eq(o(t[2], t[0]), o(t[2], t[1])))
        }));
    }
    laws.push(Law::new("z&x&y ~ z&x iff z&(x->y) ~ z", 3, move |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        eq(m(m(z, x), y), m(z, x)) == eq(m(z, w(x, y)), z)
    }));
    laws.push(Law::new("~(x->y) ~ x&~y", 2, move |t| eq(n(w(t[0], t[1])), m(t[0], n(t[1])))));
    laws.push(Law::new("x <= y iff x <~ y and ~y <~ ~x", 2, move |t| {
        a.leq(t[0], t[1]) == (le(t[0], t[1]) && le(n(t[1]), n(t[0])))
    }));
    Ok(())
}

fn n3_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    n4_laws(a, laws)?;
    let w = move |x, y| a.bin(Op::WeakImp, x, y);
    laws.push(Law::new("x->x = y->y", 2, move |t| w(t[0], t[0]) == w(t[1], t[1])));
    Ok(())
}

fn orderability_laws<'a>(a: &'a FiniteAlgebra, laws: &mut Vec<Law<'a>>) -> Result<(), String> {
    require(a, &[Op::Zero, Op::One])?;
    let (z, o) = (a.constant(Op::Zero).unwrap(), a.constant(Op::One).unwrap());
    let up: Vec<Congruence> = (0..a.size()).map(|x| principal_congruence(a, x, o)).collect();
    let down: Vec<Congruence> = (0..a.size()).map(|x| principal_congruence(a, x, z)).collect();
    laws.push(Law::new("th(y,1) <= th(x,1), th(x,0) <= th(y,0) ==> x <= y", 2, move |t| {
        let (x, y) = (t[0], t[1]);
        !(up[y].is_subset_of(&up[x]) && down[x].is_subset_of(&down[y])) || a.leq(x, y)
    }));
    Ok(())
}

fn laws_for<'a>(a: &'a FiniteAlgebra, kind: CheckKind) -> Result<Vec<Law<'a>>, String> {
    let mut laws = Vec::new();
    match kind {
        CheckKind::Lattice => {
            lattice_laws(a, &mut laws);
            bound_laws(a, &mut laws);
        }
        CheckKind::Distributive => laws.push(distributive_law(a)),
        CheckKind::Cirl => cirl_laws(a, &mut laws)?,
        CheckKind::Cibrl => cibrl_laws(a, &mut laws)?,
        CheckKind::Involutive => involutive_laws(a, &mut laws)?,
        CheckKind::ThreePotent => three_potent_laws(a, &mut laws)?,
        CheckKind::SAlgebra => s_algebra_laws(a, &mut laws)?,
        CheckKind::SAlgebraQuasi => s_quasi_laws(a, &mut laws)?,
        CheckKind::Mv => mv_laws(a, &mut laws)?,
        CheckKind::N4 => n4_laws(a, &mut laws)?,
        CheckKind::N3 => n3_laws(a, &mut laws)?,
        CheckKind::CongruenceOrderable => orderability_laws(a, &mut laws)?,
    }
    Ok(laws)
}

/// Runs every law of `kind` on `a` (after adding derivable operations) and
/// reports each, failures with their least witness.
pub fn validate(a: &FiniteAlgebra, kind: CheckKind) -> ValidationReport {
    let full = complete(a);
    let mut report = ValidationReport::new(a, kind.name());
    match laws_for(&full, kind) {
        Err(note) => report.push_unmet("signature", note),
        Ok(laws) => {
            for law in laws {
                let witness = law.first_failure(full.size());
                let witness_names = witness.as_ref().map(|w| w.iter().map(|&e| full.element_name(e).to_string()).collect());
                report.push(AxiomVerdict { axiom: law.name, holds: witness.is_none(), witness, witness_names, note: None });
            }
        }
    }
    report
}

/// Re-evaluates the named law of `kind` at `witness`; `None` when no such
/// law exists for `a`.
pub fn recheck_witness(a: &FiniteAlgebra, kind: CheckKind, axiom: &str, witness: &[Elem]) -> Option<bool> {
    let full = complete(a);
    let laws = laws_for(&full, kind).ok()?;
    let law = laws.into_iter().find(|l| l.name == axiom)?;
    (law.arity == witness.len() && witness.iter().all(|&e| e < full.size())).then(|| law.holds_at(witness))
}

pub fn check_lattice(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::Lattice)
}

pub fn check_distributive(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::Distributive)
}

pub fn check_cirl(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::Cirl)
}

pub fn check_cibrl(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::Cibrl)
}

pub fn check_involutive(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::Involutive)
}

pub fn check_three_potent(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::ThreePotent)
}

/// Three-potent involutive CIBRL; `*` or `¬` is derived when missing.
pub fn validate_s_algebra(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::SAlgebra)
}

/// The equations `E(A1)`–`E(A5)`, `x ⇒ x ≈ 1`, every rule quasiequation
/// with `Γ` up to [`QUASI_GAMMA_BOUND`], and the congruence quasiequation.
pub fn validate_s_algebra_via_quasiequations(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::SAlgebraQuasi)
}

pub fn check_mv(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::Mv)
}

/// `→` is derived as `x² ⇒ y` when only `⇒` is given.
pub fn check_n4_lattice(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::N4)
}

pub fn check_n3_lattice(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::N3)
}

pub fn check_congruence_orderability(a: &FiniteAlgebra) -> ValidationReport {
    validate(a, CheckKind::CongruenceOrderable)
}

/// The preorder `⪯` of an algebra with `→`, its equivalence `≡` and the
/// quotient `⟨A, ∧, ∨, →⟩/≡`.
#[derive(Debug, Clone)]
pub struct N4Analysis {
    /// `preorder[x][y]` iff `x ⪯ y`.
    pub preorder: Vec<Vec<bool>>,
    pub equivalence: Congruence,
    pub quotient: FiniteAlgebra,
}

impl N4Analysis {
    pub fn of(a: &FiniteAlgebra) -> Result<N4Analysis, AlgebraError> {
        let full = complete(a);
        if !full.has(Op::WeakImp) {
            return Err(AlgebraError::MissingOp(Op::WeakImp));
        }
        let n = full.size();
        let preorder = (0..n).map(|x| (0..n).map(|y| weak_leq(&full, x, y)).collect()).collect();
        let equivalence = Congruence::from_relation(n, |x, y| weak_equiv(&full, x, y))?;
        let reduct = full.reduct(&[Op::WeakImp]);
        let quotient = quotient(&reduct, &equivalence)?;
        Ok(N4Analysis { preorder, equivalence, quotient })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    fn godel3() -> FiniteAlgebra {
        let imp = |x: Elem, y: Elem| if x <= y { 2 } else { y };
        FiniteAlgebra::from_fns(
            "G3",
            vec!["0".into(), "m".into(), "1".into()],
            &[(Op::Meet, &|x: Elem, y: Elem| x.min(y)), (Op::Join, &|x: Elem, y: Elem| x.max(y)), (Op::Fuse, &|x: Elem, y: Elem| x.min(y)), (Op::Imp, &imp)],
            &[],
            &[(Op::Zero, 0), (Op::One, 2)],
        )
        .unwrap()
    }

    fn boolean() -> FiniteAlgebra {
        parse_algebra("algebra B\nelements 0 1\nop &\n0 0\n0 1\nop |\n0 1\n1 1\nop =>\n1 1\n0 1\nconst 0 0\nconst 1 1\n").unwrap()
    }

    #[test]
    fn godel_chain_is_a_cirl_but_not_involutive() {
        let g = godel3();
        assert!(check_cirl(&g).passed());
        let r = check_involutive(&g);
        assert!(!r.passed());
        assert_eq!(r.verdict("(x=>0)=>0 = x").unwrap().witness, Some(vec![1]));
        let q = validate_s_algebra_via_quasiequations(&g);
        assert!(!q.passed());
        assert!(!q.verdict("E(A5)").unwrap().holds);
    }

    #[test]
    fn boolean_passes_everything() {
        let b = boolean();
        for kind in CheckKind::ALL {
            let r = validate(&b, kind);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn witnesses_recheck() {
        let g = godel3();
        for kind in CheckKind::ALL {
            let r = validate(&g, kind);
            for f in r.failures().filter(|f| f.witness.is_some()) {
                assert_eq!(recheck_witness(&g, kind, &f.axiom, f.witness.as_ref().unwrap()), Some(false));
            }
        }
    }

    #[test]
    fn missing_operations_are_reported() {
        let lattice = boolean().reduct(&[]);
        let r = validate_s_algebra(&lattice);
        assert!(!r.passed());
        assert!(r.verdict("signature").unwrap().note.is_some());
    }

    #[test]
    fn boolean_n4_quotient() {
        let an = N4Analysis::of(&boolean()).unwrap();
        assert_eq!(an.quotient.size(), 2);
    }
}

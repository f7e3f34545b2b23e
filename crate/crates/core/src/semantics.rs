//! Evaluation of formulas in finite algebras, (quasi)equation checking and
//! countermodel search by exhaustive valuation sweeps.
//!
//! Sweeps only range over the variables that occur in the formulas at hand,
//! sorted by name, with the first variable most significant. The first
//! falsifying valuation in that order is the reported witness.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Elem, FiniteAlgebra, Op, Table};
use crate::formula::{self, BinOp, Formula};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` has no value")]
    Unbound(String),
    #[error("`{symbol}` cannot be expressed in the signature of {algebra}")]
    NotInSignature { symbol: String, algebra: String },
    #[error(transparent)]
    Parse(#[from] formula::ParseError),
    #[error("malformed equation: {0}")]
    Malformed(String),
}

/// An assignment of carrier elements to variable names.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Valuation(pub BTreeMap<Arc<str>, Elem>);

impl Valuation {
    pub fn new() -> Valuation {
        Valuation::default()
    }

    /// Looks up element names in `a`.
    pub fn from_names(a: &FiniteAlgebra, pairs: &[(&str, &str)]) -> Result<Valuation, crate::algebra::AlgebraError> {
        let mut v = Valuation::new();
        for (var, elem) in pairs {
            v.0.insert(Arc::from(*var), a.element(elem)?);
        }
        Ok(v)
    }

    pub fn get(&self, var: &str) -> Option<Elem> {
        self.0.get(var).copied()
    }

    pub fn set(&mut self, var: &str, e: Elem) {
        self.0.insert(Arc::from(var), e);
    }

    pub fn named(&self, a: &FiniteAlgebra) -> Vec<(String, String)> {
        self.0.iter().map(|(k, &v)| (k.to_string(), a.element_name(v).to_string())).collect()
    }

    pub fn display<'a>(&'a self, a: &'a FiniteAlgebra) -> impl fmt::Display + 'a {
        DisplayValuation(self, a)
    }
}

struct DisplayValuation<'a>(&'a Valuation, &'a FiniteAlgebra);

impl fmt::Display for DisplayValuation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.named(self.1).into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `lhs ≈ rhs`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Equation {
    pub fn new(lhs: Formula, rhs: Formula) -> Equation {
        Equation { lhs, rhs }
    }

    /// Parses `lhs = rhs` (or `lhs ≈ rhs`).
    pub fn parse(text: &str) -> Result<Equation, EvalError> {
        let split = find_equals(text).ok_or_else(|| EvalError::Malformed(format!("no `=` in `{text}`")))?;
        let (l, r) = (&text[..split.0], &text[split.0 + split.1..]);
        Ok(Equation::new(formula::parse(l)?, formula::parse(r)?))
    }

    pub fn vars(&self) -> Vec<Arc<str>> {
        sorted_vars([&self.lhs, &self.rhs])
    }
}

/// Byte offset and length of the equality sign separating the two sides.
fn find_equals(text: &str) -> Option<(usize, usize)> {
    if let Some(i) = text.find('≈') {
        return Some((i, '≈'.len_utf8()));
    }
    let bytes = text.as_bytes();
    (0..bytes.len())
        .find(|&i| bytes[i] == b'=' && bytes.get(i + 1) != Some(&b'>') && (i == 0 || bytes[i - 1] != b'<'))
        .map(|i| (i, 1))
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// `e₁ & … & eₙ ⟹ e`; with no premises it is just an equation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuasiEquation {
    pub premises: Vec<Equation>,
    pub conclusion: Equation,
}

impl QuasiEquation {
    pub fn new(premises: Vec<Equation>, conclusion: Equation) -> QuasiEquation {
        QuasiEquation { premises, conclusion }
    }

    pub fn equation(e: Equation) -> QuasiEquation {
        QuasiEquation { premises: Vec::new(), conclusion: e }
    }

    /// Parses `e1, e2, ... ==> e` (or a bare equation).
    pub fn parse(text: &str) -> Result<QuasiEquation, EvalError> {
        let (prem, concl) = match text.find("==>").map(|i| (i, 3)).or_else(|| text.find('⟹').map(|i| (i, '⟹'.len_utf8()))) {
            Some((i, len)) => (&text[..i], &text[i + len..]),
            None => ("", text),
        };
        let premises = prem
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(Equation::parse)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QuasiEquation { premises, conclusion: Equation::parse(concl)? })
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.premises.iter().chain(std::iter::once(&self.conclusion)).flat_map(|e| [&e.lhs, &e.rhs])
    }

    pub fn vars(&self) -> Vec<Arc<str>> {
        sorted_vars(self.formulas())
    }
}

impl fmt::Display for QuasiEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.premises.is_empty() {
            let ps: Vec<String> = self.premises.iter().map(|e| e.to_string()).collect();
            write!(f, "{} ==> ", ps.join(", "))?;
        }
        write!(f, "{}", self.conclusion)
    }
}

fn sorted_vars<'a>(fs: impl IntoIterator<Item = &'a Formula>) -> Vec<Arc<str>> {
    let mut vs: Vec<Arc<str>> = fs.into_iter().flat_map(|f| f.vars()).collect();
    vs.sort();
    vs.dedup();
    vs
}

/// Rewrites connectives the algebra lacks through their definitions
/// (`1 := ¬0`, `0 := ¬1`, `¬x := x ⇒ 0`, `x * y := ¬(x ⇒ ¬y)`,
/// `x → y := x² ⇒ y`), failing when no definition fits.
pub fn fit_to_signature(f: &Formula, a: &FiniteAlgebra) -> Result<Formula, EvalError> {
    let missing = |sym: &str| EvalError::NotInSignature { symbol: sym.to_string(), algebra: a.name().to_string() };
    Ok(match f {
        Formula::Var(_) => f.clone(),
        Formula::Zero => {
            if a.has(Op::Zero) {
                f.clone()
            } else if a.has(Op::Neg) && a.has(Op::One) {
                Formula::not(Formula::One)
            } else {
                return Err(missing("0"));
            }
        }
        Formula::One => {
            if a.has(Op::One) {
                f.clone()
            } else if a.has(Op::Zero) && (a.has(Op::Neg) || a.has(Op::Imp)) {
                fit_to_signature(&Formula::not(Formula::Zero), a)?
            } else {
                return Err(missing("1"));
            }
        }
        Formula::Not(g) => {
            let g = fit_to_signature(g, a)?;
            if a.has(Op::Neg) {
                Formula::not(g)
            } else if a.has(Op::Imp) && a.has(Op::Zero) {
                Formula::imp(g, Formula::Zero)
            } else {
                return Err(missing("~"));
            }
        }
        Formula::Bin(op, l, r) => {
            let (l, r) = (fit_to_signature(l, a)?, fit_to_signature(r, a)?);
            if a.has(Op::from_binop(*op)) {
                Formula::bin(*op, l, r)
            } else {
                match op {
                    BinOp::Fuse if a.has(Op::Imp) => {
                        fit_to_signature(&Formula::not(Formula::imp(l, Formula::not(r))), a)
                            .map_err(|_| missing("*"))?
                    }
                    BinOp::WeakImp if a.has(Op::Imp) => {
                        fit_to_signature(&Formula::imp(Formula::square(l), r), a).map_err(|_| missing("->"))?
                    }
                    _ => return Err(missing(op.ascii())),
                }
            }
        }
    })
}

#[derive(Debug, Clone, Copy)]
enum Instr<'a> {
    Load(usize),
    Const(Elem),
    Un(&'a [Elem]),
    Bin(&'a [Elem]),
}

/// A batch of formulas compiled against one algebra and one variable order.
pub struct Program<'a> {
    n: usize,
    vars: Vec<Arc<str>>,
    code: Vec<Vec<Instr<'a>>>,
}

impl<'a> Program<'a> {
    /// Compiles `formulas` over the sorted union of their variables.
    pub fn new<'f>(a: &'a FiniteAlgebra, formulas: impl IntoIterator<Item = &'f Formula>) -> Result<Program<'a>, EvalError> {
        let formulas: Vec<&Formula> = formulas.into_iter().collect();
        let vars = sorted_vars(formulas.iter().copied());
        Program::with_vars(a, formulas, vars)
    }

    pub fn with_vars<'f>(
        a: &'a FiniteAlgebra,
        formulas: impl IntoIterator<Item = &'f Formula>,
        vars: Vec<Arc<str>>,
    ) -> Result<Program<'a>, EvalError> {
        let mut code = Vec::new();
        for f in formulas {
            let fitted = fit_to_signature(f, a)?;
            let mut out = Vec::new();
            emit(&fitted, a, &vars, &mut out)?;
            code.push(out);
        }
        Ok(Program { n: a.size(), vars, code })
    }

    pub fn vars(&self) -> &[Arc<str>] {
        &self.vars
    }

    /// Value of formula `which` with `values[i]` assigned to `vars()[i]`.
    pub fn eval(&self, which: usize, values: &[Elem]) -> Elem {
        let code = &self.code[which];
        if code.len() <= 64 {
            let mut stack: [Elem; 64] = [0; 64];
            self.run(code, values, &mut stack)
        } else {
            let mut stack = vec![0; code.len()];
            self.run(code, values, &mut stack)
        }
    }

    fn run(&self, code: &[Instr<'a>], values: &[Elem], stack: &mut [Elem]) -> Elem {
        let mut sp = 0;
        let n = self.n;
        for ins in code {
            match *ins {
                Instr::Load(i) => {
                    stack[sp] = values[i];
                    sp += 1;
                }
                Instr::Const(c) => {
                    stack[sp] = c;
                    sp += 1;
                }
                Instr::Un(t) => stack[sp - 1] = t[stack[sp - 1]],
                Instr::Bin(t) => {
                    sp -= 1;
                    stack[sp - 1] = t[stack[sp - 1] * n + stack[sp]];
                }
            }
        }
        debug_assert_eq!(sp, 1);
        stack[0]
    }

    pub fn valuation(&self, values: &[Elem]) -> Valuation {
        Valuation(self.vars.iter().cloned().zip(values.iter().copied()).collect())
    }

    /// Values in sweep order for a valuation that binds every variable.
    pub fn values_of(&self, v: &Valuation) -> Result<Vec<Elem>, EvalError> {
        self.vars.iter().map(|x| v.get(x).ok_or_else(|| EvalError::Unbound(x.to_string()))).collect()
    }

    /// Visits every valuation in lexicographic order until `visit` returns
    /// `false`; returns the values at which it stopped.
    pub fn sweep(&self, mut visit: impl FnMut(&[Elem]) -> bool) -> Option<Vec<Elem>> {
        let k = self.vars.len();
        let mut vals = vec![0; k];
        loop {
            if !visit(&vals) {
                return Some(vals);
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                vals[i] += 1;
                if vals[i] < self.n {
                    break;
                }
                vals[i] = 0;
            }
        }
    }
}

fn emit<'a>(f: &Formula, a: &'a FiniteAlgebra, vars: &[Arc<str>], out: &mut Vec<Instr<'a>>) -> Result<(), EvalError> {
    let table = |op: Op| a.table(op).ok_or_else(|| EvalError::NotInSignature { symbol: op.symbol().into(), algebra: a.name().into() });
    match f {
        Formula::Var(v) => {
            let i = vars.iter().position(|x| x == v).ok_or_else(|| EvalError::Unbound(v.to_string()))?;
            out.push(Instr::Load(i));
        }
        Formula::Zero | Formula::One => {
            let op = if matches!(f, Formula::Zero) { Op::Zero } else { Op::One };
            match table(op)? {
                Table::Constant(c) => out.push(Instr::Const(*c)),
                _ => unreachable!(),
            }
        }
        Formula::Not(g) => {
            emit(g, a, vars, out)?;
            match table(Op::Neg)? {
                Table::Unary(t) => out.push(Instr::Un(t)),
                _ => unreachable!(),
            }
        }
        Formula::Bin(op, l, r) => {
            emit(l, a, vars, out)?;
            emit(r, a, vars, out)?;
            match table(Op::from_binop(*op))? {
                Table::Binary(t) => out.push(Instr::Bin(t)),
                _ => unreachable!(),
            }
        }
    }
    Ok(())
}

/// Homomorphic evaluation of `f` under `v`.
pub fn eval(f: &Formula, v: &Valuation, a: &FiniteAlgebra) -> Result<Elem, EvalError> {
    let prog = Program::new(a, [f])?;
    let values = prog.values_of(v)?;
    Ok(prog.eval(0, &values))
}

/// Result of an exhaustive check: on failure, the first falsifying valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Satisfaction {
    pub holds: bool,
    pub witness: Option<Valuation>,
}

pub fn satisfies_equation(a: &FiniteAlgebra, e: &Equation) -> Result<Satisfaction, EvalError> {
    satisfies_quasiequation(a, &QuasiEquation::equation(e.clone()))
}

pub fn satisfies_quasiequation(a: &FiniteAlgebra, q: &QuasiEquation) -> Result<Satisfaction, EvalError> {
    let prog = Program::new(a, q.formulas())?;
    let np = q.premises.len();
    let stop = prog.sweep(|vals| {
        let premises_hold = (0..np).all(|i| prog.eval(2 * i, vals) == prog.eval(2 * i + 1, vals));
        !premises_hold || prog.eval(2 * np, vals) == prog.eval(2 * np + 1, vals)
    });
    Ok(match stop {
        None => Satisfaction { holds: true, witness: None },
        Some(vals) => Satisfaction { holds: false, witness: Some(prog.valuation(&vals)) },
    })
}

/// A valuation under which a formula does not evaluate to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub valuation: Valuation,
    pub value: Elem,
}

/// First valuation (in sweep order) with `f ≠ 1`, or `None` when `f` is valid.
pub fn find_countermodel(a: &FiniteAlgebra, f: &Formula) -> Result<Option<Countermodel>, EvalError> {
    let one = Formula::One;
    let prog = Program::new(a, [f, &one])?;
    let top = prog.eval(1, &vec![0; prog.vars().len()]);
    Ok(prog
        .sweep(|vals| prog.eval(0, vals) == top)
        .map(|vals| Countermodel { value: prog.eval(0, &vals), valuation: prog.valuation(&vals) }))
}

/// One formula of the non-derivability suite, with the valuation under
/// which the eight-element algebra refutes it.
#[derive(Debug, Clone)]
pub struct SuiteItem {
    pub index: usize,
    pub name: &'static str,
    pub formula: Formula,
    pub reference: Vec<(&'static str, &'static str)>,
}

/// The nine formulas refuted in the eight-element non-distributive
/// S-algebra, each with a hand-computed refuting valuation whose value is `a`.
pub fn separation_items() -> Vec<SuiteItem> {
    let items: [(&str, &str, &[(&str, &str)]); 9] = [
        ("excluded middle", "p | ~p", &[("p", "c")]),
        ("non-contradiction", "~(p & ~p)", &[("p", "c")]),
        ("ex contradictione", "(p & ~p) => q", &[("p", "c"), ("q", "0")]),
        ("contraction", "(p => (p => q)) => (p => q)", &[("p", "c"), ("q", "0")]),
        ("importation", "(p => (q => r)) => ((p & q) => r)", &[("p", "c"), ("q", "c"), ("r", "0")]),
        ("negated implication", "(p & ~q) => ~(p => q)", &[("p", "c"), ("q", "c")]),
        ("Lukasiewicz", "((p => q) => q) => ((q => p) => p)", &[("p", "~c"), ("q", "c")]),
        ("distributivity", "(p & (q | r)) => ((p & q) | (p & r))", &[("p", "c"), ("q", "~c"), ("r", "~b")]),
        ("Nelson", "(((p * p) => q) & ((~q * ~q) => ~p)) => (p => q)", &[("p", "c"), ("q", "~b")]),
    ];
    items
        .iter()
        .enumerate()
        .map(|(i, (name, text, val))| SuiteItem {
            index: i + 1,
            name,
            formula: formula::parse(text).expect("suite formulas parse"),
            reference: val.to_vec(),
        })
        .collect()
}

/// Outcome for one suite formula.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub item: SuiteItem,
    pub found: Option<Countermodel>,
    pub reference_value: Elem,
}

impl SuiteOutcome {
    pub fn refuted(&self) -> bool {
        self.found.is_some()
    }
}

/// Runs [`separation_items`] against `a`.
pub fn check_separation_suite(a: &FiniteAlgebra) -> Result<Vec<SuiteOutcome>, EvalError> {
    separation_items()
        .into_iter()
        .map(|item| {
            let found = find_countermodel(a, &item.formula)?;
            let v = Valuation::from_names(a, &item.reference).map_err(|e| EvalError::Malformed(e.to_string()))?;
            let reference_value = eval(&item.formula, &v, a)?;
            Ok(SuiteOutcome { item, found, reference_value })
        })
        .collect()
}

/// Per-algebra evidence about the deduction theorem with `φ² ⇒ ψ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DdtEvidence {
    /// every valuation sending `φ` to 1 sends `ψ` to 1
    pub consequence: bool,
    /// `φ² ⇒ ψ` evaluates to 1 under every valuation
    pub implication_valid: bool,
}

impl DdtEvidence {
    pub fn agree(&self) -> bool {
        self.consequence == self.implication_valid
    }
}

pub fn semantic_ddt_check(a: &FiniteAlgebra, phi: &Formula, psi: &Formula) -> Result<DdtEvidence, EvalError> {
    let one = Formula::One;
    let imp = Formula::imp(Formula::square(phi.clone()), psi.clone());
    let prog = Program::new(a, [phi, psi, &imp, &one])?;
    let top = prog.eval(3, &vec![0; prog.vars().len()]);
    let consequence = prog.sweep(|v| prog.eval(0, v) != top || prog.eval(1, v) == top).is_none();
    let implication_valid = prog.sweep(|v| prog.eval(2, v) == top).is_none();
    Ok(DdtEvidence { consequence, implication_valid })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_algebra;

    fn boolean() -> FiniteAlgebra {
        parse_algebra(
            "algebra B\nelements 0 1\nop &\n0 0\n0 1\nop |\n0 1\n1 1\nop =>\n1 1\n0 1\nop ~\n1 0\nconst 0 0\nconst 1 1\n",
        )
        .unwrap()
    }

    #[test]
    fn parses_equations() {
        let e = Equation::parse("x => y = 1").unwrap();
        assert_eq!(e.rhs, Formula::One);
        let e = Equation::parse("p <=> q = q <=> p").unwrap();
        assert_eq!(e.lhs, Formula::iff(Formula::var("p"), Formula::var("q")));
        let q = QuasiEquation::parse("x => y = 1, y => x = 1 ==> x = y").unwrap();
        assert_eq!(q.premises.len(), 2);
        assert_eq!(q.vars().len(), 2);
        assert!(Equation::parse("p => q").is_err());
    }

    #[test]
    fn classical_tautologies() {
        let b = boolean();
        let lem = formula::parse("p | ~p").unwrap();
        assert_eq!(find_countermodel(&b, &lem).unwrap(), None);
        let bad = formula::parse("p => q").unwrap();
        let cm = find_countermodel(&b, &bad).unwrap().unwrap();
        assert_eq!(cm.valuation.get("p"), Some(1));
        assert_eq!(cm.valuation.get("q"), Some(0));
        assert_eq!(cm.value, 0);
    }

    #[test]
    fn derived_connectives_are_fitted() {
        let b = boolean();
        let f = formula::parse("p * q").unwrap();
        let mut v = Valuation::new();
        v.set("p", 1);
        v.set("q", 1);
        assert_eq!(eval(&f, &v, &b).unwrap(), 1);
        v.set("q", 0);
        assert_eq!(eval(&f, &v, &b).unwrap(), 0);
    }

    #[test]
    fn unbound_and_missing() {
        let b = boolean();
        let f = formula::parse("p & q").unwrap();
        let mut v = Valuation::new();
        v.set("p", 0);
        assert_eq!(eval(&f, &v, &b), Err(EvalError::Unbound("q".into())));
        let lattice = b.reduct(&[]);
        let f = formula::parse("p => q").unwrap();
        assert!(matches!(eval(&f, &v, &lattice), Err(EvalError::NotInSignature { .. })));
    }

    #[test]
    fn vacuous_quasiequation() {
        let b = boolean();
        let q = QuasiEquation::parse("x = 1, x = 0 ==> 0 = 1").unwrap();
        assert!(satisfies_quasiequation(&b, &q).unwrap().holds);
    }
}

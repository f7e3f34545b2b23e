//! The reproduction suite: ten discrete checks tying the modules together,
//! each reported as pass/fail with a one-line detail.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::algebra::{
    check_congruence_orderability, check_distributive, check_mv, check_n3_lattice, check_n4_lattice, validate,
    validate_s_algebra, validate_s_algebra_via_quasiequations, CheckKind, FiniteAlgebra, N4Analysis, Op,
};
use crate::bridge::{double, n4_strong_implication, spinks_weak_implication, star_quasieq, to_s, to_s_prime};
use crate::calculus::corpus::CORPUS;
use crate::calculus::{check_derivation, parse_script, AxiomId, CalculusId, RuleId, StepEvidence, Verdict};
use crate::catalog;
use crate::search::{enumerate, isomorphic, SearchClass, SearchSpec};
use crate::semantics::{
    check_separation_suite, eval, find_countermodel, satisfies_equation, satisfies_quasiequation, Equation,
    QuasiEquation, Valuation,
};

/// `x ⇒ y` of the eight-element algebra as printed, rows `x`, columns `y`,
/// both in the order of [`A8_ORDER`].
pub const A8_IMP_ROWS: [&str; 8] = [
    "1 1 1 1 1 1 1 1",
    "0 1 c ~c ~b b a ~a",
    "~c 1 1 b a b 1 b",
    "c 1 c 1 c 1 1 c",
    "b 1 1 b 1 b 1 b",
    "~b 1 c a c 1 1 c",
    "~a 1 c b c b 1 ~a",
    "a 1 1 1 1 1 1 1",
];
pub const A8_ORDER: [&str; 8] = ["0", "1", "c", "~c", "~b", "b", "a", "~a"];

/// `((x² ⇒ y) ∧ ((¬y)² ⇒ ¬x)) ⇒ (x ⇒ y) ≈ 1`.
pub const NELSON_EQUATION: &str = "((x*x => y) & ((~y)*(~y) => ~x)) => (x => y) = 1";

/// Quasiequations in `∧ ∨ * ⇒ 1` checked against doubling.
pub const STAR_BATTERY: [&str; 8] = [
    "x & (y | z) = (x & y) | (x & z)",
    "x * x = x",
    "(x => y) | (y => x) = 1",
    "x * x = (x * x) * x",
    "x * (x => y) = x & y",
    "(x => y) => y = (y => x) => x",
    "x * x = x ==> x * y = x & y",
    "x | y = 1 ==> x * y = x & y",
];

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u128(d.as_millis())
}

type Check = fn() -> Result<String, String>;

pub const CRITERIA: [(&str, Check); 10] = [
    ("A8 implication table and S-algebra axioms", a8_fidelity),
    ("nine formulas refuted in A8", separation),
    ("doubling of L3", doubling_l3),
    ("A4 is N4 but not N3", a4_discrimination),
    ("direct and quasiequational validation agree", term_equivalence),
    ("class of the doubling over small CIRLs", doubling_classes),
    ("quasiequations transfer along doubling", star_transfer),
    ("S-algebras that are N4-lattices are N3-lattices", s_meets_n4),
    ("Nelson equation versus congruence orderability", orderability),
    ("soundness of S1-S15 and the proof corpus", soundness_and_corpus),
];

pub fn run(id: usize) -> Option<CriterionOutcome> {
    let (title, check) = *CRITERIA.get(id.checked_sub(1)?)?;
    let start = Instant::now();
    let result = check();
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionOutcome { id, title, passed, detail, elapsed })
}

pub fn run_all() -> Vec<CriterionOutcome> {
    (1..=CRITERIA.len()).filter_map(run).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cat(key: &str) -> Result<FiniteAlgebra, String> {
    catalog::get(key).map_err(|e| e.to_string())
}

fn s_algebras_up_to(n: usize) -> Result<Vec<FiniteAlgebra>, String> {
    Ok(enumerate(&SearchSpec::new(SearchClass::SAlgebra, n)).map_err(|e| e.to_string())?.models)
}

fn catalog_s_algebras() -> Result<Vec<FiniteAlgebra>, String> {
    Ok(catalog::entries()
        .into_iter()
        .filter(|e| e.expected.contains(&(CheckKind::SAlgebra, true)))
        .map(|e| e.algebra)
        .collect())
}

fn a8_fidelity() -> Result<String, String> {
    let a8 = cat("A8")?;
    let r = validate_s_algebra(&a8);
    ensure(r.passed(), || r.to_string())?;
    let mut cells = 0;
    for (x, row) in A8_ORDER.iter().zip(A8_IMP_ROWS) {
        for (y, z) in A8_ORDER.iter().zip(row.split_whitespace()) {
            let e = |n: &str| a8.element(n).map_err(|e| e.to_string());
            let got = a8.bin(Op::Imp, e(x)?, e(y)?);
            ensure(got == e(z)?, || format!("{x} => {y} is {}, printed {z}", a8.element_name(got)))?;
            cells += 1;
        }
    }
    Ok(format!("S-algebra, {cells} cells match"))
}

fn separation() -> Result<String, String> {
    let a8 = cat("A8")?;
    let a = a8.element("a").map_err(|e| e.to_string())?;
    let outcomes = check_separation_suite(&a8).map_err(|e| e.to_string())?;
    ensure(outcomes.len() == 9, || format!("{} items", outcomes.len()))?;
    for o in &outcomes {
        ensure(o.refuted(), || format!("item {} ({}) not refuted", o.item.index, o.item.name))?;
        ensure(o.reference_value == a, || {
            format!("item {} evaluates to {}", o.item.index, a8.element_name(o.reference_value))
        })?;
    }
    Ok("9/9 refuted, every stated valuation gives a".into())
}

fn doubling_l3() -> Result<String, String> {
    let d = double(&cat("L3")?).map_err(|e| e.to_string())?;
    let names = d.elements().iter().map(|e| e.replace("n_", "~")).collect();
    let d = d.with_element_names(names).map_err(|e| e.to_string())?;
    let star = cat("L3star")?;
    ensure(d.same_up_to_element_order(&star), || "double(L3) differs from the L3star table".into())?;
    ensure(validate_s_algebra(&star).passed(), || validate_s_algebra(&star).to_string())?;
    ensure(check_distributive(&star).passed(), || "L3star is not distributive".into())?;
    let nelson = Equation::parse(NELSON_EQUATION).map_err(|e| e.to_string())?;
    ensure(!satisfies_equation(&star, &nelson).map_err(|e| e.to_string())?.holds, || {
        "L3star satisfies the Nelson equation".into()
    })?;
    let v = Valuation::from_names(&star, &[("x", "~0"), ("y", "~1/2")]).map_err(|e| e.to_string())?;
    let value = eval(&nelson.lhs, &v, &star).map_err(|e| e.to_string())?;
    ensure(star.element_name(value) == "1/2", || format!("witness evaluates to {}", star.element_name(value)))?;
    Ok("table-identical, S-algebra, distributive, Nelson equation fails at (~0, ~1/2) with value 1/2".into())
}

fn a4_discrimination() -> Result<String, String> {
    let a4 = cat("A4")?;
    ensure(check_n4_lattice(&a4).passed(), || check_n4_lattice(&a4).to_string())?;
    let q = N4Analysis::of(&a4).map_err(|e| e.to_string())?.quotient;
    let b2 = cat("B2")?;
    let b2w = b2.with_binary(Op::WeakImp, |x, y| b2.bin(Op::Imp, x, y)).reduct(&[Op::WeakImp]);
    ensure(isomorphic(&q.reduct(&[Op::WeakImp]), &b2w), || format!("quotient is not B2:\n{q}"))?;
    let eq = Equation::parse("x -> x = y -> y").map_err(|e| e.to_string())?;
    let s = satisfies_equation(&a4, &eq).map_err(|e| e.to_string())?;
    let w = s.witness.ok_or("A4 satisfies x -> x = y -> y")?;
    ensure(!check_n3_lattice(&a4).passed(), || "A4 passes the N3 check".into())?;
    Ok(format!("N4, quotient is B2, x->x = y->y fails at {}", w.display(&a4)))
}

fn term_equivalence() -> Result<String, String> {
    let algebras = catalog_s_algebras()?;
    for a in &algebras {
        let direct = validate_s_algebra(a).passed();
        let quasi = validate_s_algebra_via_quasiequations(a).passed();
        ensure(direct == quasi, || format!("{}: direct {direct}, quasiequational {quasi}", a.name()))?;
        let s = if a.has(Op::Neg) { a.clone() } else { to_s(a).map_err(|e| e.to_string())? };
        let back = to_s(&to_s_prime(&s).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(back.same_tables(&s.reduct(&[Op::Imp, Op::Neg, Op::Zero, Op::One])), || {
            format!("{}: round trip changes tables", a.name())
        })?;
    }
    Ok(format!("{} catalog S-algebras agree and round-trip", algebras.len()))
}

fn cirls_up_to_4() -> Result<Vec<FiniteAlgebra>, String> {
    Ok(enumerate(&SearchSpec::new(SearchClass::Cirl, 4)).map_err(|e| e.to_string())?.models)
}

fn doubling_classes() -> Result<String, String> {
    let cirls = cirls_up_to_4()?;
    let (mut s, mut n3, mut mv) = (0, 0, 0);
    for a in &cirls {
        let d = double(a).map_err(|e| e.to_string())?;
        let three_potent = validate(a, CheckKind::ThreePotent).passed();
        let implicative = (0..a.size()).all(|x| (0..a.size()).all(|y| a.meet(x, y) == a.bin(Op::Fuse, x, y)));
        let is_s = validate_s_algebra(&d).passed();
        let is_n3 = check_n3_lattice(&d).passed();
        let is_mv = check_mv(&d).passed();
        ensure(is_s == three_potent, || format!("{}: S-algebra {is_s}, three-potent {three_potent}", a.name()))?;
        ensure(is_n3 == implicative, || format!("{}: N3 {is_n3}, implicative {implicative}", a.name()))?;
        ensure(is_mv == (a.size() == 1), || format!("{}: MV {is_mv} at size {}", a.name(), a.size()))?;
        s += is_s as usize;
        n3 += is_n3 as usize;
        mv += is_mv as usize;
    }
    Ok(format!("{} CIRLs: {s} S-algebras, {n3} N3-lattices, {mv} MV-algebras among the doublings", cirls.len()))
}

fn star_transfer() -> Result<String, String> {
    let cirls = cirls_up_to_4()?;
    let mut holds = 0;
    for text in STAR_BATTERY {
        let q = QuasiEquation::parse(text).map_err(|e| e.to_string())?;
        let star = star_quasieq(&q).map_err(|e| e.to_string())?.quasi;
        for a in &cirls {
            let d = double(a).map_err(|e| e.to_string())?;
            let left = satisfies_quasiequation(a, &q).map_err(|e| e.to_string())?.holds;
            let right = satisfies_quasiequation(&d, &star).map_err(|e| e.to_string())?.holds;
            ensure(left == right, || format!("{}: `{text}` {left}, starred {right}", a.name()))?;
            holds += left as usize;
        }
    }
    Ok(format!(
        "{} quasiequations x {} CIRLs agree ({holds} satisfied)",
        STAR_BATTERY.len(),
        cirls.len()
    ))
}

fn s_meets_n4() -> Result<String, String> {
    let mut both = 0;
    for a in s_algebras_up_to(6)? {
        let b = spinks_weak_implication(&a).map_err(|e| e.to_string())?;
        let strong = n4_strong_implication(&b).map_err(|e| e.to_string())?;
        if check_n4_lattice(&b).passed() && strong.table(Op::Imp) == a.table(Op::Imp) {
            both += 1;
            ensure(check_n3_lattice(&b).passed(), || format!("{} is S and N4 but not N3", a.name()))?;
        }
    }
    let twists = enumerate(&SearchSpec::new(SearchClass::N4, 6)).map_err(|e| e.to_string())?.models;
    let mut reverse = 0;
    for t in &twists {
        let (Some(bot), Some(top)) = (t.bottom(), t.top()) else { continue };
        let s = n4_strong_implication(t).map_err(|e| e.to_string())?;
        let s = s.with_table(Op::Zero, crate::algebra::Table::Constant(bot)).map_err(|e| e.to_string())?;
        let s = s.with_table(Op::One, crate::algebra::Table::Constant(top)).map_err(|e| e.to_string())?;
        if validate_s_algebra(&s.without(Op::WeakImp)).passed() {
            reverse += 1;
            ensure(check_n3_lattice(t).passed(), || format!("{} is N4 and S but not N3", t.name()))?;
        }
    }
    Ok(format!(
        "no counterexample; {both} S-algebras and {reverse} of {} N4-lattices lie in both classes",
        twists.len()
    ))
}

fn orderability() -> Result<String, String> {
    let nelson = Equation::parse(NELSON_EQUATION).map_err(|e| e.to_string())?;
    let mut algebras = catalog_s_algebras()?;
    algebras.extend(s_algebras_up_to(6)?);
    let mut agree = 0;
    for a in &algebras {
        let eq = satisfies_equation(a, &nelson).map_err(|e| e.to_string())?.holds;
        let ord = check_congruence_orderability(a).passed();
        ensure(eq == ord, || format!("{}: Nelson equation {eq}, orderable {ord}", a.name()))?;
        agree += eq as usize;
    }
    Ok(format!("{} algebras, {agree} satisfy both, the rest neither", algebras.len()))
}

/// Every single-token replacement of a proof script: formula atoms and
/// connectives, calculus, axiom and rule names, and premise numbers.
pub fn mutations(text: &str) -> Vec<String> {
    const ATOMS: [&str; 9] = ["p", "q", "r", "s", "u", "v", "w", "0", "1"];
    const BINOPS: [&str; 6] = ["&", "|", "=>", "->", "*", "<=>"];
    let calculi: Vec<String> = CalculusId::ALL.iter().map(|c| c.to_string()).collect();
    let axioms: BTreeSet<String> =
        CalculusId::ALL.iter().flat_map(|c| c.axioms().iter().map(AxiomId::to_string)).collect();
    let rules: Vec<String> = RuleId::TABLE.iter().chain([&RuleId::MP]).map(|r| r.to_string()).collect();
    let steps = text.lines().filter(|l| l.trim_start().starts_with("step")).count();
    let lines: Vec<&str> = text.lines().collect();
    let mut out = Vec::new();
    for (li, line) in lines.iter().enumerate() {
        let code = line.split('#').next().unwrap_or("");
        for (start, tok, kind) in tokens(code) {
            let alternatives: Vec<String> = match kind {
                Kind::Atom => ATOMS.iter().map(|s| s.to_string()).collect(),
                Kind::Binop => BINOPS.iter().map(|s| s.to_string()).collect(),
                Kind::Calculus => calculi.clone(),
                Kind::Axiom => axioms.iter().cloned().collect(),
                Kind::Rule => rules.clone(),
                Kind::Premise => (1..=steps).map(|i| i.to_string()).collect(),
            };
            for alt in alternatives.into_iter().filter(|a| a != tok) {
                let mut new_line = String::new();
                new_line.push_str(&line[..start]);
                new_line.push_str(&alt);
                new_line.push_str(&line[start + tok.len()..]);
                let mut copy: Vec<String> = lines.iter().map(|l| l.to_string()).collect();
                copy[li] = new_line;
                out.push(copy.join("\n"));
            }
        }
    }
    out
}

#[derive(Clone, Copy)]
enum Kind {
    Atom,
    Binop,
    Calculus,
    Axiom,
    Rule,
    Premise,
}

/// Mutable tokens of one script line with their byte offsets.
fn tokens(line: &str) -> Vec<(usize, &str, Kind)> {
    let trimmed = line.trim_start();
    let base = line.len() - trimmed.len();
    let (kw, _) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
    let mut out = Vec::new();
    match kw {
        "calculus" => {
            let rest = trimmed[kw.len()..].trim();
            out.push((base + trimmed.find(rest).unwrap_or(0), rest, Kind::Calculus));
        }
        "assume" | "goal" => formula_tokens(line, base + kw.len(), line.len(), &mut out),
        "step" => {
            let Some(colon) = line.find(':') else { return out };
            let Some(by) = line.rfind(" by ") else { return out };
            formula_tokens(line, colon + 1, by, &mut out);
            let just = &line[by + 4..];
            let words: Vec<(usize, &str)> = just
                .split_whitespace()
                .map(|w| (by + 4 + w.as_ptr() as usize - just.as_ptr() as usize, w))
                .collect();
            match words.as_slice() {
                [_, (off, id), ..] if words[0].1 == "axiom" => out.push((*off, *id, Kind::Axiom)),
                [_, (off, id), rest @ ..] if words[0].1 == "rule" => {
                    out.push((*off, *id, Kind::Rule));
                    if let [(_, "from"), (off, list)] = rest {
                        let mut pos = *off;
                        for n in list.split(',') {
                            out.push((pos, n, Kind::Premise));
                            pos += n.len() + 1;
                        }
                    }
                }
                _ => {}
            }
        }
        _ => {}
    }
    out
}

fn formula_tokens<'a>(line: &'a str, from: usize, to: usize, out: &mut Vec<(usize, &'a str, Kind)>) {
    let bytes = line.as_bytes();
    let mut i = from;
    while i < to {
        let c = bytes[i];
        if c.is_ascii_alphanumeric() || c == b'_' {
            let start = i;
            while i < to && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, &line[start..i], Kind::Atom));
            continue;
        }
        let op = ["<=>", "=>", "->", "&", "|", "*"].into_iter().find(|op| line[i..to].starts_with(op));
        if let Some(op) = op {
            out.push((i, &line[i..i + op.len()], Kind::Binop));
            i += op.len();
        } else {
            i += 1;
        }
    }
}

fn accepted(text: &str) -> bool {
    parse_script(text).map(|d| check_derivation(&d).is_accepted()).unwrap_or(false)
}

fn soundness_and_corpus() -> Result<String, String> {
    let algebras = catalog_s_algebras()?;
    for a in &algebras {
        for ax in CalculusId::SPrime.axioms() {
            let cm = find_countermodel(a, &ax.schema()).map_err(|e| e.to_string())?;
            ensure(cm.is_none(), || format!("{ax} fails in {}", a.name()))?;
        }
    }
    ensure(CORPUS.len() >= 10, || format!("only {} corpus scripts", CORPUS.len()))?;
    let mut used = BTreeSet::new();
    let mut calculi = BTreeSet::new();
    let mut total = 0;
    for (name, text) in CORPUS {
        let d = parse_script(text).map_err(|e| format!("{name}: {e}"))?;
        calculi.insert(d.calculus);
        let Verdict::Accepted { evidence, .. } = check_derivation(&d) else {
            return Err(format!("{name}: {}", check_derivation(&d)));
        };
        for e in evidence {
            if let StepEvidence::Rule(rule, _, gamma) = e {
                used.insert((rule, gamma.len()));
            }
        }
        for m in mutations(text) {
            total += 1;
            ensure(!accepted(&m), || format!("{name}: mutation accepted:\n{m}"))?;
        }
    }
    ensure(calculi.contains(&CalculusId::SNelson) && calculi.contains(&CalculusId::SPrime), || {
        "corpus does not cover both calculi".into()
    })?;
    for rule in RuleId::TABLE {
        let lengths: &[usize] = if rule.gamma_power().is_some() { &[0, 1, 2] } else { &[0] };
        for &k in lengths {
            ensure(used.contains(&(rule, k)), || format!("rule {rule} with context length {k} unused"))?;
        }
    }
    Ok(format!(
        "S1-S15 valid in {} algebras; {} scripts accepted; {total} mutations rejected",
        algebras.len(),
        CORPUS.len()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criteria_titles_are_unique() {
        let titles: BTreeSet<_> = CRITERIA.iter().map(|(t, _)| t).collect();
        assert_eq!(titles.len(), CRITERIA.len());
    }

    #[test]
    fn mutations_replace_single_tokens() {
        let text = "calculus S_PRIME\nassume p\nstep 1: p by assumption\nstep 2: p => (q => p) by axiom S3\nstep 3: q => p by rule MP from 1,2";
        let ms = mutations(text);
        assert!(ms.contains(&text.replace("assume p", "assume q")));
        assert!(ms.contains(&text.replace("S3", "S4")));
        assert!(ms.contains(&text.replace("MP", "E")));
        assert!(ms.contains(&text.replace("from 1,2", "from 3,2")));
        assert!(ms.contains(&text.replace("S_PRIME", "N4")));
        assert!(ms.contains(&text.replace("p => (q", "p & (q")));
        for m in &ms {
            assert_eq!(m.lines().count(), text.lines().count());
            parse_script(m).expect("replacements keep scripts well-formed");
        }
    }
}

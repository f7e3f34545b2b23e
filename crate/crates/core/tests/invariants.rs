mod common;

use common::formula_in;
use nelson_core::algebra::{
    check_congruence_orderability, recheck_witness, validate, validate_s_algebra, CheckKind, FiniteAlgebra, Op,
};
use nelson_core::bridge::{double, n3_weak_implication, spinks_weak_implication};
use nelson_core::catalog;
use nelson_core::formula::{BinOp, Formula};
use nelson_core::search::{enumerate, SearchClass, SearchSpec};
use nelson_core::semantics::{find_countermodel, satisfies_equation, semantic_ddt_check, Equation};
use nelson_core::suite::NELSON_EQUATION;
use proptest::prelude::*;
use std::sync::OnceLock;

fn models(class: SearchClass, n: usize) -> Vec<FiniteAlgebra> {
    enumerate(&SearchSpec::new(class, n)).unwrap().models
}

fn holds(a: &FiniteAlgebra, eq: &str) -> bool {
    satisfies_equation(a, &Equation::parse(eq).unwrap()).unwrap().holds
}

fn s_algebras() -> Vec<FiniteAlgebra> {
    let mut out: Vec<FiniteAlgebra> = catalog::entries()
        .into_iter()
        .filter(|e| e.expected.contains(&(CheckKind::SAlgebra, true)))
        .map(|e| e.algebra)
        .collect();
    out.extend(models(SearchClass::SAlgebra, 6));
    out
}

#[test]
fn three_potent_cirl_identities() {
    let cirls = models(SearchClass::ThreePotentCirl, 5);
    assert!(cirls.len() > 10);
    for a in &cirls {
        for eq in [
            "(x | y) * z = (x * z) | (y * z)",
            "(x * x) | (y * y) = ((x * x) | (y * y)) * ((x * x) | (y * y))",
            "(x | y * y) * (x | y * y) = (x | y) * (x | y)",
            "(x | y) * (x | y) = (x * x) | (y * y)",
        ] {
            assert!(holds(a, eq), "{} fails {eq}", a.name());
        }
    }
}

#[test]
fn s_algebra_identities() {
    for a in s_algebras() {
        assert!(validate_s_algebra(&a).passed());
        for eq in [
            "x => y = ~y => ~x",
            "x => 0 = ~x",
            "~~x = x",
            "(x * x) & ((x * x) * x) = x * x",
            "((x | y) * (x | y)) & ((x * x) | (y * y)) = (x | y) * (x | y)",
            "(x * y => z) & (y => (x => z)) = y => (x => z)",
        ] {
            assert!(holds(&a, eq), "{} fails {eq}", a.name());
        }
    }
}

#[test]
fn nelson_equation_matches_orderability() {
    let nelson = Equation::parse(NELSON_EQUATION).unwrap();
    for a in s_algebras() {
        let eq = satisfies_equation(&a, &nelson).unwrap().holds;
        assert_eq!(eq, check_congruence_orderability(&a).passed(), "{}", a.name());
    }
}

#[test]
fn failure_witnesses_violate_their_law() {
    let mut algebras: Vec<FiniteAlgebra> = catalog::entries().into_iter().map(|e| e.algebra).collect();
    algebras.extend(models(SearchClass::Cirl, 4));
    algebras.extend(models(SearchClass::N4, 4));
    let a8 = catalog::get("A8").unwrap();
    algebras.push(a8.with_binary(Op::Imp, |x, y| a8.bin(Op::Imp, y, x)));
    let mut checked = 0;
    for a in &algebras {
        for kind in CheckKind::ALL {
            for f in validate(a, kind).failures() {
                if let Some(w) = &f.witness {
                    assert_eq!(recheck_witness(a, kind, &f.axiom, w), Some(false), "{} {kind} {}", a.name(), f.axiom);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn e_of_phi_two_readings_agree() {
    let a8 = catalog::get("A8").unwrap();
    for text in ["p => p", "p | ~p", "(p & ~p) => q", "0 => p", "~(p => q) => p"] {
        let f = nelson_core::formula::parse(text).unwrap();
        let one = satisfies_equation(&a8, &Equation::new(f.clone(), Formula::One)).unwrap().holds;
        let self_imp = satisfies_equation(&a8, &Equation::new(f.clone(), Formula::imp(f.clone(), f))).unwrap().holds;
        assert_eq!(one, self_imp, "{text}");
    }
}

#[test]
fn doubling_embeds_the_upper_copy() {
    for a in models(SearchClass::Cirl, 4) {
        let d = double(&a).unwrap();
        let n = a.size();
        let up = |x: usize| d.element(a.element_name(x)).unwrap();
        for x in 0..n {
            for y in 0..n {
                for op in [Op::Meet, Op::Join, Op::Fuse, Op::Imp] {
                    assert_eq!(d.bin(op, up(x), up(y)), up(a.bin(op, x, y)), "{} {op:?}", a.name());
                }
            }
        }
        let fixed: Vec<usize> = (0..d.size()).filter(|&x| d.join(x, d.un(Op::Neg, x)) == x).collect();
        let mut upper: Vec<usize> = (0..n).map(up).collect();
        upper.sort_unstable();
        assert_eq!(fixed, upper);
        let bot = d.un(Op::Neg, up(n - 1));
        for b in (0..d.size()).filter(|b| !upper.contains(b)) {
            let sq = d.bin(Op::Fuse, b, b);
            assert_eq!(sq, bot);
            assert_eq!(d.bin(Op::Fuse, sq, b), bot);
        }
    }
}

#[test]
fn doubling_small_cases() {
    let t = catalog::get("T1").unwrap().reduct(&[Op::Fuse, Op::Imp, Op::Zero, Op::One]);
    let d = double(&t).unwrap();
    assert_eq!(d.size(), 2);
    assert!(validate(&d, CheckKind::Mv).passed());
    let two = models(SearchClass::Cirl, 2).pop().unwrap();
    let d = double(&two).unwrap();
    assert_eq!(d.size(), 4);
    let d = spinks_weak_implication(&d).unwrap();
    assert!(validate(&d, CheckKind::N3).passed());
}

#[test]
fn n3_short_form_agrees_on_n3_doublings() {
    for a in models(SearchClass::Cirl, 4) {
        let implicative = (0..a.size()).all(|x| (0..a.size()).all(|y| a.meet(x, y) == a.bin(Op::Fuse, x, y)));
        if !implicative {
            continue;
        }
        let d = double(&a).unwrap();
        assert_eq!(
            spinks_weak_implication(&d).unwrap().table(Op::WeakImp),
            n3_weak_implication(&d).unwrap().table(Op::WeakImp),
            "{}",
            a.name()
        );
    }
}

proptest! {
    #[test]
    fn countermodel_iff_equation_fails(f in formula_in(&["p", "q", "r"], &[BinOp::And, BinOp::Or, BinOp::Imp, BinOp::Fuse], true)) {
        for key in ["A8", "L3", "L3star"] {
            let a = catalog::get(key).unwrap();
            let cm = find_countermodel(&a, &f).unwrap();
            let sat = satisfies_equation(&a, &Equation::new(f.clone(), Formula::One)).unwrap();
            prop_assert_eq!(cm.is_none(), sat.holds);
            if let Some(cm) = &cm {
                prop_assert_eq!(nelson_core::semantics::eval(&f, &cm.valuation, &a).unwrap(), cm.value);
                let again = find_countermodel(&a, &f).unwrap();
                prop_assert_eq!(Some(cm), again.as_ref());
            }
        }
    }

    // All S-algebras up to 6 is closed under quotients, and the filter generated by
    // a is the upset of a², so consequence over the class is exactly validity of φ² ⇒ ψ.
    #[test]
    fn deduction_theorem_over_small_s_algebras(
        phi in formula_in(&["p", "q"], &[BinOp::And, BinOp::Or, BinOp::Imp, BinOp::Fuse], true),
        psi in formula_in(&["p", "q"], &[BinOp::And, BinOp::Or, BinOp::Imp, BinOp::Fuse], true),
    ) {
        static K: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
        let k = K.get_or_init(|| models(SearchClass::SAlgebra, 6));
        let mut consequence = true;
        let mut valid = true;
        for a in k {
            let ev = semantic_ddt_check(a, &phi, &psi).unwrap();
            prop_assert!(!ev.implication_valid || ev.consequence);
            consequence &= ev.consequence;
            valid &= ev.implication_valid;
        }
        prop_assert_eq!(consequence, valid);
    }
}

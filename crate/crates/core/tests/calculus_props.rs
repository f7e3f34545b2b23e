mod common;

use std::sync::Arc;

use common::formula_in;
use nelson_core::calculus::{
    check_derivation, match_rule, normalize, CalculusId, Derivation, Justification, RuleId, Step,
};
use nelson_core::catalog;
use nelson_core::formula::{BinOp, Formula, Substitution};
use nelson_core::semantics::find_countermodel;
use proptest::prelude::*;

fn nelson_formula() -> impl Strategy<Value = Formula> {
    formula_in(&["p", "q", "r"], &[BinOp::And, BinOp::Or, BinOp::Imp], true)
}

fn residuated_formula() -> impl Strategy<Value = Formula> {
    formula_in(&["p", "q", "r"], &[BinOp::And, BinOp::Or, BinOp::Imp, BinOp::Fuse], true)
}

fn sigma(phi: &Formula, psi: &Formula, gamma: &Formula, gs: &[Formula]) -> Substitution {
    let mut s: Substitution =
        [("phi", phi), ("psi", psi), ("gamma", gamma)].into_iter().map(|(k, v)| (Arc::from(k), v.clone())).collect();
    for (i, g) in gs.iter().enumerate() {
        s.insert(Arc::from(format!("g{}", i + 1)), g.clone());
    }
    s
}

proptest! {
    #[test]
    fn modus_ponens_is_cut_with_empty_context(phi in nelson_formula(), psi in nelson_formula()) {
        let premises = [phi.clone(), Formula::imp(phi.clone(), psi.clone())];
        let m = match_rule(CalculusId::SNelson, RuleId::E, &premises, &psi);
        prop_assert!(m.is_some());
        prop_assert!(m.unwrap().gamma.is_empty());
        prop_assert!(match_rule(CalculusId::SPrime, RuleId::MP, &premises, &psi).is_some());
    }

    #[test]
    fn elaborated_instances_match(
        phi in nelson_formula(),
        psi in nelson_formula(),
        gamma in nelson_formula(),
        gs in proptest::collection::vec(nelson_formula(), 0..=2),
        which in 0usize..20,
    ) {
        let rule = RuleId::TABLE[which];
        let k = if rule.gamma_power().is_some() { gs.len() } else { 0 };
        let s = sigma(&phi, &psi, &gamma, &gs[..k]);
        let (ps, c) = rule.elaborate(k);
        let premises: Vec<Formula> = ps.iter().map(|p| p.substitute(&s)).collect();
        let conclusion = c.substitute(&s);
        let m = match_rule(CalculusId::SNelson, rule, &premises, &conclusion);
        prop_assert!(m.is_some(), "{} k={}", rule, k);
        let m = m.unwrap();
        prop_assert!(m.gamma.len() <= k);
        let back = {
            let mut b = m.substitution.clone();
            for (i, g) in m.gamma.iter().enumerate() {
                b.insert(Arc::from(format!("g{}", i + 1)), g.clone());
            }
            b
        };
        let (ps2, c2) = rule.elaborate(m.gamma.len());
        prop_assert_eq!(c2.substitute(&back), normalize(CalculusId::SNelson, &conclusion));
        for (p, q) in ps2.iter().zip(&premises) {
            prop_assert_eq!(p.substitute(&back), normalize(CalculusId::SNelson, q));
        }
    }

    /// Axiom instance `A`, then `A ⇒ (ψ ⇒ A)` by S3 and `ψ ⇒ A` by MP; the
    /// conclusion must be valid in every catalog S-algebra.
    #[test]
    fn accepted_prime_derivations_are_valid(
        axiom in 0usize..15,
        phi in residuated_formula(),
        psi in residuated_formula(),
        gamma in residuated_formula(),
        weak in residuated_formula(),
    ) {
        let id = CalculusId::SPrime.axioms()[axiom];
        let a = id.schema().substitute(&sigma(&phi, &psi, &gamma, &[]));
        let s3 = CalculusId::SPrime.axioms()[2];
        let lifted = Formula::imp(a.clone(), Formula::imp(weak.clone(), a.clone()));
        let goal = Formula::imp(weak, a.clone());
        let axiom_step = |f: Formula, id| Step { formula: f, justification: Justification::Axiom { id, substitution: None } };
        let d = Derivation {
            calculus: CalculusId::SPrime,
            assumptions: vec![],
            steps: vec![
                axiom_step(a, id),
                axiom_step(lifted, s3),
                Step { formula: goal.clone(), justification: Justification::Rule { rule: RuleId::MP, premises: vec![1, 2] } },
            ],
            goal: Some(goal.clone()),
        };
        let v = check_derivation(&d);
        prop_assert!(v.is_accepted(), "{}", v);
        for key in ["A8", "L3", "L3star", "B2"] {
            let alg = catalog::get(key).unwrap();
            prop_assert!(find_countermodel(&alg, &goal).unwrap().is_none(), "{} refutes {}", key, goal);
        }
    }
}

#[test]
fn third_prime_axiom_is_weakening() {
    assert_eq!(CalculusId::SPrime.axioms()[2].to_string(), "S3");
    assert_eq!(CalculusId::SPrime.axioms()[2].schema().to_string(), "phi => (psi => phi)");
}

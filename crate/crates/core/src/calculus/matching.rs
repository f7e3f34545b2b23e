use std::sync::Arc;

use super::{AxiomId, CalculusId, RuleId};
use crate::formula::{expand_defined, BinOp, Formula, GammaList, Substitution, TargetLanguage};

/// Rewrites `f` into the primitive language of the calculus. `N4` and `N3`
/// have no defined connectives besides `↔`, which the schemas already spell
/// out.
pub fn normalize(calculus: CalculusId, f: &Formula) -> Formula {
    match calculus {
        CalculusId::SNelson => expand_defined(f, TargetLanguage::Nelson),
        CalculusId::SPrime => expand_defined(f, TargetLanguage::Residuated),
        CalculusId::N4 | CalculusId::N3 => f.clone(),
    }
}

/// One-way syntactic matching: extends `sigma` so that `schema[sigma] == target`.
/// Every variable of `schema` is a metavariable.
pub fn match_schema(schema: &Formula, target: &Formula, sigma: &mut Substitution) -> bool {
    match (schema, target) {
        (Formula::Var(v), _) => match sigma.get(v) {
            Some(bound) => bound == target,
            None => {
                sigma.insert(v.clone(), target.clone());
                true
            }
        },
        (Formula::Zero, Formula::Zero) | (Formula::One, Formula::One) => true,
        (Formula::Not(s), Formula::Not(t)) => match_schema(s, t, sigma),
        (Formula::Bin(o1, l1, r1), Formula::Bin(o2, l2, r2)) => {
            o1 == o2 && match_schema(l1, l2, sigma) && match_schema(r1, r2, sigma)
        }
        _ => false,
    }
}

/// First axiom of the calculus, in its fixed order, of which `f` is an instance.
pub fn match_axiom(calculus: CalculusId, f: &Formula) -> Option<(AxiomId, Substitution)> {
    let f = normalize(calculus, f);
    calculus.axioms().iter().find_map(|&ax| {
        let mut sigma = Substitution::new();
        match_schema(&normalize(calculus, &ax.schema()), &f, &mut sigma).then_some((ax, sigma))
    })
}

/// Substitution for the schema letters and the inferred `Γ` list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleMatch {
    pub substitution: Substitution,
    pub gamma: GammaList,
}

/// Matches premises and conclusion against the rule, trying `Γ` lengths from
/// 0 up to the `⇒` depth of the conclusion divided by the power; the first
/// length that matches wins.
pub fn match_rule(calculus: CalculusId, rule: RuleId, premises: &[Formula], conclusion: &Formula) -> Option<RuleMatch> {
    if premises.len() != rule.arity() || !calculus.rules().contains(&rule) {
        return None;
    }
    let premises: Vec<Formula> = premises.iter().map(|p| normalize(calculus, p)).collect();
    let conclusion = normalize(calculus, conclusion);
    let bound = match rule.gamma_power() {
        Some(k) => conclusion.imp_spine_depth() / k as usize,
        None => 0,
    };
    let weak = matches!(calculus, CalculusId::N4 | CalculusId::N3);
    for k in 0..=bound {
        let (ps, c) = rule.elaborate(k);
        let (ps, c) = if weak && rule == RuleId::MP {
            (ps.iter().map(strong_to_weak).collect(), strong_to_weak(&c))
        } else {
            (ps, c)
        };
        let mut sigma = Substitution::new();
        let ok = ps.iter().zip(&premises).all(|(s, t)| match_schema(s, t, &mut sigma))
            && match_schema(&c, &conclusion, &mut sigma);
        if ok {
            let gamma = (1..=k).map(|i| sigma.remove(&Arc::from(format!("g{i}"))).expect("bound")).collect();
            return Some(RuleMatch { substitution: sigma, gamma });
        }
    }
    None
}

fn strong_to_weak(f: &Formula) -> Formula {
    match f {
        Formula::Bin(BinOp::Imp, l, r) => Formula::weak_imp(strong_to_weak(l), strong_to_weak(r)),
        Formula::Bin(op, l, r) => Formula::bin(*op, strong_to_weak(l), strong_to_weak(r)),
        Formula::Not(g) => Formula::not(strong_to_weak(g)),
        _ => f.clone(),
    }
}

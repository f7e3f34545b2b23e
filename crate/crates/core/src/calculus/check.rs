use std::fmt;

use serde::Serialize;

use super::matching::{match_rule, match_schema, normalize};
use super::{AxiomId, CalculusId, RuleId};
use crate::formula::{Formula, GammaList, Substitution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Assumption,
    /// The substitution is optional; when absent it is inferred.
    Axiom { id: AxiomId, substitution: Option<Substitution> },
    /// Premises are 1-based step numbers.
    Rule { rule: RuleId, premises: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub calculus: CalculusId,
    pub assumptions: Vec<Formula>,
    pub steps: Vec<Step>,
    /// When present, the final step must be this formula.
    pub goal: Option<Formula>,
}

/// What the checker inferred for one accepted step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepEvidence {
    Assumption(usize),
    Axiom(AxiomId, Substitution),
    Rule(RuleId, Substitution, GammaList),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Rejection {
    Empty,
    BadIndex { index: usize },
    WrongArity { expected: usize, found: usize },
    NotAnAssumption,
    AxiomNotInCalculus { axiom: String },
    NoAxiomMatch { axiom: String },
    SubstitutionMismatch { axiom: String },
    RuleNotInCalculus { rule: String },
    NoRuleMatch { rule: String },
    GoalMismatch,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Empty => write!(f, "empty derivation"),
            Rejection::BadIndex { index } => write!(f, "bad index {index}"),
            Rejection::WrongArity { expected, found } => write!(f, "wrong arity: expected {expected} premises, found {found}"),
            Rejection::NotAnAssumption => write!(f, "not an assumption"),
            Rejection::AxiomNotInCalculus { axiom } => write!(f, "axiom {axiom} not in calculus"),
            Rejection::NoAxiomMatch { axiom } => write!(f, "no axiom match for {axiom}"),
            Rejection::SubstitutionMismatch { axiom } => write!(f, "substitution does not instantiate {axiom}"),
            Rejection::RuleNotInCalculus { rule } => write!(f, "rule {rule} not in calculus"),
            Rejection::NoRuleMatch { rule } => write!(f, "no rule match for {rule}"),
            Rejection::GoalMismatch => write!(f, "final step is not the goal"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted { conclusion: Formula, evidence: Vec<StepEvidence> },
    /// `step` is 1-based; 0 is used for whole-derivation problems.
    Rejected { step: usize, reason: Rejection },
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted { .. })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accepted { conclusion, .. } => write!(f, "accepted: {conclusion}"),
            Verdict::Rejected { step, reason } => write!(f, "rejected at step {step}: {reason}"),
        }
    }
}

/// Checks every step in order and stops at the first failure.
pub fn check_derivation(d: &Derivation) -> Verdict {
    let calc = d.calculus;
    let reject = |step: usize, reason: Rejection| Verdict::Rejected { step, reason };
    if d.steps.is_empty() {
        return reject(0, Rejection::Empty);
    }
    let assumptions: Vec<Formula> = d.assumptions.iter().map(|a| normalize(calc, a)).collect();
    let mut evidence = Vec::with_capacity(d.steps.len());
    for (i, step) in d.steps.iter().enumerate() {
        let n = i + 1;
        let f = normalize(calc, &step.formula);
        let ev = match &step.justification {
            Justification::Assumption => match assumptions.iter().position(|a| *a == f) {
                Some(k) => StepEvidence::Assumption(k),
                None => return reject(n, Rejection::NotAnAssumption),
            },
            Justification::Axiom { id, substitution } => {
                if !calc.axioms().contains(id) {
                    return reject(n, Rejection::AxiomNotInCalculus { axiom: id.name() });
                }
                let schema = normalize(calc, &id.schema());
                match substitution {
                    Some(sigma) => {
                        let sigma: Substitution = sigma.iter().map(|(k, v)| (k.clone(), normalize(calc, v))).collect();
                        if schema.substitute(&sigma) != f {
                            return reject(n, Rejection::SubstitutionMismatch { axiom: id.name() });
                        }
                        StepEvidence::Axiom(*id, sigma)
                    }
                    None => {
                        let mut sigma = Substitution::new();
                        if !match_schema(&schema, &f, &mut sigma) {
                            return reject(n, Rejection::NoAxiomMatch { axiom: id.name() });
                        }
                        StepEvidence::Axiom(*id, sigma)
                    }
                }
            }
            Justification::Rule { rule, premises } => {
                if !calc.rules().contains(rule) {
                    return reject(n, Rejection::RuleNotInCalculus { rule: rule.to_string() });
                }
                if let Some(&bad) = premises.iter().find(|&&k| k == 0 || k >= n) {
                    return reject(n, Rejection::BadIndex { index: bad });
                }
                if premises.len() != rule.arity() {
                    return reject(n, Rejection::WrongArity { expected: rule.arity(), found: premises.len() });
                }
                let ps: Vec<Formula> = premises.iter().map(|&k| d.steps[k - 1].formula.clone()).collect();
                match match_rule(calc, *rule, &ps, &step.formula) {
                    Some(m) => StepEvidence::Rule(*rule, m.substitution, m.gamma),
                    None => return reject(n, Rejection::NoRuleMatch { rule: rule.to_string() }),
                }
            }
        };
        evidence.push(ev);
    }
    let last = normalize(calc, &d.steps[d.steps.len() - 1].formula);
    if let Some(goal) = &d.goal {
        if normalize(calc, goal) != last {
            return reject(d.steps.len(), Rejection::GoalMismatch);
        }
    }
    Verdict::Accepted { conclusion: d.steps[d.steps.len() - 1].formula.clone(), evidence }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn p(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn three_step(last: &str) -> Derivation {
        Derivation {
            calculus: CalculusId::SPrime,
            assumptions: vec![p("p")],
            steps: vec![
                Step { formula: p("p"), justification: Justification::Assumption },
                Step { formula: p("p => (q => p)"), justification: Justification::Axiom { id: AxiomId::S3, substitution: None } },
                Step { formula: p(last), justification: Justification::Rule { rule: RuleId::MP, premises: vec![1, 2] } },
            ],
            goal: None,
        }
    }

    #[test]
    fn modus_ponens_derivation() {
        assert!(check_derivation(&three_step("q => p")).is_accepted());
        let v = check_derivation(&three_step("q => q"));
        assert_eq!(v, Verdict::Rejected { step: 3, reason: Rejection::NoRuleMatch { rule: "MP".into() } });
        assert_eq!(v.to_string(), "rejected at step 3: no rule match for MP");
    }

    #[test]
    fn single_axiom_step() {
        let d = Derivation {
            calculus: CalculusId::SPrime,
            assumptions: vec![],
            steps: vec![Step { formula: p("p => (q => p)"), justification: Justification::Axiom { id: AxiomId::S3, substitution: None } }],
            goal: Some(p("p => (q => p)")),
        };
        assert_eq!(check_derivation(&d).to_string(), "accepted: p => (q => p)");
    }

    #[test]
    fn forward_reference_is_a_bad_index() {
        let mut d = three_step("q => p");
        d.steps[2].justification = Justification::Rule { rule: RuleId::MP, premises: vec![1, 3] };
        assert_eq!(check_derivation(&d), Verdict::Rejected { step: 3, reason: Rejection::BadIndex { index: 3 } });
    }

    #[test]
    fn explicit_substitution_is_verified() {
        let mut d = three_step("q => p");
        let sigma: Substitution = [("phi".into(), p("p")), ("psi".into(), p("r"))].into_iter().collect();
        d.steps[1].justification = Justification::Axiom { id: AxiomId::S3, substitution: Some(sigma) };
        assert_eq!(
            check_derivation(&d),
            Verdict::Rejected { step: 2, reason: Rejection::SubstitutionMismatch { axiom: "S3".into() } }
        );
    }
}

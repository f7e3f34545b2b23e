use std::collections::BTreeSet;

use nelson_core::calculus::corpus::CORPUS;
use nelson_core::calculus::{check_derivation, parse_script, CalculusId, RuleId, StepEvidence, Verdict};

#[test]
fn every_corpus_script_is_accepted() {
    for (name, text) in CORPUS {
        let d = parse_script(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let v = check_derivation(&d);
        assert!(v.is_accepted(), "{name}: {v}");
    }
}

#[test]
fn corpus_covers_every_table_rule_and_context_length() {
    let mut seen = BTreeSet::new();
    let mut calculi = BTreeSet::new();
    for (_, text) in CORPUS {
        let d = parse_script(text).unwrap();
        calculi.insert(d.calculus.to_string());
        let Verdict::Accepted { evidence, .. } = check_derivation(&d) else { panic!() };
        for e in evidence {
            if let StepEvidence::Rule(rule, _, gamma) = e {
                seen.insert((rule.to_string(), gamma.len()));
            }
        }
    }
    for rule in CalculusId::SNelson.rules() {
        let lengths: &[usize] = if rule.gamma_power().is_some() { &[0, 1, 2] } else { &[0] };
        for &k in lengths {
            assert!(seen.contains(&(rule.to_string(), k)), "{rule} with context length {k} is not exercised");
        }
    }
    assert!(seen.contains(&(RuleId::MP.to_string(), 0)));
    assert!(calculi.contains("S_NELSON") && calculi.contains("S_PRIME"));
}

#[test]
fn axiom_steps_may_fix_their_substitution() {
    let script = |with: &str| {
        format!("calculus S_PRIME\nassume p\nstep 1: p by assumption\nstep 2: p => (q => p) by axiom S3 with {with}\nstep 3: q => p by rule MP from 1,2\n")
    };
    let good = parse_script(&script("phi := p, psi := q")).unwrap();
    assert!(check_derivation(&good).is_accepted());
    let bad = parse_script(&script("phi := q, psi := p")).unwrap();
    assert!(matches!(check_derivation(&bad), Verdict::Rejected { step: 2, .. }));
    assert!(parse_script(&script("phi = p")).is_err());
}

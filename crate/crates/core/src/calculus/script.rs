//! Line-oriented proof scripts.
//!
//! ```text
//! calculus S_PRIME
//! assume p
//! goal q => p
//! step 1: p by assumption
//! step 2: p => (q => p) by axiom S3
//! step 3: q => p by rule MP from 1,2
//! ```
//!
//! An axiom step may fix its substitution with `with phi := p, psi := q`.
//! `goal` is optional. `#` starts a comment.

use std::sync::Arc;

use thiserror::Error;

use super::check::{Derivation, Justification, Step};
use super::{AxiomId, CalculusId, RuleId};
use crate::formula::{parse, Formula, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ScriptError {
    pub line: usize,
    pub msg: String,
}

fn err(line: usize, msg: impl Into<String>) -> ScriptError {
    ScriptError { line, msg: msg.into() }
}

fn formula(line: usize, text: &str) -> Result<Formula, ScriptError> {
    parse(text.trim()).map_err(|e| err(line, e.to_string()))
}

pub fn parse_script(text: &str) -> Result<Derivation, ScriptError> {
    let mut calculus = None;
    let mut assumptions = Vec::new();
    let mut steps = Vec::new();
    let mut goal = None;
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match kw {
            "calculus" => {
                if calculus.is_some() {
                    return Err(err(ln, "calculus given twice"));
                }
                calculus = Some(rest.parse::<CalculusId>().map_err(|e| err(ln, e))?);
            }
            "assume" => assumptions.push(formula(ln, rest)?),
            "goal" => {
                if goal.is_some() {
                    return Err(err(ln, "goal given twice"));
                }
                goal = Some(formula(ln, rest)?);
            }
            "step" => {
                let (num, body) = rest.split_once(':').ok_or_else(|| err(ln, "expected `step <n>: …`"))?;
                let num: usize = num.trim().parse().map_err(|_| err(ln, "step number is not a number"))?;
                if num != steps.len() + 1 {
                    return Err(err(ln, format!("expected step {}, found {num}", steps.len() + 1)));
                }
                let (f, just) = body.rsplit_once(" by ").ok_or_else(|| err(ln, "missing `by`"))?;
                let formula = formula(ln, f)?;
                let justification = justification(ln, just.trim())?;
                steps.push(Step { formula, justification });
            }
            other => return Err(err(ln, format!("unexpected keyword `{other}`"))),
        }
    }
    let calculus = calculus.ok_or_else(|| err(0, "missing `calculus` line"))?;
    Ok(Derivation { calculus, assumptions, steps, goal })
}

fn justification(ln: usize, text: &str) -> Result<Justification, ScriptError> {
    if text == "assumption" {
        return Ok(Justification::Assumption);
    }
    if let Some(rest) = text.strip_prefix("axiom ") {
        let (id, with) = match rest.split_once(" with ") {
            Some((id, w)) => (id, Some(w)),
            None => (rest, None),
        };
        let id: AxiomId = id.trim().parse().map_err(|e| err(ln, e))?;
        let substitution = with
            .map(|w| {
                w.split(',')
                    .map(|pair| {
                        let (k, v) = pair.split_once(":=").ok_or_else(|| err(ln, "expected `name := formula`"))?;
                        Ok((Arc::from(k.trim()), formula(ln, v)?))
                    })
                    .collect::<Result<Substitution, ScriptError>>()
            })
            .transpose()?;
        return Ok(Justification::Axiom { id, substitution });
    }
    if let Some(rest) = text.strip_prefix("rule ") {
        let (id, from) = rest.split_once(" from ").ok_or_else(|| err(ln, "expected `rule <id> from <n,…>`"))?;
        let rule: RuleId = id.trim().parse().map_err(|e| err(ln, e))?;
        let premises = from
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| err(ln, format!("bad premise `{}`", s.trim()))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Justification::Rule { rule, premises });
    }
    Err(err(ln, format!("unknown justification `{text}`")))
}

/// Inverse of [`parse_script`].
pub fn render_script(d: &Derivation) -> String {
    let mut out = format!("calculus {}\n", d.calculus);
    for a in &d.assumptions {
        out.push_str(&format!("assume {a}\n"));
    }
    if let Some(g) = &d.goal {
        out.push_str(&format!("goal {g}\n"));
    }
    for (i, s) in d.steps.iter().enumerate() {
        let just = match &s.justification {
            Justification::Assumption => "assumption".to_string(),
            Justification::Axiom { id, substitution: None } => format!("axiom {id}"),
            Justification::Axiom { id, substitution: Some(sigma) } => {
                let pairs: Vec<String> = sigma.iter().map(|(k, v)| format!("{k} := {v}")).collect();
                format!("axiom {id} with {}", pairs.join(", "))
            }
            Justification::Rule { rule, premises } => {
                let ps: Vec<String> = premises.iter().map(|p| p.to_string()).collect();
                format!("rule {rule} from {}", ps.join(","))
            }
        };
        out.push_str(&format!("step {}: {} by {just}\n", i + 1, s.formula));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::check_derivation;

    const MP: &str = "calculus S_PRIME\nassume p\nstep 1: p by assumption\nstep 2: p => (q => p) by axiom S3\nstep 3: q => p by rule MP from 1,2\n";

    #[test]
    fn parses_and_checks() {
        let d = parse_script(MP).unwrap();
        assert_eq!(d.steps.len(), 3);
        assert_eq!(check_derivation(&d).to_string(), "accepted: q => p");
        assert_eq!(parse_script(&render_script(&d)).unwrap(), d);
    }

    #[test]
    fn substitution_clause() {
        let s = MP.replace("by axiom S3", "by axiom S3 with phi := p, psi := q");
        let d = parse_script(&s).unwrap();
        assert!(check_derivation(&d).is_accepted());
        assert_eq!(parse_script(&render_script(&d)).unwrap(), d);
    }

    #[test]
    fn script_errors_carry_lines() {
        assert_eq!(parse_script("calculus S_PRIME\nstep 2: p by assumption").unwrap_err().line, 2);
        assert_eq!(parse_script("calculus X").unwrap_err().line, 1);
        assert_eq!(parse_script("assume p").unwrap_err().line, 0);
        assert!(parse_script("calculus S\nstep 1: p by magic").is_err());
    }
}

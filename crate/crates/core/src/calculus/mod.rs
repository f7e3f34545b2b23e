//! Hilbert calculi: Nelson's original rule-based calculus for `S`, the
//! finite axiomatisation `S′` with modus ponens, and `N4`/`N3`.

mod check;
pub mod corpus;
mod matching;
mod script;

use std::fmt;
use std::str::FromStr;

pub use check::{check_derivation, Derivation, Justification, Rejection, Step, StepEvidence, Verdict};
pub use matching::{match_axiom, match_rule, match_schema, normalize, RuleMatch};
pub use script::{parse_script, render_script, ScriptError};

use crate::formula::{gamma_implication, Formula};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum CalculusId {
    /// Nelson's calculus: axioms A1–A5 and its sequent-style rules.
    SNelson,
    /// Axioms S1–S15 with modus ponens.
    SPrime,
    /// Axioms N1–N12 with modus ponens.
    N4,
    /// N4 plus N13.
    N3,
}

impl CalculusId {
    pub const ALL: [CalculusId; 4] = [CalculusId::SNelson, CalculusId::SPrime, CalculusId::N4, CalculusId::N3];

    pub fn name(self) -> &'static str {
        match self {
            CalculusId::SNelson => "S_NELSON",
            CalculusId::SPrime => "S_PRIME",
            CalculusId::N4 => "N4",
            CalculusId::N3 => "N3",
        }
    }

    pub fn axioms(self) -> &'static [AxiomId] {
        use AxiomId::*;
        match self {
            CalculusId::SNelson => &[A1, A2, A3, A4, A5],
            CalculusId::SPrime => &[S1, S2, S3, S4, S5, S6, S7, S8, S9, S10, S11, S12, S13, S14, S15],
            CalculusId::N4 => &[N1, N2, N3, N4, N5, N6, N7, N8, N9, N10, N11, N12],
            CalculusId::N3 => &[N1, N2, N3, N4, N5, N6, N7, N8, N9, N10, N11, N12, N13],
        }
    }

    pub fn rules(self) -> &'static [RuleId] {
        match self {
            CalculusId::SNelson => &RuleId::TABLE,
            _ => &[RuleId::MP],
        }
    }
}

impl fmt::Display for CalculusId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CalculusId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "S_NELSON" | "S" | "s" | "nelson" => CalculusId::SNelson,
            "S_PRIME" | "S'" | "s'" | "sprime" => CalculusId::SPrime,
            "N4" | "n4" => CalculusId::N4,
            "N3" | "n3" => CalculusId::N3,
            other => return Err(format!("unknown calculus `{other}`")),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum AxiomId {
    A1, A2, A3, A4, A5,
    S1, S2, S3, S4, S5, S6, S7, S8, S9, S10, S11, S12, S13, S14, S15,
    N1, N2, N3, N4, N5, N6, N7, N8, N9, N10, N11, N12, N13,
}

impl AxiomId {
    pub fn name(self) -> String {
        format!("{self:?}")
    }

    /// The schema, with metavariables `phi`, `psi` and `gamma`.
    pub fn schema(self) -> Formula {
        use AxiomId::*;
        let text = match self {
            A1 => "phi => phi",
            A2 => "0 => psi",
            A3 => "~phi => (phi => 0)",
            A4 => "1",
            A5 => "(phi => psi) <=> (~psi => ~phi)",
            S1 => "(phi => psi) => ((psi => gamma) => (phi => gamma))",
            S2 => "(phi => (psi => gamma)) => (psi => (phi => gamma))",
            S3 => "phi => (psi => phi)",
            S4 => "phi => (psi => (phi * psi))",
            S5 => "(phi => (psi => gamma)) => ((phi * psi) => gamma)",
            S6 => "(phi & psi) => phi",
            S7 => "(phi & psi) => psi",
            S8 => "(phi => psi) => ((phi => gamma) => (phi => (psi & gamma)))",
            S9 => "phi => (phi | psi)",
            S10 => "psi => (phi | psi)",
            S11 => "(phi => gamma) => ((psi => gamma) => ((phi | psi) => gamma))",
            S12 => "1",
            S13 => "0 => phi",
            S14 => "((phi => 0) => 0) => phi",
            S15 => "(phi => (phi => (phi => psi))) => (phi => (phi => psi))",
            N1 => "phi -> (psi -> phi)",
            N2 => "(phi -> (psi -> gamma)) -> ((phi -> psi) -> (phi -> gamma))",
            N3 => "(phi & psi) -> phi",
            N4 => "(phi & psi) -> psi",
            N5 => "(phi -> psi) -> ((phi -> gamma) -> (phi -> (psi & gamma)))",
            N6 => "phi -> (phi | psi)",
            N7 => "psi -> (phi | psi)",
            N8 => "(phi -> gamma) -> ((psi -> gamma) -> ((phi | psi) -> gamma))",
            N13 => "~phi -> (phi -> psi)",
            N9 | N10 | N11 | N12 => {
                let (l, r) = match self {
                    N9 => ("~~phi", "phi"),
                    N10 => ("~(phi | psi)", "~phi & ~psi"),
                    N11 => ("~(phi & psi)", "~phi | ~psi"),
                    _ => ("~(phi -> psi)", "phi & ~psi"),
                };
                return Formula::weak_iff(parse(l), parse(r));
            }
        };
        parse(text)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for AxiomId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CalculusId::ALL
            .iter()
            .flat_map(|c| c.axioms())
            .copied()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown axiom `{s}`"))
    }
}

fn parse(text: &str) -> Formula {
    crate::formula::parse(text).expect("built-in schema parses")
}

/// Rule schemata of Nelson's calculus, plus modus ponens.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum RuleId {
    P,
    C,
    E,
    ImpL,
    ImpR,
    AndL1,
    AndL2,
    AndR,
    OrL1,
    OrL2,
    OrR1,
    OrR2,
    NegImpL,
    NegImpR,
    NegAndL,
    NegAndR,
    NegOrL,
    NegOrR,
    NegNegL,
    NegNegR,
    MP,
}

impl RuleId {
    pub const TABLE: [RuleId; 20] = [
        RuleId::P,
        RuleId::C,
        RuleId::E,
        RuleId::ImpL,
        RuleId::ImpR,
        RuleId::AndL1,
        RuleId::AndL2,
        RuleId::AndR,
        RuleId::OrL1,
        RuleId::OrL2,
        RuleId::OrR1,
        RuleId::OrR2,
        RuleId::NegImpL,
        RuleId::NegImpR,
        RuleId::NegAndL,
        RuleId::NegAndR,
        RuleId::NegOrL,
        RuleId::NegOrR,
        RuleId::NegNegL,
        RuleId::NegNegR,
    ];

    pub fn ascii(self) -> &'static str {
        use RuleId::*;
        match self {
            P => "P",
            C => "C",
            E => "E",
            ImpL => "=>l",
            ImpR => "=>r",
            AndL1 => "&l1",
            AndL2 => "&l2",
            AndR => "&r",
            OrL1 => "|l1",
            OrL2 => "|l2",
            OrR1 => "|r1",
            OrR2 => "|r2",
            NegImpL => "~=>l",
            NegImpR => "~=>r",
            NegAndL => "~&l",
            NegAndR => "~&r",
            NegOrL => "~|l",
            NegOrR => "~|r",
            NegNegL => "~~l",
            NegNegR => "~~r",
            MP => "MP",
        }
    }

    /// Number of premises.
    pub fn arity(self) -> usize {
        use RuleId::*;
        match self {
            E | ImpL | AndR | OrL1 | OrL2 | MP => 2,
            _ => 1,
        }
    }

    /// Implication power of the `Γ` prefix, or `None` when the schema has no `Γ`.
    pub fn gamma_power(self) -> Option<u8> {
        use RuleId::*;
        match self {
            P | E | ImpL | AndR | OrR1 | OrR2 | NegAndR | NegOrR | NegNegR => Some(1),
            NegImpR => Some(2),
            _ => None,
        }
    }

    /// The schema instance for a `Γ` list of metavariables `g1 … gk`:
    /// premises and conclusion. Rules without `Γ` ignore `k`. Modus ponens is
    /// given with `⇒`; weak-implication calculi substitute `→`.
    pub fn elaborate(self, k: usize) -> (Vec<Formula>, Formula) {
        use RuleId::*;
        let gamma: Vec<Formula> = (1..=k).map(|i| Formula::var(&format!("g{i}"))).collect();
        let g = |f: &str| gamma_implication(&gamma, &parse(f), 1);
        let g2 = |f: &str| gamma_implication(&gamma, &parse(f), 2);
        let f = parse;
        let (prem, concl): (Vec<Formula>, Formula) = match self {
            P => (vec![g("phi => (psi => gamma)")], g("psi => (phi => gamma)")),
            C => (vec![f("phi => (phi => (phi => gamma))")], f("phi => (phi => gamma)")),
            E => (vec![g("phi"), f("phi => gamma")], g("gamma")),
            ImpL => (vec![g("phi"), f("psi => gamma")], g("(phi => psi) => gamma")),
            ImpR => (vec![f("gamma")], f("phi => gamma")),
            AndL1 => (vec![f("phi => gamma")], f("(phi & psi) => gamma")),
            AndL2 => (vec![f("psi => gamma")], f("(phi & psi) => gamma")),
            AndR => (vec![g("phi"), g("psi")], g("phi & psi")),
            OrL1 => (vec![f("phi => gamma"), f("psi => gamma")], f("(phi | psi) => gamma")),
            OrL2 => (
                vec![f("phi => (phi => gamma)"), f("psi => (psi => gamma)")],
                f("(phi | psi) => ((phi | psi) => gamma)"),
            ),
            OrR1 => (vec![g("phi")], g("phi | psi")),
            OrR2 => (vec![g("psi")], g("phi | psi")),
            NegImpL => (vec![f("(phi & ~psi) => gamma")], f("~(phi => psi) => gamma")),
            NegImpR => (vec![g2("phi & ~psi")], g2("~(phi => psi)")),
            NegAndL => (vec![f("(~phi | ~psi) => gamma")], f("~(phi & psi) => gamma")),
            NegAndR => (vec![g("~phi | ~psi")], g("~(phi & psi)")),
            NegOrL => (vec![f("(~phi & ~psi) => gamma")], f("~(phi | psi) => gamma")),
            NegOrR => (vec![g("~phi & ~psi")], g("~(phi | psi)")),
            NegNegL => (vec![f("phi => gamma")], f("~~phi => gamma")),
            NegNegR => (vec![g("phi")], g("~~phi")),
            MP => (vec![f("phi"), f("phi => psi")], f("psi")),
        };
        (prem, concl)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ascii())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleId::TABLE
            .iter()
            .chain(std::iter::once(&RuleId::MP))
            .copied()
            .find(|r| r.ascii() == s)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

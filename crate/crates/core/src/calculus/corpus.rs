//! Worked derivations shipped with the library. Together they use every
//! rule of the sequent-style calculus with context lists of length 0, 1 and 2.

pub const CORPUS: &[(&str, &str)] = &[
    ("axioms-nelson", include_str!("../../data/proofs/axioms-nelson.proof")),
    ("contraction", include_str!("../../data/proofs/contraction.proof")),
    ("contraposition-axiom", include_str!("../../data/proofs/contraposition-axiom.proof")),
    ("cut-in-context", include_str!("../../data/proofs/cut-in-context.proof")),
    ("fusion-prime", include_str!("../../data/proofs/fusion-prime.proof")),
    ("left-rules", include_str!("../../data/proofs/left-rules.proof")),
    ("negated-conjunction-left", include_str!("../../data/proofs/negated-conjunction-left.proof")),
    ("negated-implication", include_str!("../../data/proofs/negated-implication.proof")),
    ("negated-right-rules", include_str!("../../data/proofs/negated-right-rules.proof")),
    ("negated-right-rules-one", include_str!("../../data/proofs/negated-right-rules-one.proof")),
    ("negated-right-rules-two", include_str!("../../data/proofs/negated-right-rules-two.proof")),
    ("permutation", include_str!("../../data/proofs/permutation.proof")),
    ("right-rules", include_str!("../../data/proofs/right-rules.proof")),
    ("right-rules-one", include_str!("../../data/proofs/right-rules-one.proof")),
    ("right-rules-two", include_str!("../../data/proofs/right-rules-two.proof")),
    ("squared-context-one", include_str!("../../data/proofs/squared-context-one.proof")),
    ("squared-context-two", include_str!("../../data/proofs/squared-context-two.proof")),
    ("squared-disjunction", include_str!("../../data/proofs/squared-disjunction.proof")),
    ("transitivity-prime", include_str!("../../data/proofs/transitivity-prime.proof")),
    ("weakening-prime", include_str!("../../data/proofs/weakening-prime.proof")),
];

#![allow(dead_code)]

use nelson_core::formula::{BinOp, Formula};
use proptest::prelude::*;

pub fn formula_in(vars: &'static [&'static str], ops: &'static [BinOp], negation: bool) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        4 => proptest::sample::select(vars).prop_map(Formula::var),
        1 => Just(Formula::Zero),
        1 => Just(Formula::One),
    ];
    leaf.prop_recursive(4, 24, 2, move |inner| {
        let bin = (proptest::sample::select(ops), inner.clone(), inner.clone())
            .prop_map(|(op, l, r)| Formula::bin(op, l, r));
        if negation {
            prop_oneof![1 => inner.prop_map(Formula::not), 3 => bin].boxed()
        } else {
            bin.boxed()
        }
    })
}

pub fn any_formula() -> impl Strategy<Value = Formula> {
    formula_in(&["p", "q", "r", "g1"], &BinOp::ALL, true)
}

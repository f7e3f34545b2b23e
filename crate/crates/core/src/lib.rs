//! Proof checking, finite-model validation and model search for Nelson's
//! logic `S`, its algebraic semantics (S-algebras), and the neighbouring
//! logics `N4` and `N3`.

pub mod algebra;
pub mod bridge;
pub mod catalog;
pub mod calculus;
pub mod formula;
pub mod search;
pub mod semantics;
pub mod suite;

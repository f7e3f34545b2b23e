//! Finite algebras given by operation tables, their structural validators,
//! congruences and quotients.

mod checks;
mod congruence;
mod io;
mod report;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

pub use checks::{
    check_cibrl, check_cirl, check_congruence_orderability, check_distributive, check_involutive,
    check_lattice, check_mv, check_n3_lattice, check_n4_lattice, check_three_potent, recheck_witness,
    validate, validate_s_algebra, validate_s_algebra_via_quasiequations, CheckKind, Law, N4Analysis,
    QUASI_GAMMA_BOUND,
};
pub use congruence::{principal_congruence, quotient, Congruence};
pub use io::{parse_algebra, write_algebra};
pub use report::{AxiomVerdict, ValidationReport};

use crate::formula::{BinOp, Connective};

/// Element of a carrier, as an index into [`FiniteAlgebra::elements`].
pub type Elem = usize;

/// Operation symbols an algebra may interpret.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum Op {
    Meet,
    Join,
    Fuse,
    Imp,
    WeakImp,
    Neg,
    Zero,
    One,
}

impl Op {
    pub const ALL: [Op; 8] = [Op::Meet, Op::Join, Op::Fuse, Op::Imp, Op::WeakImp, Op::Neg, Op::Zero, Op::One];

    pub fn arity(self) -> usize {
        match self {
            Op::Zero | Op::One => 0,
            Op::Neg => 1,
            _ => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Meet => "&",
            Op::Join => "|",
            Op::Fuse => "*",
            Op::Imp => "=>",
            Op::WeakImp => "->",
            Op::Neg => "~",
            Op::Zero => "0",
            Op::One => "1",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Op> {
        Some(match s {
            "&" | "∧" => Op::Meet,
            "|" | "∨" => Op::Join,
            "*" | "∗" => Op::Fuse,
            "=>" | "⇒" => Op::Imp,
            "->" | "→" => Op::WeakImp,
            "~" | "¬" => Op::Neg,
            "0" => Op::Zero,
            "1" => Op::One,
            _ => return None,
        })
    }

    pub fn from_connective(c: Connective) -> Op {
        match c {
            Connective::Zero => Op::Zero,
            Connective::One => Op::One,
            Connective::Not => Op::Neg,
            Connective::Bin(b) => Op::from_binop(b),
        }
    }

    pub fn from_binop(b: BinOp) -> Op {
        match b {
            BinOp::And => Op::Meet,
            BinOp::Or => Op::Join,
            BinOp::Imp => Op::Imp,
            BinOp::Fuse => Op::Fuse,
            BinOp::WeakImp => Op::WeakImp,
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// The set of operation symbols an algebra interprets.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Signature(BTreeSet<Op>);

impl Signature {
    pub fn new(ops: impl IntoIterator<Item = Op>) -> Signature {
        Signature(ops.into_iter().collect())
    }

    /// `⟨∧, ∨, ⇒, ¬, 0, 1⟩`
    pub fn nelson() -> Signature {
        Signature::new([Op::Meet, Op::Join, Op::Imp, Op::Neg, Op::Zero, Op::One])
    }

    /// `⟨∧, ∨, *, ⇒, 0, 1⟩`
    pub fn residuated_bounded() -> Signature {
        Signature::new([Op::Meet, Op::Join, Op::Fuse, Op::Imp, Op::Zero, Op::One])
    }

    /// `⟨∧, ∨, *, ⇒, 1⟩`
    pub fn residuated() -> Signature {
        Signature::new([Op::Meet, Op::Join, Op::Fuse, Op::Imp, Op::One])
    }

    /// `⟨∧, ∨, →, ¬⟩`
    pub fn n4() -> Signature {
        Signature::new([Op::Meet, Op::Join, Op::WeakImp, Op::Neg])
    }

    pub fn contains(&self, op: Op) -> bool {
        self.0.contains(&op)
    }

    pub fn iter(&self) -> impl Iterator<Item = Op> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syms: Vec<&str> = self.0.iter().map(|o| o.symbol()).collect();
        write!(f, "{}", syms.join(" "))
    }
}

/// The interpretation of one operation symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Table {
    Constant(Elem),
    Unary(Vec<Elem>),
    /// Row-major, `n * n` entries; the row is the left argument.
    Binary(Vec<Elem>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),
    #[error("table for `{op}` has the wrong shape")]
    Shape { op: Op },
    #[error("table for `{op}` contains an out-of-range entry {entry}")]
    OutOfRange { op: Op, entry: Elem },
    #[error("the signature must contain meet and join")]
    NoLattice,
    #[error("operation `{0}` is not in the signature")]
    MissingOp(Op),
    #[error("the carrier must be nonempty")]
    Empty,
    #[error("relation is not compatible with `{0}`")]
    Incompatible(Op),
    #[error("{0}")]
    Invalid(String),
}

/// A finite algebra: named elements plus one table per operation symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    name: String,
    elements: Vec<String>,
    tables: BTreeMap<Op, Table>,
}

impl FiniteAlgebra {
    /// Builds an algebra and checks every table against the carrier.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        tables: BTreeMap<Op, Table>,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let a = FiniteAlgebra { name: name.into(), elements, tables };
        a.well_formed()?;
        Ok(a)
    }

    fn well_formed(&self) -> Result<(), AlgebraError> {
        let n = self.elements.len();
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        let mut seen = BTreeSet::new();
        for e in &self.elements {
            if !seen.insert(e.as_str()) {
                return Err(AlgebraError::DuplicateElement(e.clone()));
            }
        }
        if !self.tables.contains_key(&Op::Meet) || !self.tables.contains_key(&Op::Join) {
            return Err(AlgebraError::NoLattice);
        }
        for (&op, t) in &self.tables {
            let entries: &[Elem] = match (op.arity(), t) {
                (0, Table::Constant(c)) => std::slice::from_ref(c),
                (1, Table::Unary(v)) if v.len() == n => v,
                (2, Table::Binary(v)) if v.len() == n * n => v,
                _ => return Err(AlgebraError::Shape { op }),
            };
            if let Some(&bad) = entries.iter().find(|&&e| e >= n) {
                return Err(AlgebraError::OutOfRange { op, entry: bad });
            }
        }
        Ok(())
    }

    /// Assembles an algebra from closures; used by constructions whose
    /// tables are computed pointwise.
    pub fn from_fns(
        name: impl Into<String>,
        elements: Vec<String>,
        binary: &[(Op, &dyn Fn(Elem, Elem) -> Elem)],
        unary: &[(Op, &dyn Fn(Elem) -> Elem)],
        constants: &[(Op, Elem)],
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let n = elements.len();
        let mut tables = BTreeMap::new();
        for (op, f) in binary {
            let mut t = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    t.push(f(a, b));
                }
            }
            tables.insert(*op, Table::Binary(t));
        }
        for (op, f) in unary {
            tables.insert(*op, Table::Unary((0..n).map(f).collect()));
        }
        for (op, c) in constants {
            tables.insert(*op, Table::Constant(*c));
        }
        FiniteAlgebra::new(name, elements, tables)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FiniteAlgebra {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, e: Elem) -> &str {
        &self.elements[e]
    }

    pub fn element(&self, name: &str) -> Result<Elem, AlgebraError> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| AlgebraError::UnknownElement(name.to_string()))
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.tables.keys().copied())
    }

    pub fn has(&self, op: Op) -> bool {
        self.tables.contains_key(&op)
    }

    pub fn table(&self, op: Op) -> Option<&Table> {
        self.tables.get(&op)
    }

    pub fn tables(&self) -> impl Iterator<Item = (Op, &Table)> {
        self.tables.iter().map(|(o, t)| (*o, t))
    }

    /// Applies a binary operation. Panics when `op` is not binary or absent;
    /// callers check the signature first.
    #[inline]
    pub fn bin(&self, op: Op, a: Elem, b: Elem) -> Elem {
        match self.tables.get(&op) {
            Some(Table::Binary(t)) => t[a * self.elements.len() + b],
            _ => panic!("`{op}` is not a binary operation of {}", self.name),
        }
    }

    #[inline]
    pub fn un(&self, op: Op, a: Elem) -> Elem {
        match self.tables.get(&op) {
            Some(Table::Unary(t)) => t[a],
            _ => panic!("`{op}` is not a unary operation of {}", self.name),
        }
    }

    pub fn constant(&self, op: Op) -> Option<Elem> {
        match self.tables.get(&op) {
            Some(Table::Constant(c)) => Some(*c),
            _ => None,
        }
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.bin(Op::Meet, a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.bin(Op::Join, a, b)
    }

    /// The lattice order, always induced from the meet table.
    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.meet(a, b) == a
    }

    /// Applies an operation of any arity.
    pub fn apply(&self, op: Op, args: &[Elem]) -> Elem {
        match (self.tables.get(&op), args) {
            (Some(Table::Constant(c)), []) => *c,
            (Some(Table::Unary(t)), [a]) => t[*a],
            (Some(Table::Binary(t)), [a, b]) => t[a * self.elements.len() + b],
            _ => panic!("cannot apply `{op}` to {} arguments in {}", args.len(), self.name),
        }
    }

    /// Returns a copy with `op` (re)defined.
    pub fn with_table(&self, op: Op, table: Table) -> Result<FiniteAlgebra, AlgebraError> {
        let mut tables = self.tables.clone();
        tables.insert(op, table);
        FiniteAlgebra::new(self.name.clone(), self.elements.clone(), tables)
    }

    /// Returns a copy with a binary operation defined pointwise.
    pub fn with_binary(&self, op: Op, f: impl Fn(Elem, Elem) -> Elem) -> FiniteAlgebra {
        let n = self.size();
        let t = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| f(a, b)).collect();
        self.with_table(op, Table::Binary(t)).expect("pointwise table stays in range")
    }

    pub fn with_unary(&self, op: Op, f: impl Fn(Elem) -> Elem) -> FiniteAlgebra {
        let t = (0..self.size()).map(f).collect();
        self.with_table(op, Table::Unary(t)).expect("pointwise table stays in range")
    }

    pub fn without(&self, op: Op) -> FiniteAlgebra {
        let mut a = self.clone();
        a.tables.remove(&op);
        a
    }

    /// The reduct to the listed operations (meet and join are always kept).
    pub fn reduct(&self, ops: &[Op]) -> FiniteAlgebra {
        let tables = self
            .tables
            .iter()
            .filter(|(o, _)| matches!(o, Op::Meet | Op::Join) || ops.contains(o))
            .map(|(o, t)| (*o, t.clone()))
            .collect();
        FiniteAlgebra { name: self.name.clone(), elements: self.elements.clone(), tables }
    }

    pub fn with_element_names(&self, names: Vec<String>) -> Result<FiniteAlgebra, AlgebraError> {
        if names.len() != self.size() {
            return Err(AlgebraError::Invalid("wrong number of element names".into()));
        }
        FiniteAlgebra::new(self.name.clone(), names, self.tables.clone())
    }

    /// The isomorphic copy in which old element `e` becomes `perm[e]`.
    pub fn permuted(&self, perm: &[Elem]) -> FiniteAlgebra {
        let n = self.size();
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let elements = inv.iter().map(|&old| self.elements[old].clone()).collect();
        let tables = self
            .tables
            .iter()
            .map(|(&op, t)| {
                let t = match t {
                    Table::Constant(c) => Table::Constant(perm[*c]),
                    Table::Unary(v) => Table::Unary(inv.iter().map(|&old| perm[v[old]]).collect()),
                    Table::Binary(v) => Table::Binary(
                        (0..n * n).map(|i| perm[v[inv[i / n] * n + inv[i % n]]]).collect(),
                    ),
                };
                (op, t)
            })
            .collect();
        FiniteAlgebra { name: self.name.clone(), elements, tables }
    }

    /// Least element of the induced order, if any.
    pub fn bottom(&self) -> Option<Elem> {
        (0..self.size()).find(|&a| (0..self.size()).all(|b| self.leq(a, b)))
    }

    pub fn top(&self) -> Option<Elem> {
        (0..self.size()).find(|&a| (0..self.size()).all(|b| self.leq(b, a)))
    }

    /// True when both algebras have the same element names, in the same
    /// order, and identical tables.
    pub fn same_tables(&self, other: &FiniteAlgebra) -> bool {
        self.elements == other.elements && self.tables == other.tables
    }

    /// Compares tables after matching elements by name.
    pub fn same_up_to_element_order(&self, other: &FiniteAlgebra) -> bool {
        if self.size() != other.size() || self.signature() != other.signature() {
            return false;
        }
        let mut perm = Vec::with_capacity(self.size());
        for e in &self.elements {
            match other.element(e) {
                Ok(i) => perm.push(i),
                Err(_) => return false,
            }
        }
        self.permuted(&perm).tables == other.tables
    }
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_algebra(self))
    }
}

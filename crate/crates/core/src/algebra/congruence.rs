use super::{AlgebraError, Elem, FiniteAlgebra, Op, Table};

/// An equivalence relation on a carrier, stored as a block label per element.
/// Labels are normalised so the first element of each block, scanning from
/// element 0, gets the next unused label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    block: Vec<usize>,
}

impl Congruence {
    pub fn identity(n: usize) -> Congruence {
        Congruence { block: (0..n).collect() }
    }

    pub fn total(n: usize) -> Congruence {
        Congruence { block: vec![0; n] }
    }

    /// Builds the partition from arbitrary labels.
    pub fn from_labels(labels: &[usize]) -> Congruence {
        let mut map = std::collections::HashMap::new();
        let block = labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { block }
    }

    /// The equivalence relation given as a predicate; it must already be
    /// reflexive, symmetric and transitive.
    pub fn from_relation(n: usize, related: impl Fn(Elem, Elem) -> bool) -> Result<Congruence, AlgebraError> {
        let mut labels = vec![usize::MAX; n];
        for a in 0..n {
            if labels[a] == usize::MAX {
                for b in a..n {
                    if related(a, b) {
                        labels[b] = a;
                    }
                }
            }
        }
        let c = Congruence::from_labels(&labels);
        for a in 0..n {
            for b in 0..n {
                if c.related(a, b) != related(a, b) {
                    return Err(AlgebraError::Invalid("relation is not an equivalence".into()));
                }
            }
        }
        Ok(c)
    }

    pub fn size(&self) -> usize {
        self.block.len()
    }

    #[inline]
    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.block[a] == self.block[b]
    }

    pub fn block_of(&self, a: Elem) -> usize {
        self.block[a]
    }

    pub fn block_count(&self) -> usize {
        self.block.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new(); self.block_count()];
        for (e, &b) in self.block.iter().enumerate() {
            out[b].push(e);
        }
        out
    }

    /// `self ⊆ other` as sets of pairs.
    pub fn is_subset_of(&self, other: &Congruence) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| !self.related(a, b) || other.related(a, b)))
    }

    /// The first operation that does not respect the relation, if any.
    pub fn incompatible_op(&self, a: &FiniteAlgebra) -> Option<Op> {
        let n = a.size();
        for (op, t) in a.tables() {
            let ok = match t {
                Table::Constant(_) => true,
                Table::Unary(v) => (0..n).all(|x| (0..n).all(|y| !self.related(x, y) || self.related(v[x], v[y]))),
                Table::Binary(v) => (0..n).all(|x| {
                    (0..n).all(|x2| {
                        !self.related(x, x2)
                            || (0..n).all(|y| self.related(v[x * n + y], v[x2 * n + y]) && self.related(v[y * n + x], v[y * n + x2]))
                    })
                }),
            };
            if !ok {
                return Some(op);
            }
        }
        None
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// The least congruence of `a` identifying `x` and `y`.
///
/// Every merged pair is pushed through every basic translation
/// `z ↦ f(…, z, …)`; the equivalence closure of those images is the
/// generated congruence.
pub fn principal_congruence(a: &FiniteAlgebra, x: Elem, y: Elem) -> Congruence {
    let n = a.size();
    let mut uf = UnionFind((0..n).collect());
    let mut queue = Vec::new();
    if uf.union(x, y) {
        queue.push((x, y));
    }
    let tables: Vec<&Table> = a.tables().map(|(_, t)| t).collect();
    while let Some((u, v)) = queue.pop() {
        for t in &tables {
            match t {
                Table::Constant(_) => {}
                Table::Unary(f) => {
                    if uf.union(f[u], f[v]) {
                        queue.push((f[u], f[v]));
                    }
                }
                Table::Binary(f) => {
                    for z in 0..n {
                        for (p, q) in [(f[u * n + z], f[v * n + z]), (f[z * n + u], f[z * n + v])] {
                            if uf.union(p, q) {
                                queue.push((p, q));
                            }
                        }
                    }
                }
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|e| uf.find(e)).collect();
    Congruence::from_labels(&labels)
}

/// The quotient algebra on the blocks of `theta`. Blocks are named after
/// their single element, or `[e1,e2,…]` when larger.
pub fn quotient(a: &FiniteAlgebra, theta: &Congruence) -> Result<FiniteAlgebra, AlgebraError> {
    if theta.size() != a.size() {
        return Err(AlgebraError::Invalid("congruence and algebra differ in size".into()));
    }
    if let Some(op) = theta.incompatible_op(a) {
        return Err(AlgebraError::Incompatible(op));
    }
    let blocks = theta.blocks();
    let names = blocks
        .iter()
        .map(|b| {
            if b.len() == 1 {
                a.element_name(b[0]).to_string()
            } else {
                let ns: Vec<&str> = b.iter().map(|&e| a.element_name(e)).collect();
                format!("[{}]", ns.join(","))
            }
        })
        .collect();
    let k = blocks.len();
    let rep: Vec<Elem> = blocks.iter().map(|b| b[0]).collect();
    let tables = a
        .tables()
        .map(|(op, t)| {
            let t = match t {
                Table::Constant(c) => Table::Constant(theta.block_of(*c)),
                Table::Unary(_) => Table::Unary((0..k).map(|i| theta.block_of(a.apply(op, &[rep[i]]))).collect()),
                Table::Binary(_) => Table::Binary(
                    (0..k * k).map(|i| theta.block_of(a.apply(op, &[rep[i / k], rep[i % k]]))).collect(),
                ),
            };
            (op, t)
        })
        .collect();
    FiniteAlgebra::new(format!("{}/~", a.name()), names, tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FiniteAlgebra {
        let min = |a: Elem, b: Elem| a.min(b);
        let max = |a: Elem, b: Elem| a.max(b);
        FiniteAlgebra::from_fns("chain", (0..n).map(|i| format!("e{i}")).collect(), &[(Op::Meet, &min), (Op::Join, &max)], &[], &[])
            .unwrap()
    }

    #[test]
    fn lattice_congruences_on_a_chain_are_intervals() {
        let c = chain(4);
        let th = principal_congruence(&c, 1, 2);
        assert_eq!(th.blocks(), vec![vec![0], vec![1, 2], vec![3]]);
        let th = principal_congruence(&c, 0, 2);
        assert_eq!(th.blocks(), vec![vec![0, 1, 2], vec![3]]);
    }

    #[test]
    fn identity_and_total() {
        let c = chain(3);
        assert_eq!(principal_congruence(&c, 1, 1), Congruence::identity(3));
        assert!(Congruence::identity(3).is_subset_of(&Congruence::total(3)));
        assert!(!Congruence::total(3).is_subset_of(&Congruence::identity(3)));
        let q = quotient(&c, &Congruence::total(3)).unwrap();
        assert_eq!(q.size(), 1);
        let q = quotient(&c, &Congruence::identity(3)).unwrap();
        assert!(q.same_up_to_element_order(&c.clone().with_name(q.name())));
    }

    #[test]
    fn incompatible_partition_is_rejected() {
        let c = chain(3);
        let th = Congruence::from_labels(&[0, 1, 0]);
        assert_eq!(quotient(&c, &th), Err(AlgebraError::Incompatible(Op::Meet)));
    }

    #[test]
    fn from_relation_requires_equivalence() {
        assert!(Congruence::from_relation(3, |a, b| a == b || (a + b == 1)).is_ok());
        assert!(Congruence::from_relation(3, |a, b| a <= b).is_err());
    }
}

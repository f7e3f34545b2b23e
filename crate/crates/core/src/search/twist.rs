//! N4-lattices as twist structures: subalgebras `B ⊆ H × H` over a finite
//! Heyting algebra `H` with `π₁(B) = H`, where
//! `(a,b) ∧ (c,d) = (a∧c, b∨d)`, `(a,b) ∨ (c,d) = (a∨c, b∧d)`,
//! `¬(a,b) = (b,a)` and `(a,b) → (c,d) = (a→c, a∧d)`.
//! Every finite N4-lattice is isomorphic to one of these.

use std::collections::HashSet;

use super::lattices::lattices;
use super::{Budget, SearchError};
use crate::algebra::{Elem, FiniteAlgebra, Op};

struct Heyting {
    m: usize,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    imp: Vec<Elem>,
}

impl Heyting {
    fn from_lattice(l: &FiniteAlgebra) -> Option<Heyting> {
        let m = l.size();
        let distributive = (0..m).all(|x| (0..m).all(|y| (0..m).all(|z| l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)))));
        if !distributive {
            return None;
        }
        let meet = (0..m * m).map(|i| l.meet(i / m, i % m)).collect();
        let join = (0..m * m).map(|i| l.join(i / m, i % m)).collect();
        let imp = (0..m * m)
            .map(|i| {
                let (x, y) = (i / m, i % m);
                let sols: Vec<Elem> = (0..m).filter(|&z| l.leq(l.meet(x, z), y)).collect();
                *sols.iter().find(|&&z| sols.iter().all(|&w| l.leq(w, z))).expect("distributive lattices are Heyting")
            })
            .collect();
        Some(Heyting { m, meet, join, imp })
    }

    fn ops(&self, p: usize, q: usize) -> [usize; 3] {
        let m = self.m;
        let (a, b, c, d) = (p / m, p % m, q / m, q % m);
        let pair = |x: Elem, y: Elem| x * m + y;
        [
            pair(self.meet[a * m + c], self.join[b * m + d]),
            pair(self.join[a * m + c], self.meet[b * m + d]),
            pair(self.imp[a * m + c], self.meet[a * m + d]),
        ]
    }

    fn closure(&self, mut set: u128) -> u128 {
        let m2 = self.m * self.m;
        loop {
            let mut next = set;
            for p in 0..m2 {
                if set >> p & 1 == 0 {
                    continue;
                }
                next |= 1 << ((p % self.m) * self.m + p / self.m);
                for q in 0..m2 {
                    if set >> q & 1 == 1 {
                        for r in self.ops(p, q) {
                            next |= 1 << r;
                        }
                    }
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    fn to_algebra(&self, set: u128) -> FiniteAlgebra {
        let m = self.m;
        let elems: Vec<usize> = (0..m * m).filter(|&p| set >> p & 1 == 1).collect();
        let idx = |p: usize| elems.iter().position(|&e| e == p).expect("closed");
        let at = |x: Elem, y: Elem, k: usize| idx(self.ops(elems[x], elems[y])[k]);
        let names = elems.iter().map(|p| format!("({},{})", p / m, p % m)).collect();
        FiniteAlgebra::from_fns(
            "twist",
            names,
            &[(Op::Meet, &|x, y| at(x, y, 0)), (Op::Join, &|x, y| at(x, y, 1)), (Op::WeakImp, &|x, y| at(x, y, 2))],
            &[(Op::Neg, &|x| idx((elems[x] % m) * m + elems[x] / m))],
            &[],
        )
        .expect("closed set")
    }
}

/// All twist structures of size `n` (not yet deduplicated up to isomorphism).
pub fn twist_structures(n: usize, budget: &mut Budget, visit: &mut dyn FnMut(FiniteAlgebra) -> bool) -> Result<bool, SearchError> {
    for m in 1..=n {
        if m * m > 128 {
            break;
        }
        for l in lattices(m, budget)? {
            let Some(h) = Heyting::from_lattice(&l) else { continue };
            let full_first: u128 = (1u128 << m) - 1;
            let proj = |set: u128| (0..m * m).filter(|&p| set >> p & 1 == 1).fold(0u128, |acc, p| acc | 1 << (p / m));
            let mut seen = HashSet::new();
            let mut stack: Vec<u128> = Vec::new();
            for p in 0..m * m {
                let c = h.closure(1 << p);
                if c.count_ones() as usize <= n && seen.insert(c) {
                    stack.push(c);
                }
            }
            let mut hits = Vec::new();
            while let Some(c) = stack.pop() {
                budget.tick()?;
                if c.count_ones() as usize == n {
                    if proj(c) == full_first {
                        hits.push(c);
                    }
                    continue;
                }
                for p in 0..m * m {
                    if c >> p & 1 == 0 {
                        let d = h.closure(c | 1 << p);
                        if d.count_ones() as usize <= n && seen.insert(d) {
                            stack.push(d);
                        }
                    }
                }
            }
            hits.sort_unstable();
            for c in hits {
                if !visit(h.to_algebra(c)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_n4_lattice;

    #[test]
    fn twist_structures_are_n4_lattices() {
        let mut count = 0;
        twist_structures(4, &mut Budget::unlimited(), &mut |a| {
            assert!(check_n4_lattice(&a).passed(), "{a}");
            count += 1;
            true
        })
        .unwrap();
        assert!(count > 0);
    }
}

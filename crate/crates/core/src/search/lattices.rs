use std::collections::HashSet;

use super::canon::canonicalize;
use super::{Budget, SearchError};
use crate::algebra::{Elem, FiniteAlgebra, Op};

/// Meet and join tables of the bounded poset `leq`, or `None` if some pair
/// has no meet.
pub(crate) fn lattice_from_order(n: usize, leq: &[Vec<bool>]) -> Option<(Vec<Elem>, Vec<Elem>)> {
    let bound = |x: Elem, y: Elem, lower: bool| -> Option<Elem> {
        let below = |z: Elem, w: Elem| if lower { leq[z][w] } else { leq[w][z] };
        let cands: Vec<Elem> = (0..n).filter(|&z| below(z, x) && below(z, y)).collect();
        cands.iter().copied().find(|&z| cands.iter().all(|&w| below(w, z)))
    };
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            meet[x * n + y] = bound(x, y, true)?;
            join[x * n + y] = bound(x, y, false)?;
        }
    }
    Some((meet, join))
}

pub(crate) fn bounded_lattice(n: usize, meet: Vec<Elem>, join: Vec<Elem>) -> FiniteAlgebra {
    let names = (0..n).map(|i| super::canon::element_name(i, n)).collect();
    let m = |x: Elem, y: Elem| meet[x * n + y];
    let j = |x: Elem, y: Elem| join[x * n + y];
    FiniteAlgebra::from_fns("lattice", names, &[(Op::Meet, &m), (Op::Join, &j)], &[], &[(Op::Zero, 0), (Op::One, n - 1)])
        .expect("tables are in range")
}

/// Bounded lattices of size `n`, one per isomorphism class, canonically
/// labeled (so `x ≤ y` implies `x ≤ y` as indices, bottom 0, top `n-1`).
pub fn lattices(n: usize, budget: &mut Budget) -> Result<Vec<FiniteAlgebra>, SearchError> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![bounded_lattice(1, vec![0], vec![0])]);
    }
    let mut leq = vec![vec![false; n]; n];
    for x in 0..n {
        leq[x][x] = true;
        leq[0][x] = true;
        leq[x][n - 1] = true;
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    grow(n, 1, &mut leq, budget, &mut |leq| {
        if let Some((meet, join)) = lattice_from_order(n, leq) {
            let (key, canon) = canonicalize(&bounded_lattice(n, meet, join));
            if seen.insert(key) {
                out.push(canon);
            }
        }
    })?;
    Ok(out)
}

/// Chooses the strict down-set of middle element `j` among `1..j`, keeping
/// it down-closed so the relation stays transitive.
fn grow(
    n: usize,
    j: usize,
    leq: &mut Vec<Vec<bool>>,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[Vec<bool>]),
) -> Result<(), SearchError> {
    if j >= n - 1 {
        visit(leq);
        return Ok(());
    }
    let below: Vec<Elem> = (1..j).collect();
    for mask in 0u64..(1u64 << below.len()) {
        budget.tick()?;
        let chosen = |i: Elem| mask >> (i - 1) & 1 == 1;
        let closed = below.iter().all(|&i| !chosen(i) || (1..i).all(|k| !leq[k][i] || chosen(k)));
        if !closed {
            continue;
        }
        for &i in &below {
            leq[i][j] = chosen(i);
        }
        grow(n, j + 1, leq, budget, visit)?;
    }
    for &i in &below {
        leq[i][j] = false;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_lattice_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| lattices(n, &mut Budget::unlimited()).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 5, 15, 53]);
    }

    #[test]
    fn labeling_is_natural() {
        for l in lattices(6, &mut Budget::unlimited()).unwrap() {
            for x in 0..6 {
                for y in 0..6 {
                    if l.leq(x, y) {
                        assert!(x <= y);
                    }
                }
            }
        }
    }
}

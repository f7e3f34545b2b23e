//! Canonical labelings. Candidates are the linear extensions of the induced
//! order (bottom first, top last); the canonical copy is the one whose
//! concatenated tables are lexicographically least.

use std::collections::BTreeMap;

use crate::algebra::{Elem, FiniteAlgebra, Table};

/// Element `i` of a canonically labeled algebra of size `n`.
pub fn element_name(i: usize, n: usize) -> String {
    if n == 1 {
        "e".to_string()
    } else if i == 0 {
        "0".to_string()
    } else if i == n - 1 {
        "1".to_string()
    } else if i <= 26 {
        ((b'a' + (i - 1) as u8) as char).to_string()
    } else {
        format!("a{i}")
    }
}

fn encode(a: &FiniteAlgebra, perm: &[Elem], inv: &[Elem]) -> Vec<usize> {
    let n = a.size();
    let mut out = Vec::new();
    for (_, t) in a.tables() {
        match t {
            Table::Constant(c) => out.push(perm[*c]),
            Table::Unary(v) => out.extend(inv.iter().map(|&old| perm[v[old]])),
            Table::Binary(v) => {
                for i in 0..n {
                    for j in 0..n {
                        out.push(perm[v[inv[i] * n + inv[j]]]);
                    }
                }
            }
        }
    }
    out
}

/// Visits every linear extension of `leq` as a map old element → new label.
fn linear_extensions(n: usize, leq: &dyn Fn(Elem, Elem) -> bool, visit: &mut dyn FnMut(&[Elem])) {
    fn go(
        n: usize,
        leq: &dyn Fn(Elem, Elem) -> bool,
        perm: &mut Vec<Elem>,
        used: &mut Vec<bool>,
        next: usize,
        visit: &mut dyn FnMut(&[Elem]),
    ) {
        if next == n {
            visit(perm);
            return;
        }
        for x in 0..n {
            if used[x] {
                continue;
            }
            if (0..n).any(|y| y != x && !used[y] && leq(y, x)) {
                continue;
            }
            used[x] = true;
            perm[x] = next;
            go(n, leq, perm, used, next + 1, visit);
            used[x] = false;
        }
    }
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    go(n, leq, &mut perm, &mut used, 0, visit);
}

/// The least encoding over all natural relabelings, and the relabeling
/// (old → new) that achieves it.
pub fn canonical_key(a: &FiniteAlgebra) -> (Vec<usize>, Vec<Elem>) {
    let n = a.size();
    let mut best: Option<(Vec<usize>, Vec<Elem>)> = None;
    let leq = |x, y| a.leq(x, y);
    linear_extensions(n, &leq, &mut |perm| {
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let key = encode(a, perm, &inv);
        if best.as_ref().map_or(true, |(b, _)| key < *b) {
            best = Some((key, perm.to_vec()));
        }
    });
    best.expect("a finite order has a linear extension")
}

/// The canonical copy, with elements renamed by [`element_name`].
pub fn canonicalize(a: &FiniteAlgebra) -> (Vec<usize>, FiniteAlgebra) {
    let (key, perm) = canonical_key(a);
    let n = a.size();
    let b = a
        .permuted(&perm)
        .with_element_names((0..n).map(|i| element_name(i, n)).collect())
        .expect("fresh names are distinct");
    (key, b)
}

/// Brute-force isomorphism test over all bijections; for small algebras.
pub fn isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> bool {
    if a.size() != b.size() || a.signature() != b.signature() {
        return false;
    }
    let n = a.size();
    let ta: BTreeMap<_, _> = a.tables().collect();
    let tb: BTreeMap<_, _> = b.tables().collect();
    let respects = |p: &[Elem]| {
        ta.iter().all(|(op, t)| match (t, tb[op]) {
            (Table::Constant(x), Table::Constant(y)) => p[*x] == *y,
            (Table::Unary(u), Table::Unary(v)) => (0..n).all(|x| p[u[x]] == v[p[x]]),
            (Table::Binary(u), Table::Binary(v)) => {
                (0..n).all(|x| (0..n).all(|y| p[u[x * n + y]] == v[p[x] * n + p[y]]))
            }
            _ => false,
        })
    };
    let mut perm: Vec<Elem> = (0..n).collect();
    loop {
        if respects(&perm) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

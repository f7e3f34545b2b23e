//! Commutative integral residuated structures on a fixed bounded lattice.
//!
//! Only `x * y` for middle elements is searched; `0` absorbs and `1` is the
//! unit. Each cell ranges over the elements below `x ∧ y`, kept monotone and
//! associative as cells fill in. Residuation (join preservation) is checked
//! on complete tables and `⇒` is read off as the largest `z` with
//! `x * z ≤ y`.

use super::{Budget, SearchError};
use crate::algebra::{Elem, FiniteAlgebra, Op};

#[derive(Debug, Clone, Copy, Default)]
pub struct FuseOptions {
    /// Only involutive structures (`(x⇒0)⇒0 = x`).
    pub involutive: bool,
    /// Only structures with `x² = x³`.
    pub three_potent: bool,
}

const UNSET: usize = usize::MAX;

struct State<'a> {
    n: usize,
    lat: &'a FiniteAlgebra,
    leq: Vec<bool>,
    f: Vec<Elem>,
    /// `neg[x]` when the involution is fixed in advance.
    neg: Option<Vec<Elem>>,
    opts: FuseOptions,
}

impl State<'_> {
    #[inline]
    fn le(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    #[inline]
    fn get(&self, x: Elem, y: Elem) -> Elem {
        self.f[x * self.n + y]
    }

    fn set(&mut self, x: Elem, y: Elem, v: Elem) {
        let n = self.n;
        self.f[x * n + y] = v;
        self.f[y * n + x] = v;
    }

    /// Monotonicity of row `x` around the new value at `(x, y)`.
    fn monotone_at(&self, x: Elem, y: Elem) -> bool {
        let v = self.get(x, y);
        (0..self.n).all(|k| {
            let w = self.get(x, k);
            w == UNSET || ((!self.le(k, y) || self.le(w, v)) && (!self.le(y, k) || self.le(v, w)))
        })
    }

    fn associative_so_far(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.get(x, y);
                if xy == UNSET {
                    continue;
                }
                for z in 0..n {
                    let yz = self.get(y, z);
                    if yz == UNSET {
                        continue;
                    }
                    let (l, r) = (self.get(xy, z), self.get(x, yz));
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn three_potent_so_far(&self) -> bool {
        (0..self.n).all(|x| {
            let sq = self.get(x, x);
            sq == UNSET || {
                let cube = self.get(sq, x);
                cube == UNSET || cube == sq
            }
        })
    }
}

/// Calls `visit` with every CIRL structure on `lat` allowed by `opts`,
/// as an algebra over `∧ ∨ * ⇒ 0 1` (and `¬` when involutive).
pub fn residuated_structures(
    lat: &FiniteAlgebra,
    opts: FuseOptions,
    budget: &mut Budget,
    visit: &mut dyn FnMut(FiniteAlgebra) -> bool,
) -> Result<bool, SearchError> {
    let n = lat.size();
    let top = n - 1;
    let leq: Vec<bool> = (0..n * n).map(|i| lat.leq(i / n, i % n)).collect();
    let negs: Vec<Option<Vec<Elem>>> = if opts.involutive {
        anti_involutions(lat).into_iter().map(Some).collect()
    } else {
        vec![None]
    };
    for neg in negs {
        let mut st = State { n, lat, leq: leq.clone(), f: vec![UNSET; n * n], neg, opts };
        for x in 0..n {
            st.set(0, x, 0);
            st.set(top, x, x);
        }
        let cells: Vec<(Elem, Elem)> = (1..top).flat_map(|x| (x..top).map(move |y| (x, y))).collect();
        if !fill(&mut st, &cells, 0, budget, visit)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fill(
    st: &mut State,
    cells: &[(Elem, Elem)],
    k: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(FiniteAlgebra) -> bool,
) -> Result<bool, SearchError> {
    if k == cells.len() {
        return Ok(match finish(st) {
            Some(a) => visit(a),
            None => true,
        });
    }
    let (x, y) = cells[k];
    let m = st.lat.meet(x, y);
    for v in 0..st.n {
        if !st.le(v, m) {
            continue;
        }
        if let Some(neg) = &st.neg {
            if (v == 0) != st.le(y, neg[x]) {
                continue;
            }
        }
        budget.tick()?;
        st.set(x, y, v);
        let ok = st.monotone_at(x, y)
            && st.monotone_at(y, x)
            && st.associative_so_far()
            && (!st.opts.three_potent || st.three_potent_so_far());
        if ok && !fill(st, cells, k + 1, budget, visit)? {
            st.set(x, y, UNSET);
            return Ok(false);
        }
    }
    st.set(x, y, UNSET);
    Ok(true)
}

fn finish(st: &State) -> Option<FiniteAlgebra> {
    let n = st.n;
    let lat = st.lat;
    for x in 0..n {
        for y in 0..n {
            for z in y..n {
                if st.get(x, lat.join(y, z)) != lat.join(st.get(x, y), st.get(x, z)) {
                    return None;
                }
            }
        }
    }
    let mut imp = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let sols: Vec<Elem> = (0..n).filter(|&z| st.le(st.get(x, z), y)).collect();
            imp[x * n + y] = *sols.iter().find(|&&z| sols.iter().all(|&w| st.le(w, z)))?;
        }
    }
    let f = &st.f;
    let fuse = |x: Elem, y: Elem| f[x * n + y];
    let i = |x: Elem, y: Elem| imp[x * n + y];
    let meet = |x, y| lat.meet(x, y);
    let join = |x, y| lat.join(x, y);
    let neg = |x: Elem| imp[x * n];
    if st.opts.involutive && (0..n).any(|x| neg(neg(x)) != x) {
        return None;
    }
    let unary: Vec<(Op, &dyn Fn(Elem) -> Elem)> = if st.opts.involutive { vec![(Op::Neg, &neg)] } else { vec![] };
    Some(
        FiniteAlgebra::from_fns(
            "cirl",
            lat.elements().to_vec(),
            &[(Op::Meet, &meet), (Op::Join, &join), (Op::Fuse, &fuse), (Op::Imp, &i)],
            &unary,
            &[(Op::Zero, 0), (Op::One, n - 1)],
        )
        .expect("tables are in range"),
    )
}

/// Order-reversing involutions of a bounded lattice.
pub(crate) fn anti_involutions(lat: &FiniteAlgebra) -> Vec<Vec<Elem>> {
    let n = lat.size();
    let mut out = Vec::new();
    let mut p = vec![UNSET; n];
    fn go(lat: &FiniteAlgebra, x: Elem, p: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        let n = lat.size();
        if x == n {
            if (0..n).all(|a| (0..n).all(|b| lat.leq(a, b) == lat.leq(p[b], p[a]))) {
                out.push(p.clone());
            }
            return;
        }
        if p[x] != UNSET {
            return go(lat, x + 1, p, out);
        }
        for y in x..n {
            if p[y] != UNSET {
                continue;
            }
            p[x] = y;
            p[y] = x;
            go(lat, x + 1, p, out);
            p[x] = UNSET;
            p[y] = UNSET;
        }
    }
    go(lat, 0, &mut p, &mut out);
    out
}

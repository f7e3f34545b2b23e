//! The pruned, canonically deduplicated search against brute force.

use nelson_core::algebra::{validate, CheckKind, Elem, FiniteAlgebra, Op};
use nelson_core::search::{count, enumerate, isomorphic, Constraint, SearchClass, SearchError, SearchSpec};
use nelson_core::semantics::QuasiEquation;

/// Every partial order on `0..n`.
fn orders(n: usize) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for (i, &(x, y)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                leq[x * n + y] = true;
            }
        }
        let antisym = (0..n).all(|x| (0..n).all(|y| x == y || !(leq[x * n + y] && leq[y * n + x])));
        let trans = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| !(leq[x * n + y] && leq[y * n + z]) || leq[x * n + z])));
        if antisym && trans {
            out.push(leq);
        }
    }
    out
}

fn all_tables(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    (0..n.pow((n * n) as u32)).map(move |mut code| {
        (0..n * n)
            .map(|_| {
                let d = code % n;
                code /= n;
                d
            })
            .collect()
    })
}

struct Lat {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
}

fn labeled_lattices(n: usize) -> Vec<Lat> {
    let mut out = Vec::new();
    for leq in orders(n) {
        let bound = |x: Elem, y: Elem, below: bool| {
            let le = |a: Elem, b: Elem| if below { leq[a * n + b] } else { leq[b * n + a] };
            let cands: Vec<Elem> = (0..n).filter(|&z| le(z, x) && le(z, y)).collect();
            cands.iter().copied().find(|&z| cands.iter().all(|&w| le(w, z)))
        };
        let meet: Option<Vec<Elem>> = (0..n * n).map(|i| bound(i / n, i % n, true)).collect();
        let join: Option<Vec<Elem>> = (0..n * n).map(|i| bound(i / n, i % n, false)).collect();
        if let (Some(meet), Some(join)) = (meet, join) {
            out.push(Lat { n, leq, meet, join });
        }
    }
    out
}

fn algebra(lat: &Lat, extra: &[(Op, &Vec<Elem>)], neg: Option<&Vec<Elem>>, constants: bool) -> FiniteAlgebra {
    let n = lat.n;
    let names = (0..n).map(|i| format!("e{i}")).collect();
    let bottom = (0..n).find(|&b| (0..n).all(|x| lat.leq[b * n + x])).unwrap();
    let top = (0..n).find(|&t| (0..n).all(|x| lat.leq[x * n + t])).unwrap();
    let m = |x: Elem, y: Elem| lat.meet[x * n + y];
    let j = |x: Elem, y: Elem| lat.join[x * n + y];
    let fns: Vec<Box<dyn Fn(Elem, Elem) -> Elem + '_>> = extra.iter().map(|(_, t)| Box::new(move |x: Elem, y: Elem| t[x * n + y]) as Box<dyn Fn(Elem, Elem) -> Elem>).collect();
    let mut binary: Vec<(Op, &dyn Fn(Elem, Elem) -> Elem)> = vec![(Op::Meet, &m), (Op::Join, &j)];
    for ((op, _), f) in extra.iter().zip(&fns) {
        binary.push((*op, f.as_ref()));
    }
    let nf = |x: Elem| neg.unwrap()[x];
    let unary: Vec<(Op, &dyn Fn(Elem) -> Elem)> = if neg.is_some() { vec![(Op::Neg, &nf)] } else { vec![] };
    let consts: Vec<(Op, Elem)> = if constants { vec![(Op::Zero, bottom), (Op::One, top)] } else { vec![] };
    FiniteAlgebra::from_fns("naive", names, &binary, &unary, &consts).unwrap()
}

fn involutions(n: usize) -> Vec<Vec<Elem>> {
    all_tables(n)
        .map(|t| t[..n].to_vec())
        .filter(|p| (0..n).all(|x| p[p[x]] == x))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

fn naive(class: SearchClass, n: usize) -> Vec<FiniteAlgebra> {
    let mut reps: Vec<FiniteAlgebra> = Vec::new();
    let mut keep = |a: FiniteAlgebra| {
        if !reps.iter().any(|r| isomorphic(r, &a)) {
            reps.push(a);
        }
    };
    for lat in labeled_lattices(n) {
        match class {
            SearchClass::Lattice => keep(algebra(&lat, &[], None, true)),
            SearchClass::N4 | SearchClass::N3 => {
                let kind = if class == SearchClass::N4 { CheckKind::N4 } else { CheckKind::N3 };
                for neg in involutions(n) {
                    let reverses = (0..n).all(|x| (0..n).all(|y| lat.leq[x * n + y] == lat.leq[neg[y] * n + neg[x]]));
                    if !reverses {
                        continue;
                    }
                    for w in all_tables(n) {
                        let a = algebra(&lat, &[(Op::WeakImp, &w)], Some(&neg), false);
                        if validate(&a, kind).passed() {
                            keep(a);
                        }
                    }
                }
            }
            _ => {
                for f in all_tables(n) {
                    let imp: Option<Vec<Elem>> = (0..n * n)
                        .map(|i| {
                            let (x, y) = (i / n, i % n);
                            let sols: Vec<Elem> = (0..n).filter(|&z| lat.leq[f[x * n + z] * n + y]).collect();
                            sols.iter().copied().find(|&z| sols.iter().all(|&w| lat.leq[w * n + z]))
                        })
                        .collect();
                    let Some(imp) = imp else { continue };
                    let plain = algebra(&lat, &[(Op::Fuse, &f), (Op::Imp, &imp)], None, true);
                    if !validate(&plain, CheckKind::Cirl).passed() {
                        continue;
                    }
                    let bottom = plain.constant(Op::Zero).unwrap();
                    let neg: Vec<Elem> = (0..n).map(|x| imp[x * n + bottom]).collect();
                    let with_neg = algebra(&lat, &[(Op::Fuse, &f), (Op::Imp, &imp)], Some(&neg), true);
                    let ok = |k| validate(&with_neg, k).passed();
                    match class {
                        SearchClass::Cirl => keep(plain),
                        SearchClass::ThreePotentCirl if ok(CheckKind::ThreePotent) => keep(plain),
                        SearchClass::InvolutiveCirl if ok(CheckKind::Involutive) => keep(with_neg),
                        SearchClass::SAlgebra if ok(CheckKind::SAlgebra) => keep(with_neg),
                        SearchClass::Mv if ok(CheckKind::Mv) => keep(with_neg),
                        _ => {}
                    }
                }
            }
        }
    }
    reps
}

#[test]
fn pruned_counts_match_brute_force_up_to_three() {
    for class in SearchClass::ALL {
        for n in 1..=3 {
            let brute = naive(class, n);
            let found = enumerate(&SearchSpec::exactly(class, n)).unwrap().models;
            assert_eq!(found.len(), brute.len(), "{class} at size {n}");
            for b in &brute {
                assert!(found.iter().any(|f| isomorphic(f, b)), "{class} at size {n} misses\n{b}");
            }
        }
    }
}

#[test]
fn yielded_algebras_are_pairwise_non_isomorphic() {
    for class in SearchClass::ALL {
        let models = enumerate(&SearchSpec::new(class, 4)).unwrap().models;
        for (i, a) in models.iter().enumerate() {
            for b in &models[i + 1..] {
                assert!(!isomorphic(a, b), "{class}: {} and {}", a.name(), b.name());
            }
        }
    }
}

#[test]
fn yielded_algebras_belong_to_their_class() {
    let kinds = [
        (SearchClass::Cirl, CheckKind::Cirl),
        (SearchClass::ThreePotentCirl, CheckKind::ThreePotent),
        (SearchClass::InvolutiveCirl, CheckKind::Involutive),
        (SearchClass::SAlgebra, CheckKind::SAlgebra),
        (SearchClass::Mv, CheckKind::Mv),
        (SearchClass::N4, CheckKind::N4),
        (SearchClass::N3, CheckKind::N3),
        (SearchClass::Lattice, CheckKind::Lattice),
    ];
    for (class, kind) in kinds {
        for a in enumerate(&SearchSpec::new(class, 5)).unwrap().models {
            assert!(validate(&a, kind).passed(), "{}", a.name());
        }
    }
}

#[test]
fn constraints_never_add_models() {
    let q = |s: &str| QuasiEquation::parse(s).unwrap();
    for class in [SearchClass::Cirl, SearchClass::SAlgebra, SearchClass::N4] {
        let base = SearchSpec::new(class, 5);
        let total = count(&base).unwrap();
        for c in [
            Constraint::Check(CheckKind::Distributive, true),
            Constraint::Check(CheckKind::Distributive, false),
            Constraint::Holds(q("x & y = y & x")),
            Constraint::Holds(q("x | (y & z) = (x | y) & (x | z)")),
        ] {
            let once = count(&base.clone().with(c.clone())).unwrap();
            assert!(once <= total, "{class} {c}");
            let twice = count(&base.clone().with(c).with(Constraint::Check(CheckKind::Lattice, true))).unwrap();
            assert!(twice <= once);
        }
        let split = q("x | (y & z) = (x | y) & (x | z)");
        let holds = count(&base.clone().with(Constraint::Holds(split.clone()))).unwrap();
        let fails = count(&base.clone().with(Constraint::Fails(split))).unwrap();
        assert_eq!(holds + fails, total);
    }
}

#[test]
fn budget_is_an_explicit_verdict() {
    let err = enumerate(&SearchSpec::new(SearchClass::SAlgebra, 8).budget(100)).unwrap_err();
    assert!(matches!(err, SearchError::BudgetExceeded { limit: 100 }));
    assert!(enumerate(&SearchSpec::new(SearchClass::SAlgebra, 3).budget(1_000_000)).is_ok());
}

#[test]
fn known_counts() {
    let by_size = |class| -> Vec<usize> {
        enumerate(&SearchSpec::new(class, 6)).unwrap().count_by_size.into_iter().map(|(_, c)| c).collect()
    };
    assert_eq!(by_size(SearchClass::Cirl), [1, 1, 2, 7, 26, 129]);
    assert_eq!(by_size(SearchClass::Mv), [1, 1, 1, 2, 1, 2]);
    assert_eq!(by_size(SearchClass::Lattice), [1, 1, 1, 2, 5, 15]);
}

#[test]
fn smallest_non_distributive_s_algebra() {
    let spec = SearchSpec::new(SearchClass::SAlgebra, 8).with(Constraint::Check(CheckKind::Distributive, false));
    let out = enumerate(&spec).unwrap();
    let first = out.count_by_size.iter().find(|(_, c)| *c > 0).map(|(n, _)| *n);
    assert_eq!(first, Some(8));
    let a8 = nelson_core::catalog::get("A8").unwrap();
    let fused = nelson_core::bridge::to_s_prime(&a8).unwrap();
    let a8 = a8.with_binary(Op::Fuse, |x, y| fused.bin(Op::Fuse, x, y));
    assert_eq!(out.count, 1);
    assert!(isomorphic(&out.models[0], &a8));
}

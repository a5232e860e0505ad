mod common;

use std::collections::BTreeMap;

use hsc_core::algebra::{chain, cyclic, product, upset_algebra, HeytingAlgebra, Poset};
use hsc_core::eval::{evaluate, formula_valid, Valuation, Validity};
use hsc_core::formula::{format, parse, Formula, Substitution};
use hsc_core::morphisms::{filters, find_homs, kernel, quotient, HomMode};
use hsc_core::par::Exec;
use hsc_core::quasivariety::{free_algebra_size, QvarHandle};
use hsc_core::Budgets;
use proptest::prelude::*;

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::Bot),
        5 => proptest::sample::select(common::VARS.to_vec()).prop_map(Formula::var),
    ];
    leaf.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
}

fn substitution() -> impl Strategy<Value = Substitution> {
    proptest::collection::btree_map(proptest::sample::select(common::VARS.to_vec()), formula(), 0..3)
        .prop_map(|m| m.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut pairs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        pairs.push((i, j));
                    }
                    k += 1;
                }
            }
            common::poset_from_pairs(n, &pairs)
        })
    })
}

fn small_algebra() -> impl Strategy<Value = HeytingAlgebra> {
    prop_oneof![
        (1usize..=6).prop_map(chain),
        (2usize..=9).prop_map(|n| cyclic(n).unwrap()),
        poset(4).prop_map(|p| upset_algebra(&p).unwrap()),
    ]
}

/// Every valuation of the formula's variables, by brute force.
fn valid_by_sweep(a: &HeytingAlgebra, f: &Formula) -> bool {
    let vars: Vec<String> = f.variables().into_iter().collect();
    let mut idx = vec![0usize; vars.len()];
    loop {
        let v: Valuation = vars.iter().cloned().zip(idx.iter().copied()).collect();
        if evaluate(a, f, &v).unwrap() != a.top() {
            return false;
        }
        let mut i = vars.len();
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < a.len() {
                break;
            }
            idx[i] = 0;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printing_then_parsing_is_identity(f in formula()) {
        prop_assert_eq!(parse(&format(&f)).unwrap(), f);
    }

    #[test]
    fn substitution_composes(f in formula(), s1 in substitution(), s2 in substitution()) {
        prop_assert_eq!(f.substitute(&s2.after(&s1)), f.substitute(&s1).substitute(&s2));
    }

    #[test]
    fn upset_algebras_validate(p in poset(8)) {
        let a = upset_algebra(&p).unwrap();
        prop_assert!(a.validate().passed());
        prop_assert_eq!(filters(&a).len(), a.len());
    }

    #[test]
    fn imp_mutations_break_validation(p in poset(6), cell in any::<usize>(), shift in any::<usize>()) {
        let a = upset_algebra(&p).unwrap();
        prop_assume!(a.len() > 1);
        prop_assert!(!common::mutate_imp(&a, cell, shift).validate().passed());
    }

    #[test]
    fn validity_matches_sweep(a in small_algebra(), f in formula()) {
        let v = formula_valid(&a, &f, &Budgets::default()).unwrap();
        prop_assert_eq!(v.is_valid(), valid_by_sweep(&a, &f));
        if let Validity::Refuted(w) = v {
            prop_assert!(w.verify_formula(&a, &f));
        }
    }

    #[test]
    fn homomorphisms_verify_and_compose(a in small_algebra(), b in small_algebra(), c in small_algebra()) {
        let ab = find_homs(&a, &b, HomMode::All, 16, Exec::default()).homs;
        let bc = find_homs(&b, &c, HomMode::All, 16, Exec::default()).homs;
        for h in &ab {
            prop_assert!(h.verify(&a, &b));
            for g in &bc {
                prop_assert!(h.compose(g, c.len()).verify(&a, &c));
            }
        }
    }

    #[test]
    fn surjections_factor_through_kernels(a in small_algebra(), b in small_algebra()) {
        for h in find_homs(&a, &b, HomMode::Surjective, 16, Exec::default()).homs {
            prop_assert!(common::factors_through_kernel(&h, &a, &b));
        }
    }

    #[test]
    fn quotients_by_filters_are_algebras(a in small_algebra()) {
        for f in filters(&a) {
            prop_assert!(f.verify(&a));
            let q = quotient(&a, &f);
            prop_assert!(q.algebra.validate().passed());
            prop_assert!(q.projection.verify(&a, &q.algebra) && q.projection.surjective);
            prop_assert_eq!(kernel(&q.projection, &a, &q.algebra), f);
        }
    }

    #[test]
    fn product_projections_are_surjective(a in small_algebra(), b in small_algebra()) {
        let p = product(&[&a, &b], 4096).unwrap();
        prop_assert!(p.algebra.validate().passed());
        for (i, f) in [&a, &b].into_iter().enumerate() {
            let map = (0..p.algebra.len()).map(|x| p.decode(x)[i]).collect();
            let h = hsc_core::morphisms::Homomorphism::new(map, f.len());
            prop_assert!(h.surjective && h.verify(&p.algebra, f));
        }
    }

    #[test]
    fn sequential_and_parallel_agree(a in small_algebra(), b in small_algebra()) {
        let par = find_homs(&a, &b, HomMode::All, 32, Exec::Parallel);
        let seq = find_homs(&a, &b, HomMode::All, 32, Exec::Sequential);
        prop_assert_eq!(par, seq);
    }
}

#[test]
fn boolean_free_algebra_sizes() {
    let q = QvarHandle::new(chain(2), Budgets::default()).unwrap();
    assert_eq!(free_algebra_size(&q, 1).unwrap(), common::boolean_identity_closure());
    for k in 0..=3usize {
        assert_eq!(free_algebra_size(&q, k).unwrap(), 1 << (1 << k));
    }
}

#[test]
fn free_algebra_over_three_chain() {
    // One-generated free algebra of Q(C3): distinct values of the terms
    // x, ~x, ~~x, x \/ ~x, ~~x -> x, ... in C3^3, counted by brute force.
    let c3 = chain(3);
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![0, 1, 2], vec![0, 0, 0]];
    while let Some(t) = frontier.pop() {
        if seen.insert(t.clone(), ()).is_some() {
            continue;
        }
        let known: Vec<Vec<usize>> = seen.keys().cloned().collect();
        for u in known {
            for op in 0..3 {
                for (x, y) in [(&t, &u), (&u, &t)] {
                    let r: Vec<usize> = (0..3)
                        .map(|i| match op {
                            0 => c3.meet(x[i], y[i]),
                            1 => c3.join(x[i], y[i]),
                            _ => c3.imp(x[i], y[i]),
                        })
                        .collect();
                    if !seen.contains_key(&r) {
                        frontier.push(r);
                    }
                }
            }
        }
    }
    let q = QvarHandle::new(c3, Budgets::default()).unwrap();
    assert_eq!(free_algebra_size(&q, 1).unwrap(), seen.len());
}

//! Random inputs and independent oracles shared by the integration tests.

#![allow(dead_code)]

use hsc_core::algebra::{HeytingAlgebra, Poset};
use hsc_core::formula::Formula;
use hsc_core::morphisms::{kernel, quotient, Homomorphism};
use rand::Rng;

pub const VARS: [&str; 4] = ["p", "q", "r", "s"];

pub fn random_formula<R: Rng>(rng: &mut R, depth: u32) -> Formula {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return match rng.gen_range(0..6) {
            0 => Formula::Bot,
            _ => Formula::var(VARS[rng.gen_range(0..VARS.len())]),
        };
    }
    let a = random_formula(rng, depth - 1);
    let b = random_formula(rng, depth - 1);
    match rng.gen_range(0..3) {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        _ => Formula::imp(a, b),
    }
}

/// Random strict order on `n` points: `i < j` only for `i < j` as indices.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_ratio(1, 3) {
                pairs.push((i, j));
            }
        }
    }
    poset_from_pairs(n, &pairs)
}

pub fn poset_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Poset {
    let labels = (0..n).map(|i| format!("x{i}")).collect();
    Poset::from_relation(labels, pairs).expect("index order is acyclic")
}

/// Copy of `a` with one imp entry changed to a different element.
pub fn mutate_imp(a: &HeytingAlgebra, cell: usize, shift: usize) -> HeytingAlgebra {
    let n = a.len();
    let mut imp = a.imp_table().to_vec();
    let cell = cell % imp.len();
    imp[cell] = ((imp[cell] as usize + 1 + shift % (n - 1)) % n) as u32;
    HeytingAlgebra::from_tables(
        n,
        a.bot(),
        a.top(),
        a.meet_table().to_vec(),
        a.join_table().to_vec(),
        imp,
    )
    .expect("entries stay in range")
}

/// `h` factors as the projection onto `a / ker h` followed by an
/// isomorphism onto `b`.
pub fn factors_through_kernel(h: &Homomorphism, a: &HeytingAlgebra, b: &HeytingAlgebra) -> bool {
    if !h.surjective || !h.verify(a, b) {
        return false;
    }
    let f = kernel(h, a, b);
    if !f.verify(a) || (0..a.len()).any(|x| f.contains(x) != (h.apply(x) == b.top())) {
        return false;
    }
    let q = quotient(a, &f);
    let induced: Vec<usize> = q.elements.iter().map(|&r| h.apply(r)).collect();
    let i = Homomorphism::new(induced, b.len());
    i.injective
        && i.surjective
        && i.verify(&q.algebra, b)
        && (0..a.len()).all(|x| i.apply(q.projection.apply(x)) == h.apply(x))
}

/// Subalgebra of `C2^2` generated by the identity tuple `(0, 1)`, computed
/// on booleans without touching the library.
pub fn boolean_identity_closure() -> usize {
    type T = (bool, bool);
    let ops: [fn(bool, bool) -> bool; 3] = [|x, y| x && y, |x, y| x || y, |x, y| !x || y];
    let mut set: Vec<T> = vec![(false, true), (false, false)];
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &b in &set {
                for op in ops {
                    let t = (op(a.0, b.0), op(a.1, b.1));
                    if !next.contains(&t) {
                        next.push(t);
                    }
                }
            }
        }
        if next.len() == set.len() {
            return set.len();
        }
        set = next;
    }
}

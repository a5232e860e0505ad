use std::collections::{HashMap, HashSet};

use super::{isomorphic, Homomorphism};
use crate::algebra::{closure, HeytingAlgebra};
use crate::error::{Error, Result};

/// A subalgebra with its inclusion map into the ambient algebra.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub algebra: HeytingAlgebra,
    pub inclusion: Homomorphism,
}

impl Subalgebra {
    pub fn elements(&self) -> &[usize] {
        &self.inclusion.map
    }
}

/// Restriction of `a` to a sorted subset that is already closed under the
/// operations and contains the bounds.
pub fn induced_subalgebra(a: &HeytingAlgebra, elems: &[usize]) -> Subalgebra {
    let local: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let at = |x: usize| local[&x];
    let algebra = HeytingAlgebra::tabulate(
        elems.len(),
        at(a.bot()),
        at(a.top()),
        |i, j| at(a.meet(elems[i], elems[j])),
        |i, j| at(a.join(elems[i], elems[j])),
        |i, j| at(a.imp(elems[i], elems[j])),
    );
    Subalgebra {
        algebra,
        inclusion: Homomorphism::new(elems.to_vec(), a.len()),
    }
}

pub fn subalgebra_generated(a: &HeytingAlgebra, seed: &[usize]) -> Subalgebra {
    induced_subalgebra(a, &closure(a, seed))
}

fn mask(n: usize, elems: &[usize]) -> Vec<u64> {
    let mut m = vec![0u64; n.div_ceil(64)];
    for &x in elems {
        m[x / 64] |= 1 << (x % 64);
    }
    m
}

/// All subalgebras up to isomorphism, smallest first. Universes are explored
/// by adding one element at a time to already closed sets, so every closed
/// set is reached without a sweep over arbitrary subsets. Fails once more
/// than `cap` distinct universes have been seen.
pub fn subalgebras(a: &HeytingAlgebra, cap: usize) -> Result<Vec<Subalgebra>> {
    let n = a.len();
    let start = closure(a, &[]);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    seen.insert(mask(n, &start));
    let mut universes = vec![start];
    let mut next = 0;
    while next < universes.len() {
        let u = universes[next].clone();
        next += 1;
        let inside = mask(n, &u);
        for x in 0..n {
            if inside[x / 64] >> (x % 64) & 1 == 1 {
                continue;
            }
            let mut seeds = u.clone();
            seeds.push(x);
            let v = closure(a, &seeds);
            if seen.insert(mask(n, &v)) {
                if universes.len() >= cap {
                    return Err(Error::Budget(format!("more than {cap} subalgebras")));
                }
                universes.push(v);
            }
        }
    }
    universes.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    let mut reps: Vec<Subalgebra> = Vec::new();
    let mut by_invariant: HashMap<_, Vec<usize>> = HashMap::new();
    for u in &universes {
        let s = induced_subalgebra(a, u);
        let bucket = by_invariant.entry(s.algebra.invariant()).or_default();
        if bucket.iter().any(|&i| isomorphic(&reps[i].algebra, &s.algebra)) {
            continue;
        }
        bucket.push(reps.len());
        reps.push(s);
    }
    Ok(reps)
}

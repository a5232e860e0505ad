use std::collections::HashMap;

use super::{catalog, cyclic, rn_ladder_prefix, HeytingAlgebra, Poset};
use crate::error::{Error, Result};

/// Largest frame accepted by [`upset_algebra`] (points are packed in a `u64`).
pub const MAX_FRAME_POINTS: usize = 64;
/// Largest up-set algebra [`upset_algebra`] will tabulate.
pub const MAX_UPSET_ALGEBRA: usize = 1 << 14;

/// Up-sets of `p`, ordered by size and then by bit pattern, so that the
/// empty set is element 0 and the full set is the last element.
pub(crate) fn enumerate_upsets(p: &Poset, cap: usize) -> Result<Vec<u64>> {
    let n = p.len();
    if n > MAX_FRAME_POINTS {
        return Err(Error::InvalidArgument(format!(
            "frames are limited to {MAX_FRAME_POINTS} points, got {n}"
        )));
    }
    let up: Vec<u64> = (0..n)
        .map(|x| (0..n).filter(|&y| p.leq(x, y)).fold(0u64, |m, y| m | 1 << y))
        .collect();
    // points with smaller up-sets first: every strict successor precedes its predecessors
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (up[x].count_ones(), x));

    fn rec(i: usize, cur: u64, order: &[usize], up: &[u64], cap: usize, out: &mut Vec<u64>) -> bool {
        if out.len() > cap {
            return false;
        }
        if i == order.len() {
            out.push(cur);
            return true;
        }
        let x = order[i];
        if !rec(i + 1, cur, order, up, cap, out) {
            return false;
        }
        let strict = up[x] & !(1u64 << x);
        if strict & !cur == 0 {
            return rec(i + 1, cur | 1 << x, order, up, cap, out);
        }
        true
    }
    let mut out = Vec::new();
    if !rec(0, 0, &order, &up, cap, &mut out) || out.len() > cap {
        return Err(Error::Budget(format!("frame has more than {cap} up-sets")));
    }
    out.sort_by_key(|&m| (m.count_ones(), m));
    Ok(out)
}

/// The Heyting algebra of up-sets of a finite poset: meet is intersection,
/// join is union, and `U -> V = {x : ↑x ∩ U ⊆ V}`.
pub fn upset_algebra(p: &Poset) -> Result<HeytingAlgebra> {
    let n = p.len();
    let sets = enumerate_upsets(p, MAX_UPSET_ALGEBRA)?;
    let index: HashMap<u64, usize> = sets.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let down: Vec<u64> = (0..n)
        .map(|x| (0..n).filter(|&y| p.leq(y, x)).fold(0u64, |m, y| m | 1 << y))
        .collect();
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let downset = |s: u64| {
        let mut acc = 0u64;
        let mut rest = s;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            acc |= down[x];
            rest &= rest - 1;
        }
        acc
    };
    let k = sets.len();
    Ok(HeytingAlgebra::tabulate(
        k,
        0,
        k - 1,
        |a, b| index[&(sets[a] & sets[b])],
        |a, b| index[&(sets[a] | sets[b])],
        |a, b| index[&(all & !downset(sets[a] & !sets[b]))],
    ))
}

/// The `n`-element linear Heyting algebra (`n >= 1`; `chain(1)` is trivial).
pub fn chain(n: usize) -> HeytingAlgebra {
    assert!(n >= 1, "chain needs at least one element");
    HeytingAlgebra::tabulate(
        n,
        0,
        n - 1,
        |a, b| a.min(b),
        |a, b| a.max(b),
        |a, b| if a <= b { n - 1 } else { b },
    )
}

/// The one-element algebra.
pub fn trivial() -> HeytingAlgebra {
    chain(1)
}

/// A finite direct product with its projections.
#[derive(Debug, Clone)]
pub struct Product {
    pub algebra: HeytingAlgebra,
    pub factor_sizes: Vec<usize>,
    pub projections: Vec<Vec<u32>>,
}

impl Product {
    /// Index of the tuple `xs` (first coordinate most significant).
    pub fn encode(&self, xs: &[usize]) -> usize {
        xs.iter()
            .zip(&self.factor_sizes)
            .fold(0, |acc, (&x, &s)| acc * s + x)
    }

    pub fn decode(&self, mut i: usize) -> Vec<usize> {
        let mut out = vec![0; self.factor_sizes.len()];
        for (slot, &s) in out.iter_mut().zip(&self.factor_sizes).rev() {
            *slot = i % s;
            i /= s;
        }
        out
    }
}

/// Componentwise product. Fails when the product would exceed `cap` elements.
pub fn product(factors: &[&HeytingAlgebra], cap: usize) -> Result<Product> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("product of an empty list".into()));
    }
    let sizes: Vec<usize> = factors.iter().map(|a| a.len()).collect();
    let total = sizes
        .iter()
        .try_fold(1usize, |acc, &s| acc.checked_mul(s).filter(|&t| t <= cap))
        .ok_or_else(|| Error::Budget(format!("product exceeds {cap} elements")))?;
    let decode = |mut i: usize| {
        let mut out = vec![0; sizes.len()];
        for (slot, &s) in out.iter_mut().zip(&sizes).rev() {
            *slot = i % s;
            i /= s;
        }
        out
    };
    let tuples: Vec<Vec<usize>> = (0..total).map(decode).collect();
    let encode = |xs: &mut dyn Iterator<Item = usize>| {
        xs.zip(&sizes).fold(0, |acc, (x, &s)| acc * s + x)
    };
    let op = |which: u8, a: usize, b: usize| {
        let (ta, tb) = (&tuples[a], &tuples[b]);
        let mut it = factors.iter().enumerate().map(|(k, f)| match which {
            0 => f.meet(ta[k], tb[k]),
            1 => f.join(ta[k], tb[k]),
            _ => f.imp(ta[k], tb[k]),
        });
        encode(&mut it)
    };
    let bot = encode(&mut factors.iter().map(|f| f.bot()));
    let top = encode(&mut factors.iter().map(|f| f.top()));
    let algebra = HeytingAlgebra::tabulate(
        total,
        bot,
        top,
        |a, b| op(0, a, b),
        |a, b| op(1, a, b),
        |a, b| op(2, a, b),
    );
    let projections = (0..factors.len())
        .map(|k| tuples.iter().map(|t| t[k] as u32).collect())
        .collect();
    Ok(Product {
        algebra,
        factor_sizes: sizes,
        projections,
    })
}

/// Named constructions of standard algebras.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSpec {
    Chain(usize),
    Cyclic(usize),
    Catalog(String),
    RnLadderPrefix(usize),
    Trivial,
}

/// Largest chain and cyclic algebra constructed by [`standard_algebra`].
pub const MAX_CHAIN: usize = 4096;
pub const MAX_CYCLIC: usize = 64;

pub fn standard_algebra(spec: &AlgebraSpec) -> Result<HeytingAlgebra> {
    match spec {
        AlgebraSpec::Chain(n) if (1..=MAX_CHAIN).contains(n) => Ok(chain(*n)),
        AlgebraSpec::Chain(n) => Err(Error::InvalidArgument(format!(
            "chain size must be in 1..={MAX_CHAIN}, got {n}"
        ))),
        AlgebraSpec::Cyclic(n) => cyclic(*n),
        AlgebraSpec::Catalog(name) => catalog(name),
        AlgebraSpec::RnLadderPrefix(k) => rn_ladder_prefix(*k),
        AlgebraSpec::Trivial => Ok(trivial()),
    }
}

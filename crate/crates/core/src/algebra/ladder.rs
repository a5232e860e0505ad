//! Finite pieces of the Rieger–Nishimura ladder and the cyclic algebras.
//!
//! The ladder has points `w0, w1, ...` with `w_n ≤ w_m` iff `n == m` or
//! `n ≥ m + 2`; `w0` and `w1` are maximal. Every finite one-generated Heyting
//! algebra is the up-set algebra of a finite up-set of the ladder.

use super::construct::{enumerate_upsets, MAX_CYCLIC, MAX_FRAME_POINTS};
use super::{min_generators, upset_algebra, HeytingAlgebra, Poset};
use crate::error::{Error, Result};
use crate::morphisms::isomorphic;

/// The prefix `{w0, ..., wk}` of the ladder frame.
pub fn ladder_frame(k: usize) -> Poset {
    let labels = (0..=k).map(|i| format!("w{i}")).collect();
    let pairs: Vec<(usize, usize)> = (0..=k)
        .flat_map(|n| (0..=k).filter(move |&m| n >= m + 2).map(move |m| (n, m)))
        .collect();
    Poset::from_relation(labels, &pairs).expect("ladder order is a partial order")
}

/// Up-set algebra of [`ladder_frame`]`(k)`; it has `2k + 2` elements.
pub fn rn_ladder_prefix(k: usize) -> Result<HeytingAlgebra> {
    if k >= MAX_FRAME_POINTS {
        return Err(Error::InvalidArgument(format!(
            "ladder prefix depth must be below {MAX_FRAME_POINTS}, got {k}"
        )));
    }
    upset_algebra(&ladder_frame(k))
}

/// All pairwise non-isomorphic one-generated algebras with `n` elements, in
/// order of discovery. An `n`-element algebra of this kind comes from an
/// up-set with at most `n - 1` points, and such an up-set lies inside the
/// prefix of depth `n - 1`, so the search is complete.
pub fn cyclic_candidates(n: usize) -> Result<Vec<HeytingAlgebra>> {
    if !(2..=MAX_CYCLIC).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "cyclic algebras are constructed for 2..={MAX_CYCLIC} elements, got {n}"
        )));
    }
    let depth = n - 1;
    let frame = ladder_frame(depth);
    let mut found: Vec<HeytingAlgebra> = Vec::new();
    for u in enumerate_upsets(&frame, usize::MAX)? {
        let points: Vec<usize> = (0..frame.len()).filter(|&i| u >> i & 1 == 1).collect();
        if points.is_empty() || points.len() >= n {
            continue;
        }
        let sub = frame.restrict(&points);
        if !matches!(enumerate_upsets(&sub, n), Ok(v) if v.len() == n) {
            continue;
        }
        let a = upset_algebra(&sub)?;
        if min_generators(&a, 1).count().is_none() {
            continue;
        }
        if !found.iter().any(|b| isomorphic(&a, b)) {
            found.push(a);
        }
    }
    Ok(found)
}

/// The `n`-element cyclic algebra `C_n`.
pub fn cyclic(n: usize) -> Result<HeytingAlgebra> {
    cyclic_candidates(n)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidArgument(format!("no cyclic algebra with {n} elements")))
}

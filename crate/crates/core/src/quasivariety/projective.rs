//! Weak projectivity, total non-projectivity and primitiveness.
//!
//! `A` is weakly projective in `Q` when it embeds into every member of `Q`
//! that maps onto it. Only preimages generated by preimages of a fixed
//! generating set of `A` matter, and with `g` generators those are exactly
//! the quotients of the free algebra `F_Q(g)` lying in `Q`. The decision
//! tries, in order: a dual-frame condition that makes `A` embed into any
//! preimage, a search for counterexamples among subalgebras of small powers
//! of the generator, and the sweep over quotients of `F_Q(g)`.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use serde::Serialize;

use super::{close_tuples, free_algebra, is_member, q_irreducible, QvarHandle};
use crate::algebra::{dual_frame, min_generators, HeytingAlgebra};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::morphisms::{embedding, extend_hom, quotient_by, subalgebras, HomMode, Homomorphism};
use crate::par::{self, Exec};
use crate::verdict::Verdict;

/// Largest generating set the decision looks for.
pub const GENERATOR_CAP: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum YesReason {
    /// Every up-set `U` of the dual frame equals `↑x \ {x}` or `↑x` for some
    /// point `x`, so any preimage admits a retraction onto the frame.
    ExtensionProperty,
    /// Every quotient of the free algebra mapping onto the algebra and lying
    /// in the quasivariety contains a copy of it.
    QuotientSweep { free_size: usize, quotients: usize },
    TrivialQuasivariety,
}

/// A member of the quasivariety mapping onto the algebra that does not
/// contain a copy of it (the search for an embedding is exhaustive).
#[derive(Debug, Clone, Serialize)]
pub struct PreimageWitness {
    pub algebra: HeytingAlgebra,
    pub surjection: Homomorphism,
    /// `"power k"` for a subalgebra of the k-th power of the generator, or
    /// `"free quotient"`.
    pub found_by: String,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Projectivity {
    Yes { reason: YesReason },
    No { witness: PreimageWitness },
    ExceedsBudget { detail: String },
}

impl Projectivity {
    pub fn verdict(&self) -> Verdict {
        match self {
            Projectivity::Yes { .. } => Verdict::Yes,
            Projectivity::No { .. } => Verdict::No,
            Projectivity::ExceedsBudget { .. } => Verdict::ExceedsBudget,
        }
    }

    pub fn witness(&self) -> Option<&PreimageWitness> {
        match self {
            Projectivity::No { witness } => Some(witness),
            _ => None,
        }
    }
}

/// For every up-set `U` of the dual frame there is a point `x` with
/// `↑x = {x} ∪ U`. Frames with more than 64 points are not examined.
pub fn extension_property(a: &HeytingAlgebra) -> bool {
    if a.is_trivial() {
        return false;
    }
    let d = dual_frame(a);
    if d.points.len() > 64 {
        return false;
    }
    let principal: Vec<u64> = d.points.iter().map(|&j| d.upset_of(a, j)).collect();
    (0..a.len()).all(|u| {
        let up = d.upset_of(a, u);
        principal.iter().enumerate().any(|(x, &p)| p == (1u64 << x) | up)
    })
}

fn decode(mut i: u64, base: usize, len: usize) -> Vec<u16> {
    let mut out = vec![0u16; len];
    for slot in out.iter_mut().rev() {
        *slot = (i % base as u64) as u16;
        i /= base as u64;
    }
    out
}

/// Closure of the seeds `(t_j, gens_j)` in `B^k × A`; returns the tuples when
/// the `A` coordinate is a function of the rest.
fn functional_closure(
    coords: &[&HeytingAlgebra],
    seeds: &[Vec<u16>],
    cap: usize,
) -> Option<Vec<Vec<u16>>> {
    let k = coords.len() - 1;
    close_tuples(coords, seeds, cap, Some(k), false, Exec::Sequential)
        .ok()
        .map(|c| c.tuples)
}

/// Coordinate `j` of the candidate read across all generators.
fn columns_increasing(flat: &[u16], k: usize) -> bool {
    let column = |j: usize| flat.chunks(k).map(move |t| t[j]);
    (1..k).all(|j| column(j - 1).lt(column(j)))
}

fn seeds_for(index: u64, b: &HeytingAlgebra, k: usize, gens: &[usize]) -> Vec<Vec<u16>> {
    let flat = decode(index, b.len(), k * gens.len());
    flat.chunks(k)
        .zip(gens)
        .map(|(t, &g)| {
            let mut s = t.to_vec();
            s.push(g as u16);
            s
        })
        .collect()
}

fn fingerprint(tuples: &mut [Vec<u16>]) -> u64 {
    tuples.sort_unstable();
    let mut h = DefaultHasher::new();
    tuples.hash(&mut h);
    h.finish()
}

const BATCH: u64 = 1 << 16;

/// Smallest g-generated subalgebra of `B^k` mapping onto `a` (generators to
/// `gens`) that does not contain a copy of `a`.
///
/// Permuting coordinates gives isomorphic candidates and a repeated
/// coordinate gives one already seen at a lower power, so only candidates
/// with strictly increasing coordinate columns are closed. Universes are
/// deduplicated by a hash of their sorted tuples.
fn power_witness(
    a: &HeytingAlgebra,
    gens: &[usize],
    q: &QvarHandle,
    k: usize,
) -> std::result::Result<Option<PreimageWitness>, String> {
    let b = q.generator();
    let budgets = q.budgets();
    let columns = (b.len() as f64).powi(gens.len() as i32);
    let canonical = (0..k).fold(1.0, |acc, j| acc * (columns - j as f64) / (j + 1) as f64);
    if canonical > budgets.filter_cap as f64 {
        return Err(format!("power {k}: {canonical} candidate generator tuples exceed the cap"));
    }
    let total = columns.powi(k as i32) as u64;
    let mut coords: Vec<&HeytingAlgebra> = vec![b; k];
    coords.push(a);
    let cap = budgets.algebra_cap;
    let build = |i: u64| {
        let c = close_tuples(&coords, &seeds_for(i, b, k, gens), cap, None, true, Exec::Sequential)
            .expect("closure succeeded before");
        let map: Vec<usize> = c.tuples.iter().map(|t| t[k] as usize).collect();
        (c.algebra.expect("tables requested"), map)
    };
    let mut seen: HashSet<u64> = HashSet::new();
    let mut best: Option<(usize, u64)> = None;
    let mut start = 0;
    while start < total {
        let idx: Vec<u64> = (start..(start + BATCH).min(total))
            .filter(|&i| columns_increasing(&decode(i, b.len(), k * gens.len()), k))
            .collect();
        start += BATCH;
        let closed = par::map(budgets.exec, &idx, |&i| {
            let mut tuples = functional_closure(&coords, &seeds_for(i, b, k, gens), cap)?;
            let n = tuples.len();
            (n > a.len()).then(|| (fingerprint(&mut tuples), n, i))
        });
        let fresh: Vec<(usize, u64)> = closed
            .into_iter()
            .flatten()
            .filter(|&(fp, n, _)| best.is_none_or(|(m, _)| n < m) && seen.insert(fp))
            .map(|(_, n, i)| (n, i))
            .collect();
        let failing = par::map(budgets.exec, &fresh, |&(n, i)| {
            embedding(a, &build(i).0, Exec::Sequential).is_none().then_some((n, i))
        });
        best = failing.into_iter().flatten().chain(best).min();
    }
    Ok(best.map(|(_, i)| {
        let (algebra, map) = build(i);
        PreimageWitness {
            algebra,
            surjection: Homomorphism::new(map, a.len()),
            found_by: format!("power {k}"),
        }
    }))
}

fn quotient_sweep(a: &HeytingAlgebra, gens: &[usize], q: &QvarHandle) -> Result<Projectivity> {
    let f = match free_algebra(q, gens.len()) {
        Ok(f) => f,
        Err(Error::Budget(msg)) => {
            return Ok(Projectivity::ExceedsBudget {
                detail: format!("free algebra on {} generators: {msg}", gens.len()),
            })
        }
        Err(e) => return Err(e),
    };
    let fa = &f.algebra;
    let fixed: Vec<(usize, usize)> = f.generators.iter().copied().zip(gens.iter().copied()).collect();
    let pi = extend_hom(fa, a, &fixed, HomMode::First, 1, Exec::Sequential)
        .homs
        .pop()
        .ok_or_else(|| Error::InvalidArgument("the algebra is not in the quasivariety".into()))?;
    let e_pi = pi.kernel_generator(fa, a);
    let mut es: Vec<(usize, usize)> = (0..fa.len())
        .filter(|&e| fa.leq(e_pi, e))
        .map(|e| ((0..fa.len()).filter(|&x| fa.leq(x, e)).count(), e))
        .collect();
    es.sort_unstable();
    if es.len() > q.budgets().filter_cap {
        return Ok(Projectivity::ExceedsBudget {
            detail: format!("{} quotients exceed the filter cap", es.len()),
        });
    }
    let found = par::find_map_first(q.budgets().exec, &es, |&(_, e)| {
        let quo = quotient_by(fa, e);
        if embedding(a, &quo.algebra, Exec::Sequential).is_some() || !is_member(&quo.algebra, q) {
            return None;
        }
        let map = quo.elements.iter().map(|&x| pi.apply(x)).collect();
        Some(PreimageWitness {
            algebra: quo.algebra,
            surjection: Homomorphism::new(map, a.len()),
            found_by: "free quotient".into(),
        })
    });
    Ok(match found {
        Some(witness) => Projectivity::No { witness },
        None => Projectivity::Yes {
            reason: YesReason::QuotientSweep {
                free_size: fa.len(),
                quotients: es.len(),
            },
        },
    })
}

/// Decides whether `a` (a member of `q`) embeds into every member of `q`
/// that maps onto it.
pub fn weakly_projective(a: &HeytingAlgebra, q: &QvarHandle) -> Result<Projectivity> {
    let b = q.generator();
    if a.is_trivial() {
        if b.is_trivial() {
            return Ok(Projectivity::Yes {
                reason: YesReason::TrivialQuasivariety,
            });
        }
        let c2 = crate::algebra::chain(2);
        return Ok(Projectivity::No {
            witness: PreimageWitness {
                surjection: Homomorphism::new(vec![0, 0], 1),
                algebra: c2,
                found_by: "power 1".into(),
            },
        });
    }
    if extension_property(a) {
        return Ok(Projectivity::Yes {
            reason: YesReason::ExtensionProperty,
        });
    }
    let gens = match min_generators(a, GENERATOR_CAP) {
        crate::algebra::Generators::Found { generators, .. } => generators,
        crate::algebra::Generators::ExceedsCap { cap } => {
            return Ok(Projectivity::ExceedsBudget {
                detail: format!("needs more than {cap} generators"),
            })
        }
    };
    let mut notes = Vec::new();
    for k in 1..=q.budgets().power_cap as usize {
        match power_witness(a, &gens, q, k) {
            Ok(Some(witness)) => return Ok(Projectivity::No { witness }),
            Ok(None) => {}
            Err(note) => {
                notes.push(note);
                break;
            }
        }
    }
    match quotient_sweep(a, &gens, q)? {
        Projectivity::ExceedsBudget { detail } => {
            notes.push(detail);
            notes.push(format!(
                "no counterexample among subalgebras of powers up to {}",
                q.budgets().power_cap
            ));
            Ok(Projectivity::ExceedsBudget {
                detail: notes.join("; "),
            })
        }
        p => Ok(p),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TnpReport {
    pub verdict: Verdict,
    pub projectivity: Projectivity,
}

/// `a` is not weakly projective in the quasivariety it generates.
pub fn totally_non_projective(a: &HeytingAlgebra, budgets: &Budgets) -> Result<TnpReport> {
    if a.is_trivial() {
        return Err(Error::InvalidArgument("the algebra must be nontrivial".into()));
    }
    let q = QvarHandle::new(a.clone(), *budgets)?;
    let projectivity = weakly_projective(a, &q)?;
    Ok(TnpReport {
        verdict: projectivity.verdict().negate(),
        projectivity,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct IrreducibleReport {
    pub size: usize,
    /// Elements of the generator forming this subalgebra.
    pub elements: Vec<usize>,
    #[serde(skip)]
    pub algebra: HeytingAlgebra,
    pub projectivity: Projectivity,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimitiveReport {
    pub verdict: Verdict,
    /// Subalgebras of the generator up to isomorphism.
    pub subalgebras: usize,
    pub irreducibles: Vec<IrreducibleReport>,
    /// Index into `irreducibles` of the first one that is not weakly projective.
    pub certificate: Option<usize>,
    pub detail: Option<String>,
}

/// Every finite `Q`-irreducible algebra embeds into the generator, so `Q` is
/// primitive iff each `Q`-irreducible subalgebra of the generator is weakly
/// projective.
pub fn primitive(q: &QvarHandle) -> Result<PrimitiveReport> {
    let b = q.generator();
    let subs = match subalgebras(b, q.budgets().filter_cap) {
        Ok(s) => s,
        Err(Error::Budget(msg)) => {
            return Ok(PrimitiveReport {
                verdict: Verdict::ExceedsBudget,
                subalgebras: 0,
                irreducibles: vec![],
                certificate: None,
                detail: Some(msg),
            })
        }
        Err(e) => return Err(e),
    };
    let count = subs.len();
    let mut irreducibles = Vec::new();
    for s in subs.into_iter().filter(|s| !s.algebra.is_trivial()) {
        if q_irreducible(&s.algebra, q)?.is_irreducible() {
            irreducibles.push(s);
        }
    }
    let verdicts = par::map(q.budgets().exec, &irreducibles, |s| weakly_projective(&s.algebra, q));
    let mut reports = Vec::new();
    for (s, v) in irreducibles.into_iter().zip(verdicts) {
        reports.push(IrreducibleReport {
            size: s.algebra.len(),
            elements: s.inclusion.map.clone(),
            algebra: s.algebra,
            projectivity: v?,
        });
    }
    let certificate = reports.iter().position(|r| r.projectivity.verdict() == Verdict::No);
    let undecided: Vec<usize> = reports
        .iter()
        .filter(|r| r.projectivity.verdict() == Verdict::ExceedsBudget)
        .map(|r| r.size)
        .collect();
    let (verdict, detail) = if certificate.is_some() {
        (Verdict::No, None)
    } else if !undecided.is_empty() {
        (
            Verdict::ExceedsBudget,
            Some(format!("undecided irreducibles of sizes {undecided:?}")),
        )
    } else {
        (Verdict::Yes, None)
    };
    Ok(PrimitiveReport {
        verdict,
        subalgebras: count,
        irreducibles: reports,
        certificate,
        detail,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ScPrimitiveReport {
    pub verdict: Verdict,
    pub free_size: Option<usize>,
    pub primitive: Option<PrimitiveReport>,
    pub detail: Option<String>,
}

/// For a one-generated `b`, whether the quasivariety generated by the
/// one-generated free algebra of `Q(b)` is primitive.
pub fn sc_primitive_cyclic(b: &HeytingAlgebra, budgets: &Budgets) -> Result<ScPrimitiveReport> {
    if min_generators(b, 1).count().is_none() {
        return Err(Error::InvalidArgument("the algebra is not one-generated".into()));
    }
    let q = QvarHandle::new(b.clone(), *budgets)?;
    let f = match free_algebra(&q, 1) {
        Ok(f) => f,
        Err(Error::Budget(msg)) => {
            return Ok(ScPrimitiveReport {
                verdict: Verdict::ExceedsBudget,
                free_size: None,
                primitive: None,
                detail: Some(msg),
            })
        }
        Err(e) => return Err(e),
    };
    let size = f.algebra.len();
    let report = primitive(&QvarHandle::new(f.algebra, *budgets)?)?;
    Ok(ScPrimitiveReport {
        verdict: report.verdict,
        free_size: Some(size),
        primitive: Some(report),
        detail: None,
    })
}

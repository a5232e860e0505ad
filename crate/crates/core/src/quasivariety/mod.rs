//! Decision procedures for the quasivariety `Q(B)` generated by a finite
//! Heyting algebra `B`.
//!
//! A finite algebra `A` lies in `Q(B)` iff homomorphisms `A → B` separate its
//! points. Each homomorphism factors through a quotient `A/↑e ≅ ↓e` followed
//! by an embedding `↓e → B`, so the kernels of all such maps are the `↑e`
//! with `↓e` embeddable in `B`, and they separate points iff those `e` join
//! to top.

mod free;
mod projective;

use serde::Serialize;

use crate::algebra::HeytingAlgebra;
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::morphisms::{embedding, quotient_by, Homomorphism};
use crate::par;

pub(crate) use free::close_tuples;
pub use free::{free_algebra, free_algebra_size, FreeAlgebra};
pub use projective::{
    extension_property, primitive, sc_primitive_cyclic, totally_non_projective, weakly_projective,
    IrreducibleReport, PreimageWitness, PrimitiveReport, Projectivity, ScPrimitiveReport, TnpReport,
    YesReason,
};

/// `Q(B)` for a finite generator `B`, with the budgets used by every
/// decision made against it.
#[derive(Debug, Clone)]
pub struct QvarHandle {
    generator: HeytingAlgebra,
    budgets: Budgets,
}

impl QvarHandle {
    pub fn new(generator: HeytingAlgebra, budgets: Budgets) -> Result<Self> {
        let report = generator.validate();
        if let Some(f) = report.failures.first() {
            return Err(Error::InvalidAlgebra(format!("{} fails at {:?}", f.law, f.witness)));
        }
        Ok(QvarHandle { generator, budgets })
    }

    pub fn generator(&self) -> &HeytingAlgebra {
        &self.generator
    }

    pub fn budgets(&self) -> &Budgets {
        &self.budgets
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Membership {
    /// Homomorphisms into the generator whose kernels meet in `{top}`.
    Yes { separating: Vec<Homomorphism> },
    /// A pair identified by every homomorphism into the generator.
    No { pair: (usize, usize) },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Yes { .. })
    }
}

/// Homomorphisms `a → B`, one per kernel, as `(kernel generator, map)`.
fn homs_by_kernel(a: &HeytingAlgebra, q: &QvarHandle) -> Vec<(usize, Homomorphism)> {
    let b = q.generator();
    let es: Vec<usize> = (0..a.len()).collect();
    par::map(q.budgets().exec, &es, |&e| {
        let quo = quotient_by(a, e);
        let emb = embedding(&quo.algebra, b, crate::par::Exec::Sequential)?;
        Some((e, quo.projection.compose(&emb, b.len())))
    })
    .into_iter()
    .flatten()
    .collect()
}

pub fn member(a: &HeytingAlgebra, q: &QvarHandle) -> Result<Membership> {
    if a.len() > q.budgets().algebra_cap {
        return Err(Error::Budget(format!("algebra of size {} exceeds the cap", a.len())));
    }
    let homs = homs_by_kernel(a, q);
    let join = a.join_all(homs.iter().map(|(e, _)| *e));
    if join != a.top() {
        return Ok(Membership::No {
            pair: (join, a.top()),
        });
    }
    let mut acc = a.bot();
    let mut separating = Vec::new();
    for (e, h) in homs {
        let next = a.join(acc, e);
        if next != acc {
            acc = next;
            separating.push(h);
        }
        if acc == a.top() {
            break;
        }
    }
    Ok(Membership::Yes { separating })
}

pub(crate) fn is_member(a: &HeytingAlgebra, q: &QvarHandle) -> bool {
    let b = q.generator();
    let mut join = a.bot();
    for e in (0..a.len()).rev() {
        if a.leq(e, join) {
            continue;
        }
        let quo = quotient_by(a, e);
        if embedding(&quo.algebra, b, crate::par::Exec::Sequential).is_some() {
            join = a.join(join, e);
            if join == a.top() {
                return true;
            }
        }
    }
    join == a.top()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Irreducibility {
    /// Every proper quotient lying in `Q` identifies `witness` with top.
    Yes { witness: usize },
    /// Kernel generators of proper quotients in `Q` whose kernels meet in
    /// `{top}`.
    No { separating: Vec<usize> },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Yes { .. })
    }
}

/// Whether `a` fails to be a subdirect product of smaller members of `Q`.
/// Proper quotients are `↓e` with `e ≠ top`; `a` is irreducible iff the `e`
/// with `↓e ∈ Q` join to something below top.
pub fn q_irreducible(a: &HeytingAlgebra, q: &QvarHandle) -> Result<Irreducibility> {
    if a.is_trivial() {
        return Err(Error::InvalidArgument("the trivial algebra is not irreducible".into()));
    }
    let es: Vec<usize> = (0..a.len()).filter(|&e| e != a.top()).collect();
    let inside: Vec<bool> = par::map(q.budgets().exec, &es, |&e| is_member(&quotient_by(a, e).algebra, q));
    let good: Vec<usize> = es.iter().zip(&inside).filter(|(_, &m)| m).map(|(&e, _)| e).collect();
    let join = a.join_all(good.iter().copied());
    if join != a.top() {
        return Ok(Irreducibility::Yes { witness: join });
    }
    let mut acc = a.bot();
    let mut separating = Vec::new();
    for e in good {
        let next = a.join(acc, e);
        if next != acc {
            acc = next;
            separating.push(e);
        }
        if acc == a.top() {
            break;
        }
    }
    Ok(Irreducibility::No { separating })
}

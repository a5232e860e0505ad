//! Jankov characteristic formulas and the `SH` membership oracle.
//!
//! For a finite subdirectly irreducible `A` with second greatest element `ω`,
//! `X(A) = Δ → p_ω` where `Δ` describes the operation tables of `A`. An
//! algebra `B` refutes `X(A)` exactly when `A` embeds into a quotient of `B`.

use serde::Serialize;

use crate::algebra::HeytingAlgebra;
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::formula::Formula;
use crate::morphisms::{embedding, quotient_by, Homomorphism};
use crate::par::{self, Exec};
use crate::verdict::Verdict;

/// The element covered by top that lies above every other non-top element.
pub fn second_greatest(a: &HeytingAlgebra) -> Option<usize> {
    if a.is_trivial() {
        return None;
    }
    let below: Vec<usize> = (0..a.len()).filter(|&x| x != a.top()).collect();
    let w = a.join_all(below.iter().copied());
    (w != a.top()).then_some(w)
}

#[derive(Debug, Clone, Serialize)]
pub struct JankovFormula {
    #[serde(skip)]
    pub algebra: HeytingAlgebra,
    /// `variables[x]` names the variable standing for element `x`.
    pub variables: Vec<String>,
    pub omega: usize,
    pub formula: Formula,
}

impl JankovFormula {
    /// The valuation `p_x ↦ x`, which refutes the formula in its own algebra.
    pub fn identity_valuation(&self) -> crate::eval::Valuation {
        self.variables.iter().cloned().zip(0..).collect()
    }
}

pub(crate) fn variable_names(n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("p{i:0width$}")).collect()
}

pub fn jankov_formula(a: &HeytingAlgebra) -> Result<JankovFormula> {
    let omega = second_greatest(a).ok_or_else(|| {
        Error::NotSubdirectlyIrreducible(format!("{}-element algebra has no second greatest element", a.len()))
    })?;
    let variables = variable_names(a.len());
    let p = |x: usize| Formula::var(variables[x].clone());
    let mut diagram = Vec::new();
    for x in 0..a.len() {
        for y in 0..a.len() {
            if x <= y {
                diagram.push(Formula::iff(p(a.meet(x, y)), Formula::and(p(x), p(y))));
                diagram.push(Formula::iff(p(a.join(x, y)), Formula::or(p(x), p(y))));
            }
            diagram.push(Formula::iff(p(a.imp(x, y)), Formula::imp(p(x), p(y))));
        }
    }
    diagram.push(Formula::iff(p(a.bot()), Formula::Bot));
    let formula = Formula::imp(Formula::conj(diagram), p(omega));
    Ok(JankovFormula {
        algebra: a.clone(),
        variables,
        omega,
        formula,
    })
}

/// Outcome of the sweep over the quotients of `b`.
#[derive(Debug, Clone, Serialize)]
pub struct ShCheck {
    pub verdict: Verdict,
    /// Generator of the filter whose quotient receives the embedding.
    pub filter_generator: Option<usize>,
    /// Embedding of `a` into that quotient, indexed by quotient elements.
    pub embedding: Option<Homomorphism>,
}

/// Whether `a` embeds into some homomorphic image of `b`. Every filter of a
/// finite algebra is principal, so the sweep visits `↓e` for each `e`.
pub fn in_sh(a: &HeytingAlgebra, b: &HeytingAlgebra, budgets: &Budgets) -> Result<ShCheck> {
    if b.len() > budgets.filter_cap {
        return Err(Error::Budget(format!(
            "{} filters exceed the cap of {}",
            b.len(),
            budgets.filter_cap
        )));
    }
    let gens: Vec<usize> = (0..b.len()).collect();
    let found = par::find_map_first(budgets.exec, &gens, |&e| {
        let q = quotient_by(b, e);
        if q.algebra.len() < a.len() {
            return None;
        }
        embedding(a, &q.algebra, Exec::Sequential).map(|h| (e, h))
    });
    Ok(match found {
        Some((e, h)) => ShCheck {
            verdict: Verdict::Yes,
            filter_generator: Some(e),
            embedding: Some(h),
        },
        None => ShCheck {
            verdict: Verdict::No,
            filter_generator: None,
            embedding: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog, chain, product};
    use crate::eval::{evaluate, formula_valid};

    #[test]
    fn second_greatest_basics() {
        assert_eq!(second_greatest(&chain(3)), Some(1));
        let c2 = chain(2);
        let p = product(&[&c2, &c2], 64).unwrap();
        assert_eq!(second_greatest(&p.algebra), None);
        assert!(second_greatest(&catalog("C7p").unwrap()).is_some());
        assert_eq!(second_greatest(&chain(1)), None);
    }

    #[test]
    fn self_refutation_under_identity() {
        for a in [chain(2), chain(3), chain(4), catalog("C5p").unwrap()] {
            let j = jankov_formula(&a).unwrap();
            let v = j.identity_valuation();
            assert_eq!(evaluate(&a, &j.formula, &v).unwrap(), j.omega);
        }
    }

    #[test]
    fn chain_formula_needs_a_long_enough_chain() {
        let j = jankov_formula(&chain(3)).unwrap();
        let budgets = Budgets::default();
        assert!(formula_valid(&chain(2), &j.formula, &budgets).unwrap().is_valid());
        assert!(!formula_valid(&chain(4), &j.formula, &budgets).unwrap().is_valid());
        assert_eq!(in_sh(&chain(4), &chain(3), &budgets).unwrap().verdict, Verdict::No);
        assert_eq!(in_sh(&chain(2), &chain(3), &budgets).unwrap().verdict, Verdict::Yes);
    }

    #[test]
    fn not_si_is_an_error() {
        let c2 = chain(2);
        let p = product(&[&c2, &c2], 64).unwrap();
        assert!(matches!(jankov_formula(&p.algebra), Err(Error::NotSubdirectlyIrreducible(_))));
    }

    #[test]
    fn variable_names_sort_like_indices() {
        let v = variable_names(12);
        let mut sorted = v.clone();
        sorted.sort();
        assert_eq!(v, sorted);
        assert_eq!(v[3], "p03");
    }
}

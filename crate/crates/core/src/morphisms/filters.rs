//! Filters, quotients and subdirect embeddings. In a finite Heyting algebra
//! every filter is principal, so the filter `↑e` is identified with `e` and
//! the quotient by it is realized on `↓e`.

use serde::Serialize;

use super::{iso, Homomorphism};
use crate::algebra::{product, HeytingAlgebra, Product};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Filter {
    /// Least member.
    pub generator: usize,
    /// Members in increasing index order.
    pub members: Vec<usize>,
}

impl Filter {
    pub fn principal(a: &HeytingAlgebra, e: usize) -> Filter {
        Filter {
            generator: e,
            members: (0..a.len()).filter(|&x| a.leq(e, x)).collect(),
        }
    }

    /// Accepts an arbitrary member set after checking the filter laws.
    pub fn from_members(a: &HeytingAlgebra, members: &[usize]) -> Result<Filter> {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        let f = Filter {
            generator: a.meet_all(m.iter().copied()),
            members: m,
        };
        if f.verify(a) {
            Ok(f)
        } else {
            Err(Error::InvalidArgument("not a filter".into()))
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Contains top, upward closed, closed under meet, and `generator` is
    /// its least element.
    pub fn verify(&self, a: &HeytingAlgebra) -> bool {
        if self.members.iter().any(|&x| x >= a.len()) || !self.contains(a.top()) {
            return false;
        }
        let up = self
            .members
            .iter()
            .all(|&x| (0..a.len()).all(|y| !a.leq(x, y) || self.contains(y)));
        let meets = self
            .members
            .iter()
            .all(|&x| self.members.iter().all(|&y| self.contains(a.meet(x, y))));
        up && meets && self.contains(self.generator)
            && self.members.iter().all(|&x| a.leq(self.generator, x))
    }
}

/// All filters, smallest first; `{top}` comes first and the whole algebra last.
pub fn filters(a: &HeytingAlgebra) -> Vec<Filter> {
    let mut fs: Vec<Filter> = (0..a.len()).map(|e| Filter::principal(a, e)).collect();
    fs.sort_by_key(|f| (f.members.len(), f.generator));
    fs
}

/// Filter of elements sent to top by `h`.
pub fn kernel(h: &Homomorphism, a: &HeytingAlgebra, b: &HeytingAlgebra) -> Filter {
    Filter::principal(a, h.kernel_generator(a, b))
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: HeytingAlgebra,
    pub projection: Homomorphism,
    /// Element of the source whose up-set is the kernel.
    pub generator: usize,
    /// `elements[i]` is the representative in the source of quotient element `i`.
    pub elements: Vec<usize>,
}

/// Quotient by `↑e`, realized on `↓e` with `x ↦ e ∧ x`.
pub fn quotient_by(a: &HeytingAlgebra, e: usize) -> Quotient {
    let elems: Vec<usize> = (0..a.len()).filter(|&x| a.leq(x, e)).collect();
    let mut local = vec![usize::MAX; a.len()];
    for (i, &x) in elems.iter().enumerate() {
        local[x] = i;
    }
    let algebra = HeytingAlgebra::tabulate(
        elems.len(),
        local[a.bot()],
        local[e],
        |i, j| local[a.meet(elems[i], elems[j])],
        |i, j| local[a.join(elems[i], elems[j])],
        |i, j| local[a.meet(e, a.imp(elems[i], elems[j]))],
    );
    let map = (0..a.len()).map(|x| local[a.meet(e, x)]).collect();
    Quotient {
        projection: Homomorphism::new(map, algebra.len()),
        algebra,
        generator: e,
        elements: elems,
    }
}

pub fn quotient(a: &HeytingAlgebra, f: &Filter) -> Quotient {
    quotient_by(a, f.generator)
}

/// For every `e` with `a/↑e ≅ b`, the kernel generator and one surjection
/// `a ↠ b` with that kernel.
pub fn surjections_by_kernel(a: &HeytingAlgebra, b: &HeytingAlgebra) -> Vec<(usize, Homomorphism)> {
    (0..a.len())
        .filter(|&e| (0..a.len()).filter(|&x| a.leq(x, e)).count() == b.len())
        .filter_map(|e| {
            let q = quotient_by(a, e);
            let i = iso(&q.algebra, b)?;
            Some((e, q.projection.compose(&i, b.len())))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SubdirectEmbedding {
    pub product: Product,
    pub embedding: Homomorphism,
    /// The surjections onto each factor.
    pub components: Vec<Homomorphism>,
}

/// Searches for surjections `a ↠ factor_i` whose kernels meet in `{top}`;
/// together they form an embedding into the product with surjective
/// projections. `None` is a proof that no such embedding exists.
pub fn subdirect_embedding_check(
    a: &HeytingAlgebra,
    factors: &[&HeytingAlgebra],
    cap: usize,
) -> Result<Option<SubdirectEmbedding>> {
    let prod = product(factors, cap)?;
    let options: Vec<Vec<(usize, Homomorphism)>> =
        factors.iter().map(|b| surjections_by_kernel(a, b)).collect();

    fn pick(a: &HeytingAlgebra, options: &[Vec<(usize, Homomorphism)>], i: usize, join: usize, chosen: &mut Vec<usize>) -> bool {
        if i == options.len() {
            return join == a.top();
        }
        for (k, (e, _)) in options[i].iter().enumerate() {
            chosen.push(k);
            if pick(a, options, i + 1, a.join(join, *e), chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::new();
    if !pick(a, &options, 0, a.bot(), &mut chosen) {
        return Ok(None);
    }
    let components: Vec<Homomorphism> = chosen
        .iter()
        .enumerate()
        .map(|(i, &k)| options[i][k].1.clone())
        .collect();
    let map = (0..a.len())
        .map(|x| {
            let t: Vec<usize> = components.iter().map(|h| h.apply(x)).collect();
            prod.encode(&t)
        })
        .collect();
    let embedding = Homomorphism::new(map, prod.algebra.len());
    Ok(Some(SubdirectEmbedding {
        product: prod,
        embedding,
        components,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain;
    use crate::morphisms::isomorphic;

    #[test]
    fn filter_counts() {
        let c2 = chain(2);
        let fs = filters(&c2);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].members, vec![1]);
        assert_eq!(fs[1].members, vec![0, 1]);
        let b4 = product(&[&c2, &c2], 10).unwrap().algebra;
        assert_eq!(filters(&b4).len(), 4);
        assert!(filters(&b4).iter().all(|f| f.verify(&b4)));
        assert!(Filter::from_members(&b4, &[1]).is_err());
    }

    #[test]
    fn quotients_of_chain() {
        let c3 = chain(3);
        let f = Filter::from_members(&c3, &[1, 2]).unwrap();
        let q = quotient(&c3, &f);
        assert_eq!(q.algebra.len(), 2);
        assert!(q.projection.verify(&c3, &q.algebra));
        assert!(q.projection.surjective);
        let id = quotient_by(&c3, c3.top());
        assert!(isomorphic(&id.algebra, &c3));
        assert!(quotient_by(&c3, c3.bot()).algebra.is_trivial());
    }

    #[test]
    fn subdirect_small() {
        let c2 = chain(2);
        let c3 = chain(3);
        let b4 = product(&[&c2, &c2], 10).unwrap().algebra;
        let s = subdirect_embedding_check(&b4, &[&c2, &c2], 100).unwrap().unwrap();
        assert!(s.embedding.injective);
        assert!(s.embedding.verify(&b4, &s.product.algebra));
        assert!(subdirect_embedding_check(&c3, &[&c2, &c2], 100).unwrap().is_none());
        let id = subdirect_embedding_check(&c2, &[&c2], 100).unwrap().unwrap();
        assert_eq!(id.embedding.map, vec![0, 1]);
    }
}

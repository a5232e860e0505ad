//! Homomorphisms between finite Heyting algebras, subalgebras, filters and
//! quotients.

mod filters;
mod search;
mod sub;

use serde::{Deserialize, Serialize};

use crate::algebra::HeytingAlgebra;

pub use filters::{
    filters, kernel, quotient, quotient_by, subdirect_embedding_check, surjections_by_kernel,
    Filter, Quotient, SubdirectEmbedding,
};
pub use search::{embedding, extend_hom, find_homs, iso, isomorphic, HomMode, HomSearch};
pub use sub::{induced_subalgebra, subalgebra_generated, subalgebras, Subalgebra};

/// A map between element indices; the flags are computed against the target
/// size given at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Homomorphism {
    pub map: Vec<usize>,
    pub injective: bool,
    pub surjective: bool,
}

impl Homomorphism {
    pub fn new(map: Vec<usize>, target_len: usize) -> Self {
        let mut hit = vec![false; target_len];
        let mut injective = true;
        for &y in &map {
            if hit[y] {
                injective = false;
            }
            hit[y] = true;
        }
        let surjective = hit.iter().all(|&h| h);
        Homomorphism {
            map,
            injective,
            surjective,
        }
    }

    pub fn identity(n: usize) -> Self {
        Homomorphism::new((0..n).collect(), n)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &Homomorphism, target_len: usize) -> Homomorphism {
        Homomorphism::new(self.map.iter().map(|&x| then.map[x]).collect(), target_len)
    }

    /// Exhaustive check that the map preserves the bounds and all three
    /// operations, and that the flags are accurate.
    pub fn verify(&self, a: &HeytingAlgebra, b: &HeytingAlgebra) -> bool {
        if self.map.len() != a.len() || self.map.iter().any(|&y| y >= b.len()) {
            return false;
        }
        let h = &self.map;
        if h[a.bot()] != b.bot() || h[a.top()] != b.top() {
            return false;
        }
        for x in 0..a.len() {
            for y in 0..a.len() {
                if h[a.meet(x, y)] != b.meet(h[x], h[y])
                    || h[a.join(x, y)] != b.join(h[x], h[y])
                    || h[a.imp(x, y)] != b.imp(h[x], h[y])
                {
                    return false;
                }
            }
        }
        *self == Homomorphism::new(self.map.clone(), b.len())
    }

    /// Least element sent to top; its up-set is the kernel filter.
    pub fn kernel_generator(&self, a: &HeytingAlgebra, b: &HeytingAlgebra) -> usize {
        a.meet_all((0..a.len()).filter(|&x| self.map[x] == b.top()))
    }
}

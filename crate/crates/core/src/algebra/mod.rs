//! Finite Heyting algebras stored as operation tables over dense indices.

mod catalog;
mod construct;
mod generators;
mod io;
mod ladder;
mod poset;

use serde::Serialize;

use crate::error::{Error, Result};

pub use catalog::{catalog, catalog_frame, catalog_names, CATALOG_NAMES};
pub use construct::{chain, product, standard_algebra, trivial, upset_algebra, AlgebraSpec, Product};
pub use generators::{closure, dual_frame, min_generators, DualFrame, Generators};
pub use io::{algebra_dot, algebra_from_json, algebra_to_json, poset_dot, poset_from_json, poset_to_json, AlgebraFile, PosetFile};
pub use ladder::{cyclic, cyclic_candidates, ladder_frame, rn_ladder_prefix};
pub use poset::Poset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeytingAlgebra {
    n: usize,
    bot: u32,
    top: u32,
    meet: Vec<u32>,
    join: Vec<u32>,
    imp: Vec<u32>,
}

impl HeytingAlgebra {
    /// Builds an algebra from raw tables. Only index ranges are checked here;
    /// the algebraic laws are checked by [`HeytingAlgebra::validate`].
    pub fn from_tables(
        n: usize,
        bot: usize,
        top: usize,
        meet: Vec<u32>,
        join: Vec<u32>,
        imp: Vec<u32>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("an algebra needs at least one element".into()));
        }
        if bot >= n || top >= n {
            return Err(Error::InvalidAlgebra("bot/top out of range".into()));
        }
        for (name, t) in [("meet", &meet), ("join", &join), ("imp", &imp)] {
            if t.len() != n * n {
                return Err(Error::InvalidAlgebra(format!("{name} table is not {n}x{n}")));
            }
            if t.iter().any(|&x| x as usize >= n) {
                return Err(Error::InvalidAlgebra(format!("{name} table has an out-of-range entry")));
            }
        }
        Ok(HeytingAlgebra {
            n,
            bot: bot as u32,
            top: top as u32,
            meet,
            join,
            imp,
        })
    }

    /// Tables from operation closures; callers guarantee the results are in range.
    pub(crate) fn tabulate(
        n: usize,
        bot: usize,
        top: usize,
        meet: impl Fn(usize, usize) -> usize,
        join: impl Fn(usize, usize) -> usize,
        imp: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let mut m = Vec::with_capacity(n * n);
        let mut j = Vec::with_capacity(n * n);
        let mut i = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                m.push(meet(x, y) as u32);
                j.push(join(x, y) as u32);
                i.push(imp(x, y) as u32);
            }
        }
        HeytingAlgebra {
            n,
            bot: bot as u32,
            top: top as u32,
            meet: m,
            join: j,
            imp: i,
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    /// An algebra always has at least one element.
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn bot(&self) -> usize {
        self.bot as usize
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top as usize
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y] as usize
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y] as usize
    }

    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.n + y] as usize
    }

    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.imp(x, self.bot())
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.meet(x, y) == x
    }

    pub fn is_trivial(&self) -> bool {
        self.bot == self.top
    }

    pub fn meet_table(&self) -> &[u32] {
        &self.meet
    }

    pub fn join_table(&self) -> &[u32] {
        &self.join
    }

    pub fn imp_table(&self) -> &[u32] {
        &self.imp
    }

    /// Meet of all elements of `xs`; `top` for the empty set.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top(), |acc, x| self.meet(acc, x))
    }

    /// Join of all elements of `xs`; `bot` for the empty set.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bot(), |acc, x| self.join(acc, x))
    }

    /// Elements `y` with `x < y` and nothing strictly between.
    pub fn upper_covers(&self, x: usize) -> Vec<usize> {
        let above: Vec<usize> = (0..self.n).filter(|&y| y != x && self.leq(x, y)).collect();
        above
            .iter()
            .copied()
            .filter(|&y| !above.iter().any(|&z| z != y && self.leq(z, y)))
            .collect()
    }

    /// All covering pairs `(x, y)` of the lattice order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| self.upper_covers(x).into_iter().map(move |y| (x, y)))
            .collect()
    }

    /// Isomorphism invariant: size plus the sorted multiset of
    /// (down-set size, up-set size) pairs over elements.
    pub fn invariant(&self) -> (usize, Vec<(u32, u32)>) {
        let mut profile: Vec<(u32, u32)> = (0..self.n)
            .map(|x| {
                let down = (0..self.n).filter(|&y| self.leq(y, x)).count() as u32;
                let up = (0..self.n).filter(|&y| self.leq(x, y)).count() as u32;
                (down, up)
            })
            .collect();
        profile.sort_unstable();
        (self.n, profile)
    }

    /// Exhaustive check of the bounded distributive lattice laws and residuation.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut failures: Vec<LawFailure> = Vec::new();
        let mut fail = |law: &'static str, witness: Vec<usize>| {
            if !failures.iter().any(|f| f.law == law) {
                failures.push(LawFailure { law, witness });
            }
        };
        let (bot, top) = (self.bot(), self.top());
        for x in 0..n {
            if self.meet(x, x) != x || self.join(x, x) != x {
                fail("idempotence", vec![x]);
            }
            if self.meet(bot, x) != bot || self.join(bot, x) != x {
                fail("bottom bound", vec![x]);
            }
            if self.meet(top, x) != x || self.join(top, x) != top {
                fail("top bound", vec![x]);
            }
            for y in 0..n {
                if self.meet(x, y) != self.meet(y, x) {
                    fail("meet commutativity", vec![x, y]);
                }
                if self.join(x, y) != self.join(y, x) {
                    fail("join commutativity", vec![x, y]);
                }
                if self.meet(x, self.join(x, y)) != x || self.join(x, self.meet(x, y)) != x {
                    fail("absorption", vec![x, y]);
                }
                for z in 0..n {
                    if self.meet(x, self.meet(y, z)) != self.meet(self.meet(x, y), z) {
                        fail("meet associativity", vec![x, y, z]);
                    }
                    if self.join(x, self.join(y, z)) != self.join(self.join(x, y), z) {
                        fail("join associativity", vec![x, y, z]);
                    }
                    if self.meet(x, self.join(y, z))
                        != self.join(self.meet(x, y), self.meet(x, z))
                    {
                        fail("distributivity", vec![x, y, z]);
                    }
                    if self.leq(self.meet(x, y), z) != self.leq(x, self.imp(y, z)) {
                        fail("residuation", vec![x, y, z]);
                    }
                }
            }
        }
        ValidationReport {
            failures,
            nontrivial: bot != top,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub law: &'static str,
    pub witness: Vec<usize>,
}

/// Outcome of [`HeytingAlgebra::validate`]: one entry per violated law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<LawFailure>,
    pub nontrivial: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

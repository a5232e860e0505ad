//! Backtracking homomorphism search.
//!
//! Elements of the source are assigned in index order, images in increasing
//! order, and every assignment is closed under the operations before the next
//! choice. Leaves therefore appear in lexicographic order of the full map, so
//! the first `cap` results are the lexicographically least ones.

use serde::{Deserialize, Serialize};

use super::Homomorphism;
use crate::algebra::HeytingAlgebra;
use crate::par::{self, Exec};

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HomMode {
    All,
    First,
    Injective,
    Surjective,
    Bijective,
}

impl HomMode {
    fn injective(self) -> bool {
        matches!(self, HomMode::Injective | HomMode::Bijective)
    }

    fn surjective(self) -> bool {
        matches!(self, HomMode::Surjective | HomMode::Bijective)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomSearch {
    pub homs: Vec<Homomorphism>,
    /// More maps exist beyond the returned ones.
    pub truncated: bool,
}

#[derive(Clone)]
struct State {
    img: Vec<u32>,
    members: Vec<usize>,
    processed: usize,
    count: Vec<u32>,
    distinct: usize,
}

struct Ctx<'a> {
    a: &'a HeytingAlgebra,
    b: &'a HeytingAlgebra,
    injective: bool,
    surjective: bool,
    /// `(|↓x|, |↑x|)` per element, used to prune injective maps.
    a_sizes: Vec<(u32, u32)>,
    b_sizes: Vec<(u32, u32)>,
}

fn cone_sizes(a: &HeytingAlgebra) -> Vec<(u32, u32)> {
    (0..a.len())
        .map(|x| {
            let down = (0..a.len()).filter(|&y| a.leq(y, x)).count() as u32;
            let up = (0..a.len()).filter(|&y| a.leq(x, y)).count() as u32;
            (down, up)
        })
        .collect()
}

impl Ctx<'_> {
    fn set(&self, s: &mut State, x: usize, y: usize) -> bool {
        if s.img[x] != NONE {
            return s.img[x] as usize == y;
        }
        if self.injective {
            let ((da, ua), (db, ub)) = (self.a_sizes[x], self.b_sizes[y]);
            if s.count[y] > 0 || da > db || ua > ub {
                return false;
            }
        }
        s.img[x] = y as u32;
        if s.count[y] == 0 {
            s.distinct += 1;
        }
        s.count[y] += 1;
        s.members.push(x);
        true
    }

    fn close(&self, s: &mut State) -> bool {
        let (a, b) = (self.a, self.b);
        while s.processed < s.members.len() {
            let x = s.members[s.processed];
            let hx = s.img[x] as usize;
            for j in 0..=s.processed {
                let y = s.members[j];
                let hy = s.img[y] as usize;
                if !self.set(s, a.meet(x, y), b.meet(hx, hy))
                    || !self.set(s, a.join(x, y), b.join(hx, hy))
                    || !self.set(s, a.imp(x, y), b.imp(hx, hy))
                    || !self.set(s, a.imp(y, x), b.imp(hy, hx))
                {
                    return false;
                }
            }
            s.processed += 1;
        }
        if self.surjective {
            let open = self.a.len() - s.members.len();
            if s.distinct + open < self.b.len() {
                return false;
            }
        }
        true
    }

    fn assign(&self, s: &State, x: usize, y: usize) -> Option<State> {
        let mut t = s.clone();
        (self.set(&mut t, x, y) && self.close(&mut t)).then_some(t)
    }

    fn next_open(&self, s: &State) -> Option<usize> {
        s.img.iter().position(|&v| v == NONE)
    }

    fn leaf(&self, s: &State) -> Option<Homomorphism> {
        if self.surjective && s.distinct != self.b.len() {
            return None;
        }
        let map = s.img.iter().map(|&v| v as usize).collect();
        Some(Homomorphism::new(map, self.b.len()))
    }

    fn dfs(&self, s: &State, limit: usize, out: &mut Vec<Homomorphism>) {
        if out.len() >= limit {
            return;
        }
        match self.next_open(s) {
            None => out.extend(self.leaf(s)),
            Some(x) => {
                for y in 0..self.b.len() {
                    if let Some(t) = self.assign(s, x, y) {
                        self.dfs(&t, limit, out);
                        if out.len() >= limit {
                            return;
                        }
                    }
                }
            }
        }
    }
}

/// Homomorphisms `a → b` agreeing with `fixed`, in lexicographic order.
pub fn extend_hom(
    a: &HeytingAlgebra,
    b: &HeytingAlgebra,
    fixed: &[(usize, usize)],
    mode: HomMode,
    cap: usize,
    exec: Exec,
) -> HomSearch {
    let cap = if mode == HomMode::First { 1 } else { cap.max(1) };
    let ctx = Ctx {
        a,
        b,
        injective: mode.injective(),
        surjective: mode.surjective(),
        a_sizes: if mode.injective() { cone_sizes(a) } else { Vec::new() },
        b_sizes: if mode.injective() { cone_sizes(b) } else { Vec::new() },
    };
    let empty = HomSearch {
        homs: vec![],
        truncated: false,
    };
    if (ctx.injective && a.len() > b.len()) || (ctx.surjective && a.len() < b.len()) {
        return empty;
    }
    if mode == HomMode::Bijective && a.invariant() != b.invariant() {
        return empty;
    }
    let mut root = State {
        img: vec![NONE; a.len()],
        members: Vec::new(),
        processed: 0,
        count: vec![0; b.len()],
        distinct: 0,
    };
    let seeds = [(a.bot(), b.bot()), (a.top(), b.top())];
    if !seeds
        .iter()
        .chain(fixed)
        .all(|&(x, y)| x < a.len() && y < b.len() && ctx.set(&mut root, x, y))
        || !ctx.close(&mut root)
    {
        return empty;
    }
    let limit = cap.saturating_add(1);
    let mut homs: Vec<Homomorphism> = match ctx.next_open(&root) {
        None => ctx.leaf(&root).into_iter().collect(),
        Some(x) => {
            let ys: Vec<usize> = (0..b.len()).collect();
            if cap == 1 {
                par::find_map_first(exec, &ys, |&y| {
                    let t = ctx.assign(&root, x, y)?;
                    let mut out = Vec::new();
                    ctx.dfs(&t, 1, &mut out);
                    out.pop()
                })
                .into_iter()
                .collect()
            } else {
                par::map(exec, &ys, |&y| {
                    let mut out = Vec::new();
                    if let Some(t) = ctx.assign(&root, x, y) {
                        ctx.dfs(&t, limit, &mut out);
                    }
                    out
                })
                .into_iter()
                .flatten()
                .take(limit)
                .collect()
            }
        }
    };
    let truncated = homs.len() > cap;
    homs.truncate(cap);
    HomSearch { homs, truncated }
}

pub fn find_homs(
    a: &HeytingAlgebra,
    b: &HeytingAlgebra,
    mode: HomMode,
    cap: usize,
    exec: Exec,
) -> HomSearch {
    extend_hom(a, b, &[], mode, cap, exec)
}

/// Lexicographically least embedding `a → b`.
pub fn embedding(a: &HeytingAlgebra, b: &HeytingAlgebra, exec: Exec) -> Option<Homomorphism> {
    find_homs(a, b, HomMode::Injective, 1, exec).homs.pop()
}

pub fn iso(a: &HeytingAlgebra, b: &HeytingAlgebra) -> Option<Homomorphism> {
    find_homs(a, b, HomMode::Bijective, 1, Exec::Sequential).homs.pop()
}

pub fn isomorphic(a: &HeytingAlgebra, b: &HeytingAlgebra) -> bool {
    a.len() == b.len() && iso(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{chain, product};

    #[test]
    fn two_element_maps_only_to_bounds() {
        let c2 = chain(2);
        let c5 = chain(5);
        let r = find_homs(&c2, &c5, HomMode::All, 10, Exec::Sequential);
        assert_eq!(r.homs.len(), 1);
        assert_eq!(r.homs[0].map, vec![0, 4]);
        assert!(r.homs[0].verify(&c2, &c5));
    }

    #[test]
    fn chain_homs() {
        let c4 = chain(4);
        let c3 = chain(3);
        let all = find_homs(&c4, &c3, HomMode::All, 100, Exec::Sequential);
        assert!(all.homs.iter().all(|h| h.verify(&c4, &c3)));
        let mut sorted = all.homs.clone();
        sorted.sort_by(|x, y| x.map.cmp(&y.map));
        assert_eq!(sorted, all.homs);
        let surj = find_homs(&c4, &c3, HomMode::Surjective, 100, Exec::Sequential);
        assert!(surj.homs.iter().all(|h| h.surjective));
        assert!(!surj.homs.is_empty());
        assert!(find_homs(&c3, &c4, HomMode::Surjective, 5, Exec::Sequential).homs.is_empty());
    }

    #[test]
    fn cap_truncates() {
        let c2 = chain(2);
        let b8 = product(&[&c2, &c2, &c2], 100).unwrap().algebra;
        let all = find_homs(&b8, &b8, HomMode::Bijective, 100, Exec::Sequential);
        assert_eq!(all.homs.len(), 6);
        let some = find_homs(&b8, &b8, HomMode::Bijective, 2, Exec::Sequential);
        assert_eq!(some.homs, all.homs[..2].to_vec());
        assert!(some.truncated);
        let par = find_homs(&b8, &b8, HomMode::Bijective, 100, Exec::Parallel);
        assert_eq!(par, all);
    }

    #[test]
    fn isomorphism() {
        let c2 = chain(2);
        let c3 = chain(3);
        let p = product(&[&c2, &c3], 100).unwrap().algebra;
        let q = product(&[&c3, &c2], 100).unwrap().algebra;
        assert!(isomorphic(&p, &q));
        assert!(!isomorphic(&p, &chain(6)));
    }
}

use super::{HeytingAlgebra, Poset};
use serde::Serialize;

/// Least subset containing `seeds`, `bot` and `top`, closed under meet, join
/// and implication. Returned sorted.
pub fn closure(a: &HeytingAlgebra, seeds: &[usize]) -> Vec<usize> {
    let mut inside = vec![false; a.len()];
    let mut members: Vec<usize> = Vec::with_capacity(a.len());
    let push = |x: usize, inside: &mut Vec<bool>, members: &mut Vec<usize>| {
        if !inside[x] {
            inside[x] = true;
            members.push(x);
        }
    };
    push(a.bot(), &mut inside, &mut members);
    push(a.top(), &mut inside, &mut members);
    for &s in seeds {
        push(s, &mut inside, &mut members);
    }
    let mut next = 0;
    while next < members.len() {
        let x = members[next];
        let mut j = 0;
        while j <= next {
            let y = members[j];
            for z in [a.meet(x, y), a.join(x, y), a.imp(x, y), a.imp(y, x)] {
                push(z, &mut inside, &mut members);
            }
            j += 1;
        }
        next += 1;
    }
    members.sort_unstable();
    members
}

/// Result of [`min_generators`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Generators {
    /// `count` generators suffice and no smaller set does; `generators` is
    /// the lexicographically least generating set of that size.
    Found { count: usize, generators: Vec<usize> },
    ExceedsCap { cap: usize },
}

impl Generators {
    pub fn count(&self) -> Option<usize> {
        match self {
            Generators::Found { count, .. } => Some(*count),
            Generators::ExceedsCap { .. } => None,
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest number of generators, searching subsets of increasing size up to
/// `cap`. The constants are free, so an algebra generated by `{bot, top}`
/// needs zero generators.
pub fn min_generators(a: &HeytingAlgebra, cap: usize) -> Generators {
    let n = a.len();
    let candidates: Vec<usize> = (0..n).filter(|&x| x != a.bot() && x != a.top()).collect();
    if closure(a, &[]).len() == n {
        return Generators::Found {
            count: 0,
            generators: vec![],
        };
    }
    for k in 1..=cap.min(candidates.len()) {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let seeds: Vec<usize> = pick.iter().map(|&i| candidates[i]).collect();
            if closure(a, &seeds).len() == n {
                return Generators::Found {
                    count: k,
                    generators: seeds,
                };
            }
            if !next_combination(&mut pick, candidates.len()) {
                break;
            }
        }
    }
    Generators::ExceedsCap { cap }
}

/// The dual frame of a finite Heyting algebra: its join-irreducible elements
/// with the reversed order, so that the algebra is isomorphic to the up-sets.
#[derive(Debug, Clone)]
pub struct DualFrame {
    pub poset: Poset,
    /// `points[i]` is the join-irreducible element behind frame point `i`.
    pub points: Vec<usize>,
}

impl DualFrame {
    /// Frame points below-or-equal-to `x` in the algebra, as a bit mask.
    pub fn upset_of(&self, a: &HeytingAlgebra, x: usize) -> u64 {
        self.points
            .iter()
            .enumerate()
            .filter(|&(_, &j)| a.leq(j, x))
            .fold(0u64, |m, (i, _)| m | 1 << i)
    }

    pub fn is_rooted(&self) -> bool {
        self.poset.root().is_some()
    }
}

pub fn dual_frame(a: &HeytingAlgebra) -> DualFrame {
    let n = a.len();
    let points: Vec<usize> = (0..n)
        .filter(|&x| {
            x != a.bot() && a.join_all((0..n).filter(|&y| y != x && a.leq(y, x))) != x
        })
        .collect();
    let labels = points.iter().map(|j| format!("j{j}")).collect();
    let k = points.len();
    let leq = (0..k)
        .flat_map(|i| (0..k).map(move |j| (i, j)))
        .map(|(i, j)| a.leq(points[j], points[i]))
        .collect();
    DualFrame {
        poset: Poset::new(labels, leq).expect("reverse order of join-irreducibles"),
        points,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{chain, product, upset_algebra};

    #[test]
    fn generator_counts() {
        assert_eq!(min_generators(&chain(2), 3).count(), Some(0));
        assert_eq!(min_generators(&chain(1), 3).count(), Some(0));
        assert_eq!(
            min_generators(&chain(3), 3),
            Generators::Found {
                count: 1,
                generators: vec![1]
            }
        );
        assert_eq!(min_generators(&chain(4), 3).count(), Some(2));
        assert_eq!(min_generators(&chain(6), 2), Generators::ExceedsCap { cap: 2 });
        let c2 = chain(2);
        let b4 = product(&[&c2, &c2], 10).unwrap().algebra;
        assert_eq!(min_generators(&b4, 2).count(), Some(1));
    }

    #[test]
    fn closure_is_idempotent_and_monotone() {
        let a = chain(5);
        let c = closure(&a, &[2]);
        assert_eq!(closure(&a, &c), c);
        let bigger = closure(&a, &[2, 3]);
        assert!(c.iter().all(|x| bigger.contains(x)));
        assert_eq!(closure(&a, &[]), vec![0, 4]);
    }

    #[test]
    fn dual_frame_round_trips_through_upsets() {
        let p = Poset::from_relation(
            vec!["r".into(), "a".into(), "b".into()],
            &[(0, 1), (0, 2)],
        )
        .unwrap();
        let a = upset_algebra(&p).unwrap();
        let d = dual_frame(&a);
        assert_eq!(d.points.len(), 3);
        assert!(d.is_rooted());
        let back = upset_algebra(&d.poset).unwrap();
        assert_eq!(back.invariant(), a.invariant());
    }
}

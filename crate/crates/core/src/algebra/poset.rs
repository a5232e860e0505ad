use crate::error::{Error, Result};

/// A finite partial order, read as a Kripke frame: `leq(x, y)` means `y` is
/// accessible from `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    leq: Vec<bool>,
}

impl Poset {
    /// Validates that `leq` (row-major, `n*n`) is a partial order.
    pub fn new(labels: Vec<String>, leq: Vec<bool>) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n * n {
            return Err(Error::InvalidPoset(format!("relation is not {n}x{n}")));
        }
        let p = Poset { labels, leq };
        for x in 0..n {
            if !p.leq(x, x) {
                return Err(Error::InvalidPoset(format!("not reflexive at {}", p.labels[x])));
            }
            for y in 0..n {
                if x != y && p.leq(x, y) && p.leq(y, x) {
                    return Err(Error::InvalidPoset(format!(
                        "not antisymmetric: {} and {}",
                        p.labels[x], p.labels[y]
                    )));
                }
                for z in 0..n {
                    if p.leq(x, y) && p.leq(y, z) && !p.leq(x, z) {
                        return Err(Error::InvalidPoset(format!(
                            "not transitive: {} <= {} <= {}",
                            p.labels[x], p.labels[y], p.labels[z]
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Reflexive-transitive closure of the given strict pairs `(a, b)`, `a < b`.
    pub fn from_relation(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset("pair index out of range".into()));
            }
            if a == b {
                return Err(Error::InvalidPoset(format!("{} < {} is a loop", labels[a], labels[a])));
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Poset::new(labels, leq)
    }

    /// Antichain of `n` points.
    pub fn discrete(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        Poset::from_relation(labels, &[]).expect("discrete order")
    }

    /// `n`-point chain `x0 < x1 < ...`.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_relation(labels, &pairs).expect("chain order")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.labels.len() + y]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y
                    && self.leq(x, y)
                    && !(0..n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y))
                {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| (0..self.len()).all(|y| y == x || !self.leq(x, y)))
            .collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| (0..self.len()).all(|y| y == x || !self.leq(y, x)))
            .collect()
    }

    /// The least point, when there is one.
    pub fn root(&self) -> Option<usize> {
        (0..self.len()).find(|&r| (0..self.len()).all(|y| self.leq(r, y)))
    }

    /// Sub-order on the listed points, in the listed order.
    pub fn restrict(&self, points: &[usize]) -> Poset {
        let labels = points.iter().map(|&p| self.labels[p].clone()).collect();
        let leq = points
            .iter()
            .flat_map(|&x| points.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.leq(x, y))
            .collect();
        Poset { labels, leq }
    }

    /// Adds a new point above every existing point.
    pub fn with_new_top(&self, label: &str) -> Poset {
        let n = self.len();
        let mut leq = vec![false; (n + 1) * (n + 1)];
        for x in 0..n {
            for y in 0..n {
                leq[x * (n + 1) + y] = self.leq(x, y);
            }
            leq[x * (n + 1) + n] = true;
        }
        leq[n * (n + 1) + n] = true;
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        Poset { labels, leq }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_and_covers() {
        let p = Poset::from_relation(
            vec!["a".into(), "b".into(), "c".into()],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.root(), Some(0));
        assert_eq!(p.maximal(), vec![2]);
    }

    #[test]
    fn cycles_are_rejected() {
        let err = Poset::from_relation(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]);
        assert!(matches!(err, Err(Error::InvalidPoset(_))));
    }

    #[test]
    fn non_transitive_table_is_rejected() {
        let leq = vec![
            true, true, false, //
            false, true, true, //
            false, false, true,
        ];
        assert!(Poset::new(vec!["a".into(), "b".into(), "c".into()], leq).is_err());
    }
}

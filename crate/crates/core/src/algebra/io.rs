//! JSON file formats and Graphviz export.

use std::collections::HashMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{HeytingAlgebra, Poset};
use crate::error::{Error, Result};

/// `{"elements": [...], "covers": [[a, b], ...]}` where each pair means `a < b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl From<&Poset> for PosetFile {
    fn from(p: &Poset) -> Self {
        let l = p.labels();
        PosetFile {
            elements: l.to_vec(),
            covers: p
                .covers()
                .into_iter()
                .map(|(a, b)| (l[a].clone(), l[b].clone()))
                .collect(),
        }
    }
}

impl PosetFile {
    pub fn into_poset(self) -> Result<Poset> {
        let index: HashMap<&str, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if index.len() != self.elements.len() {
            return Err(Error::InvalidPoset("duplicate element label".into()));
        }
        let look = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::InvalidPoset(format!("unknown element `{s}` in covers")))
        };
        let pairs = self
            .covers
            .iter()
            .map(|(a, b)| Ok((look(a)?, look(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Poset::from_relation(self.elements.clone(), &pairs)
    }
}

pub fn poset_from_json(text: &str) -> Result<Poset> {
    serde_json::from_str::<PosetFile>(text)?.into_poset()
}

pub fn poset_to_json(p: &Poset) -> String {
    serde_json::to_string_pretty(&PosetFile::from(p)).expect("poset file serializes")
}

/// `{"n", "bot", "top", "meet", "join", "imp"}` with `n × n` tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub n: usize,
    pub bot: usize,
    pub top: usize,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub imp: Vec<Vec<usize>>,
}

impl From<&HeytingAlgebra> for AlgebraFile {
    fn from(a: &HeytingAlgebra) -> Self {
        let n = a.len();
        let rows = |t: &[u32]| -> Vec<Vec<usize>> {
            t.chunks(n.max(1))
                .map(|r| r.iter().map(|&x| x as usize).collect())
                .collect()
        };
        AlgebraFile {
            n,
            bot: a.bot(),
            top: a.top(),
            meet: rows(a.meet_table()),
            join: rows(a.join_table()),
            imp: rows(a.imp_table()),
        }
    }
}

impl AlgebraFile {
    /// Checks shapes and every Heyting law before accepting the tables.
    pub fn into_algebra(self) -> Result<HeytingAlgebra> {
        let n = self.n;
        let flat = |name: &str, t: Vec<Vec<usize>>| -> Result<Vec<u32>> {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidAlgebra(format!("{name} table is not {n}×{n}")));
            }
            Ok(t.into_iter().flatten().map(|x| x as u32).collect())
        };
        let meet = flat("meet", self.meet)?;
        let join = flat("join", self.join)?;
        let imp = flat("imp", self.imp)?;
        let a = HeytingAlgebra::from_tables(n, self.bot, self.top, meet, join, imp)?;
        let report = a.validate();
        if let Some(f) = report.failures.first() {
            return Err(Error::InvalidAlgebra(format!(
                "{} fails at {:?}",
                f.law, f.witness
            )));
        }
        Ok(a)
    }
}

impl Serialize for HeytingAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        AlgebraFile::from(self).serialize(s)
    }
}

pub fn algebra_from_json(text: &str) -> Result<HeytingAlgebra> {
    serde_json::from_str::<AlgebraFile>(text)?.into_algebra()
}

pub fn algebra_to_json(a: &HeytingAlgebra) -> String {
    serde_json::to_string(&AlgebraFile::from(a)).expect("algebra file serializes")
}

fn dot(labels: &[String], edges: &[(usize, usize)]) -> String {
    let mut s = String::from("digraph {\n  rankdir=BT;\n  node [shape=circle];\n");
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(s, "  n{i} [label=\"{}\"];", l.replace('"', "\\\""));
    }
    for (a, b) in edges {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}

/// Hasse diagram of a poset, drawn bottom to top.
pub fn poset_dot(p: &Poset) -> String {
    dot(p.labels(), &p.covers())
}

/// Hasse diagram of an algebra's lattice order, drawn bottom to top.
pub fn algebra_dot(a: &HeytingAlgebra) -> String {
    let labels: Vec<String> = (0..a.len()).map(|i| i.to_string()).collect();
    dot(&labels, &a.cover_pairs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{catalog_frame, chain, trivial};

    #[test]
    fn algebra_round_trip() {
        let a = chain(4);
        assert_eq!(algebra_from_json(&algebra_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn rejects_broken_tables() {
        let mut f = AlgebraFile::from(&chain(3));
        f.imp[2][1] = 0;
        assert!(matches!(f.into_algebra(), Err(Error::InvalidAlgebra(_))));
        let mut f = AlgebraFile::from(&chain(3));
        f.meet.pop();
        assert!(f.into_algebra().is_err());
        assert!(algebra_from_json("{\"n\": 2}").is_err());
    }

    #[test]
    fn poset_round_trip() {
        let p = catalog_frame("C12p").unwrap();
        let q = poset_from_json(&poset_to_json(&p)).unwrap();
        assert_eq!(p, q);
        assert!(poset_from_json(r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#).is_err());
        assert!(poset_from_json(r#"{"elements":["a"],"covers":[["a","z"]]}"#).is_err());
    }

    #[test]
    fn dot_shapes() {
        let d = algebra_dot(&chain(2));
        assert!(d.contains("rankdir=BT"));
        assert_eq!(d.matches("->").count(), 1);
        assert_eq!(algebra_dot(&trivial()).matches("->").count(), 0);
        let diamond = poset_dot(&catalog_frame("C5p").unwrap());
        assert_eq!(diamond.matches("->").count(), 4);
        assert_eq!(diamond.matches("label=").count(), 4);
    }
}

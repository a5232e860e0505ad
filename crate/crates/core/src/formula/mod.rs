//! Propositional syntax: formulas over {∧, ∨, →, ⊥}, structural rules, and
//! substitutions. Negation and ⊤ are notation: `~A` is `A -> bot` and `top`
//! is `bot -> bot`.

mod parser;
mod rules;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use parser::{parse, parse_rule};
pub use rules::{rule_library, RuleName};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Formula {
    Var(String),
    Bot,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    pub fn bot() -> Formula {
        Formula::Bot
    }

    pub fn top() -> Formula {
        Formula::imp(Formula::Bot, Formula::Bot)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::imp(a, Formula::Bot)
    }

    /// `(a -> b) /\ (b -> a)`.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    /// Left-nested conjunction; the empty conjunction is `top`.
    pub fn conj(items: impl IntoIterator<Item = Formula>) -> Formula {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or_else(Formula::top)
    }

    /// Left-nested disjunction; the empty disjunction is `bot`.
    pub fn disj(items: impl IntoIterator<Item = Formula>) -> Formula {
        items.into_iter().reduce(Formula::or).unwrap_or(Formula::Bot)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Formula::Imp(a, b) if **a == Formula::Bot && **b == Formula::Bot)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Bot => {}
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Bot => 1,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn substitute(&self, s: &Substitution) -> Formula {
        match self {
            Formula::Var(v) => s.get(v).cloned().unwrap_or_else(|| self.clone()),
            Formula::Bot => Formula::Bot,
            Formula::And(a, b) => Formula::and(a.substitute(s), b.substitute(s)),
            Formula::Or(a, b) => Formula::or(a.substitute(s), b.substitute(s)),
            Formula::Imp(a, b) => Formula::imp(a.substitute(s), b.substitute(s)),
        }
    }
}

// Binding strength used by the printer; larger binds tighter.
const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_ATOM: u8 = 4;

fn write_prec(f: &Formula, ctx: u8, out: &mut String) {
    let (prec, body) = match f {
        Formula::Var(v) => (PREC_ATOM, v.clone()),
        Formula::Bot => (PREC_ATOM, "bot".to_string()),
        _ if f.is_top() => (PREC_ATOM, "top".to_string()),
        Formula::Imp(a, b) if **b == Formula::Bot => {
            let mut s = String::from("~");
            write_prec(a, PREC_ATOM, &mut s);
            (PREC_ATOM, s)
        }
        Formula::And(a, b) => {
            let mut s = String::new();
            write_prec(a, PREC_AND, &mut s);
            s.push_str(" /\\ ");
            write_prec(b, PREC_AND + 1, &mut s);
            (PREC_AND, s)
        }
        Formula::Or(a, b) => {
            let mut s = String::new();
            write_prec(a, PREC_OR, &mut s);
            s.push_str(" \\/ ");
            write_prec(b, PREC_OR + 1, &mut s);
            (PREC_OR, s)
        }
        Formula::Imp(a, b) => {
            let mut s = String::new();
            write_prec(a, PREC_IMP + 1, &mut s);
            s.push_str(" -> ");
            write_prec(b, PREC_IMP, &mut s);
            (PREC_IMP, s)
        }
    };
    if prec < ctx {
        out.push('(');
        out.push_str(&body);
        out.push(')');
    } else {
        out.push_str(&body);
    }
}

/// Prints with the fewest parentheses the grammar allows.
pub fn format(f: &Formula) -> String {
    let mut s = String::new();
    write_prec(f, 0, &mut s);
    s
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format(self))
    }
}

/// A structural rule `Γ / B`. Premises are deduplicated, first occurrence wins.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rule {
    premises: Vec<Formula>,
    conclusion: Formula,
}

impl Rule {
    pub fn new(premises: impl IntoIterator<Item = Formula>, conclusion: Formula) -> Rule {
        let mut seen = BTreeSet::new();
        let premises = premises
            .into_iter()
            .filter(|p| seen.insert(p.clone()))
            .collect();
        Rule {
            premises,
            conclusion,
        }
    }

    pub fn premises(&self) -> &[Formula] {
        &self.premises
    }

    pub fn conclusion(&self) -> &Formula {
        &self.conclusion
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut vars = self.conclusion.variables();
        for p in &self.premises {
            vars.extend(p.variables());
        }
        vars
    }

    pub fn substitute(&self, s: &Substitution) -> Rule {
        Rule::new(
            self.premises.iter().map(|p| p.substitute(s)),
            self.conclusion.substitute(s),
        )
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let premises: Vec<String> = self.premises.iter().map(format).collect();
        if premises.is_empty() {
            write!(f, "/ {}", self.conclusion)
        } else {
            write!(f, "{} / {}", premises.join(", "), self.conclusion)
        }
    }
}

/// Finite map from variables to formulas; unmapped variables stay fixed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution(BTreeMap<String, Formula>);

impl Substitution {
    pub fn new() -> Self {
        Substitution(BTreeMap::new())
    }

    pub fn with(mut self, var: impl Into<String>, f: Formula) -> Self {
        self.0.insert(var.into(), f);
        self
    }

    pub fn insert(&mut self, var: impl Into<String>, f: Formula) {
        self.0.insert(var.into(), f);
    }

    pub fn get(&self, var: &str) -> Option<&Formula> {
        self.0.get(var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Formula)> {
        self.0.iter()
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Substitution) -> Substitution {
        let mut out: BTreeMap<String, Formula> = first
            .0
            .iter()
            .map(|(v, f)| (v.clone(), f.substitute(self)))
            .collect();
        for (v, f) in &self.0 {
            out.entry(v.clone()).or_insert_with(|| f.clone());
        }
        Substitution(out)
    }
}

impl FromIterator<(String, Formula)> for Substitution {
    fn from_iter<I: IntoIterator<Item = (String, Formula)>>(iter: I) -> Self {
        Substitution(iter.into_iter().collect())
    }
}

//! Valuations, validity and refutation of formulas and rules in a finite
//! algebra.
//!
//! Valuations are enumerated lexicographically: variables in name order, the
//! first one most significant, element indices ascending. Searches assign
//! variables in that order and test each premise as soon as its last variable
//! is bound, so the first witness found is the lexicographically least one.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::HeytingAlgebra;
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::formula::{Formula, Rule, Substitution};
use crate::morphisms::quotient_by;
use crate::par;

pub type Valuation = BTreeMap<String, usize>;

pub fn evaluate(a: &HeytingAlgebra, f: &Formula, v: &Valuation) -> Result<usize> {
    Ok(match f {
        Formula::Var(x) => {
            let e = *v.get(x).ok_or_else(|| Error::Unbound(x.clone()))?;
            if e >= a.len() {
                return Err(Error::InvalidArgument(format!("{x} ↦ {e} is out of range")));
            }
            e
        }
        Formula::Bot => a.bot(),
        Formula::And(x, y) => a.meet(evaluate(a, x, v)?, evaluate(a, y, v)?),
        Formula::Or(x, y) => a.join(evaluate(a, x, v)?, evaluate(a, y, v)?),
        Formula::Imp(x, y) => a.imp(evaluate(a, x, v)?, evaluate(a, y, v)?),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefutationWitness {
    pub valuation: Valuation,
    /// Value of the refuted formula, or of the rule's conclusion.
    pub value: usize,
    /// Values of the rule's premises (all top); empty for formulas.
    pub premise_values: Vec<usize>,
}

impl RefutationWitness {
    pub fn verify_formula(&self, a: &HeytingAlgebra, f: &Formula) -> bool {
        matches!(evaluate(a, f, &self.valuation), Ok(x) if x == self.value && x != a.top())
            && self.premise_values.is_empty()
    }

    pub fn verify_rule(&self, a: &HeytingAlgebra, r: &Rule) -> bool {
        let prem: Result<Vec<usize>> = r.premises().iter().map(|p| evaluate(a, p, &self.valuation)).collect();
        matches!(prem, Ok(ref p) if *p == self.premise_values && p.iter().all(|&x| x == a.top()))
            && matches!(evaluate(a, r.conclusion(), &self.valuation), Ok(x) if x == self.value && x != a.top())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Validity {
    Valid,
    Refuted(RefutationWitness),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }

    pub fn witness(&self) -> Option<&RefutationWitness> {
        match self {
            Validity::Valid => None,
            Validity::Refuted(w) => Some(w),
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Op {
    Var(usize),
    Bot,
    And,
    Or,
    Imp,
}

/// Postfix code over variable slots.
#[derive(Debug, Clone)]
struct Compiled {
    ops: Vec<Op>,
    /// Highest slot used, or `None` for closed formulas.
    last_slot: Option<usize>,
}

impl Compiled {
    fn new(f: &Formula, slots: &BTreeMap<String, usize>) -> Compiled {
        fn go(f: &Formula, slots: &BTreeMap<String, usize>, out: &mut Vec<Op>) {
            match f {
                Formula::Var(x) => out.push(Op::Var(slots[x])),
                Formula::Bot => out.push(Op::Bot),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                    go(a, slots, out);
                    go(b, slots, out);
                    out.push(match f {
                        Formula::And(..) => Op::And,
                        Formula::Or(..) => Op::Or,
                        _ => Op::Imp,
                    });
                }
            }
        }
        let mut ops = Vec::new();
        go(f, slots, &mut ops);
        let last_slot = ops
            .iter()
            .filter_map(|o| match o {
                Op::Var(i) => Some(*i),
                _ => None,
            })
            .max();
        Compiled { ops, last_slot }
    }

    fn eval(&self, a: &HeytingAlgebra, vals: &[usize], stack: &mut Vec<usize>) -> usize {
        stack.clear();
        for op in &self.ops {
            let v = match *op {
                Op::Var(i) => vals[i],
                Op::Bot => a.bot(),
                _ => {
                    let y = stack.pop().expect("postfix arity");
                    let x = stack.pop().expect("postfix arity");
                    match op {
                        Op::And => a.meet(x, y),
                        Op::Or => a.join(x, y),
                        _ => a.imp(x, y),
                    }
                }
            };
            stack.push(v);
        }
        stack[0]
    }
}

struct Problem {
    vars: Vec<String>,
    /// Premises grouped by the slot after which they can be evaluated.
    ready: Vec<Vec<Compiled>>,
    closed: Vec<Compiled>,
    premises: Vec<Compiled>,
    conclusion: Compiled,
}

impl Problem {
    fn new(premises: &[Formula], conclusion: &Formula) -> Problem {
        let mut names = conclusion.variables();
        for p in premises {
            names.extend(p.variables());
        }
        let vars: Vec<String> = names.into_iter().collect();
        let slots: BTreeMap<String, usize> = vars.iter().cloned().zip(0..).collect();
        let mut ready = vec![Vec::new(); vars.len()];
        let mut closed = Vec::new();
        let compiled: Vec<Compiled> = premises.iter().map(|p| Compiled::new(p, &slots)).collect();
        for c in &compiled {
            match c.last_slot {
                Some(i) => ready[i].push(c.clone()),
                None => closed.push(c.clone()),
            }
        }
        Problem {
            vars,
            ready,
            closed,
            premises: compiled,
            conclusion: Compiled::new(conclusion, &slots),
        }
    }

    fn witness(&self, a: &HeytingAlgebra, vals: &[usize], value: usize) -> RefutationWitness {
        let mut stack = Vec::new();
        RefutationWitness {
            valuation: self.vars.iter().cloned().zip(vals.iter().copied()).collect(),
            value,
            premise_values: self.premises.iter().map(|p| p.eval(a, vals, &mut stack)).collect(),
        }
    }

    /// Depth-first search below a fixed prefix of slot values. `steps` counts
    /// visited nodes against `limit`.
    fn dfs(
        &self,
        a: &HeytingAlgebra,
        vals: &mut Vec<usize>,
        stack: &mut Vec<usize>,
        steps: &mut u64,
        limit: u64,
    ) -> Result<Option<usize>> {
        let level = vals.len();
        if level == self.vars.len() {
            let c = self.conclusion.eval(a, vals, stack);
            return Ok((c != a.top()).then_some(c));
        }
        for x in 0..a.len() {
            *steps += 1;
            if *steps > limit {
                return Err(Error::Budget(format!("valuation search exceeded {limit} steps")));
            }
            vals.push(x);
            if self.ready[level].iter().all(|p| p.eval(a, vals, stack) == a.top()) {
                if let Some(c) = self.dfs(a, vals, stack, steps, limit)? {
                    return Ok(Some(c));
                }
            }
            vals.pop();
        }
        Ok(None)
    }

    /// Lexicographically least valuation with every premise at top and the
    /// conclusion below top.
    fn search(&self, a: &HeytingAlgebra, budgets: &Budgets, exact_count: bool) -> Result<Option<RefutationWitness>> {
        let mut stack = Vec::new();
        if !self.closed.iter().all(|p| p.eval(a, &[], &mut stack) == a.top()) {
            return Ok(None);
        }
        if self.vars.is_empty() {
            let c = self.conclusion.eval(a, &[], &mut stack);
            return Ok((c != a.top()).then(|| self.witness(a, &[], c)));
        }
        let limit = budgets.eval_steps;
        if exact_count {
            // each valuation costs one step per symbol of the formula
            let total = (a.len() as f64).powi(self.vars.len() as i32);
            let cost = total * self.conclusion.ops.len() as f64;
            if cost > limit as f64 {
                return Err(Error::Budget(format!(
                    "{total} valuations of a formula of size {} exceed the budget of {limit} steps",
                    self.conclusion.ops.len()
                )));
            }
        }
        let n = a.len();
        let share = if exact_count { u64::MAX } else { (limit / n as u64).max(1) };
        let branches: Vec<usize> = (0..n).collect();
        let results = par::map(budgets.exec, &branches, |&x| -> Result<Option<Vec<usize>>> {
            let mut vals = vec![x];
            let mut stack = Vec::new();
            if !self.ready[0].iter().all(|p| p.eval(a, &vals, &mut stack) == a.top()) {
                return Ok(None);
            }
            let mut steps = 0;
            Ok(self
                .dfs(a, &mut vals, &mut stack, &mut steps, share)?
                .map(|_| vals))
        });
        for r in results {
            if let Some(vals) = r? {
                let c = self.conclusion.eval(a, &vals, &mut stack);
                return Ok(Some(self.witness(a, &vals, c)));
            }
        }
        Ok(None)
    }
}

fn antecedent_conjuncts(f: &Formula, out: &mut Vec<Formula>) {
    match f {
        Formula::And(x, y) => {
            antecedent_conjuncts(x, out);
            antecedent_conjuncts(y, out);
        }
        _ => out.push(f.clone()),
    }
}

/// Checks `f` under every valuation. The first refuting valuation in
/// lexicographic order is returned when the full sweep fits the step budget.
/// Otherwise, for `A1 ∧ ... ∧ Am → C`, a refutation is searched in each
/// principal quotient `↓c` as a valuation making every `Ai` top and `C` not
/// top; such a valuation refutes `f` in the algebra itself, and every
/// refutation arises this way with `c` the value of the antecedent.
pub fn formula_valid(a: &HeytingAlgebra, f: &Formula, budgets: &Budgets) -> Result<Validity> {
    let p = Problem::new(&[], f);
    match p.search(a, budgets, true) {
        Ok(w) => Ok(w.map_or(Validity::Valid, Validity::Refuted)),
        Err(Error::Budget(msg)) => {
            let Formula::Imp(ante, cons) = f else {
                return Err(Error::Budget(msg));
            };
            let mut premises = Vec::new();
            antecedent_conjuncts(ante, &mut premises);
            let p = Problem::new(&premises, cons);
            for c in 0..a.len() {
                let q = quotient_by(a, c);
                if let Some(w) = p.search(&q.algebra, budgets, false)? {
                    let valuation: Valuation = w
                        .valuation
                        .into_iter()
                        .map(|(k, x)| (k, q.elements[x]))
                        .collect();
                    let value = evaluate(a, f, &valuation)?;
                    return Ok(Validity::Refuted(RefutationWitness {
                        valuation,
                        value,
                        premise_values: vec![],
                    }));
                }
            }
            Ok(Validity::Valid)
        }
        Err(e) => Err(e),
    }
}

pub fn rule_valid(a: &HeytingAlgebra, r: &Rule, budgets: &Budgets) -> Result<Validity> {
    let p = Problem::new(r.premises(), r.conclusion());
    Ok(p.search(a, budgets, false)?.map_or(Validity::Valid, Validity::Refuted))
}

/// Every formula of `gamma` is valid in `a` and `f` is refuted.
pub fn separates(a: &HeytingAlgebra, gamma: &[Formula], f: &Formula, budgets: &Budgets) -> Result<bool> {
    for g in gamma {
        if !formula_valid(a, g, budgets)?.is_valid() {
            return Ok(false);
        }
    }
    Ok(!formula_valid(a, f, budgets)?.is_valid())
}

/// Rule analogue of [`separates`].
pub fn separates_rules(a: &HeytingAlgebra, gamma: &[Rule], r: &Rule, budgets: &Budgets) -> Result<bool> {
    for g in gamma {
        if !rule_valid(a, g, budgets)?.is_valid() {
            return Ok(false);
        }
    }
    Ok(!rule_valid(a, r, budgets)?.is_valid())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum InstanceCheck {
    /// Every instantiated premise is valid and the instantiated conclusion is
    /// refuted, so the rule is not admissible in the logic of the algebra.
    Counterexample {
        instance: String,
        witness: RefutationWitness,
    },
    Inconclusive {
        instance: String,
        reason: String,
    },
}

pub fn instance_check(a: &HeytingAlgebra, r: &Rule, s: &Substitution, budgets: &Budgets) -> Result<InstanceCheck> {
    let inst = r.substitute(s);
    let instance = inst.to_string();
    for (i, p) in inst.premises().iter().enumerate() {
        if let Validity::Refuted(_) = formula_valid(a, p, budgets)? {
            return Ok(InstanceCheck::Inconclusive {
                instance,
                reason: format!("premise {} of the instance is refuted", i + 1),
            });
        }
    }
    Ok(match formula_valid(a, inst.conclusion(), budgets)? {
        Validity::Refuted(witness) => InstanceCheck::Counterexample { instance, witness },
        Validity::Valid => InstanceCheck::Inconclusive {
            instance,
            reason: "the conclusion of the instance is valid".into(),
        },
    })
}

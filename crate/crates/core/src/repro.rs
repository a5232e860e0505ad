//! Scripted reproduction of the finite claims about the catalog and the
//! cyclic algebras, as a report of named checks.
//!
//! Expected verdicts live in `data/repro/expected.json` next to a short
//! statement of each claim. A check is green when the computed verdict
//! matches, red when it differs, and exceeds-budget when the computation
//! could not decide within the budgets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algebra::{catalog, chain, cyclic, HeytingAlgebra};
use crate::budget::Budgets;
use crate::error::{Error, Result};
use crate::eval::{formula_valid, instance_check, InstanceCheck};
use crate::formula::{parse, rule_library, RuleName, Substitution};
use crate::jankov::{in_sh, jankov_formula, second_greatest};
use crate::morphisms::{embedding, find_homs, isomorphic, subdirect_embedding_check, HomMode};
use crate::par::{self, Exec};
use crate::quasivariety::{
    member, primitive, q_irreducible, sc_primitive_cyclic, totally_non_projective, weakly_projective,
    PrimitiveReport, Projectivity, QvarHandle,
};
use crate::verdict::Verdict;

const EXPECTED: &str = include_str!("../data/repro/expected.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// The totally non-projective algebra C7p and its witnesses.
    Tnp,
    /// Primitivity of Q(C16) and of the quasivarieties of cyclic algebras.
    Primitivity,
    /// The Mints rule instance in C7 and primitivity of structural completions.
    Completions,
    Jankov,
    All,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Tnp, Suite::Primitivity, Suite::Completions, Suite::Jankov, Suite::All];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Tnp => "tnp",
            Suite::Primitivity => "primitivity",
            Suite::Completions => "completions",
            Suite::Jankov => "jankov",
            Suite::All => "all",
        }
    }

    fn includes(self, check: &str) -> bool {
        self == Suite::All || check.split('.').next() == Some(self.as_str())
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Green,
    Red,
    ExceedsBudget,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Green => "green",
            Status::Red => "red",
            Status::ExceedsBudget => "exceeds-budget",
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
pub struct Expectation {
    pub name: String,
    pub claim: String,
    pub expected: Verdict,
}

pub fn expectations() -> Vec<Expectation> {
    serde_json::from_str(EXPECTED).expect("bundled expectations parse")
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub claim: String,
    pub expected: Verdict,
    /// `None` when the computation failed with an error other than a budget
    /// overrun; the row is then red and `certificate` holds the error.
    pub computed: Option<Verdict>,
    pub status: Status,
    pub certificate: Option<String>,
    pub millis: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproReport {
    pub suite: Suite,
    pub budgets: Budgets,
    pub checks: Vec<CheckRow>,
}

impl ReproReport {
    pub fn red(&self) -> usize {
        self.count(Status::Red)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn row(&self, name: &str) -> Option<&CheckRow> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The report with wall times zeroed, for determinism comparisons.
    pub fn without_times(&self) -> ReproReport {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.millis = 0;
        }
        r
    }
}

struct Outcome {
    verdict: Verdict,
    certificate: Option<String>,
}

fn outcome(verdict: Verdict, certificate: impl Into<Option<String>>) -> Result<Outcome> {
    Ok(Outcome {
        verdict,
        certificate: certificate.into(),
    })
}

fn decided(b: bool) -> Result<Outcome> {
    outcome(Verdict::from_bool(b), None)
}

fn budget_outcome(detail: String) -> Result<Outcome> {
    outcome(Verdict::ExceedsBudget, detail)
}

struct Ctx {
    budgets: Budgets,
    catalog: BTreeMap<&'static str, HeytingAlgebra>,
}

impl Ctx {
    fn new(budgets: Budgets) -> Result<Ctx> {
        let mut cat = BTreeMap::new();
        for name in crate::algebra::CATALOG_NAMES {
            cat.insert(name, catalog(name)?);
        }
        Ok(Ctx { budgets, catalog: cat })
    }

    fn c(&self, name: &str) -> &HeytingAlgebra {
        &self.catalog[name]
    }

    fn q(&self, name: &str) -> Result<QvarHandle> {
        QvarHandle::new(self.c(name).clone(), self.budgets)
    }

    fn embeds(&self, a: &str, b: &str) -> Result<Outcome> {
        let h = embedding(self.c(a), self.c(b), self.budgets.exec);
        outcome(
            Verdict::from_bool(h.is_some()),
            h.map(|h| format!("embedding {:?}", h.map)),
        )
    }

    fn onto(&self, a: &str, b: &str) -> Result<Outcome> {
        let s = find_homs(self.c(a), self.c(b), HomMode::Surjective, 1, self.budgets.exec);
        let h = s.homs.first();
        outcome(
            Verdict::from_bool(h.is_some()),
            h.map(|h| format!("surjection {:?}", h.map)),
        )
    }

    fn in_q(&self, a: &str, generator: &str) -> Result<Outcome> {
        let m = member(self.c(a), &self.q(generator)?)?;
        decided(m.is_member())
    }
}

fn describe_primitive(r: &PrimitiveReport) -> Option<String> {
    match r.certificate {
        Some(i) => {
            let irr = &r.irreducibles[i];
            let w = irr.projectivity.witness().expect("certificate has a witness");
            Some(format!(
                "{}-element irreducible subalgebra {:?} has a {}-element preimage without a copy of it ({})",
                irr.size,
                irr.elements,
                w.algebra.len(),
                w.found_by
            ))
        }
        None => r.detail.clone(),
    }
}

fn describe_projectivity(p: &Projectivity) -> String {
    match p {
        Projectivity::Yes { reason } => format!("{reason:?}"),
        Projectivity::No { witness } => format!(
            "{}-element preimage without a copy ({})",
            witness.algebra.len(),
            witness.found_by
        ),
        Projectivity::ExceedsBudget { detail } => detail.clone(),
    }
}

fn mints_instance() -> Substitution {
    let f = |s: &str| parse(s).expect("fixed formula parses");
    Substitution::new()
        .with("p1", f("~~q"))
        .with("p2", f("~q"))
        .with("r", f("~~q -> q"))
}

const GLIVENKO_VARIANT: &str = "(~~q -> q) \\/ ~~q \\/ ~q";

/// Algebras of at most 10 elements used for the Jankov correspondence.
pub fn jankov_pool() -> Result<Vec<(String, HeytingAlgebra)>> {
    let mut pool = Vec::new();
    for n in 1..=10 {
        pool.push((format!("chain:{n}"), chain(n)));
    }
    for n in 2..=10 {
        pool.push((format!("cyclic:{n}"), cyclic(n)?));
    }
    for name in crate::algebra::CATALOG_NAMES {
        let a = catalog(name)?;
        if a.len() <= 10 {
            pool.push((format!("catalog:{name}"), a));
        }
    }
    Ok(pool)
}

impl Ctx {
    fn compute(&self, name: &str) -> Result<Outcome> {
        let b = &self.budgets;
        match name {
            "tnp.c5p-embeds-c7p" => self.embeds("C5p", "C7p"),
            "tnp.c5p-in-q-c7p" => self.in_q("C5p", "C7p"),
            "tnp.c10p-subdirect-c5p-c7p" => {
                let s = subdirect_embedding_check(self.c("C10p"), &[self.c("C5p"), self.c("C7p")], b.algebra_cap)?;
                outcome(
                    Verdict::from_bool(s.is_some()),
                    s.map(|s| format!("embedding {:?}", s.embedding.map)),
                )
            }
            "tnp.c10p-in-q-c7p" => self.in_q("C10p", "C7p"),
            "tnp.c10p-onto-c7p" => self.onto("C10p", "C7p"),
            "tnp.c7p-embeds-c10p" => self.embeds("C7p", "C10p"),
            "tnp.c7p-totally-non-projective" => {
                let t = totally_non_projective(self.c("C7p"), b)?;
                let mut cert = describe_projectivity(&t.projectivity);
                if let Some(w) = t.projectivity.witness() {
                    cert += &format!("; isomorphic to C10p: {}", isomorphic(&w.algebra, self.c("C10p")));
                }
                outcome(t.verdict, cert)
            }
            "primitivity.c10p-embeds-c16" => self.embeds("C10p", "C16"),
            "primitivity.c12p-embeds-c16" => self.embeds("C12p", "C16"),
            "primitivity.c12p-onto-c10p" => self.onto("C12p", "C10p"),
            "primitivity.c10p-embeds-c12p" => self.embeds("C10p", "C12p"),
            "primitivity.c7p-in-q16" => self.in_q("C7p", "C16"),
            "primitivity.c10p-q16-irreducible" => {
                let r = q_irreducible(self.c("C10p"), &self.q("C16")?)?;
                decided(r.is_irreducible())
            }
            "primitivity.c10p-weakly-projective-q16" => {
                let p = weakly_projective(self.c("C10p"), &self.q("C16")?)?;
                outcome(p.verdict(), describe_projectivity(&p))
            }
            "primitivity.q16-primitive" => {
                let r = primitive(&self.q("C16")?)?;
                outcome(r.verdict, describe_primitive(&r))
            }
            "completions.mints-premise-valid-c7" => {
                let rule = rule_library(RuleName::Mints)?.substitute(&mints_instance());
                let v = formula_valid(&cyclic(7)?, &rule.premises()[0], b)?;
                decided(v.is_valid())
            }
            "completions.mints-conclusion-refuted-c7" => {
                let c7 = cyclic(7)?;
                match instance_check(&c7, &rule_library(RuleName::Mints)?, &mints_instance(), b)? {
                    InstanceCheck::Counterexample { instance, witness } => {
                        outcome(Verdict::Yes, format!("{instance}; refuted by {:?}", witness.valuation))
                    }
                    InstanceCheck::Inconclusive { reason, .. } => outcome(Verdict::No, reason),
                }
            }
            "completions.glivenko-variant-refuted-c7" => {
                let v = formula_valid(&cyclic(7)?, &parse(GLIVENKO_VARIANT)?, b)?;
                outcome(
                    Verdict::from_bool(!v.is_valid()),
                    v.witness().map(|w| format!("refuted by {:?}", w.valuation)),
                )
            }
            "completions.refutations-agree" => {
                let c7 = cyclic(7)?;
                let rule = rule_library(RuleName::Mints)?.substitute(&mints_instance());
                let first = formula_valid(&c7, rule.conclusion(), b)?.is_valid();
                let second = formula_valid(&c7, &parse(GLIVENKO_VARIANT)?, b)?.is_valid();
                decided(!first && !second)
            }
            "completions.sc-primitive-c7" | "completions.sc-primitive-c2" => {
                let n = if name.ends_with("c7") { 7 } else { 2 };
                let r = sc_primitive_cyclic(&cyclic(n)?, b)?;
                let cert = match (&r.primitive, &r.detail) {
                    (Some(p), _) => Some(format!(
                        "free algebra of {} elements; {}",
                        r.free_size.unwrap_or(0),
                        describe_primitive(p).unwrap_or_else(|| {
                            format!("{} irreducible subalgebras, all weakly projective", p.irreducibles.len())
                        })
                    )),
                    (None, d) => d.clone(),
                };
                outcome(r.verdict, cert)
            }
            "jankov.self-refutation" => {
                let pool = jankov_pool()?;
                let mut checked = 0;
                for (label, a) in &pool {
                    if second_greatest(a).is_none() {
                        continue;
                    }
                    let j = jankov_formula(a)?;
                    let value = crate::eval::evaluate(a, &j.formula, &j.identity_valuation())?;
                    if value != j.omega {
                        return outcome(Verdict::No, format!("{label}: identity valuation gives {value}"));
                    }
                    checked += 1;
                }
                outcome(Verdict::Yes, format!("{checked} algebras"))
            }
            "jankov.correspondence" => {
                let pool = jankov_pool()?;
                let pairs: Vec<(usize, usize)> = (0..pool.len())
                    .filter(|&i| second_greatest(&pool[i].1).is_some())
                    .flat_map(|i| (0..pool.len()).map(move |j| (i, j)))
                    .collect();
                let seq = b.with_exec(Exec::Sequential);
                let results = par::map(b.exec, &pairs, |&(i, j)| -> Result<Option<String>> {
                    let (la, a) = &pool[i];
                    let (lb, bb) = &pool[j];
                    let x = jankov_formula(a)?;
                    let valid = formula_valid(bb, &x.formula, &seq)?.is_valid();
                    let sh = in_sh(a, bb, &seq)?.verdict == Verdict::Yes;
                    Ok((valid == sh).then(|| format!("{la} vs {lb}: valid {valid}, in SH {sh}")))
                });
                for r in results {
                    if let Some(msg) = r? {
                        return outcome(Verdict::No, msg);
                    }
                }
                outcome(Verdict::Yes, format!("{} pairs", pairs.len()))
            }
            "jankov.c7p-valid-in-short-chains" => {
                let x = jankov_formula(self.c("C7p"))?;
                for k in 1..=7 {
                    if !formula_valid(&chain(k), &x.formula, b)?.is_valid() {
                        return outcome(Verdict::No, format!("refuted in chain:{k}"));
                    }
                }
                decided(true)
            }
            _ => self.compute_cyclic(name),
        }
    }

    fn compute_cyclic(&self, name: &str) -> Result<Outcome> {
        let rest = name
            .strip_prefix("primitivity.cyclic-")
            .ok_or_else(|| Error::InvalidArgument(format!("no computation for check `{name}`")))?;
        let (n, what) = rest
            .split_once('-')
            .ok_or_else(|| Error::InvalidArgument(format!("malformed check `{name}`")))?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("malformed check `{name}`")))?;
        let r = primitive(&QvarHandle::new(cyclic(n)?, self.budgets)?)?;
        match what {
            "primitive" => outcome(r.verdict, describe_primitive(&r)),
            "contains-tnp-c7p" => {
                let c7p = self.c("C7p");
                let hit = r.irreducibles.iter().find(|i| {
                    i.projectivity.verdict() == Verdict::No && isomorphic(&i.algebra, c7p)
                });
                match hit {
                    Some(i) => {
                        let t = totally_non_projective(&i.algebra, &self.budgets)?;
                        outcome(t.verdict, format!("subalgebra {:?}", i.elements))
                    }
                    None if r.verdict == Verdict::ExceedsBudget => budget_outcome(r.detail.unwrap_or_default()),
                    None => decided(false),
                }
            }
            _ => Err(Error::InvalidArgument(format!("no computation for check `{name}`"))),
        }
    }
}

fn run_check(ctx: &Ctx, e: &Expectation) -> CheckRow {
    let start = Instant::now();
    let result = ctx.compute(&e.name);
    let millis = start.elapsed().as_millis() as u64;
    let (computed, certificate) = match result {
        Ok(o) => (Some(o.verdict), o.certificate),
        Err(Error::Budget(msg)) => (Some(Verdict::ExceedsBudget), Some(msg)),
        Err(err) => (None, Some(format!("error: {err}"))),
    };
    let status = match computed {
        Some(Verdict::ExceedsBudget) => Status::ExceedsBudget,
        Some(v) if v == e.expected => Status::Green,
        _ => Status::Red,
    };
    CheckRow {
        name: e.name.clone(),
        claim: e.claim.clone(),
        expected: e.expected,
        computed,
        status,
        certificate,
        millis,
    }
}

/// Runs every check of `suite`, ordered by name.
pub fn run_repro(suite: Suite, budgets: &Budgets) -> Result<ReproReport> {
    let ctx = Ctx::new(*budgets)?;
    let mut checks: Vec<CheckRow> = expectations()
        .iter()
        .filter(|e| suite.includes(&e.name))
        .map(|e| run_check(&ctx, e))
        .collect();
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(ReproReport {
        suite,
        budgets: *budgets,
        checks,
    })
}

/// Runs one named check.
pub fn run_named(name: &str, budgets: &Budgets) -> Result<CheckRow> {
    let e = expectations()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{name}`")))?;
    Ok(run_check(&Ctx::new(*budgets)?, &e))
}

/// Structural facts the catalog transcription must satisfy, as
/// `(check name, holds)`. The last one fails for the shipped catalog; see the
/// README.
pub fn consistency_gate() -> Result<Vec<(&'static str, bool)>> {
    let ctx = Ctx::new(Budgets::default())?;
    let names = [
        "tnp.c5p-embeds-c7p",
        "tnp.c10p-subdirect-c5p-c7p",
        "tnp.c10p-onto-c7p",
        "tnp.c7p-embeds-c10p",
        "primitivity.c10p-embeds-c16",
        "primitivity.c12p-embeds-c16",
        "primitivity.c12p-onto-c10p",
        "primitivity.c10p-embeds-c12p",
    ];
    let expected: BTreeMap<String, Verdict> = expectations().into_iter().map(|e| (e.name, e.expected)).collect();
    names
        .into_iter()
        .map(|n| Ok((n, ctx.compute(n)?.verdict == expected[n])))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("fig".parse::<Suite>().is_err());
    }

    #[test]
    fn expectations_are_sorted_and_unique() {
        let names: Vec<String> = expectations().into_iter().map(|e| e.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(names, sorted);
    }
}

//! The `hsc` command line: argument grammar, configuration and dispatch.
//!
//! Exit codes: 0 for a decided answer, 2 when a budget ran out, 1 for usage
//! and validation errors.

mod address;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hsc_core::algebra::{algebra_dot, poset_dot, poset_to_json, AlgebraFile, HeytingAlgebra};
use hsc_core::eval::{formula_valid, instance_check, rule_valid, separates, InstanceCheck, Validity};
use hsc_core::formula::{parse, parse_rule, rule_library, Formula, Rule, RuleName, Substitution};
use hsc_core::jankov::{in_sh, jankov_formula};
use hsc_core::morphisms::{filters, find_homs, quotient, subalgebras, subdirect_embedding_check, HomMode};
use hsc_core::par::Exec;
use hsc_core::quasivariety::{
    free_algebra, member, primitive, q_irreducible, sc_primitive_cyclic, totally_non_projective,
    weakly_projective, Irreducibility, Membership, QvarHandle,
};
use hsc_core::repro::{run_repro, Suite};
use hsc_core::{Budgets, Error, Result, Verdict};

pub use address::{resolve, resolve_frame};

/// Environment variable holding a JSON object of budget overrides, e.g.
/// `{"free_cap": 100000}`.
pub const BUDGETS_ENV: &str = "HSC_BUDGETS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone)]
pub struct Config {
    pub budgets: Budgets,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            budgets: Budgets::default(),
            format: Format::Text,
        }
    }
}

fn merge_budgets(base: &Budgets, overrides: &Value) -> Result<Budgets> {
    let Value::Object(map) = overrides else {
        return Err(Error::Format("budget overrides must be a JSON object".into()));
    };
    let mut merged = serde_json::to_value(base)?;
    for (k, v) in map {
        if merged.get(k).is_none() {
            return Err(Error::Format(format!("unknown budget `{k}`")));
        }
        merged[k] = v.clone();
    }
    let mut b: Budgets = serde_json::from_value(merged)?;
    b.exec = base.exec;
    if b.eval_steps == 0 || b.free_cap == 0 || b.filter_cap == 0 || b.algebra_cap == 0 {
        return Err(Error::Format("budgets must be positive".into()));
    }
    Ok(b)
}

impl Config {
    /// Defaults, then the optional config file (`{"budgets": {...},
    /// "format": "json"}`), then the environment override.
    pub fn load(file: Option<&PathBuf>, env: Option<&str>) -> Result<Config> {
        let mut cfg = Config::default();
        if let Some(path) = file {
            let v: Value = serde_json::from_str(&fs::read_to_string(path)?)?;
            if let Some(b) = v.get("budgets") {
                cfg.budgets = merge_budgets(&cfg.budgets, b)?;
            }
            if let Some(f) = v.get("format").and_then(Value::as_str) {
                cfg.format = Format::from_str(f, true).map_err(|e| Error::Format(e.to_string()))?;
            }
        }
        if let Some(text) = env {
            let v: Value = serde_json::from_str(text)?;
            cfg.budgets = merge_budgets(&cfg.budgets, &v)?;
        }
        Ok(cfg)
    }
}

#[derive(Parser, Debug)]
#[command(name = "hsc", version, about = "Finite Heyting algebras, admissible rules and quasivarieties")]
struct Cli {
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// JSON configuration file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Run every search on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Inspect and build algebras.
    #[command(subcommand)]
    Alg(AlgCmd),
    /// Validity of formulas and rules.
    #[command(subcommand)]
    Logic(LogicCmd),
    /// Print a rule from the library.
    #[command(subcommand)]
    Rules(RulesCmd),
    /// Decisions about the quasivariety generated by an algebra.
    #[command(subcommand)]
    Qvar(QvarCmd),
    /// Characteristic formulas.
    #[command(subcommand)]
    Jankov(JankovCmd),
    /// Reproduction report.
    #[command(subcommand)]
    Repro(ReproCmd),
}

#[derive(Subcommand, Debug)]
enum AlgCmd {
    /// Elements and Hasse covers.
    Show { algebra: String },
    /// Check the Heyting algebra laws.
    Check { algebra: String },
    /// Homomorphisms from the first algebra to the second.
    Homs {
        source: String,
        target: String,
        #[arg(long, value_enum, default_value = "all")]
        mode: Mode,
        #[arg(long, default_value_t = 100)]
        cap: usize,
    },
    /// Subalgebras up to isomorphism.
    Subalgebras { algebra: String },
    /// Filters and the sizes of their quotients.
    Quotients { algebra: String },
    /// Subdirect embedding into the product of the factors.
    Subdirect {
        algebra: String,
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Direct product.
    Product {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Free algebra on k generators of the quasivariety generated by B.
    Free { generator: String, k: usize },
    /// Graphviz rendering of the algebra or, with `--frame`, its frame.
    Export {
        algebra: String,
        #[arg(long)]
        frame: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    All,
    First,
    Injective,
    Surjective,
    Bijective,
}

impl From<Mode> for HomMode {
    fn from(m: Mode) -> HomMode {
        match m {
            Mode::All => HomMode::All,
            Mode::First => HomMode::First,
            Mode::Injective => HomMode::Injective,
            Mode::Surjective => HomMode::Surjective,
            Mode::Bijective => HomMode::Bijective,
        }
    }
}

#[derive(Args, Debug)]
struct RuleArg {
    /// A library name (`mints`, `harrop`, `visser:N`, `mp`) or `A, B / C`.
    rule: String,
}

#[derive(Subcommand, Debug)]
enum LogicCmd {
    Valid {
        algebra: String,
        formula: String,
    },
    RuleValid {
        algebra: String,
        #[command(flatten)]
        rule: RuleArg,
    },
    /// Substitute into a rule and look for a counterexample to admissibility.
    InstanceCheck {
        algebra: String,
        #[command(flatten)]
        rule: RuleArg,
        /// `var=formula`, repeatable.
        #[arg(long = "sub")]
        subs: Vec<String>,
    },
    /// The formulas of `--gamma` are valid and the formula is refuted.
    Separates {
        algebra: String,
        formula: String,
        #[arg(long)]
        gamma: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum RulesCmd {
    Visser { n: usize },
    Mints,
    Harrop,
}

#[derive(Subcommand, Debug)]
enum QvarCmd {
    /// Whether A belongs to Q(B).
    Member { algebra: String, generator: String },
    Irreducible { algebra: String, generator: String },
    /// Weak projectivity of A in Q(B).
    Projective { algebra: String, generator: String },
    Tnp { algebra: String },
    Primitive { generator: String },
    ScPrimitive { generator: String },
    Free { generator: String, k: usize },
}

#[derive(Subcommand, Debug)]
enum JankovCmd {
    Formula { algebra: String },
    /// Validity of X(A) in B next to the quotient-sweep oracle.
    Check { algebra: String, target: String },
}

#[derive(Subcommand, Debug)]
enum ReproCmd {
    Run {
        #[arg(value_parser = ["tnp", "primitivity", "completions", "jankov", "all"])]
        suite: String,
        /// Also write the JSON report to this file.
        #[arg(long = "out")]
        out: Option<PathBuf>,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Reply {
    json: Value,
    text: String,
    dot: Option<String>,
    verdict: Option<Verdict>,
    /// Nonzero exit code for a decided but failing answer.
    failure: Option<i32>,
}

impl Reply {
    fn new(json: Value, text: impl Into<String>) -> Reply {
        Reply {
            json,
            text: text.into(),
            dot: None,
            verdict: None,
            failure: None,
        }
    }

    fn verdict(mut self, v: Verdict) -> Reply {
        self.verdict = Some(v);
        self
    }
}

fn algebra_json(a: &HeytingAlgebra) -> Value {
    serde_json::to_value(AlgebraFile::from(a)).expect("algebra serializes")
}

fn covers_text(a: &HeytingAlgebra) -> String {
    a.cover_pairs()
        .iter()
        .map(|(x, y)| format!("{x}<{y}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn rule_arg(text: &str) -> Result<Rule> {
    let name = match text {
        "mints" => Some(RuleName::Mints),
        "harrop" => Some(RuleName::Harrop),
        "mp" => Some(RuleName::ModusPonens),
        _ => match text.strip_prefix("visser:").map(str::parse::<usize>) {
            Some(Ok(n)) => Some(RuleName::Visser(n)),
            Some(Err(_)) => return Err(Error::InvalidArgument(format!("bad rule name `{text}`"))),
            None => None,
        },
    };
    match name {
        Some(n) => rule_library(n),
        None => parse_rule(text),
    }
}

fn validity_reply(v: &Validity, what: &str) -> Reply {
    let text = match v {
        Validity::Valid => format!("{what} is valid"),
        Validity::Refuted(w) => format!("{what} is refuted: {:?} gives {}", w.valuation, w.value),
    };
    let verdict = Verdict::from_bool(v.is_valid());
    let mut json = serde_json::to_value(v).expect("validity serializes");
    json["valid"] = json!(v.is_valid());
    Reply::new(json, text).verdict(verdict)
}

fn ctx_resolve(addr: &str, cfg: &Config) -> Result<HeytingAlgebra> {
    resolve(addr, &cfg.budgets)
}

fn qh(addr: &str, cfg: &Config) -> Result<QvarHandle> {
    QvarHandle::new(ctx_resolve(addr, cfg)?, cfg.budgets)
}

fn run_alg(cmd: AlgCmd, cfg: &Config) -> Result<Reply> {
    let b = &cfg.budgets;
    Ok(match cmd {
        AlgCmd::Show { algebra } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let mut json = algebra_json(&a);
            json["covers"] = json!(a.cover_pairs());
            let text = format!(
                "{} elements, bottom {}, top {}\ncovers: {}",
                a.len(),
                a.bot(),
                a.top(),
                covers_text(&a)
            );
            Reply::new(json, text)
        }
        AlgCmd::Check { algebra } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let report = a.validate();
            let passed = report.passed();
            let text = if passed {
                format!("{} elements: all laws hold", a.len())
            } else {
                let f = &report.failures[0];
                format!("fails {} at {:?}", f.law, f.witness)
            };
            let mut r = Reply::new(serde_json::to_value(&report)?, text);
            r.json["passed"] = json!(passed);
            if !passed {
                r.failure = Some(1);
            }
            r
        }
        AlgCmd::Homs {
            source,
            target,
            mode,
            cap,
        } => {
            let (a, t) = (ctx_resolve(&source, cfg)?, ctx_resolve(&target, cfg)?);
            let s = find_homs(&a, &t, mode.into(), cap, b.exec);
            let text = s
                .homs
                .iter()
                .map(|h| format!("{:?}", h.map))
                .chain(s.truncated.then(|| "...".to_string()))
                .collect::<Vec<_>>()
                .join("\n");
            let found = !s.homs.is_empty();
            Reply::new(serde_json::to_value(&s)?, if found { text } else { "none".into() })
                .verdict(Verdict::from_bool(found))
        }
        AlgCmd::Subalgebras { algebra } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let subs = subalgebras(&a, b.filter_cap)?;
            let rows: Vec<Value> = subs
                .iter()
                .map(|s| json!({"size": s.algebra.len(), "elements": s.elements()}))
                .collect();
            let text = subs
                .iter()
                .map(|s| format!("{:>3}: {:?}", s.algebra.len(), s.elements()))
                .collect::<Vec<_>>()
                .join("\n");
            Reply::new(json!(rows), text)
        }
        AlgCmd::Quotients { algebra } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let fs = filters(&a);
            let rows: Vec<Value> = fs
                .iter()
                .map(|f| json!({"generator": f.generator, "members": f.members, "quotient_size": quotient(&a, f).algebra.len()}))
                .collect();
            let text = fs
                .iter()
                .map(|f| format!("[{}) -> {} elements", f.generator, quotient(&a, f).algebra.len()))
                .collect::<Vec<_>>()
                .join("\n");
            Reply::new(json!(rows), text)
        }
        AlgCmd::Subdirect { algebra, factors } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let fs: Vec<HeytingAlgebra> = factors.iter().map(|f| ctx_resolve(f, cfg)).collect::<Result<_>>()?;
            let refs: Vec<&HeytingAlgebra> = fs.iter().collect();
            let s = subdirect_embedding_check(&a, &refs, b.algebra_cap)?;
            let json = match &s {
                Some(s) => json!({"verdict": "yes", "embedding": s.embedding, "components": s.components}),
                None => json!({"verdict": "no"}),
            };
            let text = match &s {
                Some(s) => format!("subdirect embedding {:?}", s.embedding.map),
                None => "no subdirect embedding".into(),
            };
            Reply::new(json, text).verdict(Verdict::from_bool(s.is_some()))
        }
        AlgCmd::Product { factors } => {
            let fs: Vec<HeytingAlgebra> = factors.iter().map(|f| ctx_resolve(f, cfg)).collect::<Result<_>>()?;
            let refs: Vec<&HeytingAlgebra> = fs.iter().collect();
            let p = hsc_core::algebra::product(&refs, b.algebra_cap)?;
            let text = format!("{} elements\ncovers: {}", p.algebra.len(), covers_text(&p.algebra));
            Reply::new(algebra_json(&p.algebra), text)
        }
        AlgCmd::Free { generator, k } => free_reply(&generator, k, cfg)?,
        AlgCmd::Export { algebra, frame } => {
            let (dot, json) = if frame {
                let p = resolve_frame(&algebra)?;
                let body: Value = serde_json::from_str(&poset_to_json(&p))?;
                (poset_dot(&p), json!({"frame": body}))
            } else {
                let a = ctx_resolve(&algebra, cfg)?;
                (algebra_dot(&a), json!({"algebra": algebra_json(&a)}))
            };
            let mut json = json;
            json["dot"] = json!(dot);
            let mut r = Reply::new(json, dot.trim_end().to_string());
            r.dot = Some(dot);
            r
        }
    })
}

fn free_reply(generator: &str, k: usize, cfg: &Config) -> Result<Reply> {
    let f = free_algebra(&qh(generator, cfg)?, k)?;
    let mut json = algebra_json(&f.algebra);
    json["generators"] = json!(f.generators);
    let text = format!("{} elements, generators {:?}", f.algebra.len(), f.generators);
    Ok(Reply::new(json, text))
}

fn run_logic(cmd: LogicCmd, cfg: &Config) -> Result<Reply> {
    let b = &cfg.budgets;
    Ok(match cmd {
        LogicCmd::Valid { algebra, formula } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let f = parse(&formula)?;
            validity_reply(&formula_valid(&a, &f, b)?, &f.to_string())
        }
        LogicCmd::RuleValid { algebra, rule } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let r = rule_arg(&rule.rule)?;
            validity_reply(&rule_valid(&a, &r, b)?, &r.to_string())
        }
        LogicCmd::InstanceCheck { algebra, rule, subs } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let r = rule_arg(&rule.rule)?;
            let mut s = Substitution::new();
            for item in &subs {
                let (var, f) = item
                    .split_once('=')
                    .ok_or_else(|| Error::InvalidArgument(format!("`{item}` is not var=formula")))?;
                s.insert(var.trim(), parse(f)?);
            }
            let c = instance_check(&a, &r, &s, b)?;
            let (text, found) = match &c {
                InstanceCheck::Counterexample { instance, witness } => (
                    format!("counterexample: {instance}\nconclusion refuted by {:?}", witness.valuation),
                    true,
                ),
                InstanceCheck::Inconclusive { instance, reason } => (format!("inconclusive: {instance}\n{reason}"), false),
            };
            Reply::new(serde_json::to_value(&c)?, text).verdict(Verdict::from_bool(found))
        }
        LogicCmd::Separates { algebra, formula, gamma } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let gs: Vec<Formula> = gamma.iter().map(|g| parse(g)).collect::<Result<_>>()?;
            let s = separates(&a, &gs, &parse(&formula)?, b)?;
            let v = Verdict::from_bool(s);
            Reply::new(json!({"verdict": v}), v.to_string()).verdict(v)
        }
    })
}

fn run_rules(cmd: RulesCmd) -> Result<Reply> {
    let r = match cmd {
        RulesCmd::Visser { n } => rule_library(RuleName::Visser(n))?,
        RulesCmd::Mints => rule_library(RuleName::Mints)?,
        RulesCmd::Harrop => rule_library(RuleName::Harrop)?,
    };
    let text = r.to_string();
    Ok(Reply::new(json!({"rule": text, "premises": r.premises().iter().map(|p| p.to_string()).collect::<Vec<_>>(), "conclusion": r.conclusion().to_string()}), text))
}

fn run_qvar(cmd: QvarCmd, cfg: &Config) -> Result<Reply> {
    let b = &cfg.budgets;
    Ok(match cmd {
        QvarCmd::Member { algebra, generator } => {
            let m = member(&ctx_resolve(&algebra, cfg)?, &qh(&generator, cfg)?)?;
            let text = match &m {
                Membership::Yes { separating } => format!("yes: {} separating homomorphisms", separating.len()),
                Membership::No { pair } => format!("no: every homomorphism identifies {} and {}", pair.0, pair.1),
            };
            Reply::new(serde_json::to_value(&m)?, text).verdict(Verdict::from_bool(m.is_member()))
        }
        QvarCmd::Irreducible { algebra, generator } => {
            let r = q_irreducible(&ctx_resolve(&algebra, cfg)?, &qh(&generator, cfg)?)?;
            let text = match &r {
                Irreducibility::Yes { witness } => format!("yes: every proper quotient in the quasivariety collapses {witness}"),
                Irreducibility::No { separating } => format!("no: quotients by {separating:?} separate points"),
            };
            Reply::new(serde_json::to_value(&r)?, text).verdict(Verdict::from_bool(r.is_irreducible()))
        }
        QvarCmd::Projective { algebra, generator } => {
            let p = weakly_projective(&ctx_resolve(&algebra, cfg)?, &qh(&generator, cfg)?)?;
            let text = format!("{}: {}", p.verdict(), projectivity_text(&p));
            Reply::new(serde_json::to_value(&p)?, text).verdict(p.verdict())
        }
        QvarCmd::Tnp { algebra } => {
            let t = totally_non_projective(&ctx_resolve(&algebra, cfg)?, b)?;
            let text = format!("{}: {}", t.verdict, projectivity_text(&t.projectivity));
            Reply::new(serde_json::to_value(&t)?, text).verdict(t.verdict)
        }
        QvarCmd::Primitive { generator } => {
            let r = primitive(&qh(&generator, cfg)?)?;
            let mut text = format!("{}: {} subalgebras, {} irreducible", r.verdict, r.subalgebras, r.irreducibles.len());
            for i in &r.irreducibles {
                text += &format!("\n  {:>3} {:?}: {}", i.size, i.elements, projectivity_text(&i.projectivity));
            }
            if let Some(d) = &r.detail {
                text += &format!("\n{d}");
            }
            let mut json = serde_json::to_value(&r)?;
            if let Some(i) = r.certificate {
                json["certificate"] = serde_json::to_value(&r.irreducibles[i])?;
            }
            Reply::new(json, text).verdict(r.verdict)
        }
        QvarCmd::ScPrimitive { generator } => {
            let r = sc_primitive_cyclic(&ctx_resolve(&generator, cfg)?, b)?;
            let text = format!(
                "{}: free algebra of {} elements{}",
                r.verdict,
                r.free_size.map_or("?".into(), |n| n.to_string()),
                r.detail.as_ref().map_or(String::new(), |d| format!("; {d}"))
            );
            Reply::new(serde_json::to_value(&r)?, text).verdict(r.verdict)
        }
        QvarCmd::Free { generator, k } => free_reply(&generator, k, cfg)?,
    })
}

fn projectivity_text(p: &hsc_core::quasivariety::Projectivity) -> String {
    use hsc_core::quasivariety::Projectivity;
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

fn run_jankov(cmd: JankovCmd, cfg: &Config) -> Result<Reply> {
    let b = &cfg.budgets;
    Ok(match cmd {
        JankovCmd::Formula { algebra } => {
            let j = jankov_formula(&ctx_resolve(&algebra, cfg)?)?;
            let text = j.formula.to_string();
            Reply::new(
                json!({"formula": text, "variables": j.variables, "omega": j.omega}),
                text,
            )
        }
        JankovCmd::Check { algebra, target } => {
            let a = ctx_resolve(&algebra, cfg)?;
            let t = ctx_resolve(&target, cfg)?;
            let j = jankov_formula(&a)?;
            let v = formula_valid(&t, &j.formula, b)?;
            let sh = in_sh(&a, &t, b)?;
            let agree = v.is_valid() == (sh.verdict == Verdict::No);
            let text = format!(
                "X(A) {} in B; A {} in SH(B); {}",
                if v.is_valid() { "valid" } else { "refuted" },
                if sh.verdict == Verdict::Yes { "is" } else { "is not" },
                if agree { "consistent" } else { "INCONSISTENT" }
            );
            let mut r = Reply::new(
                json!({"valid": v.is_valid(), "validity": v, "in_sh": sh, "consistent": agree}),
                text,
            )
            .verdict(Verdict::from_bool(v.is_valid()));
            if !agree {
                r.failure = Some(1);
            }
            r
        }
    })
}

fn run_repro_cmd(cmd: ReproCmd, cfg: &Config) -> Result<Reply> {
    let ReproCmd::Run { suite, out } = cmd;
    let suite: Suite = suite.parse()?;
    let report = run_repro(suite, &cfg.budgets)?;
    let json = serde_json::to_value(&report)?;
    if let Some(path) = out {
        fs::write(path, serde_json::to_string_pretty(&json)?)?;
    }
    let mut text = String::new();
    for c in &report.checks {
        text += &format!(
            "{:<15} {:<48} expected {:<15} computed {}\n",
            c.status.as_str(),
            c.name,
            c.expected.to_string(),
            c.computed.map_or("error".to_string(), |v| v.to_string())
        );
    }
    text += &format!(
        "{} green, {} red, {} exceeds-budget",
        report.count(hsc_core::repro::Status::Green),
        report.red(),
        report.count(hsc_core::repro::Status::ExceedsBudget)
    );
    let mut r = Reply::new(json, text);
    if report.red() > 0 {
        r.failure = Some(1);
    }
    Ok(r)
}

fn dispatch(cmd: Cmd, cfg: &Config) -> Result<Reply> {
    match cmd {
        Cmd::Alg(c) => run_alg(c, cfg),
        Cmd::Logic(c) => run_logic(c, cfg),
        Cmd::Rules(c) => run_rules(c),
        Cmd::Qvar(c) => run_qvar(c, cfg),
        Cmd::Jankov(c) => run_jankov(c, cfg),
        Cmd::Repro(c) => run_repro_cmd(c, cfg),
    }
}

fn error_output(e: &Error) -> Output {
    let code = if matches!(e, Error::Budget(_)) { 2 } else { 1 };
    Output {
        code,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

/// Parses `argv` (without the program name) and runs the command against
/// `cfg`; file and command-line flags override the configuration.
pub fn run_command(argv: &[String], cfg: &Config) -> Output {
    let cli = match Cli::try_parse_from(std::iter::once("hsc".to_string()).chain(argv.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Output {
                    code: 0,
                    stdout: shown,
                    stderr: String::new(),
                },
                _ => Output {
                    code: 1,
                    stdout: String::new(),
                    stderr: shown,
                },
            };
        }
    };
    let mut cfg = cfg.clone();
    if let Some(path) = &cli.config {
        match Config::load(Some(path), None) {
            Ok(c) => cfg = c,
            Err(e) => return error_output(&e),
        }
    }
    if let Some(f) = cli.format {
        cfg.format = f;
    }
    if cli.json {
        cfg.format = Format::Json;
    }
    if cli.sequential {
        cfg.budgets.exec = Exec::Sequential;
    }
    let reply = match dispatch(cli.cmd, &cfg) {
        Ok(r) => r,
        Err(e) => return error_output(&e),
    };
    let stdout = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&reply.json).expect("json renders") + "\n",
        Format::Dot => reply.dot.clone().unwrap_or_else(|| reply.text.clone() + "\n"),
        Format::Text => reply.text.clone() + "\n",
    };
    let code = match (reply.failure, reply.verdict) {
        (Some(c), _) => c,
        (None, Some(Verdict::ExceedsBudget)) => 2,
        _ => 0,
    };
    Output {
        code,
        stdout,
        stderr: String::new(),
    }
}

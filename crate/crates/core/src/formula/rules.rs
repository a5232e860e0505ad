use super::{Formula, Rule};
use crate::error::{Error, Result};

/// Named rule families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleName {
    /// `V_n`, n ≥ 1.
    Visser(usize),
    /// The generalized Mints rule, an instance of `V_1`.
    Mints,
    Harrop,
    ModusPonens,
}

fn v(name: &str) -> Formula {
    Formula::var(name)
}

fn indexed(prefix: &str, i: usize) -> Formula {
    Formula::var(format!("{prefix}{i}"))
}

/// `V_n`:  r ∨ (⋀ᵢ(pᵢ→qᵢ) → p_{n+1} ∨ p_{n+2})  /  r ∨ ⋁ⱼ (⋀ᵢ(pᵢ→qᵢ) → pⱼ),
/// with i ranging over 1..=n and j over 1..=n+2.
fn visser(n: usize) -> Rule {
    let guard = Formula::conj((1..=n).map(|i| Formula::imp(indexed("p", i), indexed("q", i))));
    let premise = Formula::or(
        v("r"),
        Formula::imp(
            guard.clone(),
            Formula::or(indexed("p", n + 1), indexed("p", n + 2)),
        ),
    );
    let conclusion = Formula::disj(
        std::iter::once(v("r"))
            .chain((1..=n + 2).map(|j| Formula::imp(guard.clone(), indexed("p", j)))),
    );
    Rule::new([premise], conclusion)
}

fn mints() -> Rule {
    let guard = Formula::imp(v("p1"), v("q"));
    let premise = Formula::or(
        v("r"),
        Formula::imp(guard.clone(), Formula::or(v("p1"), v("p2"))),
    );
    let conclusion = Formula::disj([
        v("r"),
        Formula::imp(guard.clone(), v("p1")),
        Formula::imp(guard, v("p2")),
    ]);
    Rule::new([premise], conclusion)
}

fn harrop() -> Rule {
    let np = Formula::not(v("p"));
    Rule::new(
        [Formula::imp(np.clone(), Formula::or(v("q"), v("r")))],
        Formula::or(Formula::imp(np.clone(), v("q")), Formula::imp(np, v("r"))),
    )
}

pub fn rule_library(name: RuleName) -> Result<Rule> {
    Ok(match name {
        RuleName::Visser(0) => {
            return Err(Error::InvalidArgument(
                "Visser rules are indexed from 1".into(),
            ))
        }
        RuleName::Visser(n) => visser(n),
        RuleName::Mints => mints(),
        RuleName::Harrop => harrop(),
        RuleName::ModusPonens => Rule::new([v("p"), Formula::imp(v("p"), v("q"))], v("q")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse, parse_rule, Substitution};

    #[test]
    fn mints_matches_displayed_rule() {
        let expected =
            parse_rule("r \\/ ((p1 -> q) -> p1 \\/ p2) / r \\/ ((p1 -> q) -> p1) \\/ ((p1 -> q) -> p2)")
                .unwrap();
        assert_eq!(rule_library(RuleName::Mints).unwrap(), expected);
    }

    #[test]
    fn visser_one_shape() {
        let r = rule_library(RuleName::Visser(1)).unwrap();
        assert_eq!(r.variables().len(), 5);
        assert_eq!(r.premises().len(), 1);
        // r followed by three implications
        let mut disjuncts = 0;
        let mut f = r.conclusion();
        while let Formula::Or(a, b) = f {
            assert!(matches!(**b, Formula::Imp(..)));
            disjuncts += 1;
            f = a;
        }
        assert_eq!(f, &v("r"));
        assert_eq!(disjuncts, 3);
        let expected = parse_rule(
            "r \\/ ((p1 -> q1) -> p2 \\/ p3) / r \\/ ((p1 -> q1) -> p1) \\/ ((p1 -> q1) -> p2) \\/ ((p1 -> q1) -> p3)",
        )
        .unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn visser_n_variable_count() {
        for n in 1..6 {
            let r = rule_library(RuleName::Visser(n)).unwrap();
            assert_eq!(r.variables().len(), 2 * n + 3);
        }
        assert!(rule_library(RuleName::Visser(0)).is_err());
    }

    #[test]
    fn modus_ponens_and_harrop() {
        assert_eq!(
            rule_library(RuleName::ModusPonens).unwrap(),
            parse_rule("p, p -> q / q").unwrap()
        );
        assert_eq!(
            rule_library(RuleName::Harrop).unwrap(),
            parse_rule("~p -> q \\/ r / (~p -> q) \\/ (~p -> r)").unwrap()
        );
    }

    #[test]
    fn mints_instance_premise() {
        let s = Substitution::new()
            .with("p1", parse("~~q").unwrap())
            .with("p2", parse("~q").unwrap())
            .with("r", parse("~~q -> q").unwrap());
        let inst = rule_library(RuleName::Mints).unwrap().substitute(&s);
        assert_eq!(
            inst.premises()[0],
            parse("(~~q -> q) \\/ ((~~q -> q) -> (~~q \\/ ~q))").unwrap()
        );
        assert_eq!(
            inst.conclusion(),
            &parse("(~~q -> q) \\/ ((~~q -> q) -> ~~q) \\/ ((~~q -> q) -> ~q)").unwrap()
        );
    }
}

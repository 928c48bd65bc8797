//! Loop resolvents for a sometime clause `C ⇒ ◇l` and a loop in `¬l`.

use super::loops::Loop;
use crate::engine::simplify;
use crate::formula::PropSymbol;
use crate::snf::{Conjunction, Disjunction, SnfClause, SometimeClause};

/// For each loop-formula disjunct `A_i`, in order: `start ⇒ ¬C ∨ l ∨ ¬A_i`
/// and `true ⇒ ○(¬C ∨ l ∨ ¬A_i)`; then `w ⇒ ○(l ∨ ¬A_i)` for each `A_i`.
/// Valid clauses are dropped.
pub fn loop_resolvents(sometime: &SometimeClause, lp: &Loop, w: &PropSymbol) -> Vec<SnfClause> {
    let l = Disjunction::new([sometime.eventuality.clone()]);
    let not_c = sometime.lhs.negated();
    let mut out = Vec::new();
    for a in &lp.loop_formula {
        let d = not_c.union(&l).union(&a.negated());
        out.push(SnfClause::initial(d.clone()));
        out.push(SnfClause::step(Conjunction::truth(), d));
    }
    for a in &lp.loop_formula {
        out.push(SnfClause::step(
            Conjunction::new([w.pos()]),
            l.union(&a.negated()),
        ));
    }
    out.into_iter().filter_map(simplify).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Literal;
    use crate::snf::text::parse_clause;

    fn lit(s: &str) -> Literal {
        match s.strip_prefix('~') {
            Some(n) => PropSymbol::user(n).neg(),
            None => PropSymbol::user(s).pos(),
        }
    }

    fn sometime(s: &str) -> SometimeClause {
        parse_clause(s).unwrap().as_sometime().unwrap().clone()
    }

    fn lp(l: &str, disjuncts: &[&[&str]]) -> Loop {
        Loop {
            members: Vec::new(),
            eventuality: lit(l),
            loop_formula: disjuncts
                .iter()
                .map(|c| Conjunction::new(c.iter().map(|s| lit(s))))
                .collect(),
        }
    }

    fn render(cs: Vec<SnfClause>) -> Vec<String> {
        cs.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn worked_example_resolvents() {
        let w = PropSymbol::infer("_w0");
        let got = render(loop_resolvents(
            &sometime("f => F ~p"),
            &lp("~p", &[&["a"], &["b"]]),
            &w,
        ));
        assert_eq!(
            got,
            [
                "start => ~a | ~f | ~p",
                "true => X (~a | ~f | ~p)",
                "start => ~b | ~f | ~p",
                "true => X (~b | ~f | ~p)",
                "_w0 => X (~a | ~p)",
                "_w0 => X (~b | ~p)",
            ]
        );
    }

    #[test]
    fn conjunctive_member() {
        let w = PropSymbol::infer("_w0");
        let got = render(loop_resolvents(
            &sometime("f => F p"),
            &lp("p", &[&["r", "u"]]),
            &w,
        ));
        assert_eq!(got[0], "start => ~f | p | ~r | ~u");
    }

    #[test]
    fn unconditional_sometime() {
        let w = PropSymbol::infer("_w0");
        let got = render(loop_resolvents(
            &sometime("true => F p"),
            &lp("p", &[&["q"]]),
            &w,
        ));
        assert_eq!(
            got,
            ["start => p | ~q", "true => X (p | ~q)", "_w0 => X (p | ~q)"]
        );
    }
}

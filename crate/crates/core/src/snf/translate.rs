//! Translation of arbitrary formulae into SNF by renaming.
//!
//! `tau0` anchors the formula to the first state with a fresh symbol and
//! then rewrites obligations `□(x ⇒ A)` one rule at a time until only
//! clauses remain. Obligations are processed first in, first out.

use std::collections::VecDeque;

use super::{ClauseSet, Conjunction, Disjunction, SnfClause};
use crate::error::{Error, Result};
use crate::formula::{Formula, Literal, Origin, PropSymbol, RENAMING_PREFIX};

/// An obligation `□(x ⇒ body)`.
pub type Obligation = (PropSymbol, Formula);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TranslationReport {
    pub input_len: usize,
    pub clause_count: usize,
    pub fresh_prop_count: usize,
}

/// Result of a single rewrite step.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Step {
    pub clauses: Vec<SnfClause>,
    pub obligations: Vec<Obligation>,
}

/// A translation session; owns the fresh-symbol counter.
#[derive(Debug, Default)]
pub struct Translator {
    counter: usize,
}

fn unit(x: &PropSymbol) -> Conjunction {
    Conjunction::new([x.pos()])
}

fn literal_formula(l: &Literal) -> Formula {
    l.to_formula()
}

/// Flattens nested disjunctions, left to right.
fn disjuncts(f: &Formula) -> Vec<&Formula> {
    fn walk<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
        match f {
            Formula::Or(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            other => out.push(other),
        }
    }
    let mut out = Vec::new();
    walk(f, &mut out);
    out
}

impl Translator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fresh_count(&self) -> usize {
        self.counter
    }

    pub fn fresh(&mut self) -> PropSymbol {
        let p = PropSymbol::new(format!("{RENAMING_PREFIX}{}", self.counter), Origin::Renaming);
        self.counter += 1;
        p
    }

    /// Applies exactly one rewrite rule to the obligation `□(x ⇒ body)`.
    pub fn tau1_step(&mut self, x: &PropSymbol, body: &Formula) -> Result<Step> {
        use Formula::*;
        let mut out = Step::default();
        let ob = |out: &mut Step, y: &PropSymbol, f: Formula| out.obligations.push((y.clone(), f));
        let not = Formula::not;

        // ~true and ~false become constants before dispatch.
        let body = match body {
            Not(inner) if **inner == True => &False,
            Not(inner) if **inner == False => &True,
            other => other,
        };

        if let Some(lits) = body.as_literal_disjunction() {
            let d = Disjunction::new(std::iter::once(x.neg()).chain(lits));
            out.clauses.push(SnfClause::initial(d.clone()));
            out.clauses.push(SnfClause::step(Conjunction::truth(), d));
            return Ok(out);
        }

        match body {
            True => {
                out.clauses.push(SnfClause::initial(Disjunction::valid()));
                out.clauses
                    .push(SnfClause::step(Conjunction::truth(), Disjunction::valid()));
            }
            False => {
                let d = Disjunction::new([x.neg()]);
                out.clauses.push(SnfClause::initial(d.clone()));
                out.clauses.push(SnfClause::step(Conjunction::truth(), d));
            }

            // Classical connectives.
            And(a, b) => {
                ob(&mut out, x, (**a).clone());
                ob(&mut out, x, (**b).clone());
            }
            Implies(a, b) => ob(&mut out, x, Formula::or(not((**a).clone()), (**b).clone())),
            Or(..) => {
                let parts = disjuncts(body);
                let pos = parts
                    .iter()
                    .position(|f| !f.is_literal())
                    .ok_or_else(|| Error::Internal("disjunction of literals not caught".into()))?;
                let y = self.fresh();
                let rebuilt = Formula::or_all(parts.iter().enumerate().map(|(i, f)| {
                    if i == pos {
                        Prop(y.clone())
                    } else {
                        (*f).clone()
                    }
                }));
                ob(&mut out, x, rebuilt);
                ob(&mut out, &y, parts[pos].clone());
            }

            // Temporal operators.
            Next(a) => {
                if let Some(lits) = a.as_literal_disjunction() {
                    out.clauses.push(SnfClause::step(unit(x), Disjunction::new(lits)));
                } else {
                    let y = self.fresh();
                    out.clauses
                        .push(SnfClause::step(unit(x), Disjunction::new([y.pos()])));
                    ob(&mut out, &y, (**a).clone());
                }
            }
            Always(a) => match a.as_literal() {
                Some(l) => {
                    let y = self.fresh();
                    ob(&mut out, x, literal_formula(&l));
                    ob(&mut out, x, Prop(y.clone()));
                    out.clauses
                        .push(SnfClause::step(unit(&y), Disjunction::new([l])));
                    out.clauses
                        .push(SnfClause::step(unit(&y), Disjunction::new([y.pos()])));
                }
                None => {
                    let y = self.fresh();
                    ob(&mut out, x, Formula::always(Prop(y.clone())));
                    ob(&mut out, &y, (**a).clone());
                }
            },
            Sometime(a) => match a.as_literal() {
                Some(l) => out.clauses.push(SnfClause::sometime(unit(x), l)),
                None => {
                    let y = self.fresh();
                    out.clauses.push(SnfClause::sometime(unit(x), y.pos()));
                    ob(&mut out, &y, (**a).clone());
                }
            },
            Until(a, b) | Unless(a, b) => {
                let until = matches!(body, Until(..));
                let rebuild = |l: Formula, r: Formula| {
                    if until {
                        Formula::until(l, r)
                    } else {
                        Formula::unless(l, r)
                    }
                };
                match (a.as_literal(), b.as_literal()) {
                    (None, _) => {
                        let y = self.fresh();
                        ob(&mut out, x, rebuild(Prop(y.clone()), (**b).clone()));
                        ob(&mut out, &y, (**a).clone());
                    }
                    (Some(_), None) => {
                        let y = self.fresh();
                        ob(&mut out, x, rebuild((**a).clone(), Prop(y.clone())));
                        ob(&mut out, &y, (**b).clone());
                    }
                    (Some(l), Some(m)) => {
                        let y = self.fresh();
                        if until {
                            out.clauses.push(SnfClause::sometime(unit(x), m.clone()));
                        }
                        ob(&mut out, x, Formula::or((**a).clone(), (**b).clone()));
                        ob(&mut out, x, Formula::or(Prop(y.clone()), (**b).clone()));
                        out.clauses.push(SnfClause::step(
                            unit(&y),
                            Disjunction::new([l, m.clone()]),
                        ));
                        out.clauses
                            .push(SnfClause::step(unit(&y), Disjunction::new([y.pos(), m])));
                    }
                }
            }

            Not(inner) => match inner.as_ref() {
                Not(a) => ob(&mut out, x, (**a).clone()),
                And(a, b) => ob(
                    &mut out,
                    x,
                    Formula::or(not((**a).clone()), not((**b).clone())),
                ),
                Implies(a, b) => {
                    ob(&mut out, x, (**a).clone());
                    ob(&mut out, x, not((**b).clone()));
                }
                Or(a, b) => {
                    ob(&mut out, x, not((**a).clone()));
                    ob(&mut out, x, not((**b).clone()));
                }
                Next(a) => match a.as_literal() {
                    Some(l) => out
                        .clauses
                        .push(SnfClause::step(unit(x), Disjunction::new([l.negate()]))),
                    None => {
                        let y = self.fresh();
                        out.clauses
                            .push(SnfClause::step(unit(x), Disjunction::new([y.pos()])));
                        ob(&mut out, &y, not((**a).clone()));
                    }
                },
                Always(a) => {
                    let y = self.fresh();
                    out.clauses.push(SnfClause::sometime(unit(x), y.pos()));
                    ob(&mut out, &y, not((**a).clone()));
                }
                Sometime(a) => {
                    let y = self.fresh();
                    ob(&mut out, x, Formula::always(Prop(y.clone())));
                    ob(&mut out, &y, not((**a).clone()));
                }
                Until(a, b) | Unless(a, b) => {
                    // ~(A U B) is ~B W (~A & ~B); y names ~B, z names ~A
                    // and v names y & z. Dually for W.
                    let y = self.fresh();
                    let v = self.fresh();
                    let z = self.fresh();
                    let (py, pv) = (Prop(y.clone()), Prop(v.clone()));
                    let outer = if matches!(inner.as_ref(), Until(..)) {
                        Formula::unless(py.clone(), pv)
                    } else {
                        Formula::until(py.clone(), pv)
                    };
                    ob(&mut out, x, outer);
                    ob(&mut out, &y, not((**b).clone()));
                    ob(&mut out, &v, Formula::and(py, Prop(z.clone())));
                    ob(&mut out, &z, not((**a).clone()));
                }
                True | False | Prop(_) | Start => {
                    return Err(Error::Internal(format!(
                        "no translation rule for `{body}`"
                    )))
                }
            },
            Prop(_) | Start => {
                return Err(Error::Internal(format!("no translation rule for `{body}`")))
            }
        }
        Ok(out)
    }

    /// Runs the work-list from `start ⇒ y`, `□(y ⇒ w)`.
    pub fn tau0(&mut self, w: &Formula) -> Result<(ClauseSet, TranslationReport)> {
        if w.contains_start() {
            return Err(Error::Internal("translation input contains `start`".into()));
        }
        let mut cs = ClauseSet::new();
        for p in w.symbols() {
            cs.add_symbol(p);
        }
        let y = self.fresh();
        let mut emitted = 1;
        cs.insert(SnfClause::initial(Disjunction::new([y.pos()])));
        let mut queue: VecDeque<Obligation> = VecDeque::from([(y, w.clone())]);
        while let Some((x, body)) = queue.pop_front() {
            let step = self.tau1_step(&x, &body)?;
            emitted += step.clauses.len();
            for c in step.clauses {
                cs.insert(c);
            }
            queue.extend(step.obligations);
        }
        cs.fresh_counter = self.counter;
        let report = TranslationReport {
            input_len: w.len(),
            clause_count: emitted,
            fresh_prop_count: self.counter,
        };
        Ok((cs, report))
    }
}

/// Translates `w` with a fresh session.
pub fn tau0(w: &Formula) -> Result<(ClauseSet, TranslationReport)> {
    Translator::new().tau0(w)
}

//! Step-resolution inference rules, simplification, subsumption and the
//! merged-clause combination.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::formula::{Literal, PropSymbol};
use crate::snf::{Conjunction, Disjunction, InitialClause, SnfClause, StepClause};

/// Splits two disjunctions on `pivot`: returns the pivot literal as it
/// occurs in `a`, provided its complement occurs in `b`.
fn pivot_literal(a: &Disjunction, b: &Disjunction, pivot: &PropSymbol) -> Result<Literal> {
    for l in [pivot.pos(), pivot.neg()] {
        if a.contains(&l) && b.contains(&l.negate()) {
            return Ok(l);
        }
    }
    Err(Error::PivotAbsent {
        pivot: pivot.name().to_string(),
    })
}

fn resolve_disjunctions(a: &Disjunction, b: &Disjunction, pivot: &PropSymbol) -> Result<Disjunction> {
    let l = pivot_literal(a, b, pivot)?;
    Ok(a.without(&l).union(&b.without(&l.negate())))
}

/// Symbols on which `a` and `b` can be resolved, in canonical order.
pub fn pivots(a: &Disjunction, b: &Disjunction) -> Vec<PropSymbol> {
    a.lits()
        .iter()
        .filter(|l| b.contains(&l.negate()))
        .map(|l| l.symbol().clone())
        .collect()
}

/// `start ⇒ A ∨ p`, `start ⇒ B ∨ ¬p` give `start ⇒ A ∨ B`.
pub fn initial_resolve(
    c1: &InitialClause,
    c2: &InitialClause,
    pivot: &PropSymbol,
) -> Result<InitialClause> {
    Ok(InitialClause {
        rhs: resolve_disjunctions(&c1.rhs, &c2.rhs, pivot)?,
    })
}

/// `C ⇒ ○(A ∨ p)`, `D ⇒ ○(B ∨ ¬p)` give `C ∧ D ⇒ ○(A ∨ B)`. The result
/// is not simplified; pass it through [`simplify`].
pub fn step_resolve(c1: &StepClause, c2: &StepClause, pivot: &PropSymbol) -> Result<StepClause> {
    Ok(StepClause {
        lhs: c1.lhs.union(&c2.lhs),
        rhs: resolve_disjunctions(&c1.rhs, &c2.rhs, pivot)?,
    })
}

/// `A ⇒ ○false` becomes `start ⇒ ¬A` and `true ⇒ ○¬A`.
pub fn rewrite_false(c: &StepClause) -> Result<(InitialClause, StepClause)> {
    if !c.rhs.is_empty() {
        return Err(Error::NonEmptyNext);
    }
    let neg = c.lhs.negated();
    Ok((
        InitialClause { rhs: neg.clone() },
        StepClause {
            lhs: Conjunction::truth(),
            rhs: neg,
        },
    ))
}

/// Contracts a clause; `None` means it is valid and can be dropped.
///
/// Literal sets are deduplicated on construction, so what remains is
/// detecting a false left side (complementary literals or `false`) and a
/// true right side (complementary literals or `true`).
pub fn simplify(c: SnfClause) -> Option<SnfClause> {
    let removed = match &c {
        SnfClause::Initial(i) => i.rhs.is_tautology(),
        SnfClause::Step(s) => {
            s.lhs.is_absurd() || s.lhs.has_complementary_pair() || s.rhs.is_tautology()
        }
        SnfClause::Sometime(s) => s.lhs.is_absurd() || s.lhs.has_complementary_pair(),
    };
    (!removed).then_some(c)
}

/// Whether `general` subsumes `specific`, i.e. `specific` may be deleted
/// in its presence. Decided by literal-set inclusion.
pub fn subsumes(general: &SnfClause, specific: &SnfClause) -> Result<bool> {
    use SnfClause::*;
    match (general, specific) {
        (Initial(a), Initial(b)) => Ok(a.rhs.is_subset_of(&b.rhs)),
        (Step(a), Step(b)) => Ok(a.lhs.is_subset_of(&b.lhs) && a.rhs.is_subset_of(&b.rhs)),
        (Sometime(a), Sometime(b)) if a.eventuality == b.eventuality => {
            Ok(a.lhs.is_subset_of(&b.lhs))
        }
        _ => Err(Error::KindMismatch(format!("`{general}` and `{specific}`"))),
    }
}

/// [`subsumes`], treating incompatible kinds as "no".
pub fn subsumes_compatible(general: &SnfClause, specific: &SnfClause) -> bool {
    subsumes(general, specific).unwrap_or(false)
}

/// A merged step clause `A ⇒ ○(B_1 ∧ … ∧ B_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MergedStepClause {
    pub lhs: Conjunction,
    pub rhs: BTreeSet<Disjunction>,
    /// Identifiers of the step clauses combined into this one.
    pub sources: BTreeSet<usize>,
}

impl MergedStepClause {
    pub fn from_step(c: &StepClause, id: usize) -> Self {
        let mut rhs = BTreeSet::new();
        if !c.rhs.is_tautology() {
            rhs.insert(c.rhs.clone());
        }
        MergedStepClause {
            lhs: c.lhs.clone(),
            rhs,
            sources: BTreeSet::from([id]),
        }
    }

    /// The ○-side has an empty disjunct, i.e. is unsatisfiable.
    pub fn rhs_is_false(&self) -> bool {
        self.rhs.iter().any(Disjunction::is_empty)
    }
}

/// `A ⇒ ○C`, `B ⇒ ○D` give `A ∧ B ⇒ ○(C ∧ D)`.
pub fn merge(c1: &MergedStepClause, c2: &MergedStepClause) -> MergedStepClause {
    MergedStepClause {
        lhs: c1.lhs.union(&c2.lhs),
        rhs: c1.rhs.union(&c2.rhs).cloned().collect(),
        sources: c1.sources.union(&c2.sources).copied().collect(),
    }
}

impl fmt::Display for MergedStepClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => X ", self.lhs)?;
        match self.rhs.len() {
            0 => f.write_str("true"),
            1 => {
                let d = self.rhs.iter().next().expect("one disjunct");
                if d.lits().len() > 1 {
                    write!(f, "({d})")
                } else {
                    write!(f, "{d}")
                }
            }
            _ => {
                f.write_str("(")?;
                for (i, d) in self.rhs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" & ")?;
                    }
                    if d.lits().len() > 1 {
                        write!(f, "({d})")?;
                    } else {
                        write!(f, "{d}")?;
                    }
                }
                f.write_str(")")
            }
        }
    }
}

//! Augmentation with waiting propositions.
//!
//! For each eventuality `l` a fresh `w_l` is introduced together with
//!
//! ```text
//! start => ~C | l | w_l        for every sometime clause C => F l
//! true  => X (~C | l | w_l)    likewise
//! w_l   => X (l | w_l)
//! ```
//!
//! so that temporal resolution never needs new symbols mid-proof.

use crate::formula::{Literal, Origin, PropSymbol, WAITING_PREFIX};
use crate::snf::{ClauseSet, Conjunction, Disjunction, SnfClause};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedClauseSet {
    pub base: ClauseSet,
    /// One waiting symbol per eventuality, in first-appearance order.
    pub waiting: Vec<(Literal, PropSymbol)>,
    /// Each clause added by augmentation, with the index in `base` of the
    /// sometime clause it was generated for.
    pub added: Vec<(SnfClause, usize)>,
}

impl AugmentedClauseSet {
    pub fn waiting_for(&self, l: &Literal) -> Option<&PropSymbol> {
        self.waiting.iter().find(|(m, _)| m == l).map(|(_, w)| w)
    }
}

fn waiting_clause(w: &PropSymbol, l: &Literal) -> SnfClause {
    SnfClause::step(
        Conjunction::new([w.pos()]),
        Disjunction::new([l.clone(), w.pos()]),
    )
}

/// An existing waiting symbol for `l`, recognised by its `w ⇒ ○(l ∨ w)` clause.
fn existing_waiting(cs: &ClauseSet, l: &Literal) -> Option<PropSymbol> {
    cs.universe()
        .iter()
        .filter(|p| p.origin() == Origin::Waiting)
        .find(|w| cs.contains(&waiting_clause(w, l)))
        .cloned()
}

pub fn augment(cs: &ClauseSet) -> AugmentedClauseSet {
    let mut base = cs.clone();
    let mut waiting = Vec::new();
    let mut added = Vec::new();
    let sometimes: Vec<(usize, Conjunction, Literal)> = cs
        .iter()
        .enumerate()
        .filter_map(|(i, c)| c.as_sometime().map(|s| (i, s.lhs.clone(), s.eventuality.clone())))
        .collect();
    let mut next = 0usize;
    for l in cs.eventualities() {
        let w = existing_waiting(cs, &l).unwrap_or_else(|| loop {
            let name = format!("{WAITING_PREFIX}{next}");
            next += 1;
            let w = PropSymbol::new(name.as_str(), Origin::Waiting);
            if !base.universe().contains(&w) {
                break w;
            }
        });
        base.add_symbol(w.clone());
        let mut first = None;
        for (i, lhs, _) in sometimes.iter().filter(|(_, _, m)| *m == l) {
            first.get_or_insert(*i);
            let d = lhs.negated().union(&Disjunction::new([l.clone(), w.pos()]));
            for c in [
                SnfClause::initial(d.clone()),
                SnfClause::step(Conjunction::truth(), d),
            ] {
                if base.insert(c.clone()) {
                    added.push((c, *i));
                }
            }
        }
        let c = waiting_clause(&w, &l);
        if base.insert(c.clone()) {
            added.push((c, first.expect("eventuality has a sometime clause")));
        }
        waiting.push((l, w));
    }
    AugmentedClauseSet {
        base,
        waiting,
        added,
    }
}

//! Separated normal form: initial, step and sometime clauses.

pub mod text;
pub mod translate;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::formula::{Formula, Literal, PropSymbol};

pub use translate::{tau0, TranslationReport, Translator};

fn canonical(lits: impl IntoIterator<Item = Literal>) -> Vec<Literal> {
    let mut v: Vec<Literal> = lits.into_iter().collect();
    v.sort();
    v.dedup();
    v
}

/// Sorted-subset test on canonical literal vectors.
pub(crate) fn is_subset(small: &[Literal], big: &[Literal]) -> bool {
    let mut it = big.iter();
    'outer: for l in small {
        for m in it.by_ref() {
            match m.cmp(l) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

fn has_complementary_pair(lits: &[Literal]) -> bool {
    // Canonical order puts ~p directly before p.
    lits.windows(2).any(|w| w[0].is_complement_of(&w[1]))
}

/// A conjunction of literals. Empty means `true`; `absurd` marks a
/// conjunction containing `false`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Conjunction {
    lits: Vec<Literal>,
    absurd: bool,
}

impl Conjunction {
    pub fn new(lits: impl IntoIterator<Item = Literal>) -> Self {
        Conjunction {
            lits: canonical(lits),
            absurd: false,
        }
    }

    pub fn truth() -> Self {
        Self::default()
    }

    pub fn falsity() -> Self {
        Conjunction {
            lits: Vec::new(),
            absurd: true,
        }
    }

    pub fn lits(&self) -> &[Literal] {
        &self.lits
    }

    pub fn is_true(&self) -> bool {
        !self.absurd && self.lits.is_empty()
    }

    pub fn is_absurd(&self) -> bool {
        self.absurd
    }

    pub fn has_complementary_pair(&self) -> bool {
        has_complementary_pair(&self.lits)
    }

    pub fn union(&self, other: &Conjunction) -> Conjunction {
        Conjunction {
            lits: canonical(self.lits.iter().chain(&other.lits).cloned()),
            absurd: self.absurd || other.absurd,
        }
    }

    /// `self ⊆ other` as literal sets, i.e. `other` syntactically implies `self`.
    pub fn is_subset_of(&self, other: &Conjunction) -> bool {
        (!self.absurd || other.absurd) && is_subset(&self.lits, &other.lits)
    }

    /// The disjunction of the negated literals.
    pub fn negated(&self) -> Disjunction {
        if self.absurd {
            return Disjunction::valid();
        }
        Disjunction::new(self.lits.iter().map(Literal::negate))
    }

    pub fn to_formula(&self) -> Formula {
        if self.absurd {
            return Formula::False;
        }
        Formula::and_all(self.lits.iter().map(Literal::to_formula))
    }

    pub fn holds_in(&self, v: &BTreeSet<PropSymbol>) -> bool {
        !self.absurd && self.lits.iter().all(|l| v.contains(l.symbol()) == l.is_positive())
    }
}

impl fmt::Display for Conjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.absurd {
            return f.write_str("false");
        }
        if self.lits.is_empty() {
            return f.write_str("true");
        }
        for (i, l) in self.lits.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A disjunction of literals. Empty means `false`; `valid` marks a
/// disjunction containing `true`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Disjunction {
    lits: Vec<Literal>,
    valid: bool,
}

impl Disjunction {
    pub fn new(lits: impl IntoIterator<Item = Literal>) -> Self {
        Disjunction {
            lits: canonical(lits),
            valid: false,
        }
    }

    pub fn falsity() -> Self {
        Self::default()
    }

    pub fn valid() -> Self {
        Disjunction {
            lits: Vec::new(),
            valid: true,
        }
    }

    pub fn lits(&self) -> &[Literal] {
        &self.lits
    }

    pub fn is_empty(&self) -> bool {
        !self.valid && self.lits.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.valid
    }

    pub fn is_tautology(&self) -> bool {
        self.valid || has_complementary_pair(&self.lits)
    }

    pub fn contains(&self, l: &Literal) -> bool {
        self.lits.binary_search(l).is_ok()
    }

    pub fn union(&self, other: &Disjunction) -> Disjunction {
        Disjunction {
            lits: canonical(self.lits.iter().chain(&other.lits).cloned()),
            valid: self.valid || other.valid,
        }
    }

    /// This disjunction with `l` removed.
    pub fn without(&self, l: &Literal) -> Disjunction {
        Disjunction {
            lits: self.lits.iter().filter(|m| *m != l).cloned().collect(),
            valid: self.valid,
        }
    }

    /// `self ⊆ other`, i.e. `self` syntactically implies `other`.
    pub fn is_subset_of(&self, other: &Disjunction) -> bool {
        other.valid || (!self.valid && is_subset(&self.lits, &other.lits))
    }

    pub fn to_formula(&self) -> Formula {
        if self.valid {
            return Formula::True;
        }
        Formula::or_all(self.lits.iter().map(Literal::to_formula))
    }

    pub fn holds_in(&self, v: &BTreeSet<PropSymbol>) -> bool {
        self.valid || self.lits.iter().any(|l| v.contains(l.symbol()) == l.is_positive())
    }
}

impl fmt::Display for Disjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.valid {
            return f.write_str("true");
        }
        if self.lits.is_empty() {
            return f.write_str("false");
        }
        for (i, l) in self.lits.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `start ⇒ rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InitialClause {
    pub rhs: Disjunction,
}

/// `lhs ⇒ ○rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StepClause {
    pub lhs: Conjunction,
    pub rhs: Disjunction,
}

/// `lhs ⇒ ◇eventuality`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SometimeClause {
    pub lhs: Conjunction,
    pub eventuality: Literal,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SnfClause {
    Initial(InitialClause),
    Step(StepClause),
    Sometime(SometimeClause),
}

impl SnfClause {
    pub fn initial(rhs: Disjunction) -> Self {
        SnfClause::Initial(InitialClause { rhs })
    }

    pub fn step(lhs: Conjunction, rhs: Disjunction) -> Self {
        SnfClause::Step(StepClause { lhs, rhs })
    }

    pub fn sometime(lhs: Conjunction, eventuality: Literal) -> Self {
        SnfClause::Sometime(SometimeClause { lhs, eventuality })
    }

    /// `start ⇒ false`.
    pub fn contradiction() -> Self {
        Self::initial(Disjunction::falsity())
    }

    pub fn is_contradiction(&self) -> bool {
        matches!(self, SnfClause::Initial(c) if c.rhs.is_empty())
    }

    pub fn as_step(&self) -> Option<&StepClause> {
        match self {
            SnfClause::Step(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_initial(&self) -> Option<&InitialClause> {
        match self {
            SnfClause::Initial(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_sometime(&self) -> Option<&SometimeClause> {
        match self {
            SnfClause::Sometime(c) => Some(c),
            _ => None,
        }
    }

    pub fn literals(&self) -> Vec<&Literal> {
        match self {
            SnfClause::Initial(c) => c.rhs.lits().iter().collect(),
            SnfClause::Step(c) => c.lhs.lits().iter().chain(c.rhs.lits()).collect(),
            SnfClause::Sometime(c) => c
                .lhs
                .lits()
                .iter()
                .chain(std::iter::once(&c.eventuality))
                .collect(),
        }
    }

    pub fn symbols(&self) -> impl Iterator<Item = &PropSymbol> {
        self.literals().into_iter().map(Literal::symbol)
    }

    /// The clause as a formula that must hold at every state.
    pub fn to_formula(&self) -> Formula {
        match self {
            SnfClause::Initial(c) => Formula::implies(Formula::Start, c.rhs.to_formula()),
            SnfClause::Step(c) => {
                Formula::implies(c.lhs.to_formula(), Formula::next(c.rhs.to_formula()))
            }
            SnfClause::Sometime(c) => Formula::implies(
                c.lhs.to_formula(),
                Formula::sometime(c.eventuality.to_formula()),
            ),
        }
    }
}

impl fmt::Display for StepClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let multi = !self.rhs.is_valid() && self.rhs.lits().len() > 1;
        if multi {
            write!(f, "{} => X ({})", self.lhs, self.rhs)
        } else {
            write!(f, "{} => X {}", self.lhs, self.rhs)
        }
    }
}

impl fmt::Display for SnfClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SnfClause::Initial(c) => write!(f, "start => {}", c.rhs),
            SnfClause::Step(c) => write!(f, "{c}"),
            SnfClause::Sometime(c) => write!(f, "{} => F {}", c.lhs, c.eventuality),
        }
    }
}

/// An insertion-ordered set of clauses with its symbol universe.
#[derive(Debug, Clone, Default)]
pub struct ClauseSet {
    clauses: Vec<SnfClause>,
    seen: HashSet<SnfClause>,
    universe: BTreeSet<PropSymbol>,
    /// Number of renaming symbols handed out so far.
    pub fresh_counter: usize,
}

impl PartialEq for ClauseSet {
    fn eq(&self, other: &Self) -> bool {
        self.clauses == other.clauses && self.universe == other.universe
    }
}

impl Eq for ClauseSet {}

impl ClauseSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_clauses(clauses: impl IntoIterator<Item = SnfClause>) -> Self {
        let mut cs = Self::new();
        for c in clauses {
            cs.insert(c);
        }
        cs
    }

    /// Adds a clause unless already present; returns whether it was new.
    pub fn insert(&mut self, c: SnfClause) -> bool {
        if self.seen.contains(&c) {
            return false;
        }
        self.universe.extend(c.symbols().cloned());
        self.seen.insert(c.clone());
        self.clauses.push(c);
        true
    }

    pub fn add_symbol(&mut self, p: PropSymbol) {
        self.universe.insert(p);
    }

    pub fn contains(&self, c: &SnfClause) -> bool {
        self.seen.contains(c)
    }

    pub fn clauses(&self) -> &[SnfClause] {
        &self.clauses
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SnfClause> {
        self.clauses.iter()
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn universe(&self) -> &BTreeSet<PropSymbol> {
        &self.universe
    }

    pub fn step_clauses(&self) -> impl Iterator<Item = &StepClause> {
        self.clauses.iter().filter_map(SnfClause::as_step)
    }

    pub fn sometime_clauses(&self) -> impl Iterator<Item = &SometimeClause> {
        self.clauses.iter().filter_map(SnfClause::as_sometime)
    }

    /// Distinct eventuality literals in order of first appearance.
    pub fn eventualities(&self) -> Vec<Literal> {
        let mut out: Vec<Literal> = Vec::new();
        for c in self.sometime_clauses() {
            if !out.contains(&c.eventuality) {
                out.push(c.eventuality.clone());
            }
        }
        out
    }

    /// The conjunction of all clauses as one formula (without the outer □).
    pub fn to_formula(&self) -> Formula {
        Formula::and_all(self.clauses.iter().map(SnfClause::to_formula))
    }
}

impl<'a> IntoIterator for &'a ClauseSet {
    type Item = &'a SnfClause;
    type IntoIter = std::slice::Iter<'a, SnfClause>;

    fn into_iter(self) -> Self::IntoIter {
        self.clauses.iter()
    }
}

impl fmt::Display for ClauseSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

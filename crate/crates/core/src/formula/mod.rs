//! PLTL abstract syntax: symbols, literals and formulae.
//!
//! The concrete syntax lives in [`parse`] and the printer in [`print`];
//! finitely presented models and their evaluation are in [`lasso`].

pub mod lasso;
pub mod parse;
pub mod print;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use lasso::{evaluate, LassoModel, Valuation};
pub use parse::parse;

/// Where a proposition symbol came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    User,
    /// Introduced by renaming during translation to clause form.
    Renaming,
    /// A waiting symbol introduced by augmentation.
    Waiting,
}

/// Prefix reserved for renaming symbols.
pub const RENAMING_PREFIX: &str = "_r";
/// Prefix reserved for waiting symbols.
pub const WAITING_PREFIX: &str = "_w";

/// A proposition symbol. Identity is the name; the origin is metadata.
#[derive(Clone)]
pub struct PropSymbol {
    name: Arc<str>,
    origin: Origin,
}

impl PropSymbol {
    pub fn new(name: impl AsRef<str>, origin: Origin) -> Self {
        PropSymbol {
            name: Arc::from(name.as_ref()),
            origin,
        }
    }

    pub fn user(name: impl AsRef<str>) -> Self {
        Self::new(name, Origin::User)
    }

    /// Builds a symbol, inferring the origin from the reserved prefixes.
    pub fn infer(name: impl AsRef<str>) -> Self {
        let name = name.as_ref();
        let origin = if name.starts_with(RENAMING_PREFIX) {
            Origin::Renaming
        } else if name.starts_with(WAITING_PREFIX) {
            Origin::Waiting
        } else {
            Origin::User
        };
        Self::new(name, origin)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn origin(&self) -> Origin {
        self.origin
    }

    pub fn pos(&self) -> Literal {
        Literal::new(self.clone(), true)
    }

    pub fn neg(&self) -> Literal {
        Literal::new(self.clone(), false)
    }
}

impl PartialEq for PropSymbol {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

impl Eq for PropSymbol {}

impl Hash for PropSymbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.name.hash(state)
    }
}

impl PartialOrd for PropSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PropSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.name.cmp(&other.name)
    }
}

impl fmt::Debug for PropSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

impl fmt::Display for PropSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// A proposition symbol or its negation. Ordered by (name, polarity),
/// negative before positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    symbol: PropSymbol,
    positive: bool,
}

impl Literal {
    pub fn new(symbol: PropSymbol, positive: bool) -> Self {
        Literal { symbol, positive }
    }

    pub fn symbol(&self) -> &PropSymbol {
        &self.symbol
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    pub fn negate(&self) -> Literal {
        Literal {
            symbol: self.symbol.clone(),
            positive: !self.positive,
        }
    }

    pub fn is_complement_of(&self, other: &Literal) -> bool {
        self.symbol == other.symbol && self.positive != other.positive
    }

    pub fn to_formula(&self) -> Formula {
        let p = Formula::Prop(self.symbol.clone());
        if self.positive {
            p
        } else {
            Formula::not(p)
        }
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.positive {
            f.write_str("~")?;
        }
        write!(f, "{}", self.symbol)
    }
}

/// A PLTL formula. `Start` is internal: it holds exactly at the first state
/// and never comes out of the parser.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    True,
    False,
    Prop(PropSymbol),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Next(Box<Formula>),
    Sometime(Box<Formula>),
    Always(Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
    Unless(Box<Formula>, Box<Formula>),
    Start,
}

#[allow(clippy::should_implement_trait)]
impl Formula {
    pub fn prop(name: &str) -> Formula {
        Formula::Prop(PropSymbol::user(name))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn next(f: Formula) -> Formula {
        Formula::Next(Box::new(f))
    }

    pub fn sometime(f: Formula) -> Formula {
        Formula::Sometime(Box::new(f))
    }

    pub fn always(f: Formula) -> Formula {
        Formula::Always(Box::new(f))
    }

    pub fn until(a: Formula, b: Formula) -> Formula {
        Formula::Until(Box::new(a), Box::new(b))
    }

    pub fn unless(a: Formula, b: Formula) -> Formula {
        Formula::Unless(Box::new(a), Box::new(b))
    }

    /// `a <-> b`, expanded the same way the parser does.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    /// Conjunction of a list, `true` when empty.
    pub fn and_all(items: impl IntoIterator<Item = Formula>) -> Formula {
        items
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::True)
    }

    /// Disjunction of a list, `false` when empty.
    pub fn or_all(items: impl IntoIterator<Item = Formula>) -> Formula {
        items
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::False)
    }

    /// The literal this formula denotes syntactically, if any.
    pub fn as_literal(&self) -> Option<Literal> {
        match self {
            Formula::Prop(p) => Some(p.pos()),
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Prop(p) => Some(p.neg()),
                _ => None,
            },
            _ => None,
        }
    }

    pub fn is_literal(&self) -> bool {
        self.as_literal().is_some()
    }

    /// Literals of a disjunction whose leaves are all literals; a lone
    /// literal counts as the one-element case.
    pub fn as_literal_disjunction(&self) -> Option<Vec<Literal>> {
        fn walk(f: &Formula, out: &mut Vec<Literal>) -> bool {
            match f {
                Formula::Or(a, b) => walk(a, out) && walk(b, out),
                other => match other.as_literal() {
                    Some(l) => {
                        out.push(l);
                        true
                    }
                    None => false,
                },
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out).then_some(out)
    }

    pub fn is_literal_disjunction(&self) -> bool {
        self.as_literal_disjunction().is_some()
    }

    pub fn contains_start(&self) -> bool {
        self.subformulae().any(|f| matches!(f, Formula::Start))
    }

    pub fn is_temporal_free(&self) -> bool {
        self.subformulae().all(|f| {
            !matches!(
                f,
                Formula::Next(_)
                    | Formula::Sometime(_)
                    | Formula::Always(_)
                    | Formula::Until(..)
                    | Formula::Unless(..)
                    | Formula::Start
            )
        })
    }

    fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::True | Formula::False | Formula::Prop(_) | Formula::Start => vec![],
            Formula::Not(a) | Formula::Next(a) | Formula::Sometime(a) | Formula::Always(a) => {
                vec![a]
            }
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Until(a, b)
            | Formula::Unless(a, b) => vec![a, b],
        }
    }

    /// Pre-order traversal of all subformulae, including `self`.
    pub fn subformulae(&self) -> impl Iterator<Item = &Formula> {
        let mut stack = vec![self];
        std::iter::from_fn(move || {
            let f = stack.pop()?;
            stack.extend(f.children().into_iter().rev());
            Some(f)
        })
    }

    pub fn node_count(&self) -> usize {
        self.subformulae().count()
    }

    pub fn symbols(&self) -> BTreeSet<PropSymbol> {
        self.subformulae()
            .filter_map(|f| match f {
                Formula::Prop(p) => Some(p.clone()),
                _ => None,
            })
            .collect()
    }

    /// The recursive length measure used by the translation bounds.
    ///
    /// Literals, literal disjunctions, constants (possibly negated),
    /// `F l` and `X` of a literal disjunction all have length 1. A double
    /// negation has the length of its body.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        use Formula::*;
        if self.is_literal_disjunction() {
            return 1;
        }
        match self {
            True | False | Start => 1,
            Prop(_) => 1,
            Sometime(a) if a.is_literal() => 1,
            Next(a) if a.is_literal_disjunction() => 1,
            Always(a) | Sometime(a) | Next(a) => 1 + a.len(),
            Until(a, b) | Unless(a, b) | Or(a, b) | And(a, b) => 1 + a.len() + b.len(),
            Implies(a, b) => 1 + negated(a).len() + b.len(),
            Not(inner) => match inner.as_ref() {
                True | False | Start | Prop(_) => 1,
                Not(a) => a.len(),
                Always(a) | Sometime(a) | Next(a) => 1 + negated(a).len(),
                Until(a, b) | Unless(a, b) | Or(a, b) | And(a, b) => {
                    1 + negated(a).len() + negated(b).len()
                }
                Implies(a, b) => 1 + a.len() + negated(b).len(),
            },
        }
    }
}

fn negated(f: &Formula) -> Formula {
    Formula::not(f.clone())
}

/// Structural negation, used to turn a validity question into a
/// satisfiability one.
pub fn negate(f: &Formula) -> Formula {
    Formula::not(f.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::prop("p")
    }
    fn q() -> Formula {
        Formula::prop("q")
    }

    #[test]
    fn negation_of_literals_is_an_involution() {
        let l = PropSymbol::user("a").pos();
        assert_eq!(l.negate().negate(), l);
        assert!(l.is_complement_of(&l.negate()));
        assert!(!l.is_complement_of(&l));
    }

    #[test]
    fn symbol_identity_is_the_name() {
        assert_eq!(
            PropSymbol::new("x", Origin::User),
            PropSymbol::new("x", Origin::Renaming)
        );
        assert_eq!(PropSymbol::infer("_r3").origin(), Origin::Renaming);
        assert_eq!(PropSymbol::infer("_w0").origin(), Origin::Waiting);
        assert_eq!(PropSymbol::infer("abc").origin(), Origin::User);
    }

    #[test]
    fn literal_order_is_name_then_polarity() {
        let a = PropSymbol::user("a");
        let b = PropSymbol::user("b");
        let mut v = vec![b.pos(), a.pos(), b.neg(), a.neg()];
        v.sort();
        assert_eq!(v, vec![a.neg(), a.pos(), b.neg(), b.pos()]);
    }

    #[test]
    fn len_base_cases() {
        assert_eq!(Formula::or(p(), q()).len(), 1);
        assert_eq!(Formula::sometime(Formula::not(p())).len(), 1);
        assert_eq!(Formula::True.len(), 1);
        assert_eq!(Formula::not(Formula::False).len(), 1);
        assert_eq!(Formula::next(Formula::or(p(), Formula::not(q()))).len(), 1);
        assert_eq!(p().len(), 1);
        assert_eq!(Formula::not(p()).len(), 1);
    }

    #[test]
    fn len_of_always_step() {
        // 1 + (1 + len(~p) + len(X p))
        let f = Formula::always(Formula::implies(p(), Formula::next(p())));
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn len_negated_operators() {
        let f = Formula::not(Formula::until(p(), q()));
        assert_eq!(f.len(), 3);
        let g = Formula::not(Formula::always(Formula::and(p(), q())));
        // 1 + len(~(p & q)) = 1 + (1 + 1 + 1)
        assert_eq!(g.len(), 4);
        assert_eq!(Formula::not(Formula::not(p())).len(), 1);
        assert_eq!(Formula::not(Formula::implies(p(), q())).len(), 3);
    }

    #[test]
    fn literal_disjunction_detection() {
        let d = Formula::or(Formula::or(p(), Formula::not(q())), p());
        assert_eq!(d.as_literal_disjunction().map(|v| v.len()), Some(3));
        assert!(!Formula::or(p(), Formula::True).is_literal_disjunction());
        assert!(p().is_literal_disjunction());
    }

    #[test]
    fn negate_is_structural() {
        assert_eq!(negate(&p()), Formula::not(p()));
        assert_eq!(negate(&Formula::True), Formula::not(Formula::True));
        let g = Formula::always(Formula::prop("a"));
        assert_eq!(negate(&g), Formula::not(g.clone()));
    }

    #[test]
    fn node_count_and_symbols() {
        let f = Formula::until(p(), Formula::not(q()));
        assert_eq!(f.node_count(), 4);
        assert_eq!(f.symbols().len(), 2);
        assert!(!f.contains_start());
        assert!(Formula::and(Formula::Start, p()).contains_start());
    }
}

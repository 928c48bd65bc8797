//! Propositional entailment by exhaustive enumeration of valuations.
//!
//! A [`ModelSpace`] fixes a list of symbols and represents a propositional
//! formula by the bitset of valuations (over those symbols) satisfying it.
//! Valuation `v` assigns symbol `i` the value of bit `i` of `v`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::formula::{Formula, Literal, PropSymbol};
use crate::snf::{Conjunction, Disjunction};

pub const DEFAULT_ENTAILMENT_CAP: usize = 20;

/// A set of valuations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Models(Vec<u64>);

impl Models {
    pub fn is_subset_of(&self, other: &Models) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn and_assign(&mut self, other: &Models) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
    }

    pub fn or_assign(&mut self, other: &Models) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }
}

#[derive(Debug, Clone)]
pub struct ModelSpace {
    symbols: Vec<PropSymbol>,
    /// Mask of the valid bits in each word (all ones unless fewer than 64
    /// valuations exist).
    mask: u64,
    words: usize,
    positive: Vec<Models>,
}

impl ModelSpace {
    pub fn new(symbols: impl IntoIterator<Item = PropSymbol>, cap: usize) -> Result<Self> {
        let symbols: Vec<PropSymbol> = symbols
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let n = symbols.len();
        if n > cap {
            return Err(Error::EntailmentCapExceeded { symbols: n, cap });
        }
        let (words, mask) = if n >= 6 {
            (1usize << (n - 6), u64::MAX)
        } else {
            (1, (1u64 << (1u32 << n)) - 1)
        };
        let positive = (0..n)
            .map(|i| {
                Models(
                    (0..words)
                        .map(|w| {
                            if i < 6 {
                                // Within a word, bit b is valuation 64w + b.
                                let mut pat = 0u64;
                                for b in 0..64 {
                                    if (b >> i) & 1 == 1 {
                                        pat |= 1 << b;
                                    }
                                }
                                pat & mask
                            } else if (w >> (i - 6)) & 1 == 1 {
                                u64::MAX
                            } else {
                                0
                            }
                        })
                        .collect(),
                )
            })
            .collect();
        Ok(ModelSpace {
            symbols,
            mask,
            words,
            positive,
        })
    }

    pub fn symbols(&self) -> &[PropSymbol] {
        &self.symbols
    }

    pub fn all(&self) -> Models {
        Models(vec![self.mask; self.words])
    }

    pub fn none(&self) -> Models {
        Models(vec![0; self.words])
    }

    pub fn complement(&self, m: &Models) -> Models {
        Models(m.0.iter().map(|w| !w & self.mask).collect())
    }

    fn index(&self, p: &PropSymbol) -> Result<usize> {
        self.symbols
            .binary_search(p)
            .map_err(|_| Error::Internal(format!("symbol `{p}` outside the model space")))
    }

    pub fn literal(&self, l: &Literal) -> Result<Models> {
        let m = &self.positive[self.index(l.symbol())?];
        Ok(if l.is_positive() {
            m.clone()
        } else {
            self.complement(m)
        })
    }

    pub fn conjunction(&self, c: &Conjunction) -> Result<Models> {
        if c.is_absurd() {
            return Ok(self.none());
        }
        let mut m = self.all();
        for l in c.lits() {
            m.and_assign(&self.literal(l)?);
        }
        Ok(m)
    }

    pub fn disjunction(&self, d: &Disjunction) -> Result<Models> {
        if d.is_valid() {
            return Ok(self.all());
        }
        let mut m = self.none();
        for l in d.lits() {
            m.or_assign(&self.literal(l)?);
        }
        Ok(m)
    }

    pub fn cnf<'a>(&self, ds: impl IntoIterator<Item = &'a Disjunction>) -> Result<Models> {
        let mut m = self.all();
        for d in ds {
            m.and_assign(&self.disjunction(d)?);
        }
        Ok(m)
    }

    pub fn dnf<'a>(&self, cs: impl IntoIterator<Item = &'a Conjunction>) -> Result<Models> {
        let mut m = self.none();
        for c in cs {
            m.or_assign(&self.conjunction(c)?);
        }
        Ok(m)
    }

    pub fn formula(&self, f: &Formula) -> Result<Models> {
        let bin = |a: &Formula, b: &Formula, op: fn(u64, u64) -> u64| -> Result<Models> {
            let (x, y) = (self.formula(a)?, self.formula(b)?);
            Ok(Models(
                x.0.iter().zip(&y.0).map(|(p, q)| op(*p, *q) & self.mask).collect(),
            ))
        };
        match f {
            Formula::True => Ok(self.all()),
            Formula::False => Ok(self.none()),
            Formula::Prop(p) => Ok(self.positive[self.index(p)?].clone()),
            Formula::Not(a) => Ok(self.complement(&self.formula(a)?)),
            Formula::And(a, b) => bin(a, b, |p, q| p & q),
            Formula::Or(a, b) => bin(a, b, |p, q| p | q),
            Formula::Implies(a, b) => bin(a, b, |p, q| !p | q),
            _ => Err(Error::NotPropositional(f.to_string())),
        }
    }
}

/// Whether every valuation satisfying `hypothesis` satisfies `conclusion`.
pub fn propositional_entails(hypothesis: &Formula, conclusion: &Formula) -> Result<bool> {
    propositional_entails_capped(hypothesis, conclusion, DEFAULT_ENTAILMENT_CAP)
}

pub fn propositional_entails_capped(
    hypothesis: &Formula,
    conclusion: &Formula,
    cap: usize,
) -> Result<bool> {
    for f in [hypothesis, conclusion] {
        if !f.is_temporal_free() {
            return Err(Error::NotPropositional(f.to_string()));
        }
    }
    let symbols = hypothesis.symbols().into_iter().chain(conclusion.symbols());
    let space = ModelSpace::new(symbols, cap)?;
    Ok(space
        .formula(hypothesis)?
        .is_subset_of(&space.formula(conclusion)?))
}

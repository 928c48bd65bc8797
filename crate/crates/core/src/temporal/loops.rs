//! Loop detection for temporal resolution.
//!
//! A loop in `¬l` is a set of merged step clauses `A_i ⇒ ○B_i` with every
//! `B_i ⊨ ¬l` and every `B_i ⊨ ⋁_j A_j`. Both searches below compute the
//! greatest such set over a candidate pool by repeatedly deleting members
//! that violate a side condition.

use std::collections::{BTreeSet, HashSet};

use super::entail::{ModelSpace, Models, DEFAULT_ENTAILMENT_CAP};
use crate::engine::{merge, MergedStepClause};
use crate::error::{Error, Result};
use crate::formula::{Literal, PropSymbol};
use crate::par::Exec;
use crate::snf::{Conjunction, Disjunction, StepClause};

pub const DEFAULT_LOOP_WIDTH: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LoopConfig {
    pub max_width: usize,
    pub max_entail_symbols: usize,
    pub exec: Exec,
}

impl Default for LoopConfig {
    fn default() -> Self {
        LoopConfig {
            max_width: DEFAULT_LOOP_WIDTH,
            max_entail_symbols: DEFAULT_ENTAILMENT_CAP,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    pub members: Vec<MergedStepClause>,
    /// The literal whose eventuality the loop resolves against; the loop
    /// itself is in its complement.
    pub eventuality: Literal,
    /// Disjuncts of the loop formula: the subset-minimal left-hand sides.
    pub loop_formula: Vec<Conjunction>,
}

impl Loop {
    fn from_members(members: Vec<MergedStepClause>, eventuality: Literal) -> Self {
        let lhs: BTreeSet<&Conjunction> = members.iter().map(|m| &m.lhs).collect();
        let loop_formula = lhs
            .iter()
            .filter(|a| !lhs.iter().any(|b| b != *a && b.is_subset_of(a)))
            .map(|a| (*a).clone())
            .collect();
        Loop {
            members,
            eventuality,
            loop_formula,
        }
    }

    /// Ids of the step clauses merged into the members.
    pub fn sources(&self) -> BTreeSet<usize> {
        self.members.iter().flat_map(|m| m.sources.iter().copied()).collect()
    }
}

fn symbols_of<'a>(
    clauses: impl IntoIterator<Item = &'a StepClause>,
    l: &Literal,
) -> BTreeSet<PropSymbol> {
    let mut out: BTreeSet<PropSymbol> = clauses
        .into_iter()
        .flat_map(|c| c.lhs.lits().iter().chain(c.rhs.lits()))
        .map(|x| x.symbol().clone())
        .collect();
    out.insert(l.symbol().clone());
    out
}

fn rhs_models(space: &ModelSpace, rhs: &BTreeSet<Disjunction>) -> Result<Models> {
    space.cnf(rhs)
}

/// Steps 2 to 4 of the naive algorithm over a candidate pool: keeps the
/// indices of the greatest subset satisfying both side conditions.
fn greatest_loop(
    space: &ModelSpace,
    lhs: &[Models],
    rhs: &[Models],
    not_l: &Models,
    exec: Exec,
) -> Vec<usize> {
    let idx: Vec<usize> = (0..rhs.len()).collect();
    let mut alive: Vec<usize> = exec
        .filter_indices(&idx, |&i| rhs[i].is_subset_of(not_l))
        .into_iter()
        .map(|k| idx[k])
        .collect();
    loop {
        let mut cover = space.none();
        for &i in &alive {
            cover.or_assign(&lhs[i]);
        }
        let keep = exec.filter_indices(&alive, |&i| rhs[i].is_subset_of(&cover));
        if keep.len() == alive.len() {
            return alive;
        }
        alive = keep.into_iter().map(|k| alive[k]).collect();
    }
}

/// The naive loop search: merges every nonempty subset of `steps`, then
/// deletes members violating the side conditions until none remain to
/// delete. Returns the maximal loop, or `None` if it is empty.
pub fn find_loops(steps: &[(usize, StepClause)], l: &Literal, cfg: &LoopConfig) -> Result<Option<Loop>> {
    let n = steps.len();
    if n > cfg.max_width {
        return Err(Error::LoopWidthExceeded {
            width: n,
            cap: cfg.max_width,
        });
    }
    if n == 0 {
        return Ok(None);
    }
    let singles: Vec<MergedStepClause> = steps
        .iter()
        .map(|(id, c)| MergedStepClause::from_step(c, *id))
        .collect();
    // Subsets by size, then numerically, so duplicates keep their smallest
    // source set.
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let merged: Vec<MergedStepClause> = cfg.exec.map(&masks, |&m| {
        let mut it = (0..n).filter(|i| m >> i & 1 == 1);
        let first = singles[it.next().expect("nonempty subset")].clone();
        it.fold(first, |acc, i| merge(&acc, &singles[i]))
    });
    // An inconsistent left side holds nowhere and would only add a vacuous
    // disjunct to the loop formula.
    let mut seen = HashSet::new();
    let pool: Vec<MergedStepClause> = merged
        .into_iter()
        .filter(|m| !m.lhs.is_absurd() && !m.lhs.has_complementary_pair())
        .filter(|m| seen.insert((m.lhs.clone(), m.rhs.clone())))
        .collect();

    let space = ModelSpace::new(
        symbols_of(steps.iter().map(|(_, c)| c), l),
        cfg.max_entail_symbols,
    )?;
    let lhs = cfg
        .exec
        .map(&pool, |m| space.conjunction(&m.lhs))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let rhs = cfg
        .exec
        .map(&pool, |m| rhs_models(&space, &m.rhs))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let not_l = space.literal(&l.negate())?;
    let alive = greatest_loop(&space, &lhs, &rhs, &not_l, cfg.exec);
    if alive.is_empty() {
        return Ok(None);
    }
    let members = alive.into_iter().map(|i| pool[i].clone()).collect();
    Ok(Some(Loop::from_members(members, l.clone())))
}

/// Loop search used by the prover.
///
/// Instead of every subset of step clauses, the candidates are the
/// consistent unions `X` of distinct left-hand sides, each merged with
/// every step clause whose left side is contained in `X`. Any member of a
/// loop found by [`find_loops`] is implied by the candidate with the same
/// left side, so both searches yield the same loop formula. At most
/// `2^max_width - 1` candidates are considered.
///
/// The returned members are the minimal ones, each reduced to a smallest
/// set of source clauses (greedily, in ascending id order) that still meets
/// the side conditions.
pub fn search_loop(steps: &[(usize, StepClause)], l: &Literal, cfg: &LoopConfig) -> Result<Option<Loop>> {
    let budget = (1usize << cfg.max_width.min(usize::BITS as usize - 1)) - 1;
    let bases: BTreeSet<Conjunction> = steps
        .iter()
        .map(|(_, c)| c.lhs.clone())
        .filter(|a| !a.is_absurd() && !a.has_complementary_pair())
        .collect();
    let mut candidates: BTreeSet<Conjunction> = bases.clone();
    let mut frontier: Vec<Conjunction> = bases.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for b in &bases {
                let u = x.union(b);
                if !u.has_complementary_pair() && !candidates.contains(&u) {
                    candidates.insert(u.clone());
                    next.push(u);
                }
            }
            if candidates.len() > budget {
                return Err(Error::LoopWidthExceeded {
                    width: candidates.len(),
                    cap: cfg.max_width,
                });
            }
        }
        frontier = next;
    }
    let candidates: Vec<Conjunction> = candidates.into_iter().collect();
    if candidates.is_empty() {
        return Ok(None);
    }

    let space = ModelSpace::new(
        symbols_of(steps.iter().map(|(_, c)| c), l),
        cfg.max_entail_symbols,
    )?;
    let step_rhs = steps
        .iter()
        .map(|(_, c)| space.disjunction(&c.rhs))
        .collect::<Result<Vec<_>>>()?;
    let within = |x: &Conjunction| -> Vec<usize> {
        (0..steps.len())
            .filter(|&i| steps[i].1.lhs.is_subset_of(x))
            .collect()
    };
    let conj_models = |idx: &[usize]| -> Models {
        let mut m = space.all();
        for &i in idx {
            m.and_assign(&step_rhs[i]);
        }
        m
    };
    let lhs = cfg
        .exec
        .map(&candidates, |x| space.conjunction(x))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let rhs = cfg.exec.map(&candidates, |x| conj_models(&within(x)));
    let not_l = space.literal(&l.negate())?;
    let alive = greatest_loop(&space, &lhs, &rhs, &not_l, cfg.exec);
    if alive.is_empty() {
        return Ok(None);
    }

    let minimal: Vec<usize> = alive
        .iter()
        .copied()
        .filter(|&i| {
            !alive
                .iter()
                .any(|&j| j != i && candidates[j].is_subset_of(&candidates[i]))
        })
        .collect();
    let mut cover = space.none();
    for &i in &minimal {
        cover.or_assign(&lhs[i]);
    }
    let target = {
        let mut t = cover;
        t.and_assign(&not_l);
        t
    };
    let members = cfg.exec.map(&minimal, |&i| {
        let x = &candidates[i];
        let mut keep = within(x);
        let mut k = 0;
        while k < keep.len() {
            let mut trial = keep.clone();
            trial.remove(k);
            let lhs_union = trial
                .iter()
                .fold(Conjunction::truth(), |acc, &j| acc.union(&steps[j].1.lhs));
            if lhs_union == *x && conj_models(&trial).is_subset_of(&target) {
                keep = trial;
            } else {
                k += 1;
            }
        }
        let mut it = keep.iter().map(|&j| MergedStepClause::from_step(&steps[j].1, steps[j].0));
        let first = it.next().unwrap_or_else(|| MergedStepClause {
            lhs: Conjunction::truth(),
            rhs: BTreeSet::new(),
            sources: BTreeSet::new(),
        });
        it.fold(first, |acc, m| merge(&acc, &m))
    });
    Ok(Some(Loop::from_members(members, l.clone())))
}

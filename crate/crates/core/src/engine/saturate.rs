//! Step-resolution saturation with a batched given-clause loop.
//!
//! Each round takes the whole passive list, in insertion order, as the
//! given clauses. A given clause is resolved against every active clause
//! and against the given clauses before it in the same batch. Resolvents
//! are then admitted one by one in generation order: simplified, checked
//! for forward subsumption by any live clause, and used to delete the live
//! clauses they subsume. Candidate generation for a batch may run in
//! parallel; admission is always sequential, so the outcome does not
//! depend on the execution strategy.

use super::rules::{
    initial_resolve, pivots, rewrite_false, simplify, step_resolve, subsumes_compatible,
};
use super::trace::{Rule, Trace};
use crate::par::Exec;
use crate::snf::{ClauseSet, Conjunction, SnfClause};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Refuted,
    Saturated,
}

#[derive(Debug, Clone)]
pub struct SaturationResult {
    pub status: Status,
    pub final_set: ClauseSet,
    pub trace: Trace,
}

type Candidate = (SnfClause, Rule, [usize; 2]);

#[derive(Debug, Clone)]
pub struct Saturator {
    trace: Trace,
    alive: Vec<bool>,
    active: Vec<usize>,
    passive: Vec<usize>,
    refutation: Option<usize>,
    exec: Exec,
    /// Resolvents produced, before simplification and subsumption.
    pub generated: usize,
}

/// All resolvents of `a` and `b`, one per pivot.
fn resolvents(a: &SnfClause, ia: usize, b: &SnfClause, ib: usize, out: &mut Vec<Candidate>) {
    match (a, b) {
        (SnfClause::Initial(x), SnfClause::Initial(y)) => {
            for p in pivots(&x.rhs, &y.rhs) {
                let r = initial_resolve(x, y, &p).expect("pivot occurs in both");
                out.push((SnfClause::Initial(r), Rule::InitialRes, [ia, ib]));
            }
        }
        (SnfClause::Step(x), SnfClause::Step(y)) => {
            for p in pivots(&x.rhs, &y.rhs) {
                let r = step_resolve(x, y, &p).expect("pivot occurs in both");
                out.push((SnfClause::Step(r), Rule::StepRes, [ia, ib]));
            }
        }
        _ => {}
    }
}

impl Saturator {
    pub fn new(exec: Exec) -> Self {
        Saturator {
            trace: Trace::new(),
            alive: Vec::new(),
            active: Vec::new(),
            passive: Vec::new(),
            refutation: None,
            exec,
            generated: 0,
        }
    }

    pub fn trace(&self) -> &Trace {
        &self.trace
    }

    pub fn into_trace(self) -> Trace {
        self.trace
    }

    pub fn is_refuted(&self) -> bool {
        self.refutation.is_some()
    }

    pub fn is_alive(&self, id: usize) -> bool {
        self.alive[id - 1]
    }

    /// Live clauses with their ids, in id order.
    pub fn alive_clauses(&self) -> impl Iterator<Item = (usize, &SnfClause)> {
        self.trace
            .steps()
            .iter()
            .filter(|s| self.alive[s.id - 1])
            .map(|s| (s.id, &s.clause))
    }

    pub fn final_set(&self) -> ClauseSet {
        ClauseSet::from_clauses(self.alive_clauses().map(|(_, c)| c.clone()))
    }

    /// Whether some live clause subsumes `c`.
    pub fn is_redundant(&self, c: &SnfClause) -> bool {
        self.alive_clauses().any(|(_, d)| subsumes_compatible(d, c))
    }

    /// Records an input clause unconditionally, so trace numbering follows
    /// the input. It only becomes live if it survives simplification and
    /// forward subsumption.
    pub fn add_input(&mut self, c: SnfClause, rule: Rule, parents: Vec<usize>) -> usize {
        let id = self.trace.push(c.clone(), rule, parents, None);
        self.alive.push(false);
        if let Some(c) = simplify(c) {
            if !self.is_redundant(&c) {
                self.admit(id);
            }
        }
        id
    }

    /// Records a derived clause if it is neither valid nor subsumed.
    pub fn add_derived(
        &mut self,
        c: SnfClause,
        rule: Rule,
        parents: Vec<usize>,
        loop_formula: Option<Vec<Conjunction>>,
    ) -> Option<usize> {
        let c = simplify(c)?;
        if self.is_redundant(&c) {
            return None;
        }
        let id = self.trace.push(c, rule, parents, loop_formula);
        self.alive.push(false);
        self.admit(id);
        Some(id)
    }

    fn admit(&mut self, id: usize) {
        let clause = self.trace.get(id).clause.clone();
        for other in 1..id {
            if self.alive[other - 1] && subsumes_compatible(&clause, &self.trace.get(other).clause)
            {
                self.alive[other - 1] = false;
            }
        }
        self.alive[id - 1] = true;
        self.passive.push(id);
        if clause.is_contradiction() {
            self.refutation.get_or_insert(id);
            return;
        }
        if let SnfClause::Step(s) = &clause {
            if s.rhs.is_empty() {
                let (i, t) = rewrite_false(s).expect("empty right-hand side");
                for c in [SnfClause::Initial(i), SnfClause::Step(t)] {
                    if self.refutation.is_none() {
                        self.add_derived(c, Rule::RewriteFalse, vec![id], None);
                    }
                }
            }
        }
    }

    /// Saturates until `start ⇒ false` appears or nothing new can be derived.
    pub fn run(&mut self) -> Status {
        while self.refutation.is_none() {
            let batch: Vec<usize> = std::mem::take(&mut self.passive)
                .into_iter()
                .filter(|&id| self.alive[id - 1])
                .collect();
            if batch.is_empty() {
                break;
            }
            self.active.retain(|&id| self.alive[id - 1]);
            let active = &self.active;
            let trace = &self.trace;
            let per_given: Vec<Vec<Candidate>> = self.exec.map_range(batch.len(), |k| {
                let g = batch[k];
                let gc = &trace.get(g).clause;
                let mut out = Vec::new();
                for &o in active.iter().chain(&batch[..k]) {
                    resolvents(gc, g, &trace.get(o).clause, o, &mut out);
                }
                out
            });
            self.active.extend(&batch);
            for (c, rule, parents) in per_given.into_iter().flatten() {
                self.generated += 1;
                self.add_derived(c, rule, parents.to_vec(), None);
                if self.refutation.is_some() {
                    break;
                }
            }
        }
        if self.refutation.is_some() {
            Status::Refuted
        } else {
            Status::Saturated
        }
    }
}

/// Saturates a clause set given as input, recording its clauses as given.
pub fn saturate(cs: &ClauseSet) -> SaturationResult {
    saturate_with(cs, Exec::default())
}

pub fn saturate_with(cs: &ClauseSet, exec: Exec) -> SaturationResult {
    let mut s = Saturator::new(exec);
    for c in cs {
        s.add_input(c.clone(), Rule::Given, vec![]);
        if s.is_refuted() {
            break;
        }
    }
    let status = s.run();
    SaturationResult {
        status,
        final_set: s.final_set(),
        trace: s.into_trace(),
    }
}

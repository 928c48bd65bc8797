//! The decision procedure: translate, augment, then alternate step-resolution
//! saturation with temporal resolution until `start ⇒ false` appears or a
//! full pass over the eventualities adds nothing.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use crate::engine::{Rule, Saturator, Status as SatStatus, Trace};
use crate::error::Result;
use crate::formula::{negate, Formula};
use crate::oracle::{is_satisfiable_with, OracleConfig, DEFAULT_ORACLE_CAP};
use crate::par::Exec;
use crate::snf::{tau0, ClauseSet, StepClause};
use crate::temporal::entail::DEFAULT_ENTAILMENT_CAP;
use crate::temporal::loops::DEFAULT_LOOP_WIDTH;
use crate::temporal::{augment, loop_resolvents, search_loop, AugmentedClauseSet, LoopConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Satisfiability,
    Validity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Valid,
    NotValid,
    Satisfiable,
    Unsatisfiable,
}

impl Status {
    fn from_refutation(refuted: bool, mode: Mode) -> Status {
        match (mode, refuted) {
            (Mode::Satisfiability, true) => Status::Unsatisfiable,
            (Mode::Satisfiability, false) => Status::Satisfiable,
            (Mode::Validity, true) => Status::Valid,
            (Mode::Validity, false) => Status::NotValid,
        }
    }

    /// Whether the clause set handed to the resolution loop was refuted.
    pub fn is_refutation(self) -> bool {
        matches!(self, Status::Valid | Status::Unsatisfiable)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Valid => "Valid",
            Status::NotValid => "NotValid",
            Status::Satisfiable => "Satisfiable",
            Status::Unsatisfiable => "Unsatisfiable",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    /// Step and temporal resolvents produced, before redundancy checks.
    pub clauses_generated: usize,
    pub loop_searches: usize,
    /// Temporal resolvents kept.
    pub resolvents: usize,
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub status: Status,
    pub trace: Trace,
    pub stats: Stats,
    pub augmented: AugmentedClauseSet,
    /// Clauses live when the procedure stopped.
    pub final_set: ClauseSet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub max_loop_width: usize,
    pub max_entail_symbols: usize,
    pub max_oracle_props: usize,
    pub exec: Exec,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_loop_width: DEFAULT_LOOP_WIDTH,
            max_entail_symbols: DEFAULT_ENTAILMENT_CAP,
            max_oracle_props: DEFAULT_ORACLE_CAP,
            exec: Exec::default(),
        }
    }
}

impl Config {
    fn loops(&self) -> LoopConfig {
        LoopConfig {
            max_width: self.max_loop_width,
            max_entail_symbols: self.max_entail_symbols,
            exec: self.exec,
        }
    }

    fn oracle(&self) -> OracleConfig {
        OracleConfig {
            max_symbols: self.max_oracle_props,
            exec: self.exec,
        }
    }
}

/// The clause set the resolution loop refutes: the translation of `f`, or
/// of `¬f` in validity mode.
pub fn translate_for(f: &Formula, mode: Mode) -> Result<ClauseSet> {
    let target = match mode {
        Mode::Satisfiability => f.clone(),
        Mode::Validity => negate(f),
    };
    Ok(tau0(&target)?.0)
}

pub fn prove(f: &Formula, mode: Mode) -> Result<Verdict> {
    prove_with(f, mode, &Config::default())
}

pub fn prove_with(f: &Formula, mode: Mode, cfg: &Config) -> Result<Verdict> {
    let cs = translate_for(f, mode)?;
    prove_translation(&cs, mode, cfg)
}

/// Runs the resolution loop on a clause set produced by [`translate_for`].
pub fn prove_translation(cs: &ClauseSet, mode: Mode, cfg: &Config) -> Result<Verdict> {
    run(cs, Rule::Translation, mode, cfg)
}

/// Decides satisfiability of a clause set given directly in SNF.
pub fn prove_clause_set(cs: &ClauseSet, cfg: &Config) -> Result<Verdict> {
    run(cs, Rule::Given, Mode::Satisfiability, cfg)
}

fn run(cs: &ClauseSet, input_rule: Rule, mode: Mode, cfg: &Config) -> Result<Verdict> {
    let started = Instant::now();
    let aug = augment(cs);
    let mut stats = Stats::default();
    let mut sat = Saturator::new(cfg.exec);

    let mut ids = Vec::with_capacity(cs.len());
    for c in cs {
        if sat.is_refuted() {
            break;
        }
        ids.push(sat.add_input(c.clone(), input_rule, vec![]));
    }
    for (c, src) in &aug.added {
        if sat.is_refuted() {
            break;
        }
        sat.add_input(c.clone(), Rule::Augmentation, vec![ids[*src]]);
    }

    let eventualities = aug.base.eventualities();
    let loop_cfg = cfg.loops();
    let mut next_ev = 0;
    while sat.run() == SatStatus::Saturated {
        let mut added = false;
        for k in 0..eventualities.len() {
            let at = (next_ev + k) % eventualities.len();
            let l = &eventualities[at];
            let steps: Vec<(usize, StepClause)> = sat
                .alive_clauses()
                .filter_map(|(id, c)| c.as_step().map(|s| (id, s.clone())))
                .collect();
            stats.loop_searches += 1;
            let Some(lp) = search_loop(&steps, l, &loop_cfg)? else {
                continue;
            };
            let w = aug
                .waiting_for(l)
                .expect("every eventuality has a waiting symbol")
                .clone();
            let sometimes: Vec<_> = sat
                .alive_clauses()
                .filter_map(|(id, c)| c.as_sometime().map(|s| (id, s.clone())))
                .filter(|(_, s)| s.eventuality == *l)
                .collect();
            let sources = lp.sources();
            'resolve: for (sid, sc) in sometimes {
                let parents: Vec<usize> = BTreeSet::from([sid]).union(&sources).copied().collect();
                for c in loop_resolvents(&sc, &lp, &w) {
                    stats.clauses_generated += 1;
                    let kept = sat.add_derived(
                        c,
                        Rule::TemporalRes,
                        parents.clone(),
                        Some(lp.loop_formula.clone()),
                    );
                    if kept.is_some() {
                        stats.resolvents += 1;
                        added = true;
                    }
                    if sat.is_refuted() {
                        break 'resolve;
                    }
                }
            }
            if added {
                next_ev = at + 1;
                break;
            }
        }
        if !added {
            break;
        }
    }

    stats.clauses_generated += sat.generated;
    stats.wall_time = started.elapsed();
    let refuted = sat.is_refuted();
    Ok(Verdict {
        status: Status::from_refutation(refuted, mode),
        final_set: sat.final_set(),
        trace: sat.into_trace(),
        stats,
        augmented: aug,
    })
}

/// The prover's and the behaviour-graph oracle's answers on the same
/// augmented clause set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub prover_satisfiable: bool,
    pub oracle_satisfiable: bool,
}

impl CrossCheck {
    pub fn agree(&self) -> bool {
        self.prover_satisfiable == self.oracle_satisfiable
    }
}

pub fn cross_check(f: &Formula, mode: Mode, cfg: &Config) -> Result<CrossCheck> {
    let cs = translate_for(f, mode)?;
    cross_check_clause_set(&cs, cfg)
}

pub fn cross_check_clause_set(cs: &ClauseSet, cfg: &Config) -> Result<CrossCheck> {
    let aug = augment(cs);
    let oracle_satisfiable = is_satisfiable_with(&aug.base, &cfg.oracle())?;
    let v = prove_clause_set(cs, cfg)?;
    Ok(CrossCheck {
        prover_satisfiable: !v.status.is_refutation(),
        oracle_satisfiable,
    })
}

//! Proof traces: one numbered step per recorded clause.

use std::fmt;

use crate::snf::{Conjunction, SnfClause};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Given,
    Translation,
    Augmentation,
    InitialRes,
    StepRes,
    RewriteFalse,
    Simplify,
    Subsume,
    TemporalRes,
}

impl Rule {
    pub fn display_name(self) -> &'static str {
        match self {
            Rule::Given => "Given",
            Rule::Translation => "Translation",
            Rule::Augmentation => "Augmentation",
            Rule::InitialRes => "(Initial) Step Resolution",
            Rule::StepRes => "Step Resolution",
            Rule::RewriteFalse => "Rewriting",
            Rule::Simplify => "Simplification",
            Rule::Subsume => "Subsumption",
            Rule::TemporalRes => "Temporal Resolution",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.display_name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep {
    /// 1-based position in the trace.
    pub id: usize,
    pub clause: SnfClause,
    pub rule: Rule,
    /// Sorted ids of earlier steps.
    pub parents: Vec<usize>,
    /// The loop formula (as its disjuncts) for temporal resolution steps.
    pub loop_formula: Option<Vec<Conjunction>>,
}

impl fmt::Display for ProofStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}. {} [", self.id, self.clause)?;
        for (i, p) in self.parents.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        if !self.parents.is_empty() {
            f.write_str(" ")?;
        }
        write!(f, "{}]", self.rule)?;
        if let Some(lf) = &self.loop_formula {
            f.write_str(" loop: ")?;
            for (i, c) in lf.iter().enumerate() {
                if i > 0 {
                    f.write_str(" | ")?;
                }
                if lf.len() > 1 && c.lits().len() > 1 {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Trace {
    steps: Vec<ProofStep>,
}

impl Trace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a step and returns its id.
    pub fn push(
        &mut self,
        clause: SnfClause,
        rule: Rule,
        mut parents: Vec<usize>,
        loop_formula: Option<Vec<Conjunction>>,
    ) -> usize {
        parents.sort_unstable();
        parents.dedup();
        let id = self.steps.len() + 1;
        debug_assert!(parents.iter().all(|&p| p < id));
        self.steps.push(ProofStep {
            id,
            clause,
            rule,
            parents,
            loop_formula,
        });
        id
    }

    pub fn get(&self, id: usize) -> &ProofStep {
        &self.steps[id - 1]
    }

    pub fn steps(&self) -> &[ProofStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last(&self) -> Option<&ProofStep> {
        self.steps.last()
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

//! Step resolution: inference rules, traces and saturation.

pub mod rules;
pub mod saturate;
pub mod trace;

pub use rules::{
    initial_resolve, merge, rewrite_false, simplify, step_resolve, subsumes, MergedStepClause,
};
pub use saturate::{saturate, saturate_with, SaturationResult, Saturator, Status};
pub use trace::{ProofStep, Rule, Trace};

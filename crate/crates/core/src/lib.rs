//! Clausal temporal resolution for propositional linear temporal logic.

pub mod engine;
pub mod error;
pub mod formula;
pub mod oracle;
pub mod par;
pub mod prover;
pub mod snf;
pub mod temporal;

pub use error::{Error, Result};
pub use par::Exec;
pub use prover::{
    cross_check, cross_check_clause_set, prove, prove_clause_set, prove_with, Config, CrossCheck,
    Mode, Stats, Status, Verdict,
};

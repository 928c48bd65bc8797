//! Augmentation, loop search and temporal resolution.

pub mod augment;
pub mod entail;
pub mod loops;
pub mod resolvents;

pub use augment::{augment, AugmentedClauseSet};
pub use entail::{propositional_entails, propositional_entails_capped, ModelSpace, Models};
pub use loops::{find_loops, search_loop, Loop, LoopConfig};
pub use resolvents::loop_resolvents;

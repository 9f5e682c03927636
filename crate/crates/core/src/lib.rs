//! Irredundant generating sets of permutation groups.

pub mod chain;
pub mod bounds;
pub mod catalog;
pub mod classes;
pub mod error;
pub mod format;
pub mod genset;
pub mod group;
pub mod oracle;
pub mod par;
pub mod perm;
pub mod search;

pub use chain::StabilizerChain;
pub use classes::{conjugacy_classes, ConjugacyClass};
pub use error::{Error, Result};
pub use group::{PermGroup, ENUMERATION_CAP};
pub use perm::Permutation;

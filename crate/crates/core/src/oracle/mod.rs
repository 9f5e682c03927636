//! Brute-force ranks and subgroup lattices for small groups, computed from
//! multiplication tables and independent of the stabilizer-chain code.

mod cayley;
mod construct;
mod lattice;
mod rank;
mod report;

pub use construct::construct;
pub use lattice::{maximal_subgroups, subgroup_lattice, LatticeSubgroup};
pub use rank::{brute_class_ranks, brute_i, brute_m, brute_ranks, Rank, Ranks};
pub use report::{rank_report, ClassRank, RankReport};

/// Default order cap for rank searches.
pub const ORACLE_CAP: u64 = 400;
/// Default order cap for lattice enumeration.
pub const LATTICE_CAP: u64 = 200;

//! Lower-bound search: combination scans over involution pools, dihedral
//! tails, Tarski extensions and maximality tests.

mod combination;
mod dihedral;
mod lattice;
mod maximal;
mod scan;
mod shuffle;
mod tarski;

pub use combination::{binomial, lex_rank, unrank, CombinationCursor};
pub use dihedral::{dihedral_orders, involutions, DihedralOrderTable};
pub use maximal::{is_maximal, maximal_overgroup};
pub use scan::{scan, scan_naive, scan_with_progress, Pool, ProgressEvent, ScanReport, SearchConfig, StopReason};
pub use shuffle::fisher_yates;
pub use tarski::{
    canonical_involutions, tarski_extend_general, tarski_extend_involutions, tarski_prune,
    tarski_recursive,
};

//! Upper bounds: general position, radicals, the replacement property and
//! bound propagation over maximal-subgroup tables.

mod family;
mod ledger;
mod table;

pub use family::{
    gen_pos_inequality_check, general_position, max_dim, rad, rad_characterization_check,
    replacement_property, SubgroupFamily, GENERAL_POSITION_CAP,
};
pub use ledger::{
    flatness_verdict, propagate_bounds, BoundLedger, TraceLine, Verdict, RULE_CERTIFICATE,
    RULE_COUNT, RULE_FLATNESS, RULE_I_RECURSION, RULE_M_LEQ_MAX_I,
};
pub use table::{GroupTable, SubgroupClassRecord};

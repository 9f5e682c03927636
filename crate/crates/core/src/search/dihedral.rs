use std::collections::{BTreeMap, BTreeSet};

use crate::error::Result;
use crate::group::PermGroup;
use crate::par;
use crate::perm::Permutation;

/// Elements of order 2, in enumeration order.
pub fn involutions(group: &PermGroup, cap: u64) -> Result<Vec<Permutation>> {
    Ok(group.enumerate(cap)?.filter(|x| x.order() == 2).collect())
}

/// The `k >= 2` for which the group contains a dihedral subgroup of order
/// `2k`.
///
/// Two distinct involutions `a`, `b` generate a dihedral group of order
/// `2 * order(ab)`, and every dihedral group of order `2k >= 4` arises this
/// way, so the answer is the set of orders of products of distinct
/// involutions. `k = 2` appears exactly when two distinct involutions
/// commute.
pub fn dihedral_orders(group: &PermGroup, cap: u64) -> Result<BTreeSet<u64>> {
    let inv = involutions(group, cap)?;
    let per_a = par::map_indexed(inv.len(), |i| {
        let a = &inv[i];
        inv[i + 1..]
            .iter()
            .map(|b| a.mul(b).order())
            .collect::<BTreeSet<u64>>()
    });
    Ok(per_a.into_iter().flatten().collect())
}

/// Dihedral orders `k` (for subgroups of order `2k`) per Mathieu group, as
/// used to filter tail elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DihedralOrderTable {
    pub entries: BTreeMap<String, BTreeSet<u64>>,
}

impl DihedralOrderTable {
    pub fn shipped() -> Self {
        let rows: [(&str, &[u64]); 5] = [
            ("M11", &[2, 3, 4, 5, 6]),
            ("M12", &[2, 3, 4, 5, 6, 8, 10]),
            ("M22", &[2, 3, 4, 5, 6]),
            ("M23", &[2, 3, 4, 5, 6]),
            ("M24", &[2, 3, 4, 5, 6, 8, 10, 11, 12]),
        ];
        DihedralOrderTable {
            entries: rows
                .iter()
                .map(|(k, v)| (k.to_string(), v.iter().copied().collect()))
                .collect(),
        }
    }

    pub fn get(&self, group: &str) -> Option<&BTreeSet<u64>> {
        self.entries.get(group)
    }
}

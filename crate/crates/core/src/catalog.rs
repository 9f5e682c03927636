//! Shipped groups, certificates and maximal-subgroup tables.

use crate::bounds::GroupTable;
use crate::error::{Error, Result};
use crate::genset::Certificate;
use crate::group::PermGroup;

#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub degree: usize,
    pub generators: &'static [&'static str],
    pub order: u64,
    pub provenance: &'static str,
}

const M11_GENS: &[&str] = &["(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"];
const M12_GENS: &[&str] = &[
    "(1,2,3,4,5,6,7,8,9,10,11)",
    "(3,7,11,8)(4,10,5,6)",
    "(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)",
];

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "M11",
        degree: 11,
        generators: M11_GENS,
        order: 7920,
        provenance: "standard generators on 11 points",
    },
    CatalogEntry {
        name: "M12",
        degree: 12,
        generators: M12_GENS,
        order: 95040,
        provenance: "M11 generators plus an involution moving the twelfth point",
    },
];

impl CatalogEntry {
    pub fn group(&self) -> PermGroup {
        PermGroup::from_cycles(self.degree, self.generators).expect("catalog generators parse")
    }
}

pub fn entry(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

/// `M11` or `M12` on the shipped generators.
pub fn mathieu(k: u32) -> Result<PermGroup> {
    match k {
        11 | 12 => Ok(entry(&format!("M{k}"))?.group()),
        _ => Err(Error::UnknownGroup(format!("M{k}"))),
    }
}

/// Point stabilizer, generated by the second level of a chain based at
/// `point`.
pub fn stabilizer(g: &PermGroup, point: usize) -> Result<PermGroup> {
    g.stabilizer(point)
}

pub const M11_CERTIFICATE: &str = include_str!("../data/certificates/m11.cert");
pub const M12_CERTIFICATE: &str = include_str!("../data/certificates/m12.cert");

/// The M11 and M12 certificates, in that order.
pub fn shipped_certificates() -> Vec<Certificate> {
    [M11_CERTIFICATE, M12_CERTIFICATE]
        .iter()
        .map(|t| Certificate::parse(t).expect("shipped certificate parses"))
        .collect()
}

pub const TABLE_FILES: &[(&str, &str)] = &[
    ("m11.table", include_str!("../data/tables/m11.table")),
    ("m12.table", include_str!("../data/tables/m12.table")),
    ("aut_s6.table", include_str!("../data/tables/aut_s6.table")),
    ("a6_z2.table", include_str!("../data/tables/a6_z2.table")),
    ("m10.table", include_str!("../data/tables/m10.table")),
];

/// Maximal-subgroup tables for M11, M12, Aut(S6), A6:Z2 and M10.
pub fn shipped_tables() -> Vec<GroupTable> {
    TABLE_FILES
        .iter()
        .map(|(_, t)| GroupTable::parse(t).expect("shipped table parses"))
        .collect()
}

pub fn shipped_table(name: &str) -> Result<GroupTable> {
    shipped_tables()
        .into_iter()
        .find(|t| t.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| Error::UnknownGroup(name.to_string()))
}

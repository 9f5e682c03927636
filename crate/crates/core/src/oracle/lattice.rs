use std::collections::HashSet;

use super::cayley::{count, members, subset, Bits, Cayley};
use crate::error::Result;
use crate::group::PermGroup;

/// One subgroup of a lattice listing.
#[derive(Clone, Debug)]
pub struct LatticeSubgroup {
    pub group: PermGroup,
    pub order: u64,
    pub maximal: bool,
}

pub(crate) struct RawLattice {
    pub subgroups: Vec<(Bits, Vec<u16>)>,
    pub maximal: Vec<bool>,
}

/// Closes the cyclic subgroups under pairwise joins.
pub(crate) fn raw_lattice(t: &Cayley) -> RawLattice {
    let mut seen: HashSet<Bits> = HashSet::new();
    let mut subs: Vec<(Bits, Vec<u16>)> = Vec::new();
    for x in 0..t.len() as u16 {
        let gens = if x == 0 { vec![] } else { vec![x] };
        let bits = t.closure(&gens);
        if seen.insert(bits.clone()) {
            subs.push((bits, gens));
        }
    }
    let mut done = 0;
    while done < subs.len() {
        // Join the next unprocessed subgroup with everything before it.
        for k in 0..done {
            if subset(&subs[k].0, &subs[done].0) || subset(&subs[done].0, &subs[k].0) {
                continue;
            }
            let mut gens = subs[k].1.clone();
            gens.extend(subs[done].1.iter().copied());
            let bits = t.closure(&gens);
            if seen.insert(bits.clone()) {
                subs.push((bits, gens));
            }
        }
        done += 1;
    }
    subs.sort_by(|a, b| count(&a.0).cmp(&count(&b.0)).then_with(|| a.0.cmp(&b.0)));
    let whole = t.len() as u32;
    let maximal = subs
        .iter()
        .map(|(h, _)| {
            count(h) < whole
                && !subs.iter().any(|(k, _)| {
                    let ck = count(k);
                    ck < whole && ck > count(h) && subset(h, k)
                })
        })
        .collect();
    RawLattice { subgroups: subs, maximal }
}

/// Every subgroup of `g` (up to equality), smallest first.
pub fn subgroup_lattice(g: &PermGroup, cap: u64) -> Result<Vec<LatticeSubgroup>> {
    let t = Cayley::new(g, cap)?;
    let raw = raw_lattice(&t);
    Ok(raw
        .subgroups
        .iter()
        .zip(&raw.maximal)
        .map(|((bits, gens), &maximal)| {
            let group = t.to_group(gens);
            debug_assert_eq!(group.order(), members(bits).count() as u64);
            LatticeSubgroup { order: count(bits) as u64, group, maximal }
        })
        .collect())
}

/// The maximal subgroups of `g`.
pub fn maximal_subgroups(g: &PermGroup, cap: u64) -> Result<Vec<PermGroup>> {
    Ok(subgroup_lattice(g, cap)?
        .into_iter()
        .filter(|s| s.maximal)
        .map(|s| s.group)
        .collect())
}

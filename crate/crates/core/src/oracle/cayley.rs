use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Subset of a Cayley table's elements.
pub(crate) type Bits = Box<[u64]>;

/// A finite group as a full multiplication table. Elements are found by
/// breadth-first closure of the generators, never through a stabilizer chain.
pub(crate) struct Cayley {
    pub degree: usize,
    pub elems: Vec<Permutation>,
    index: HashMap<Permutation, u16>,
    table: Vec<u16>,
    pub inv: Vec<u16>,
}

impl Cayley {
    pub fn new(group: &PermGroup, cap: u64) -> Result<Self> {
        if group.order() > cap {
            return Err(Error::CapExceeded { order: group.order(), cap });
        }
        let degree = group.degree();
        let gens: Vec<Permutation> = group
            .generators()
            .iter()
            .filter(|g| !g.is_identity())
            .cloned()
            .collect();
        let mut elems = vec![Permutation::identity(degree)];
        let mut index = HashMap::from([(elems[0].clone(), 0u16)]);
        let mut k = 0;
        while k < elems.len() {
            for g in &gens {
                let y = elems[k].mul(g);
                if !index.contains_key(&y) {
                    if elems.len() as u64 >= cap {
                        return Err(Error::CapExceeded { order: group.order(), cap });
                    }
                    index.insert(y.clone(), elems.len() as u16);
                    elems.push(y);
                }
            }
            k += 1;
        }
        let n = elems.len();
        let mut table = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&elems[a].mul(&elems[b])];
            }
        }
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0).unwrap() as u16)
            .collect();
        Ok(Self { degree, elems, index, table, inv })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize * self.elems.len() + b as usize]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<u16> {
        self.index.get(p).copied()
    }

    pub fn empty(&self) -> Bits {
        vec![0u64; self.len().div_ceil(64)].into_boxed_slice()
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u16]) -> Bits {
        let mut bits = self.empty();
        set(&mut bits, 0);
        let mut list = vec![0u16];
        let mut k = 0;
        while k < list.len() {
            for &g in gens {
                let y = self.mul(list[k], g);
                if !has(&bits, y) {
                    set(&mut bits, y);
                    list.push(y);
                }
            }
            k += 1;
        }
        bits
    }

    /// Conjugacy classes as sorted member lists, identity class first.
    pub fn classes(&self) -> Vec<Vec<u16>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n as u16 {
            if seen[x as usize] {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..n as u16 {
                let y = self.mul(self.mul(self.inv[g as usize], x), g);
                if !std::mem::replace(&mut seen[y as usize], true) {
                    members.push(y);
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn to_group(&self, elems: &[u16]) -> PermGroup {
        let gens = elems.iter().map(|&e| self.elems[e as usize].clone()).collect();
        PermGroup::new(self.degree, gens).expect("elements share the parent degree")
    }
}

pub(crate) fn has(bits: &[u64], x: u16) -> bool {
    bits[x as usize / 64] >> (x % 64) & 1 == 1
}

pub(crate) fn set(bits: &mut [u64], x: u16) {
    bits[x as usize / 64] |= 1 << (x % 64);
}

pub(crate) fn count(bits: &[u64]) -> u32 {
    bits.iter().map(|w| w.count_ones()).sum()
}

pub(crate) fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub(crate) fn members(bits: &[u64]) -> impl Iterator<Item = u16> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| (w * 64 + b) as u16)
    })
}

//! Subgroups generated by members of a fixed element list, keyed by which
//! members they contain, with memoized joins.
//!
//! Every state is generated by universe members, so it equals the subgroup
//! generated by the members it contains and the membership mask identifies
//! it exactly.

use std::collections::HashMap;

use crate::chain::{Built, Limit, StabilizerChain};
use crate::perm::Permutation;

pub(crate) type StateId = u32;

/// The whole parent group; joins are never expanded past it.
pub(crate) const FULL: StateId = u32::MAX;
const UNKNOWN: StateId = u32::MAX - 1;

struct State {
    chain: StabilizerChain,
    mask: Box<[u64]>,
    next: Option<Box<[StateId]>>,
    extra: Option<Box<[u64]>>,
}

pub(crate) struct Lattice<'a> {
    order: u64,
    universe: &'a [Permutation],
    orders: Vec<u64>,
    words: usize,
    states: Vec<State>,
    index: HashMap<Box<[u64]>, StateId>,
}

impl<'a> Lattice<'a> {
    /// `order` is the order of the group containing the universe.
    pub fn new(degree: usize, order: u64, universe: &'a [Permutation]) -> Self {
        let words = universe.len().div_ceil(64).max(1);
        let mut lattice = Lattice {
            order,
            universe,
            orders: universe.iter().map(|u| u.order()).collect(),
            words,
            states: Vec::new(),
            index: HashMap::new(),
        };
        let mask = vec![0u64; words].into_boxed_slice();
        lattice.insert(StabilizerChain::trivial(degree), mask);
        lattice
    }

    pub fn trivial(&self) -> StateId {
        0
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn chain(&self, s: StateId) -> &StabilizerChain {
        &self.states[s as usize].chain
    }

    pub fn contains(&self, s: StateId, u: usize) -> bool {
        s == FULL || self.states[s as usize].mask[u / 64] >> (u % 64) & 1 == 1
    }

    /// Per-state scratch slot for callers that cache a bitset per subgroup.
    pub fn extra(&self, s: StateId) -> Option<&[u64]> {
        self.states[s as usize].extra.as_deref()
    }

    pub fn set_extra(&mut self, s: StateId, bits: Box<[u64]>) {
        self.states[s as usize].extra = Some(bits);
    }

    /// The subgroup generated by state `s` and universe member `u`.
    pub fn next(&mut self, s: StateId, u: usize) -> StateId {
        if s == FULL || self.contains(s, u) {
            return s;
        }
        if let Some(t) = &self.states[s as usize].next {
            if t[u] != UNKNOWN {
                return t[u];
            }
        }
        let target = self.join(s, u);
        let n = self.universe.len();
        let st = &mut self.states[s as usize];
        st.next.get_or_insert_with(|| vec![UNKNOWN; n].into_boxed_slice())[u] = target;
        target
    }

    fn join(&mut self, s: StateId, u: usize) -> StateId {
        let x = &self.universe[u];
        let limit = Limit {
            order: Some(self.order),
            witness: None,
        };
        let chain = match self.states[s as usize].chain.extend_until(std::slice::from_ref(x), limit) {
            Built::Complete(c) if c.order() < self.order => c,
            _ => return FULL,
        };
        let h = chain.order();
        let mut mask = self.states[s as usize].mask.clone();
        for (v, y) in self.universe.iter().enumerate() {
            let bit = 1u64 << (v % 64);
            if mask[v / 64] & bit != 0 || h % self.orders[v] != 0 {
                continue;
            }
            if v == u || chain.contains(y) {
                mask[v / 64] |= bit;
            }
        }
        if let Some(&id) = self.index.get(&mask) {
            return id;
        }
        self.insert(chain, mask)
    }

    fn insert(&mut self, chain: StabilizerChain, mask: Box<[u64]>) -> StateId {
        let id = self.states.len() as StateId;
        assert!(id < UNKNOWN, "lattice state space exhausted");
        self.index.insert(mask.clone(), id);
        self.states.push(State {
            chain,
            mask,
            next: None,
            extra: None,
        });
        id
    }
}

//! Deterministic Schreier–Sims.
//!
//! A chain stores, for each base point, the strong generators fixing all
//! earlier base points together with an explicit transversal of the basic
//! orbit. Elements are addressed by a mixed-radix index whose digits are
//! orbit positions, level 0 most significant; [`StabilizerChain::index_of`]
//! and [`StabilizerChain::element_at`] are inverse bijections between the
//! group and `0..order`.

use crate::perm::{Images, Permutation};

const ABSENT: u16 = u16::MAX;

#[derive(Clone, Debug)]
struct Level {
    base: u8,
    gens: Vec<Permutation>,
    /// Orbit of `base` in discovery order.
    orbit: Vec<u8>,
    /// Position of each point in `orbit`, `ABSENT` outside it.
    pos: Vec<u16>,
    /// `reps[k]` maps `base` to `orbit[k]`.
    reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
}

impl Level {
    fn new(degree: usize, base: u8) -> Self {
        let mut level = Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            pos: vec![ABSENT; degree],
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        level.rebuild_orbit(degree);
        level
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.orbit.clear();
        self.reps.clear();
        self.inv_reps.clear();
        self.pos.iter_mut().for_each(|p| *p = ABSENT);
        self.orbit.push(self.base);
        self.pos[self.base as usize] = 0;
        self.reps.push(Permutation::identity(degree));
        self.inv_reps.push(Permutation::identity(degree));
        let mut k = 0;
        while k < self.orbit.len() {
            let p = self.orbit[k];
            for s in &self.gens {
                let q = s.apply0(p);
                if self.pos[q as usize] == ABSENT {
                    self.pos[q as usize] = self.orbit.len() as u16;
                    self.orbit.push(q);
                    let rep = self.reps[k].mul(s);
                    self.inv_reps.push(rep.inverse());
                    self.reps.push(rep);
                }
            }
            k += 1;
        }
    }
}

/// Early-exit conditions for [`StabilizerChain::build_until`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Limit<'a> {
    /// Stop as soon as the partial chain certifies this order. The caller
    /// guarantees it bounds the true order (e.g. the parent's order).
    pub order: Option<u64>,
    /// Stop as soon as this permutation sifts through the partial chain.
    pub witness: Option<&'a Permutation>,
}

/// Result of a possibly interrupted chain construction.
#[derive(Clone, Debug)]
pub enum Built {
    /// Construction finished; the chain is a base and strong generating set.
    Complete(StabilizerChain),
    /// The partial chain reached `Limit::order`; it is a valid chain whose
    /// order equals the limit.
    ReachedOrder(StabilizerChain),
    /// `Limit::witness` is an element of the group.
    ContainsWitness,
}

#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            levels: Vec::new(),
        }
    }

    /// Builds a chain for `<gens>` on `degree` points.
    pub fn build(degree: usize, gens: &[Permutation]) -> Self {
        Self::build_with_base(degree, gens, &[])
    }

    /// Builds a chain whose base starts with the zero-based points `prefix`.
    pub fn build_with_base(degree: usize, gens: &[Permutation], prefix: &[u8]) -> Self {
        match Self::run(degree, gens, prefix, Limit::default()) {
            Built::Complete(c) | Built::ReachedOrder(c) => c,
            Built::ContainsWitness => unreachable!("no witness supplied"),
        }
    }

    pub fn build_until(degree: usize, gens: &[Permutation], limit: Limit<'_>) -> Built {
        Self::run(degree, gens, &[], limit)
    }

    /// Extends an existing chain by additional generators.
    pub fn extend_until(&self, extra: &[Permutation], limit: Limit<'_>) -> Built {
        let mut chain = self.clone();
        let mut work: Vec<Permutation> = Vec::new();
        for g in extra {
            if !g.is_identity() && !chain.contains(g) {
                work.push(g.clone());
            }
        }
        if work.is_empty() {
            if let Some(w) = limit.witness {
                if chain.contains(w) {
                    return Built::ContainsWitness;
                }
            }
            return Built::Complete(chain);
        }
        chain.add_generators(&work);
        chain.saturate(limit)
    }

    fn run(degree: usize, gens: &[Permutation], prefix: &[u8], limit: Limit<'_>) -> Built {
        let mut chain = StabilizerChain::trivial(degree);
        for &b in prefix {
            chain.levels.push(Level::new(degree, b));
        }
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            chain.levels.clear();
            return match limit.witness {
                Some(w) if w.is_identity() => Built::ContainsWitness,
                _ => Built::Complete(chain),
            };
        }
        chain.add_generators(&gens);
        chain.saturate(limit)
    }

    /// Adds generators at level 0, extending the base so that each moves
    /// some base point.
    fn add_generators(&mut self, gens: &[Permutation]) {
        for g in gens {
            if self.levels.iter().all(|l| g.apply0(l.base) == l.base) {
                let b = g.least_moved0().expect("non-identity generator");
                self.levels.push(Level::new(self.degree, b));
            }
        }
        let depth = self.levels.len();
        for g in gens {
            // a generator joins every level whose earlier base points it fixes
            for lvl in 0..depth {
                self.levels[lvl].gens.push(g.clone());
                if g.apply0(self.levels[lvl].base) != self.levels[lvl].base {
                    break;
                }
            }
        }
        for l in &mut self.levels {
            l.rebuild_orbit(self.degree);
        }
    }

    fn order_of_levels(&self) -> u64 {
        self.levels
            .iter()
            .fold(1u64, |acc, l| acc.saturating_mul(l.orbit.len() as u64))
    }

    fn saturate(mut self, limit: Limit<'_>) -> Built {
        if let Some(t) = limit.order {
            if self.order_of_levels() >= t {
                return Built::ReachedOrder(self);
            }
        }
        if let Some(w) = limit.witness {
            if self.contains(w) {
                return Built::ContainsWitness;
            }
        }
        if self.levels.is_empty() {
            return Built::Complete(self);
        }
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let mut k = 0;
            while k < self.levels[lvl].orbit.len() {
                let mut s_idx = 0;
                while s_idx < self.levels[lvl].gens.len() {
                    let level = &self.levels[lvl];
                    let beta = level.orbit[k];
                    let s = &level.gens[s_idx];
                    let image = s.apply0(beta);
                    let j = level.pos[image as usize] as usize;
                    // Schreier generator u_beta * s * u_{beta^s}^-1
                    let sch = schreier(&level.reps[k], s, &level.inv_reps[j]);
                    s_idx += 1;
                    let Some(sch) = sch else { continue };
                    let (h, stop) = self.strip(sch, lvl + 1);
                    if stop == self.levels.len() && h.is_identity() {
                        continue;
                    }
                    if stop == self.levels.len() {
                        let b = h.least_moved0().expect("non-identity residue");
                        self.levels.push(Level::new(self.degree, b));
                    }
                    for l in lvl + 1..=stop {
                        self.levels[l].gens.push(h.clone());
                        self.levels[l].rebuild_orbit(self.degree);
                    }
                    if let Some(t) = limit.order {
                        if self.order_of_levels() >= t {
                            return Built::ReachedOrder(self);
                        }
                    }
                    if let Some(w) = limit.witness {
                        if self.contains(w) {
                            return Built::ContainsWitness;
                        }
                    }
                    i = stop as isize;
                    continue 'outer;
                }
                k += 1;
            }
            i -= 1;
        }
        Built::Complete(self)
    }

    /// Sifts `g` starting at `from`; returns the residue and the level at
    /// which sifting stopped (`depth()` when it passed every level).
    fn strip(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply0(level.base);
            let p = level.pos[b as usize];
            if p == ABSENT {
                return (h, l);
            }
            if p != 0 {
                h = h.mul(&level.inv_reps[p as usize]);
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// One-based base points.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base as usize + 1).collect()
    }

    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// One-based points of the basic orbit at `level`, in index order.
    pub fn basic_orbit(&self, level: usize) -> Vec<usize> {
        self.levels[level].orbit.iter().map(|&p| p as usize + 1).collect()
    }

    /// Coset representatives at `level`, aligned with [`Self::basic_orbit`].
    pub fn transversal(&self, level: usize) -> &[Permutation] {
        &self.levels[level].reps
    }

    /// Strong generators fixing the first `level` base points.
    pub fn level_generators(&self, level: usize) -> &[Permutation] {
        &self.levels[level].gens
    }

    /// All strong generators, without repeats, in level order.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.order_of_levels()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, stop) = self.strip(g.clone(), 0);
        stop == self.levels.len() && h.is_identity()
    }

    /// Mixed-radix index of `g`, or `None` when `g` is not in the group.
    pub fn index_of(&self, g: &Permutation) -> Option<u64> {
        let mut h = g.clone();
        let mut idx = 0u64;
        for level in &self.levels {
            let b = h.apply0(level.base);
            let p = level.pos[b as usize];
            if p == ABSENT {
                return None;
            }
            idx = idx * level.orbit.len() as u64 + p as u64;
            if p != 0 {
                h = h.mul(&level.inv_reps[p as usize]);
            }
        }
        h.is_identity().then_some(idx)
    }

    /// Inverse of [`Self::index_of`].
    pub fn element_at(&self, mut idx: u64) -> Permutation {
        let mut digits = vec![0usize; self.levels.len()];
        for (l, level) in self.levels.iter().enumerate().rev() {
            let r = level.orbit.len() as u64;
            digits[l] = (idx % r) as usize;
            idx /= r;
        }
        let mut acc = Permutation::identity(self.degree);
        for (l, level) in self.levels.iter().enumerate() {
            acc = level.reps[digits[l]].mul(&acc);
        }
        acc
    }

    /// Depth-first walk over all elements, in index order.
    pub fn elements(&self) -> ChainElements<'_> {
        ChainElements::new(self)
    }
}

fn schreier(u: &Permutation, s: &Permutation, v_inv: &Permutation) -> Option<Permutation> {
    let mut out: Images = Images::with_capacity(u.degree());
    let mut trivial = true;
    for (i, &x) in u.table().iter().enumerate() {
        let y = v_inv.apply0(s.apply0(x));
        trivial &= y as usize == i;
        out.push(y);
    }
    (!trivial).then(|| Permutation::from_table(out))
}

/// Iterator over a chain's elements in index order.
pub struct ChainElements<'a> {
    chain: &'a StabilizerChain,
    digits: Vec<usize>,
    /// `partial[l]` is the product of the chosen reps of levels `0..=l`.
    partial: Vec<Permutation>,
    done: bool,
}

impl<'a> ChainElements<'a> {
    fn new(chain: &'a StabilizerChain) -> Self {
        let depth = chain.levels.len();
        let mut it = ChainElements {
            chain,
            digits: vec![0; depth],
            partial: Vec::with_capacity(depth),
            done: false,
        };
        it.refill(0);
        it
    }

    fn refill(&mut self, from: usize) {
        self.partial.truncate(from);
        for l in from..self.chain.levels.len() {
            let rep = &self.chain.levels[l].reps[self.digits[l]];
            let next = match self.partial.last() {
                Some(prev) => rep.mul(prev),
                None => rep.clone(),
            };
            self.partial.push(next);
        }
    }
}

impl Iterator for ChainElements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = self
            .partial
            .last()
            .cloned()
            .unwrap_or_else(|| Permutation::identity(self.chain.degree));
        // odometer step, deepest level fastest
        let mut l = self.chain.levels.len();
        loop {
            if l == 0 {
                self.done = true;
                break;
            }
            l -= 1;
            self.digits[l] += 1;
            if self.digits[l] < self.chain.levels[l].orbit.len() {
                self.refill(l);
                break;
            }
            self.digits[l] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn closure(gens: &[Permutation], degree: usize) -> HashSet<Permutation> {
        let mut seen = HashSet::new();
        let id = Permutation::identity(degree);
        seen.insert(id.clone());
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    stack.push(y);
                }
            }
        }
        seen
    }

    #[test]
    fn m11_order() {
        let gens = [p("(1,2,3,4,5,6,7,8,9,10,11)", 11), p("(3,7,11,8)(4,10,5,6)", 11)];
        let c = StabilizerChain::build(11, &gens);
        assert_eq!(c.order(), 7920);
        assert!(gens.iter().all(|g| c.contains(g)));
    }

    #[test]
    fn cyclic_eleven() {
        let c = StabilizerChain::build(11, &[p("(1,2,3,4,5,6,7,8,9,10,11)", 11)]);
        assert_eq!(c.order(), 11);
    }

    #[test]
    fn trivial_group() {
        let c = StabilizerChain::build(4, &[Permutation::identity(4)]);
        assert_eq!(c.order(), 1);
        assert_eq!(c.depth(), 0);
        assert_eq!(c.elements().count(), 1);
        assert!(c.contains(&Permutation::identity(4)));
        assert!(!c.contains(&p("(1,2)", 4)));
    }

    #[test]
    fn order_matches_closure_small_groups() {
        let cases: Vec<(usize, Vec<&str>)> = vec![
            (4, vec!["(1,2)", "(1,2,3,4)"]),
            (5, vec!["(1,2,3)", "(3,4,5)"]),
            (6, vec!["(1,2)(3,4)", "(1,3)(2,4)", "(5,6)"]),
            (7, vec!["(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"]),
            (8, vec!["(1,2,3,4)(5,6,7,8)", "(1,5)(2,8)(3,7)(4,6)"]),
            (6, vec!["(1,2,3,4,5,6)", "(1,2)"]),
        ];
        for (n, gs) in cases {
            let gens: Vec<_> = gs.iter().map(|s| p(s, n)).collect();
            let c = StabilizerChain::build(n, &gens);
            let cl = closure(&gens, n);
            assert_eq!(c.order(), cl.len() as u64, "{gs:?}");
            for x in &cl {
                assert!(c.contains(x));
            }
            let listed: HashSet<_> = c.elements().collect();
            assert_eq!(listed, cl);
        }
    }

    #[test]
    fn index_round_trip() {
        let gens = [p("(1,2,3,4,5)", 5), p("(1,2)", 5)];
        let c = StabilizerChain::build(5, &gens);
        for (k, x) in c.elements().enumerate() {
            assert_eq!(c.index_of(&x), Some(k as u64));
            assert_eq!(c.element_at(k as u64), x);
        }
    }

    #[test]
    fn early_exit_on_order_and_witness() {
        let gens = [p("(1,2,3,4,5,6,7,8,9,10,11)", 11), p("(3,7,11,8)(4,10,5,6)", 11)];
        match StabilizerChain::build_until(11, &gens, Limit { order: Some(7920), witness: None }) {
            Built::ReachedOrder(c) => assert_eq!(c.order(), 7920),
            other => panic!("{other:?}"),
        }
        let w = p("(1,2,3,4,5,6,7,8,9,10,11)", 11).pow(3);
        assert!(matches!(
            StabilizerChain::build_until(11, &gens, Limit { order: None, witness: Some(&w) }),
            Built::ContainsWitness
        ));
        let odd = p("(1,2)", 11);
        assert!(matches!(
            StabilizerChain::build_until(11, &gens, Limit { order: None, witness: Some(&odd) }),
            Built::Complete(_)
        ));
    }

    #[test]
    fn prescribed_base_prefix() {
        let gens = [p("(1,2,3,4)", 4), p("(1,2)", 4)];
        let c = StabilizerChain::build_with_base(4, &gens, &[3]);
        assert_eq!(c.base()[0], 4);
        assert_eq!(c.order(), 24);
    }

    #[test]
    fn extend_existing_chain() {
        let c = StabilizerChain::build(5, &[p("(1,2,3)", 5)]);
        match c.extend_until(&[p("(3,4,5)", 5)], Limit::default()) {
            Built::Complete(c2) => assert_eq!(c2.order(), 60),
            other => panic!("{other:?}"),
        }
    }
}

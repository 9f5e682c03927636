use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::chain::{Built, Limit, StabilizerChain};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default cap for operations that list every element.
pub const ENUMERATION_CAP: u64 = 100_000;

/// A permutation group given by generators, with a stabilizer chain built on
/// first use. Cloning is cheap and clones share the chain.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 || degree > 255 {
            return Err(Error::Degree(degree));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        Ok(Self::from_parts(degree, generators, None))
    }

    /// Parses generators in cycle notation.
    pub fn from_cycles(degree: usize, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_parts(degree, Vec::new(), Some(StabilizerChain::trivial(degree)))
    }

    pub(crate) fn from_parts(
        degree: usize,
        generators: Vec<Permutation>,
        chain: Option<StabilizerChain>,
    ) -> Self {
        let cell = OnceLock::new();
        if let Some(c) = chain {
            let _ = cell.set(c);
        }
        PermGroup {
            inner: Arc::new(Inner {
                degree,
                generators,
                chain: cell,
            }),
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.inner
            .chain
            .get_or_init(|| StabilizerChain::build(self.degree(), &self.inner.generators))
    }

    pub fn order(&self) -> u64 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: p.degree(),
            });
        }
        Ok(self.chain().contains(p))
    }

    /// `true` when every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree()
            && self.generators().iter().all(|g| other.chain().contains(g))
    }

    /// Same elements, compared by order and mutual containment.
    pub fn same_as(&self, other: &PermGroup) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// All elements, refusing groups larger than `cap`.
    pub fn enumerate(&self, cap: u64) -> Result<impl Iterator<Item = Permutation> + '_> {
        let order = self.order();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        Ok(self.chain().elements())
    }

    pub fn elements(&self, cap: u64) -> Result<Vec<Permutation>> {
        Ok(self.enumerate(cap)?.collect())
    }

    /// Orbit of the one-based `point`, in discovery order.
    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut orbit = vec![point];
        seen[point - 1] = true;
        let mut k = 0;
        while k < orbit.len() {
            for g in self.generators() {
                let q = g.image(orbit[k]);
                if !std::mem::replace(&mut seen[q - 1], true) {
                    orbit.push(q);
                }
            }
            k += 1;
        }
        orbit
    }

    /// Orbit of an ordered tuple of distinct one-based points.
    pub fn tuple_orbit_len(&self, tuple: &[usize]) -> usize {
        use std::collections::HashSet;
        let start: Vec<usize> = tuple.to_vec();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(start.clone());
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for g in self.generators() {
                let img: Vec<usize> = t.iter().map(|&x| g.image(x)).collect();
                if seen.insert(img.clone()) {
                    stack.push(img);
                }
            }
        }
        seen.len()
    }

    /// Stabilizer of the one-based `point`, generated by the second level of
    /// a chain whose base starts at `point`.
    pub fn stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point == 0 || point > self.degree() {
            return Err(Error::Precondition(format!(
                "point {point} outside 1..={}",
                self.degree()
            )));
        }
        let chain =
            StabilizerChain::build_with_base(self.degree(), self.generators(), &[(point - 1) as u8]);
        if chain.depth() <= 1 {
            let gens = if chain.depth() == 1 && chain.transversal_sizes()[0] > 1 {
                Vec::new()
            } else {
                self.generators().to_vec()
            };
            return Ok(PermGroup::new(self.degree(), gens)?.with_derived_chain());
        }
        let gens = chain.level_generators(1).to_vec();
        PermGroup::new(self.degree(), gens)
    }

    fn with_derived_chain(self) -> Self {
        self.chain();
        self
    }

    /// Subgroup generated by `elements`, which the caller has checked lie in
    /// the same symmetric group.
    pub fn subgroup(&self, elements: &[Permutation]) -> PermGroup {
        PermGroup::new(self.degree(), elements.to_vec()).expect("degree checked by caller")
    }

    /// Does `<elements>` have order `target`? Stops building as soon as the
    /// partial chain reaches `target`, which must bound the true order.
    pub fn generates_order(degree: usize, elements: &[Permutation], target: u64) -> bool {
        match StabilizerChain::build_until(
            degree,
            elements,
            Limit {
                order: Some(target),
                witness: None,
            },
        ) {
            Built::ReachedOrder(_) => true,
            Built::Complete(c) => c.order() >= target,
            Built::ContainsWitness => unreachable!(),
        }
    }

    /// Is `x` in `<elements>`? Stops early once `x` sifts.
    pub fn generated_contains(degree: usize, elements: &[Permutation], x: &Permutation) -> bool {
        matches!(
            StabilizerChain::build_until(
                degree,
                elements,
                Limit {
                    order: None,
                    witness: Some(x)
                }
            ),
            Built::ContainsWitness
        )
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree())
            .field("generators", &self.inner.generators)
            .field("order", &self.inner.chain.get().map(|c| c.order()))
            .finish()
    }
}

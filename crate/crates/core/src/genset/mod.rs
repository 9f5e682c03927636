//! Generation and irredundancy predicates.
//!
//! A sequence `g_1, ..., g_k` is irredundant when no `g_i` lies in the
//! subgroup `H_i` generated by the others, i.e. every `H_i` is a proper
//! subgroup of `<g_1, ..., g_k>`.

mod certificate;

pub use certificate::{verify_certificate, Certificate, Claim, ClassCheck, VerificationReport};

use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::par;
use crate::perm::Permutation;
use crate::search::is_maximal;

/// An ordered list of non-identity elements of `parent`.
#[derive(Clone, Debug)]
pub struct GeneratingSequence {
    parent: PermGroup,
    elements: Vec<Permutation>,
}

impl GeneratingSequence {
    /// Checks membership in `parent` and rejects identity elements.
    pub fn new(parent: &PermGroup, elements: Vec<Permutation>) -> Result<Self> {
        for (index, x) in elements.iter().enumerate() {
            if !parent.contains(x)? {
                return Err(Error::NotInGroup { index });
            }
            if x.is_identity() {
                return Err(Error::IdentityElement { index });
            }
        }
        Ok(Self {
            parent: parent.clone(),
            elements,
        })
    }

    /// Skips the membership check; callers draw elements from `parent`.
    pub(crate) fn new_unchecked(parent: &PermGroup, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.iter().all(|x| !x.is_identity()));
        Self {
            parent: parent.clone(),
            elements,
        }
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements with position `i` removed.
    pub fn without(&self, i: usize) -> Vec<Permutation> {
        let mut v = self.elements.clone();
        v.remove(i);
        v
    }

    /// Copy with position `i` replaced by `x`.
    pub fn replaced(&self, i: usize, x: Permutation) -> GeneratingSequence {
        let mut v = self.elements.clone();
        v[i] = x;
        GeneratingSequence::new_unchecked(&self.parent, v)
    }
}

/// `<elements>` as a subgroup of `parent`.
pub fn generated_subgroup(parent: &PermGroup, elements: &[Permutation]) -> Result<PermGroup> {
    for (index, x) in elements.iter().enumerate() {
        if !parent.contains(x)? {
            return Err(Error::NotInGroup { index });
        }
    }
    let h = parent.subgroup(elements);
    h.chain();
    Ok(h)
}

pub fn is_generating(seq: &GeneratingSequence) -> bool {
    let parent = seq.parent();
    PermGroup::generates_order(parent.degree(), seq.elements(), parent.order())
}

/// `true` iff no element lies in the subgroup generated by the others.
pub fn is_irredundant(seq: &GeneratingSequence) -> bool {
    irredundant_elements(seq.parent().degree(), seq.elements())
}

pub(crate) fn irredundant_elements(degree: usize, elements: &[Permutation]) -> bool {
    (0..elements.len()).all(|i| {
        let mut rest = elements.to_vec();
        let x = rest.remove(i);
        !PermGroup::generated_contains(degree, &rest, &x)
    })
}

/// Irredundant and generating, testing generation first.
pub(crate) fn irredundant_generating(parent: &PermGroup, elements: &[Permutation]) -> bool {
    let n = parent.order();
    let degree = parent.degree();
    if !PermGroup::generates_order(degree, elements, n) {
        return false;
    }
    (0..elements.len()).all(|i| {
        let mut rest = elements.to_vec();
        rest.remove(i);
        !PermGroup::generates_order(degree, &rest, n)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletedEntry {
    pub index: usize,
    /// Order of the subgroup generated by all elements but `index`.
    pub order: u64,
    /// `order` is below the order of the whole sequence's subgroup.
    pub proper: bool,
    /// Maximal in the parent, when requested and the subgroup is proper in it.
    pub maximal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletedSubsetReport {
    pub generated_order: u64,
    pub parent_order: u64,
    pub entries: Vec<DeletedEntry>,
}

impl DeletedSubsetReport {
    pub fn irredundant(&self) -> bool {
        self.entries.iter().all(|e| e.proper)
    }

    pub fn orders(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.order).collect()
    }
}

/// Orders of the subgroups `H_i`; with `check_maximal`, also whether each
/// `H_i` is maximal in the parent.
pub fn deleted_subset_report(seq: &GeneratingSequence, check_maximal: bool) -> DeletedSubsetReport {
    let parent = seq.parent();
    let degree = parent.degree();
    let generated_order = StabilizerChain::build(degree, seq.elements()).order();
    let entries = par::map_indexed(seq.len(), |i| {
        let rest = seq.without(i);
        let h = parent.subgroup(&rest);
        let order = h.order();
        let maximal = (check_maximal && order < parent.order())
            .then(|| is_maximal(parent, &h).unwrap_or(false));
        DeletedEntry {
            index: i,
            order,
            proper: order < generated_order,
            maximal,
        }
    });
    DeletedSubsetReport {
        generated_order,
        parent_order: parent.order(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{mathieu, shipped_certificates};

    fn seq(g: &PermGroup, xs: &[&str]) -> GeneratingSequence {
        let v = xs
            .iter()
            .map(|s| Permutation::parse_cycles(s, g.degree()).unwrap())
            .collect();
        GeneratingSequence::new(g, v).unwrap()
    }

    fn cert_seq(k: usize) -> GeneratingSequence {
        let c = &shipped_certificates()[if k == 11 { 0 } else { 1 }];
        c.sequence().unwrap()
    }

    #[test]
    fn rejects_identity_and_outsiders() {
        let a4 = PermGroup::from_cycles(4, &["(1,2,3)", "(2,3,4)"]).unwrap();
        let id = Permutation::identity(4);
        assert!(matches!(
            GeneratingSequence::new(&a4, vec![id]),
            Err(Error::IdentityElement { index: 0 })
        ));
        let t = Permutation::parse_cycles("(1,2)", 4).unwrap();
        let c = Permutation::parse_cycles("(1,2,3)", 4).unwrap();
        assert!(matches!(
            GeneratingSequence::new(&a4, vec![c, t.clone()]),
            Err(Error::NotInGroup { index: 1 })
        ));
        assert!(matches!(
            generated_subgroup(&a4, &[t]),
            Err(Error::NotInGroup { index: 0 })
        ));
    }

    #[test]
    fn empty_list_generates_trivial_group() {
        let g = mathieu(11).unwrap();
        assert_eq!(generated_subgroup(&g, &[]).unwrap().order(), 1);
    }

    #[test]
    fn m11_certificate_generates_and_is_irredundant() {
        let s = cert_seq(11);
        assert_eq!(generated_subgroup(s.parent(), s.elements()).unwrap().order(), 7920);
        assert!(is_generating(&s));
        assert!(is_irredundant(&s));
        let sub = generated_subgroup(s.parent(), &s.elements()[..4]).unwrap();
        assert_eq!(sub.order(), 360);
    }

    #[test]
    fn single_elements_and_duplicates() {
        let g = mathieu(11).unwrap();
        let gens = g.generators().to_vec();
        let both = GeneratingSequence::new(&g, gens.clone()).unwrap();
        assert!(is_generating(&both));
        for x in &gens {
            let one = GeneratingSequence::new(&g, vec![x.clone()]).unwrap();
            assert!(!is_generating(&one));
            assert!(is_irredundant(&one));
            let dup = GeneratingSequence::new(&g, vec![x.clone(), x.clone()]).unwrap();
            assert!(!is_irredundant(&dup));
        }
    }

    #[test]
    fn m12_certificate_deletions_are_m11_sized() {
        let s = cert_seq(12);
        assert!(is_generating(&s));
        let r = deleted_subset_report(&s, false);
        assert_eq!(r.orders(), vec![7920; 6]);
        assert!(r.irredundant());
    }

    #[test]
    fn m11_certificate_deletions() {
        let s = cert_seq(11);
        let r = deleted_subset_report(&s, true);
        // three of order 660 and two of order 360, the latter inside an M10
        assert_eq!(r.orders(), vec![660, 660, 660, 360, 360]);
        let maximal: Vec<_> = r.entries.iter().map(|e| e.maximal).collect();
        assert_eq!(
            maximal,
            vec![Some(true), Some(true), Some(true), Some(false), Some(false)]
        );
    }

    #[test]
    fn single_element_report() {
        let g = mathieu(11).unwrap();
        let s = seq(&g, &["(4,10)(5,8)(6,7)(9,11)"]);
        let r = deleted_subset_report(&s, false);
        assert_eq!(r.orders(), vec![1]);
        assert!(r.irredundant());
    }

    #[test]
    fn irredundant_generating_agrees() {
        let s = cert_seq(11);
        assert!(irredundant_generating(s.parent(), s.elements()));
        assert!(!irredundant_generating(s.parent(), &s.elements()[..4]));
    }
}

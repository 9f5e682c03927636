use crate::error::{Error, Result};
use crate::genset::{irredundant_generating, GeneratingSequence};
use crate::group::{PermGroup, ENUMERATION_CAP};
use crate::par;
use crate::perm::Permutation;
use crate::search::is_maximal;

/// Largest family [`general_position`] accepts.
pub const GENERAL_POSITION_CAP: usize = 20;

/// Proper subgroups `H_1, ..., H_k` of a common parent.
#[derive(Clone, Debug)]
pub struct SubgroupFamily {
    parent: PermGroup,
    members: Vec<PermGroup>,
}

impl SubgroupFamily {
    pub fn new(parent: &PermGroup, members: Vec<PermGroup>) -> Result<Self> {
        for (i, h) in members.iter().enumerate() {
            if !h.is_subgroup_of(parent) || h.order() >= parent.order() {
                return Err(Error::Precondition(format!(
                    "member {i} is not a proper subgroup of the parent"
                )));
            }
        }
        Ok(SubgroupFamily {
            parent: parent.clone(),
            members,
        })
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn members(&self) -> &[PermGroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Subgroup of `parent` as a bitset over the parent's chain indices.
pub(crate) fn subgroup_bits(parent: &PermGroup, h: &PermGroup) -> Result<Vec<u64>> {
    let n = parent.order();
    if n > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            order: n,
            cap: ENUMERATION_CAP,
        });
    }
    let chain = parent.chain();
    let mut bits = vec![0u64; (n as usize).div_ceil(64)];
    for x in h.enumerate(ENUMERATION_CAP)? {
        let i = chain.index_of(&x).expect("subgroup lies in the parent") as usize;
        bits[i / 64] |= 1 << (i % 64);
    }
    Ok(bits)
}

fn popcount(bits: &[u64]) -> u32 {
    bits.iter().map(|w| w.count_ones()).sum()
}

/// Sizes of `cap M_j` for every index set `J` (bit `j` of the position),
/// the empty set giving the parent.
pub(crate) fn intersection_sizes(full: &[u64], members: &[Vec<u64>]) -> Vec<u32> {
    let k = members.len();
    let mut inter: Vec<Vec<u64>> = Vec::with_capacity(1 << k);
    inter.push(full.to_vec());
    for set in 1usize..1 << k {
        let top = usize::BITS - 1 - set.leading_zeros();
        let rest = set & !(1 << top);
        let v: Vec<u64> = inter[rest]
            .iter()
            .zip(&members[top as usize])
            .map(|(a, b)| a & b)
            .collect();
        inter.push(v);
    }
    inter.iter().map(|v| popcount(v)).collect()
}

/// Strict shrinking along every one-step enlargement of the index set,
/// which covers every pair `I ⊊ J`.
pub(crate) fn sizes_in_general_position(sizes: &[u32], k: usize) -> bool {
    (1usize..1 << k).all(|set| {
        (0..k)
            .filter(|j| set >> j & 1 == 1)
            .all(|j| sizes[set & !(1 << j)] > sizes[set])
    })
}

fn full_bits(n: u64) -> Vec<u64> {
    let mut v = vec![u64::MAX; (n as usize).div_ceil(64)];
    let r = n as usize % 64;
    if r != 0 {
        *v.last_mut().expect("nonempty") = (1u64 << r) - 1;
    }
    v
}

/// Does every strict enlargement `I ⊊ J` of index sets strictly shrink the
/// intersection?
pub fn general_position(f: &SubgroupFamily) -> Result<bool> {
    if f.len() > GENERAL_POSITION_CAP {
        return Err(Error::Precondition(format!(
            "family of {} members exceeds the cap of {GENERAL_POSITION_CAP}",
            f.len()
        )));
    }
    let parent = f.parent();
    let bits = par::map_slice(f.members(), |h| subgroup_bits(parent, h))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let sizes = intersection_sizes(&full_bits(parent.order()), &bits);
    Ok(sizes_in_general_position(&sizes, f.len()))
}

/// Subgroup generated greedily by elements not yet covered.
pub(crate) fn group_from_elements(degree: usize, elements: &[Permutation]) -> PermGroup {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = crate::chain::StabilizerChain::trivial(degree);
    for x in elements {
        if !chain.contains(x) {
            gens.push(x.clone());
            chain = crate::chain::StabilizerChain::build(degree, &gens);
        }
    }
    PermGroup::from_parts(degree, gens, Some(chain))
}

/// Intersection of the members: the smallest member's elements filtered by
/// membership in the others.
pub fn rad(f: &SubgroupFamily) -> Result<PermGroup> {
    let mut order: Vec<&PermGroup> = f.members().iter().collect();
    if order.is_empty() {
        return Err(Error::Precondition("empty family".into()));
    }
    order.sort_by_key(|h| h.order());
    let elements: Vec<Permutation> = order[0]
        .enumerate(ENUMERATION_CAP)?
        .filter(|x| order[1..].iter().all(|h| h.chain().contains(x)))
        .collect();
    Ok(group_from_elements(f.parent().degree(), &elements))
}

fn require_irredundant_generating(seq: &GeneratingSequence) -> Result<()> {
    if !irredundant_generating(seq.parent(), seq.elements()) {
        return Err(Error::Precondition(
            "sequence is not an irredundant generating sequence".into(),
        ));
    }
    Ok(())
}

/// Can every nontrivial element replace some member of `seq` with
/// generation preserved?
pub fn replacement_property(seq: &GeneratingSequence) -> Result<bool> {
    require_irredundant_generating(seq)?;
    let parent = seq.parent();
    let elements = parent.elements(ENUMERATION_CAP)?;
    let n = parent.order();
    let ok = par::map_slice(&elements, |g| {
        g.is_identity()
            || (0..seq.len()).any(|i| {
                let mut v = seq.elements().to_vec();
                v[i] = g.clone();
                PermGroup::generates_order(parent.degree(), &v, n)
            })
    });
    Ok(ok.into_iter().all(|b| b))
}

/// Consistency of the replacement property with the radicals of the given
/// associated families: a nontrivial radical must rule the property out.
pub fn rad_characterization_check(
    seq: &GeneratingSequence,
    families: &[SubgroupFamily],
) -> Result<bool> {
    require_irredundant_generating(seq)?;
    let parent = seq.parent();
    for (fi, f) in families.iter().enumerate() {
        if f.len() != seq.len() {
            return Err(Error::Precondition(format!(
                "family {fi} has {} members for a sequence of length {}",
                f.len(),
                seq.len()
            )));
        }
        if !general_position(f)? {
            return Err(Error::Precondition(format!("family {fi} is not in general position")));
        }
        for (j, m) in f.members().iter().enumerate() {
            let deleted = seq.without(j);
            if !deleted.iter().all(|x| m.chain().contains(x)) {
                return Err(Error::Precondition(format!(
                    "family {fi}, member {j} does not contain the subgroup generated without element {j}"
                )));
            }
            if !is_maximal(parent, m)? {
                return Err(Error::Precondition(format!(
                    "family {fi}, member {j} is not maximal"
                )));
            }
        }
    }
    let rp = replacement_property(seq)?;
    let mut any_nontrivial = false;
    for f in families {
        any_nontrivial |= rad(f)?.order() > 1;
    }
    Ok(!(rp && any_nontrivial))
}

/// Checks `k <= i(H_I) + |I|` for each index set `I` in `subsets` (default:
/// the empty set and every singleton), where `H_I` is the intersection of
/// the members in `I` and the parent when `I` is empty. `i_of` supplies `i`
/// of a subgroup.
pub fn gen_pos_inequality_check(
    f: &SubgroupFamily,
    i_of: &dyn Fn(&PermGroup) -> Option<u32>,
    subsets: Option<&[Vec<usize>]>,
) -> Result<bool> {
    let k = f.len();
    let default: Vec<Vec<usize>>;
    let subsets = match subsets {
        Some(s) => s,
        None => {
            default = std::iter::once(Vec::new()).chain((0..k).map(|j| vec![j])).collect();
            &default
        }
    };
    for set in subsets {
        let h = if set.is_empty() {
            f.parent().clone()
        } else {
            let members = set.iter().map(|&j| f.members()[j].clone()).collect();
            rad(&SubgroupFamily {
                parent: f.parent().clone(),
                members,
            })?
        };
        let i = i_of(&h).ok_or_else(|| {
            Error::Precondition(format!("no i value supplied for the intersection over {set:?}"))
        })?;
        if k > i as usize + set.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Size of the largest general-position family drawn from `maximal`, which
/// must list every maximal subgroup of `parent`.
pub fn max_dim(parent: &PermGroup, maximal: &[PermGroup]) -> Result<usize> {
    const CAP: u64 = 2000;
    if parent.order() > CAP {
        return Err(Error::CapExceeded {
            order: parent.order(),
            cap: CAP,
        });
    }
    let bits = maximal
        .iter()
        .map(|h| subgroup_bits(parent, h))
        .collect::<Result<Vec<_>>>()?;
    let full = full_bits(parent.order());
    let mut best = 0;
    let mut chosen: Vec<usize> = Vec::new();
    grow(&full, &bits, 0, &mut chosen, &mut best);
    Ok(best)
}

fn grow(full: &[u64], bits: &[Vec<u64>], from: usize, chosen: &mut Vec<usize>, best: &mut usize) {
    *best = (*best).max(chosen.len());
    if chosen.len() >= GENERAL_POSITION_CAP {
        return;
    }
    for j in from..bits.len() {
        chosen.push(j);
        let members: Vec<Vec<u64>> = chosen.iter().map(|&c| bits[c].clone()).collect();
        let sizes = intersection_sizes(full, &members);
        if sizes_in_general_position(&sizes, members.len()) {
            grow(full, bits, j + 1, chosen, best);
        }
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_i, construct, maximal_subgroups, LATTICE_CAP, ORACLE_CAP};

    fn s4() -> PermGroup {
        construct("symmetric(4)").unwrap()
    }

    fn sub(g: &PermGroup, cycles: &[&str]) -> PermGroup {
        PermGroup::from_cycles(g.degree(), cycles).unwrap()
    }

    #[test]
    fn general_position_basics() {
        let g = s4();
        let a4 = sub(&g, &["(1,2,3)", "(2,3,4)"]);
        let s3 = sub(&g, &["(1,2,3)", "(1,2)"]);
        let single = SubgroupFamily::new(&g, vec![a4.clone()]).unwrap();
        assert!(general_position(&single).unwrap());
        let repeated = SubgroupFamily::new(&g, vec![a4.clone(), a4.clone()]).unwrap();
        assert!(!general_position(&repeated).unwrap());
        let pair = SubgroupFamily::new(&g, vec![a4, s3]).unwrap();
        assert!(general_position(&pair).unwrap());
        assert!(SubgroupFamily::new(&g, vec![g.clone()]).is_err());
    }

    #[test]
    fn radical_of_klein_subgroups() {
        let v = construct("dihedral(4)").unwrap();
        let a = sub(&v, &["(1,2)"]);
        let b = sub(&v, &["(3,4)"]);
        let f = SubgroupFamily::new(&v, vec![a.clone(), b]).unwrap();
        assert_eq!(rad(&f).unwrap().order(), 1);
        let f = SubgroupFamily::new(&v, vec![a.clone(), a]).unwrap();
        assert_eq!(rad(&f).unwrap().order(), 2);
    }

    #[test]
    fn replacement_property_in_s3() {
        let g = construct("symmetric(3)").unwrap();
        let t = |c: &str| Permutation::parse_cycles(c, 3).unwrap();
        let seq = GeneratingSequence::new(&g, vec![t("(1,2)"), t("(2,3)")]).unwrap();
        assert!(replacement_property(&seq).unwrap());
        let redundant = GeneratingSequence::new(&g, vec![t("(1,2)"), t("(2,3)"), t("(1,3)")]).unwrap();
        assert!(matches!(replacement_property(&redundant), Err(Error::Precondition(_))));
    }

    #[test]
    fn rad_characterization_in_s3() {
        let g = construct("symmetric(3)").unwrap();
        let t = |c: &str| Permutation::parse_cycles(c, 3).unwrap();
        let seq = GeneratingSequence::new(&g, vec![t("(1,2)"), t("(2,3)")]).unwrap();
        let f = SubgroupFamily::new(&g, vec![sub(&g, &["(2,3)"]), sub(&g, &["(1,2)"])]).unwrap();
        assert!(rad_characterization_check(&seq, &[f]).unwrap());
        let wrong = SubgroupFamily::new(&g, vec![sub(&g, &["(1,2)"]), sub(&g, &["(2,3)"])]).unwrap();
        assert!(rad_characterization_check(&seq, &[wrong]).is_err());
    }

    #[test]
    fn inequality_on_s4_maximals() {
        let g = s4();
        let f = SubgroupFamily::new(
            &g,
            vec![
                sub(&g, &["(1,2,3)", "(1,2)"]),
                sub(&g, &["(1,2,4)", "(1,2)"]),
                sub(&g, &["(1,3,4)", "(1,3)"]),
            ],
        )
        .unwrap();
        assert!(general_position(&f).unwrap());
        let oracle = |h: &PermGroup| brute_i(h, ORACLE_CAP).ok().map(|r| r.value);
        assert!(gen_pos_inequality_check(&f, &oracle, None).unwrap());
        let all: Vec<Vec<usize>> = (0..8usize)
            .map(|s| (0..3).filter(|j| s >> j & 1 == 1).collect())
            .collect();
        assert!(gen_pos_inequality_check(&f, &oracle, Some(&all)).unwrap());
        let none = |_: &PermGroup| None;
        assert!(gen_pos_inequality_check(&f, &none, None).is_err());
    }

    #[test]
    fn max_dim_small_groups() {
        for (spec, d) in [("symmetric(4)", 3), ("cyclic(6)", 2), ("cyclic(4)", 1), ("dihedral(4)", 2)] {
            let g = construct(spec).unwrap();
            let maximal = maximal_subgroups(&g, LATTICE_CAP).unwrap();
            assert_eq!(max_dim(&g, &maximal).unwrap(), d, "{spec}");
        }
    }
}

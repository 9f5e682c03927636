use crate::chain::{Built, Limit, StabilizerChain};
use crate::error::{Error, Result};
use crate::group::{PermGroup, ENUMERATION_CAP};
use crate::perm::Permutation;

fn proper_subgroup_check(parent: &PermGroup, h: &PermGroup) -> Result<()> {
    if parent.order() > ENUMERATION_CAP {
        return Err(Error::CapExceeded {
            order: parent.order(),
            cap: ENUMERATION_CAP,
        });
    }
    if !h.is_subgroup_of(parent) {
        return Err(Error::Precondition("subgroup is not contained in the parent".into()));
    }
    if h.order() == parent.order() {
        return Err(Error::Precondition("subgroup equals the parent".into()));
    }
    Ok(())
}

fn joins_to_whole(h: &StabilizerChain, x: &Permutation, n: u64) -> bool {
    match h.extend_until(std::slice::from_ref(x), Limit { order: Some(n), witness: None }) {
        Built::ReachedOrder(_) => true,
        Built::Complete(c) => c.order() >= n,
        Built::ContainsWitness => unreachable!("no witness supplied"),
    }
}

/// Marks the right coset `h x` in `seen`, indexed by the parent's chain.
fn mark_coset(parent: &PermGroup, h: &[Permutation], x: &Permutation, seen: &mut [bool]) {
    let chain = parent.chain();
    for y in h {
        let i = chain.index_of(&y.mul(x)).expect("coset lies in the parent");
        seen[i as usize] = true;
    }
}

/// Is `h` a maximal subgroup of `parent`? Every element outside `h` must
/// generate the parent together with `h`; one test per right coset.
pub fn is_maximal(parent: &PermGroup, h: &PermGroup) -> Result<bool> {
    proper_subgroup_check(parent, h)?;
    let n = parent.order();
    let chain = parent.chain();
    let h_elems = h.elements(ENUMERATION_CAP)?;
    let mut seen = vec![false; n as usize];
    for y in &h_elems {
        seen[chain.index_of(y).expect("h lies in the parent") as usize] = true;
    }
    for idx in 0..n {
        if seen[idx as usize] {
            continue;
        }
        let x = chain.element_at(idx);
        if !joins_to_whole(h.chain(), &x, n) {
            return Ok(false);
        }
        mark_coset(parent, &h_elems, &x, &mut seen);
    }
    Ok(true)
}

/// A maximal subgroup of `parent` containing `h`: walk the parent's
/// elements in index order, absorbing each one whose join with the current
/// subgroup stays proper.
pub fn maximal_overgroup(parent: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    proper_subgroup_check(parent, h)?;
    let n = parent.order();
    let degree = parent.degree();
    let chain = parent.chain();
    let mut gens = h.generators().to_vec();
    let mut m = h.chain().clone();
    let mut elems = m.elements().collect::<Vec<_>>();
    let mut seen = vec![false; n as usize];
    for y in &elems {
        seen[chain.index_of(y).expect("h lies in the parent") as usize] = true;
    }
    for idx in 0..n {
        if seen[idx as usize] {
            continue;
        }
        let x = chain.element_at(idx);
        match m.extend_until(std::slice::from_ref(&x), Limit { order: Some(n), witness: None }) {
            Built::Complete(bigger) if bigger.order() < n => {
                gens.push(x);
                m = bigger;
                elems = m.elements().collect();
                for y in &elems {
                    seen[chain.index_of(y).expect("subgroup lies in the parent") as usize] = true;
                }
            }
            _ => mark_coset(parent, &elems, &x, &mut seen),
        }
    }
    Ok(PermGroup::from_parts(degree, gens, Some(m)))
}

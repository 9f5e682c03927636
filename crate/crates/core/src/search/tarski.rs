use crate::error::{Error, Result};
use crate::genset::{irredundant_elements, GeneratingSequence};
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::maximal::is_maximal;

/// Elements of order 2 sorted by canonical cycle string.
pub fn canonical_involutions(group: &PermGroup, cap: u64) -> Result<Vec<Permutation>> {
    let mut inv: Vec<(String, Permutation)> = group
        .enumerate(cap)?
        .filter(|x| x.order() == 2)
        .map(|x| (x.to_string(), x))
        .collect();
    inv.sort();
    Ok(inv.into_iter().map(|(_, x)| x).collect())
}

/// Factors the last element `x` as `a * b` with `a`, `b` involutions taken
/// from `involutions` (in that order) and returns the first resulting
/// sequence `g_1, ..., a, b` that is irredundant.
pub fn tarski_extend_involutions(
    seq: &GeneratingSequence,
    involutions: &[Permutation],
) -> Option<GeneratingSequence> {
    let (x, head) = seq.elements().split_last()?;
    let degree = seq.parent().degree();
    let mut new = head.to_vec();
    for a in involutions {
        let b = a.mul(x);
        if b.order() != 2 {
            continue;
        }
        new.truncate(head.len());
        new.push(a.clone());
        new.push(b);
        if irredundant_elements(degree, &new) {
            return Some(GeneratingSequence::new_unchecked(seq.parent(), new));
        }
    }
    None
}

/// Replaces `g_i` by `a, b` with `a * b = g_i`, `a` running over `pool` or,
/// without a pool, over the whole group (refused above `cap`). Returns the
/// first irredundant result.
pub fn tarski_extend_general(
    seq: &GeneratingSequence,
    i: usize,
    pool: Option<&[Permutation]>,
    cap: u64,
) -> Result<Option<GeneratingSequence>> {
    if i >= seq.len() {
        return Err(Error::Precondition(format!(
            "index {i} outside a sequence of length {}",
            seq.len()
        )));
    }
    let parent = seq.parent();
    let owned;
    let candidates: &[Permutation] = match pool {
        Some(p) => p,
        None => {
            owned = parent.elements(cap)?;
            &owned
        }
    };
    let g = &seq.elements()[i];
    let degree = parent.degree();
    for a in candidates {
        let b = a.inverse().mul(g);
        if a.is_identity() || b.is_identity() {
            continue;
        }
        let mut new = seq.elements().to_vec();
        new[i] = b;
        new.insert(i, a.clone());
        if irredundant_elements(degree, &new) {
            return Ok(Some(GeneratingSequence::new_unchecked(parent, new)));
        }
    }
    Ok(None)
}

/// `true` when the subgroup generated by every element but `g_i` is
/// maximal, in which case no Tarski extension at `i` can be irredundant.
pub fn tarski_prune(seq: &GeneratingSequence, i: usize) -> Result<bool> {
    let parent = seq.parent();
    let h = parent.subgroup(&seq.without(i));
    if h.order() == parent.order() {
        return Ok(false);
    }
    is_maximal(parent, &h)
}

/// Repeatedly applies the first successful general Tarski extension, trying
/// positions in order and skipping positions that [`tarski_prune`] rules
/// out. Returns every sequence reached, starting with `seq`, stopping when no
/// position extends or `max_len` is reached.
pub fn tarski_recursive(
    seq: &GeneratingSequence,
    max_len: usize,
    cap: u64,
) -> Result<Vec<GeneratingSequence>> {
    let mut path = vec![seq.clone()];
    let pool = seq.parent().elements(cap)?;
    'grow: while path.last().map_or(0, |s| s.len()) < max_len {
        let cur = path.last().expect("path is nonempty").clone();
        for i in 0..cur.len() {
            if tarski_prune(&cur, i)? {
                continue;
            }
            if let Some(next) = tarski_extend_general(&cur, i, Some(&pool), cap)? {
                path.push(next);
                continue 'grow;
            }
        }
        break;
    }
    Ok(path)
}

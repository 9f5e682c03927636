//! Conjugacy classes of desk-scale groups by orbit enumeration.
//!
//! Labels follow the ATLAS shape (`2A`, `2B`, ...): classes are sorted by
//! element order, then class size, then least canonical representative, and
//! lettered within each element order. Only the ordering rule is ours; we
//! make no claim of agreement with the ATLAS beyond the facts the tests pin.

use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Member whose canonical cycle string is least.
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
    pub label: String,
    /// Chain indices of the members, ascending.
    members: Vec<u64>,
}

impl ConjugacyClass {
    pub fn contains(&self, group: &PermGroup, x: &Permutation) -> bool {
        group
            .chain()
            .index_of(x)
            .is_some_and(|i| self.members.binary_search(&i).is_ok())
    }

    pub fn members<'a>(&'a self, group: &'a PermGroup) -> impl Iterator<Item = Permutation> + 'a {
        self.members.iter().map(|&i| group.chain().element_at(i))
    }
}

pub fn conjugacy_classes(group: &PermGroup, cap: u64) -> Result<Vec<ConjugacyClass>> {
    let elements = group.elements(cap)?;
    let chain = group.chain();
    let gens: Vec<Permutation> = group
        .generators()
        .iter()
        .filter(|g| !g.is_identity())
        .cloned()
        .collect();
    let n = elements.len();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut members = vec![start as u64];
        let mut k = 0;
        while k < members.len() {
            let x = &elements[members[k] as usize];
            for g in &gens {
                let y = g.conjugate(x);
                let idx = chain.index_of(&y).expect("conjugate stays in the group");
                if !std::mem::replace(&mut seen[idx as usize], true) {
                    members.push(idx);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        let (representative, _) = members
            .iter()
            .map(|&i| {
                let x = &elements[i as usize];
                (x, x.to_string())
            })
            .min_by(|a, b| a.1.cmp(&b.1))
            .expect("class is nonempty");
        classes.push(ConjugacyClass {
            representative: representative.clone(),
            size: members.len() as u64,
            element_order: representative.order(),
            label: String::new(),
            members,
        });
    }
    classes.sort_by(|a, b| {
        (a.element_order, a.size)
            .cmp(&(b.element_order, b.size))
            .then_with(|| a.representative.to_string().cmp(&b.representative.to_string()))
    });
    let mut letter = 0u8;
    let mut prev = 0;
    for c in &mut classes {
        if c.element_order != prev {
            prev = c.element_order;
            letter = 0;
        }
        c.label = format!("{}{}", c.element_order, class_letters(letter));
        letter += 1;
    }
    Ok(classes)
}

fn class_letters(k: u8) -> String {
    // A..Z, then AA, AB, ...
    if k < 26 {
        ((b'A' + k) as char).to_string()
    } else {
        format!("{}{}", class_letters(k / 26 - 1), (b'A' + k % 26) as char)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::ENUMERATION_CAP;

    #[test]
    fn s4_classes() {
        let s4 = PermGroup::from_cycles(4, &["(1,2,3,4)", "(1,2)"]).unwrap();
        let cl = conjugacy_classes(&s4, ENUMERATION_CAP).unwrap();
        let shape: Vec<(String, u64)> = cl.iter().map(|c| (c.label.clone(), c.size)).collect();
        assert_eq!(
            shape,
            vec![
                ("1A".into(), 1),
                ("2A".into(), 3),
                ("2B".into(), 6),
                ("3A".into(), 8),
                ("4A".into(), 6)
            ]
        );
        assert_eq!(cl.iter().map(|c| c.size).sum::<u64>(), 24);
        for c in &cl {
            assert_eq!(24 % c.size, 0);
            assert!(c.members(&s4).all(|x| x.order() == c.element_order));
        }
    }

    #[test]
    fn letters() {
        assert_eq!(class_letters(0), "A");
        assert_eq!(class_letters(25), "Z");
        assert_eq!(class_letters(26), "AA");
    }
}

use std::collections::{BTreeSet, HashMap};

use super::cayley::{has, Bits, Cayley};
use crate::classes::ConjugacyClass;
use crate::error::Result;
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A rank value with a set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank {
    pub value: u32,
    pub witness: Vec<Permutation>,
}

/// Both ranks of a group or class pool, plus every size at which an
/// irredundant generating set exists.
#[derive(Clone, Debug)]
pub struct Ranks {
    pub m: Rank,
    pub i: Rank,
    pub generating_sizes: BTreeSet<u32>,
}

struct Joins<'a> {
    t: &'a Cayley,
    ids: HashMap<Bits, u32>,
    subs: Vec<(Bits, Vec<u16>)>,
    cache: HashMap<(u32, u16), u32>,
}

impl<'a> Joins<'a> {
    fn new(t: &'a Cayley) -> Self {
        let trivial = t.closure(&[]);
        Self {
            t,
            ids: HashMap::from([(trivial.clone(), 0)]),
            subs: vec![(trivial, Vec::new())],
            cache: HashMap::new(),
        }
    }

    fn contains(&self, h: u32, x: u16) -> bool {
        has(&self.subs[h as usize].0, x)
    }

    fn join(&mut self, h: u32, x: u16) -> u32 {
        if self.contains(h, x) {
            return h;
        }
        if let Some(&j) = self.cache.get(&(h, x)) {
            return j;
        }
        let mut gens = self.subs[h as usize].1.clone();
        gens.push(x);
        let bits = self.t.closure(&gens);
        let next = self.subs.len() as u32;
        let id = *self.ids.entry(bits.clone()).or_insert(next);
        if id == next {
            self.subs.push((bits, gens));
        }
        self.cache.insert((h, x), id);
        id
    }
}

struct Dfs<'a> {
    joins: Joins<'a>,
    full: u32,
    chosen: Vec<u16>,
    best_i: Vec<u16>,
    best_m: Option<Vec<u16>>,
    sizes: BTreeSet<u32>,
}

impl Dfs<'_> {
    fn record(&mut self, span: u32) {
        if self.chosen.len() > self.best_i.len() {
            self.best_i = self.chosen.clone();
        }
        if span == self.full {
            self.sizes.insert(self.chosen.len() as u32);
            if self.best_m.as_ref().is_none_or(|b| self.chosen.len() > b.len()) {
                self.best_m = Some(self.chosen.clone());
            }
        }
    }

    /// `minus[k]` is the span of the chosen set without its `k`-th element.
    fn descend(&mut self, cands: &[u16], span: u32, minus: &[u32]) {
        self.record(span);
        for (pos, &x) in cands.iter().enumerate() {
            if self.joins.contains(span, x) {
                continue;
            }
            let mut next = Vec::with_capacity(minus.len() + 1);
            let mut ok = true;
            for (k, &h) in minus.iter().enumerate() {
                let j = self.joins.join(h, x);
                if self.joins.contains(j, self.chosen[k]) {
                    ok = false;
                    break;
                }
                next.push(j);
            }
            if !ok {
                continue;
            }
            next.push(span);
            let span2 = self.joins.join(span, x);
            self.chosen.push(x);
            self.descend(&cands[pos + 1..], span2, &next);
            self.chosen.pop();
        }
    }
}

/// Exhausts irredundant sets up to conjugacy. Each start pairs a fixed
/// first element with the candidates allowed after it.
fn run(t: &Cayley, starts: &[(u16, Vec<u16>)]) -> Ranks {
    let mut joins = Joins::new(t);
    let all: Vec<u16> = (1..t.len() as u16).collect();
    let mut span = 0;
    for &x in &all {
        span = joins.join(span, x);
    }
    let full = span;
    let mut dfs = Dfs {
        joins,
        full,
        chosen: Vec::new(),
        best_i: Vec::new(),
        best_m: None,
        sizes: BTreeSet::new(),
    };
    dfs.record(0);
    for (first, cands) in starts {
        dfs.chosen.push(*first);
        let span = dfs.joins.join(0, *first);
        dfs.descend(cands, span, &[0]);
        dfs.chosen.pop();
    }
    let to_perms = |v: &[u16]| v.iter().map(|&e| t.elems[e as usize].clone()).collect::<Vec<_>>();
    let m = dfs.best_m.as_deref().map_or(Rank { value: 0, witness: Vec::new() }, |w| Rank {
        value: w.len() as u32,
        witness: to_perms(w),
    });
    Ranks {
        m,
        i: Rank { value: dfs.best_i.len() as u32, witness: to_perms(&dfs.best_i) },
        generating_sizes: dfs.sizes,
    }
}

/// Exact m(G) and i(G). Any irredundant set is conjugate to one containing
/// the representative of its least class, with the rest drawn from that
/// class or later ones, so only those sets are visited.
pub fn brute_ranks(g: &PermGroup, cap: u64) -> Result<Ranks> {
    let t = Cayley::new(g, cap)?;
    let classes = t.classes();
    let mut class_of = vec![0usize; t.len()];
    for (c, members) in classes.iter().enumerate() {
        for &x in members {
            class_of[x as usize] = c;
        }
    }
    let starts: Vec<(u16, Vec<u16>)> = classes
        .iter()
        .enumerate()
        .filter(|(_, m)| m[0] != 0)
        .map(|(c, m)| {
            let rep = m[0];
            let cands = (1..t.len() as u16)
                .filter(|&x| x != rep && class_of[x as usize] >= c)
                .collect();
            (rep, cands)
        })
        .collect();
    Ok(run(&t, &starts))
}

pub fn brute_m(g: &PermGroup, cap: u64) -> Result<Rank> {
    Ok(brute_ranks(g, cap)?.m)
}

pub fn brute_i(g: &PermGroup, cap: u64) -> Result<Rank> {
    Ok(brute_ranks(g, cap)?.i)
}

/// Exact m(G,C) and i(G,C); 0 when no set drawn from the class generates.
pub fn brute_class_ranks(g: &PermGroup, class: &ConjugacyClass, cap: u64) -> Result<(Rank, Rank)> {
    let t = Cayley::new(g, cap)?;
    let mut members: Vec<u16> = class
        .members(g)
        .map(|p| t.index_of(&p).expect("class members lie in the group"))
        .filter(|&x| x != 0)
        .collect();
    members.sort_unstable();
    let starts = match members.split_first() {
        Some((&rep, rest)) => vec![(rep, rest.to_vec())],
        None => Vec::new(),
    };
    let ranks = run(&t, &starts);
    Ok((ranks.m, ranks.i))
}

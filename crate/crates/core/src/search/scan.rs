//! Involution-pool scans for irredundant generating sequences.
//!
//! For every `(size-2)`-subset `S` of the pool, in lexicographic order, a
//! tail `x` of allowed order is appended; when `S, x` is irredundant and
//! generating, `x` is factored as `a * b` over the involution pool and the
//! first irredundant `S, a, b` is emitted.
//!
//! [`scan`] decides the same question per `S` without walking the tails:
//! any success needs `S, a, b` irredundant, which in particular forces `a`
//! and `b` into the set of pool involutions that keep `<S, a>` proper and
//! absorb no `s_i`. Those sets come from a memoized lattice of subgroups
//! generated by pool members. [`scan_naive`] is the literal loop and serves
//! as the reference in tests.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use crate::chain::{Built, Limit, StabilizerChain};
use crate::classes::conjugacy_classes;
use crate::error::{Error, Result};
use crate::genset::{irredundant_generating, Certificate, Claim, GeneratingSequence};
use crate::group::{PermGroup, ENUMERATION_CAP};
use crate::par;
use crate::perm::Permutation;

use super::combination::CombinationCursor;
use super::dihedral::dihedral_orders;
use super::lattice::{Lattice, StateId, FULL};
use super::shuffle::fisher_yates;
use super::tarski::tarski_extend_involutions;

/// Elements the scan draws `S` from.
#[derive(Clone, Debug)]
pub enum Pool {
    /// All elements of this order.
    Order(u64),
    /// The members of the conjugacy class with this label. The Tarski pool is
    /// restricted to the class as well.
    Class(String),
    /// A caller-chosen list, used in the given order.
    Explicit(Vec<Permutation>),
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Name written into emitted certificates.
    pub group_name: String,
    /// Length of the sequences sought, at least 2.
    pub size: usize,
    pub pool: Pool,
    /// Allowed orders of the tail element; `None` means every dihedral order.
    pub tails: Option<BTreeSet<u64>>,
    /// Shuffle the pool with this seed before scanning.
    pub seed: Option<u64>,
    /// Only the first this many combinations are scanned.
    pub max_combinations: Option<u128>,
    pub budget: Option<Duration>,
    pub workers: usize,
    /// Progress cadence in combinations; 0 turns progress off.
    pub progress_every: u128,
    pub max_certificates: usize,
}

impl SearchConfig {
    pub fn new(group_name: &str, size: usize) -> Self {
        SearchConfig {
            group_name: group_name.to_string(),
            size,
            pool: Pool::Order(2),
            tails: None,
            seed: None,
            max_combinations: None,
            budget: None,
            workers: 1,
            progress_every: 5000,
            max_certificates: 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// Every combination was accounted for.
    Exhausted,
    /// `max_combinations` cut the scan short.
    LimitReached,
    /// The wall-clock budget ran out.
    BudgetExceeded,
    /// `max_certificates` certificates were found.
    Satisfied,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::Exhausted => "exhausted",
            StopReason::LimitReached => "limit-reached",
            StopReason::BudgetExceeded => "budget-exceeded",
            StopReason::Satisfied => "satisfied",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ProgressEvent {
    pub done: u128,
    pub total: u128,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub certificates: Vec<Certificate>,
    pub stop: StopReason,
    /// C(pool size, size - 2).
    pub total: u128,
    /// Combinations accounted for, examined or skipped by a pruned prefix.
    pub visited: u128,
    /// Combinations whose tails were examined.
    pub examined: u128,
    /// Combinations skipped because a prefix was redundant or generated the
    /// whole group.
    pub pruned: u128,
    pub pool_size: usize,
    pub tarski_pool_size: usize,
    pub tails: BTreeSet<u64>,
    /// Distinct subgroups met, summed over workers.
    pub states: usize,
    pub elapsed: Duration,
}

impl ScanReport {
    /// Every combination was visited and nothing stopped the scan early.
    pub fn exhaustive(&self) -> bool {
        self.stop == StopReason::Exhausted && self.visited == self.total
    }
}

struct Prepared {
    pool: Vec<Permutation>,
    tarski: Vec<Permutation>,
    tails: BTreeSet<u64>,
}

fn sorted_canonical(mut v: Vec<Permutation>) -> Vec<Permutation> {
    v.sort_by_cached_key(|x| x.to_string());
    v
}

fn prepare(group: &PermGroup, cfg: &SearchConfig) -> Result<Prepared> {
    if cfg.size < 2 {
        return Err(Error::Precondition(format!(
            "target size {} is below 2",
            cfg.size
        )));
    }
    let (pool, tarski) = match &cfg.pool {
        Pool::Order(k) => {
            let pool = sorted_canonical(group.enumerate(ENUMERATION_CAP)?.filter(|x| x.order() == *k).collect());
            let tarski = if *k == 2 {
                pool.clone()
            } else {
                sorted_canonical(group.enumerate(ENUMERATION_CAP)?.filter(|x| x.order() == 2).collect())
            };
            (pool, tarski)
        }
        Pool::Class(label) => {
            let classes = conjugacy_classes(group, ENUMERATION_CAP)?;
            let class = classes
                .iter()
                .find(|c| &c.label == label)
                .ok_or_else(|| Error::Precondition(format!("no conjugacy class labelled {label}")))?;
            let pool = sorted_canonical(class.members(group).collect());
            let tarski = pool.iter().filter(|x| x.order() == 2).cloned().collect();
            (pool, tarski)
        }
        Pool::Explicit(v) => {
            for (index, x) in v.iter().enumerate() {
                if !group.contains(x)? {
                    return Err(Error::NotInGroup { index });
                }
                if x.is_identity() {
                    return Err(Error::IdentityElement { index });
                }
            }
            let tarski = sorted_canonical(group.enumerate(ENUMERATION_CAP)?.filter(|x| x.order() == 2).collect());
            (v.clone(), tarski)
        }
    };
    let pool = match cfg.seed {
        Some(seed) => fisher_yates(&pool, seed),
        None => pool,
    };
    let dihedral = dihedral_orders(group, ENUMERATION_CAP)?;
    let tails = match &cfg.tails {
        Some(t) => {
            if let Some(bad) = t.iter().find(|k| !dihedral.contains(k)) {
                return Err(Error::Precondition(format!(
                    "tail order {bad} is not a dihedral order of the group"
                )));
            }
            t.clone()
        }
        None => dihedral,
    };
    Ok(Prepared { pool, tarski, tails })
}

fn class_label(group: &PermGroup, elements: &[Permutation]) -> Option<String> {
    let classes = conjugacy_classes(group, ENUMERATION_CAP).ok()?;
    let first = classes.iter().find(|c| c.contains(group, &elements[0]))?;
    elements
        .iter()
        .all(|x| first.contains(group, x))
        .then(|| first.label.clone())
}

fn certificate(group: &PermGroup, cfg: &SearchConfig, elements: Vec<Permutation>) -> Certificate {
    let label = class_label(group, &elements);
    let seq = GeneratingSequence::new_unchecked(group, elements);
    Certificate::from_sequence(&cfg.group_name, &seq, Claim::IrredundantGenerating, label)
}

/// The literal scan: every tail of allowed order is tried for every subset.
/// Emits at most one certificate per subset. Intended for small groups.
pub fn scan_naive(group: &PermGroup, cfg: &SearchConfig) -> Result<Vec<Certificate>> {
    let prep = prepare(group, cfg)?;
    let tails: Vec<Permutation> = sorted_canonical(
        group
            .enumerate(ENUMERATION_CAP)?
            .filter(|x| prep.tails.contains(&x.order()))
            .collect(),
    );
    let mut out = Vec::new();
    let mut cursor = CombinationCursor::new(prep.pool.len(), cfg.size - 2);
    let end = cfg.max_combinations.unwrap_or(u128::MAX);
    while let Some(t) = cursor.current() {
        if cursor.rank() >= end || out.len() >= cfg.max_certificates {
            break;
        }
        let s: Vec<Permutation> = t.iter().map(|&i| prep.pool[i].clone()).collect();
        for x in &tails {
            let mut seq = s.clone();
            seq.push(x.clone());
            if !irredundant_generating(group, &seq) {
                continue;
            }
            let gs = GeneratingSequence::new_unchecked(group, seq);
            if let Some(ext) = tarski_extend_involutions(&gs, &prep.tarski) {
                out.push(certificate(group, cfg, ext.elements().to_vec()));
                break;
            }
        }
        cursor.advance();
    }
    Ok(out)
}

pub fn scan(group: &PermGroup, cfg: &SearchConfig) -> Result<ScanReport> {
    scan_with_progress(group, cfg, &|_| {})
}

struct Shared<'a> {
    group: &'a PermGroup,
    cfg: &'a SearchConfig,
    prep: &'a Prepared,
    universe: Vec<Permutation>,
    /// Universe index of each pool entry.
    pool_index: Vec<usize>,
    start: Instant,
    total: u128,
    visited: AtomicU64,
    found: Vec<AtomicUsize>,
    out_of_time: AtomicBool,
    progress: &'a (dyn Fn(ProgressEvent) + Sync),
}

struct ChunkResult {
    /// Successful sequences `S, a, b`, in cursor order.
    hits: Vec<Vec<Permutation>>,
    visited: u128,
    examined: u128,
    pruned: u128,
    states: usize,
    out_of_time: bool,
}

pub fn scan_with_progress(
    group: &PermGroup,
    cfg: &SearchConfig,
    progress: &(dyn Fn(ProgressEvent) + Sync),
) -> Result<ScanReport> {
    let start = Instant::now();
    let prep = prepare(group, cfg)?;
    group.chain();
    // universe: the Tarski pool first, then pool members outside it
    let mut universe = prep.tarski.clone();
    let mut pool_index = Vec::with_capacity(prep.pool.len());
    for x in &prep.pool {
        match universe.iter().position(|y| y == x) {
            Some(i) => pool_index.push(i),
            None => {
                pool_index.push(universe.len());
                universe.push(x.clone());
            }
        }
    }
    let k = cfg.size - 2;
    let total = CombinationCursor::new(prep.pool.len(), k).total();
    let end = cfg.max_combinations.map_or(total, |l| l.min(total));
    let chunks = if par::parallel_enabled() && cfg.workers > 1 {
        (cfg.workers * 8).min(end.max(1) as usize)
    } else {
        1
    };
    let shared = Shared {
        group,
        cfg,
        prep: &prep,
        universe,
        pool_index,
        start,
        total,
        visited: AtomicU64::new(0),
        found: (0..chunks).map(|_| AtomicUsize::new(0)).collect(),
        out_of_time: AtomicBool::new(false),
        progress,
    };
    let bounds: Vec<(u128, u128)> = (0..chunks)
        .map(|c| {
            let lo = end * c as u128 / chunks as u128;
            let hi = end * (c as u128 + 1) / chunks as u128;
            (lo, hi)
        })
        .collect();
    let results = par::with_workers(cfg.workers, || {
        par::map_indexed(chunks, |c| run_chunk(&shared, c, bounds[c].0, bounds[c].1))
    });

    let mut hits = Vec::new();
    let (mut visited, mut examined, mut pruned) = (0u128, 0u128, 0u128);
    let mut out_of_time = false;
    let mut states = 0;
    for r in results {
        states += r.states;
        hits.extend(r.hits);
        visited += r.visited;
        examined += r.examined;
        pruned += r.pruned;
        out_of_time |= r.out_of_time;
    }
    hits.truncate(cfg.max_certificates);
    let stop = if cfg.max_certificates > 0 && hits.len() >= cfg.max_certificates {
        StopReason::Satisfied
    } else if out_of_time {
        StopReason::BudgetExceeded
    } else if end < total {
        StopReason::LimitReached
    } else {
        StopReason::Exhausted
    };
    let certificates = hits
        .into_iter()
        .map(|elements| certificate(group, cfg, elements))
        .collect();
    Ok(ScanReport {
        certificates,
        stop,
        total,
        visited,
        examined,
        pruned,
        pool_size: prep.pool.len(),
        tarski_pool_size: prep.tarski.len(),
        tails: prep.tails.clone(),
        states,
        elapsed: start.elapsed(),
    })
}

impl Shared<'_> {
    fn record_visits(&self, n: u128) {
        if n == 0 {
            return;
        }
        let before = self.visited.fetch_add(n as u64, Ordering::Relaxed) as u128;
        let every = self.cfg.progress_every;
        if every > 0 && (before + n) / every > before / every {
            (self.progress)(ProgressEvent {
                done: (before + n) / every * every,
                total: self.total,
                elapsed: self.start.elapsed(),
            });
        }
    }

    fn should_stop(&self, chunk: usize, own: usize) -> bool {
        let max = self.cfg.max_certificates;
        if max > 0 && own >= max {
            return true;
        }
        if max > 0 {
            let earlier: usize = self.found[..chunk].iter().map(|f| f.load(Ordering::Relaxed)).sum();
            if earlier >= max {
                return true;
            }
        }
        if let Some(b) = self.cfg.budget {
            if self.start.elapsed() >= b {
                self.out_of_time.store(true, Ordering::Relaxed);
                return true;
            }
        }
        self.out_of_time.load(Ordering::Relaxed)
    }
}

fn run_chunk(sh: &Shared<'_>, chunk: usize, lo: u128, hi: u128) -> ChunkResult {
    let mut res = ChunkResult {
        hits: Vec::new(),
        visited: 0,
        examined: 0,
        pruned: 0,
        states: 0,
        out_of_time: false,
    };
    if lo >= hi {
        return res;
    }
    let g = sh.group;
    let k = sh.cfg.size - 2;
    let mut lat = Lattice::new(g.degree(), g.order(), &sh.universe);
    let mut cursor = CombinationCursor::at_rank(sh.prep.pool.len(), k, lo);
    // prefix[d]: subgroup of the first d entries; minus[d][i]: the same
    // without entry i
    let mut prefix: Vec<StateId> = vec![lat.trivial(); k + 1];
    let mut minus: Vec<Vec<StateId>> = (0..=k).map(|d| vec![lat.trivial(); d]).collect();
    let mut from = 0usize;
    let mut prev: Vec<usize> = Vec::new();
    let mut steps = 0u64;
    while !cursor.is_exhausted() && cursor.rank() < hi {
        // a step costs far more than the check
        if steps.is_multiple_of(16) && sh.should_stop(chunk, res.hits.len()) {
            res.out_of_time = sh.out_of_time.load(Ordering::Relaxed);
            break;
        }
        steps += 1;
        let t: Vec<usize> = cursor.current().expect("not exhausted").to_vec();
        let mut bad_len = None;
        for d in from..k {
            let u = sh.pool_index[t[d]];
            if lat.contains(prefix[d], u) {
                bad_len = Some(d + 1);
                break;
            }
            let mut ok = true;
            for i in 0..d {
                let m = lat.next(minus[d][i], u);
                minus[d + 1][i] = m;
                if lat.contains(m, sh.pool_index[t[i]]) {
                    ok = false;
                }
            }
            minus[d + 1][d] = prefix[d];
            prefix[d + 1] = lat.next(prefix[d], u);
            if !ok || prefix[d + 1] == FULL {
                bad_len = Some(d + 1);
                break;
            }
        }
        let before = cursor.rank();
        match bad_len {
            Some(len) => {
                cursor.skip_prefix(len);
                let after = cursor.rank().min(hi);
                res.pruned += after - before;
                res.visited += after - before;
                sh.record_visits(after - before);
            }
            None => {
                res.examined += 1;
                if let Some(hit) = examine(sh, &mut lat, &t, prefix[k], &minus[k]) {
                    res.hits.push(hit);
                    sh.found[chunk].fetch_add(1, Ordering::Relaxed);
                }
                cursor.advance();
                res.visited += 1;
                sh.record_visits(1);
            }
        }
        res.states = lat.len();
        prev.clear();
        prev.extend_from_slice(&t);
        from = match cursor.current() {
            Some(next) => next.iter().zip(&prev).position(|(a, b)| a != b).unwrap_or(k),
            None => 0,
        };
        // entries at or beyond a failed prefix were never computed
        if let Some(len) = bad_len {
            from = from.min(len - 1);
        }
    }
    res
}

fn iter_bits(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let b = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(w * 64 + b)
        })
    })
}

/// Tarski-pool members `a` outside `k` with `<k, a>` proper, as a bitset.
fn candidates(lat: &mut Lattice<'_>, k: StateId, tarski_len: usize) -> Box<[u64]> {
    if let Some(c) = lat.extra(k) {
        return c.into();
    }
    let mut bits = vec![0u64; lat.words()].into_boxed_slice();
    for a in 0..tarski_len {
        if !lat.contains(k, a) && lat.next(k, a) != FULL {
            bits[a / 64] |= 1 << (a % 64);
        }
    }
    lat.set_extra(k, bits.clone());
    bits
}

fn examine(
    sh: &Shared<'_>,
    lat: &mut Lattice<'_>,
    t: &[usize],
    k: StateId,
    minus: &[StateId],
) -> Option<Vec<Permutation>> {
    let s: Vec<usize> = t.iter().map(|&i| sh.pool_index[i]).collect();
    let tarski = &sh.prep.tarski;
    let cand = candidates(lat, k, tarski.len());
    // a must keep every s_i outside <S - s_i, a>
    let mut allowed = Vec::new();
    for a in iter_bits(&cand) {
        let keeps = (0..s.len()).all(|i| {
            let m = lat.next(minus[i], a);
            !lat.contains(m, s[i])
        });
        if keeps {
            allowed.push(a);
        }
    }
    if allowed.len() < 2 {
        return None;
    }
    // (x, a, b) with S, a, b irredundant and x = a * b of a tail order
    let mut found: Vec<(String, Permutation, usize, usize)> = Vec::new();
    for &a in &allowed {
        let ka = lat.next(k, a);
        for &b in &allowed {
            if a == b || lat.contains(ka, b) {
                continue;
            }
            let x = tarski[a].mul(&tarski[b]);
            if !sh.prep.tails.contains(&x.order()) {
                continue;
            }
            let kb = lat.next(k, b);
            if lat.contains(kb, a) {
                continue;
            }
            let irredundant = (0..s.len()).all(|i| {
                let m = lat.next(minus[i], a);
                let m = lat.next(m, b);
                !lat.contains(m, s[i])
            });
            if irredundant {
                found.push((x.to_string(), x, a, b));
            }
        }
    }
    // tails in canonical order; for each, the least a
    found.sort_by(|p, q| p.0.cmp(&q.0).then(p.2.cmp(&q.2)));
    let g = sh.group;
    let n = g.order();
    let mut last: Option<&str> = None;
    for (key, x, a, b) in &found {
        if last == Some(key.as_str()) {
            continue;
        }
        last = Some(key.as_str());
        if tail_works(lat, k, minus, &s, &sh.universe, x, n) {
            let mut out: Vec<Permutation> = s.iter().map(|&i| sh.universe[i].clone()).collect();
            out.push(tarski[*a].clone());
            out.push(tarski[*b].clone());
            return Some(out);
        }
    }
    None
}

/// Is `S, x` irredundant and generating?
fn tail_works(
    lat: &Lattice<'_>,
    k: StateId,
    minus: &[StateId],
    s: &[usize],
    universe: &[Permutation],
    x: &Permutation,
    n: u64,
) -> bool {
    let gen = match lat.chain(k).extend_until(
        std::slice::from_ref(x),
        Limit {
            order: Some(n),
            witness: None,
        },
    ) {
        Built::ReachedOrder(_) => true,
        Built::Complete(c) => c.order() >= n,
        Built::ContainsWitness => unreachable!("no witness supplied"),
    };
    if !gen {
        return false;
    }
    s.iter().zip(minus).all(|(&si, &m)| {
        let chain: &StabilizerChain = lat.chain(m);
        !matches!(
            chain.extend_until(
                std::slice::from_ref(x),
                Limit {
                    order: None,
                    witness: Some(&universe[si]),
                },
            ),
            Built::ContainsWitness
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genset::verify_certificate;
    use std::sync::Mutex;

    fn s5() -> PermGroup {
        PermGroup::from_cycles(5, &["(1,2,3,4,5)", "(1,2)"]).unwrap()
    }

    fn all(size: usize) -> SearchConfig {
        let mut cfg = SearchConfig::new("S5", size);
        cfg.max_certificates = usize::MAX;
        cfg
    }

    #[test]
    fn agrees_with_literal_scan() {
        let g = s5();
        for size in [2, 3, 4, 5] {
            let cfg = all(size);
            let fast = scan(&g, &cfg).unwrap();
            assert_eq!(fast.certificates, scan_naive(&g, &cfg).unwrap(), "size {size}");
            assert!(fast.exhaustive());
        }
        let mut cfg = all(4);
        cfg.tails = Some([3].into());
        assert_eq!(scan(&g, &cfg).unwrap().certificates, scan_naive(&g, &cfg).unwrap());
    }

    #[test]
    fn certificates_verify() {
        let r = scan(&s5(), &all(4)).unwrap();
        assert!(!r.certificates.is_empty());
        for c in &r.certificates {
            assert!(verify_certificate(c).pass());
            assert_eq!(c.class_label.as_deref(), Some("2A"));
        }
        // m(S5) = 4
        assert!(scan(&s5(), &all(5)).unwrap().certificates.is_empty());
    }

    #[test]
    fn prime_cyclic_group_has_none() {
        let z7 = PermGroup::from_cycles(7, &["(1,2,3,4,5,6,7)"]).unwrap();
        let mut cfg = SearchConfig::new("Z7", 2);
        cfg.pool = Pool::Order(7);
        cfg.tails = Some(BTreeSet::new());
        let r = scan(&z7, &cfg).unwrap();
        assert!(r.certificates.is_empty());
        assert_eq!(r.stop, StopReason::Exhausted);
    }

    #[test]
    fn rejects_bad_configs() {
        let mut cfg = SearchConfig::new("S5", 4);
        cfg.tails = Some([7].into());
        assert!(scan(&s5(), &cfg).is_err());
        assert!(scan(&s5(), &SearchConfig::new("S5", 1)).is_err());
        let mut cfg = SearchConfig::new("S5", 4);
        cfg.pool = Pool::Class("9Z".into());
        assert!(scan(&s5(), &cfg).is_err());
    }

    #[test]
    fn worker_count_does_not_change_results() {
        let g = s5();
        let one = scan(&g, &all(4)).unwrap();
        let mut cfg = all(4);
        cfg.workers = 3;
        let three = scan(&g, &cfg).unwrap();
        assert_eq!(one.certificates, three.certificates);
        assert_eq!(one.visited, three.visited);
        let mut cfg = SearchConfig::new("S5", 4);
        cfg.workers = 3;
        let first = scan(&g, &cfg).unwrap();
        assert_eq!(first.stop, StopReason::Satisfied);
        assert_eq!(first.certificates, one.certificates[..1]);
    }

    #[test]
    fn limits_and_progress() {
        let g = s5();
        let mut cfg = all(4);
        cfg.max_combinations = Some(10);
        let r = scan(&g, &cfg).unwrap();
        assert_eq!(r.stop, StopReason::LimitReached);
        assert_eq!(r.visited, 10);
        assert_eq!(r.total, 300);

        let seen = Mutex::new(Vec::new());
        let mut cfg = all(4);
        cfg.progress_every = 100;
        let r = scan_with_progress(&g, &cfg, &|e| seen.lock().unwrap().push(e.done)).unwrap();
        assert_eq!(r.visited, 300);
        assert_eq!(r.examined + r.pruned, 300);
        assert_eq!(*seen.lock().unwrap(), vec![100, 200, 300]);

        let mut cfg = all(4);
        cfg.budget = Some(Duration::ZERO);
        let r = scan(&g, &cfg).unwrap();
        assert!(matches!(r.stop, StopReason::BudgetExceeded | StopReason::Exhausted));
    }

    #[test]
    fn seeded_pool_is_reproducible() {
        let g = s5();
        let mut cfg = all(4);
        cfg.seed = Some(11);
        let a = scan(&g, &cfg).unwrap();
        let b = scan(&g, &cfg).unwrap();
        assert_eq!(a.certificates, b.certificates);
        assert_eq!(a.certificates, scan_naive(&g, &cfg).unwrap());
        assert_eq!(a.certificates.len(), 45);
    }
}

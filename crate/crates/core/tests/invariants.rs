use irredundant::catalog::mathieu;
use irredundant::genset::{is_generating, is_irredundant, GeneratingSequence};
use irredundant::oracle::{brute_ranks, construct, ORACLE_CAP};
use irredundant::search::{
    binomial, lex_rank, tarski_extend_general, tarski_prune, unrank, CombinationCursor,
};
use irredundant::{PermGroup, Permutation, StabilizerChain};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

proptest! {
    #[test]
    fn group_axioms(a in perm(9), b in perm(9), c in perm(9)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        prop_assert!(a.pow(a.order()).is_identity());
        prop_assert_eq!(a.mul(&b).image(1), b.image(a.image(1)));
        let text = a.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, 9).unwrap(), a);
    }

    #[test]
    fn chain_indexing_round_trips(k in 0u64..7920) {
        let m11 = mathieu(11).unwrap();
        let chain = m11.chain();
        let x = chain.element_at(k);
        prop_assert_eq!(chain.index_of(&x), Some(k));
    }

    #[test]
    fn chain_order_matches_closure(gens in prop::collection::vec(perm(6), 1..3)) {
        let chain = StabilizerChain::build(6, &gens);
        let g = PermGroup::new(6, gens).unwrap();
        prop_assert_eq!(chain.order() as usize, g.elements(1000).unwrap().len());
    }

    #[test]
    fn combination_rank_round_trips(m in 1usize..30, n in 0usize..5, r in 0u128..10_000) {
        prop_assume!(n <= m);
        let total = binomial(m as u64, n as u64);
        let rank = r % total;
        let tuple = unrank(m, n, rank);
        prop_assert_eq!(lex_rank(m, &tuple), rank);
        let cur = CombinationCursor::at_rank(m, n, rank);
        prop_assert_eq!(cur.current().unwrap(), &tuple[..]);
    }
}

#[test]
fn cursor_visits_every_combination_once() {
    let mut cur = CombinationCursor::new(7, 3);
    let mut seen = Vec::new();
    while let Some(c) = cur.current() {
        seen.push(c.to_vec());
        if cur.advance().is_none() {
            break;
        }
    }
    assert_eq!(seen.len() as u128, binomial(7, 3));
    let mut sorted = seen.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted, seen);
}

/// All irredundant generating sequences of `g` of length `len`, as sets.
fn irredundant_generating_sets(g: &PermGroup, len: usize) -> Vec<Vec<Permutation>> {
    let elems: Vec<Permutation> = g.elements(1000).unwrap().into_iter().filter(|x| !x.is_identity()).collect();
    let mut out = Vec::new();
    let mut cur = CombinationCursor::new(elems.len(), len);
    while let Some(c) = cur.current() {
        let v: Vec<Permutation> = c.iter().map(|&i| elems[i].clone()).collect();
        let seq = GeneratingSequence::new(g, v.clone()).unwrap();
        if is_irredundant(&seq) && is_generating(&seq) {
            out.push(v);
        }
        if cur.advance().is_none() {
            break;
        }
    }
    out
}

#[test]
fn tarski_prune_never_hides_an_extension() {
    for spec in ["symmetric(4)", "dihedral(12)", "product(cyclic(2), symmetric(3))"] {
        let g = construct(spec).unwrap();
        let m = brute_ranks(&g, ORACLE_CAP).unwrap().m.value as usize;
        let mut pruned = 0;
        for len in 1..=m {
            for v in irredundant_generating_sets(&g, len) {
                let seq = GeneratingSequence::new(&g, v).unwrap();
                for i in 0..seq.len() {
                    let ext = tarski_extend_general(&seq, i, None, 1000).unwrap();
                    if let Some(e) = &ext {
                        assert_eq!(e.len(), seq.len() + 1);
                        assert!(is_irredundant(e) && is_generating(e));
                    }
                    if tarski_prune(&seq, i).unwrap() {
                        pruned += 1;
                        assert!(ext.is_none(), "{spec}: pruned position {i} extends");
                    }
                }
            }
        }
        assert!(pruned > 0, "{spec}: pruning never fired");
        // sequences of maximal length never extend
        for v in irredundant_generating_sets(&g, m) {
            let seq = GeneratingSequence::new(&g, v).unwrap();
            assert!((0..m).all(|i| tarski_extend_general(&seq, i, None, 1000).unwrap().is_none()));
        }
    }
}

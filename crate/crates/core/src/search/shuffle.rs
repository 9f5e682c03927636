use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seeded Fisher–Yates shuffle. The stream comes from ChaCha8 seeded with
/// `seed`, so a fixed seed always yields the same order.
pub fn fisher_yates<T: Clone>(items: &[T], seed: u64) -> Vec<T> {
    let mut out = items.to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.shuffle(&mut rng);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_inputs() {
        assert!(fisher_yates::<u32>(&[], 7).is_empty());
        assert_eq!(fisher_yates(&[42], 7), vec![42]);
    }

    #[test]
    fn deterministic_permutation() {
        let v: Vec<u32> = (0..100).collect();
        let a = fisher_yates(&v, 1);
        assert_eq!(a, fisher_yates(&v, 1));
        let mut sorted = a.clone();
        sorted.sort();
        assert_eq!(sorted, v);
        assert_ne!(a, fisher_yates(&v, 2));
    }
}

//! Deterministic seeded randomness.
//!
//! Every stochastic task derives its own ChaCha stream from a root seed and
//! a task path, so adding samples to one task never perturbs another and
//! reports are reproducible byte for byte.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::rational::{rat, ratio, Rational};

/// Independent RNG substream for `(seed, task path)`.
pub fn task_rng(seed: u64, path: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a(path.as_bytes()));
    rng
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Small rational with numerator in [-9, 9] and denominator in {1, 2, 3}.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=3))
}

pub fn random_nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = random_rational(rng);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}

/// Small integer rational, handy where coefficient growth matters.
pub fn random_small_int(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-5..=5))
}

/// `n` pairwise distinct integers as rationals (rss diagonals).
pub fn distinct_integers(rng: &mut impl Rng, n: usize) -> Vec<Rational> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let v: i64 = rng.gen_range(-20..=20);
        if seen.insert(v) {
            out.push(rat(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substreams_are_independent_and_deterministic() {
        let mut a1 = task_rng(42, "ci/samples");
        let mut a2 = task_rng(42, "ci/samples");
        let mut b = task_rng(42, "gs/sample");
        let xs1: Vec<u32> = (0..8).map(|_| a1.gen()).collect();
        let xs2: Vec<u32> = (0..8).map(|_| a2.gen()).collect();
        let ys: Vec<u32> = (0..8).map(|_| b.gen()).collect();
        assert_eq!(xs1, xs2);
        assert_ne!(xs1, ys);
    }

    #[test]
    fn distinct_integers_are_distinct() {
        let mut rng = task_rng(1, "t");
        let xs = distinct_integers(&mut rng, 10);
        for i in 0..xs.len() {
            for j in 0..i {
                assert_ne!(xs[i], xs[j]);
            }
        }
    }
}

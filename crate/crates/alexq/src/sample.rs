//! Seeded random words.

use alexq_core::structure::{Letter, Word};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const DEFAULT_SEED: u64 = 0x5eed;

/// A generator for one `(n, t)` case: same seed, separate stream, so results
/// do not depend on which thread runs the case.
pub fn case_rng(seed: u64, n: u64, t: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((n << 32) | t);
    rng
}

/// A word of length `0..=max_len` with colors below `n` and exponents in
/// `±1..=±max_exp`.
pub fn random_word<R: Rng>(rng: &mut R, n: u64, max_len: usize, max_exp: i64) -> Word {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| {
            let e = rng.random_range(1..=max_exp);
            Letter {
                color: rng.random_range(0..n),
                exp: if rng.random_bool(0.5) { e } else { -e },
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_in_range() {
        let a: Vec<Word> = (0..20)
            .map(|_| random_word(&mut case_rng(7, 9, 4), 9, 12, 2))
            .collect();
        let b: Vec<Word> = (0..20)
            .map(|_| random_word(&mut case_rng(7, 9, 4), 9, 12, 2))
            .collect();
        assert_eq!(a, b);
        let mut rng = case_rng(1, 5, 2);
        for _ in 0..200 {
            let w = random_word(&mut rng, 5, 12, 2);
            assert!(w.len() <= 12);
            assert!(w
                .letters()
                .iter()
                .all(|l| l.color < 5 && l.exp != 0 && l.exp.abs() <= 2));
        }
    }
}

//! Seeded random generators for words, matrices and simple braids.
//!
//! Every generator takes the RNG explicitly. [`seeded`] gives one
//! independent ChaCha stream per `(seed, stream)` so parallel suites stay
//! reproducible regardless of scheduling.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::braid::{BraidWord, Letter, Sign};
use crate::crossing::CrossingMatrix;
use crate::free_group::{FreeWord, Syllable};
use crate::hurwitz::HurwitzMove;
use crate::matrix_sets::permutation_braid;
use crate::simple::SimpleBraid;

pub fn seeded(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// A word of exactly `len` letters, each `σ_i^{±1}` uniformly.
pub fn random_word_of_len<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| Letter::new(rng.gen_range(1..strands), random_sign(rng)))
        .collect();
    BraidWord::new(strands, letters).expect("strands >= 2")
}

/// Length uniform in `0..=max_len`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, strands, len)
}

pub fn random_positive_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| Letter::pos(rng.gen_range(1..strands))).collect();
    BraidWord::new(strands, letters).expect("strands >= 2")
}

/// `w (π⁺)⁻¹` for a random `w` with `π = |w|`.
pub fn random_pure_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let w = random_word(rng, strands, max_len);
    let closing = permutation_braid(&w.permutation()).expect("valid permutation");
    w.concat(&closing.inverse()).expect("same strand count")
}

/// A random positive word followed by the permutation braid of `|w|⁻¹`.
pub fn random_positive_pure_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let w = random_positive_word(rng, strands, max_len);
    let closing = permutation_braid(&w.permutation().inverse()).expect("valid permutation");
    w.concat(&closing).expect("same strand count")
}

/// Freely reduced; the reduced length may be shorter than the draw.
pub fn random_free_word<R: Rng + ?Sized>(rng: &mut R, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    let syllables = (0..len)
        .map(|_| Syllable::new(rng.gen_range(1..=rank), random_sign(rng)))
        .collect();
    FreeWord::from_syllables(rank, syllables).expect("generators in range")
}

pub fn random_simple_braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_conjugator_len: usize) -> SimpleBraid {
    let base = rng.gen_range(1..strands);
    let sign = random_sign(rng);
    let conjugator = random_word(rng, strands, max_conjugator_len);
    SimpleBraid::new(base, sign, conjugator).expect("base in range")
}

/// Zero diagonal, off-diagonal entries uniform in `-bound..=bound`.
pub fn random_crossing_matrix<R: Rng + ?Sized>(rng: &mut R, size: usize, bound: i64) -> CrossingMatrix {
    let rows: Vec<Vec<i64>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| if i == j { 0 } else { rng.gen_range(-bound..=bound) })
                .collect()
        })
        .collect();
    CrossingMatrix::from_rows(&rows).expect("square with zero diagonal")
}

/// Moves valid for a tuple of `entries >= 2` elements.
pub fn random_hurwitz_moves<R: Rng + ?Sized>(rng: &mut R, entries: usize, max_len: usize) -> Vec<HurwitzMove> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| HurwitzMove::new(rng.gen_range(1..entries), random_sign(rng)))
        .collect()
}

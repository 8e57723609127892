//! The Artin action `Φ: B_m → Aut(F_m)`.
//!
//! `σ_i`:  `x_i ↦ x_{i+1}`, `x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}`.
//! `σ_i⁻¹`: `x_i ↦ x_i x_{i+1} x_i⁻¹`, `x_{i+1} ↦ x_i`.
//!
//! Letters are applied last to first, so `Φ(ab) = Φ(a) ∘ Φ(b)`.

use crate::braid::{BraidWord, Letter, Sign};
use crate::crossing::HVector;
use crate::error::{ensure_same_size, Result};
use crate::free_group::{FreeWord, Syllable};

/// `Φ(β)(w)`.
pub fn apply_artin(word: &BraidWord, w: &FreeWord) -> Result<FreeWord> {
    ensure_same_size(word.strands(), w.rank())?;
    let mut current = w.clone();
    for &letter in word.letters().iter().rev() {
        current = substitute(letter, &current);
    }
    Ok(current)
}

/// One substitution pass for a single letter, reducing as it goes.
fn substitute(letter: Letter, w: &FreeWord) -> FreeWord {
    let mut out = FreeWord::identity(w.rank());
    let mut image = [Syllable::new(0, Sign::Pos); 3];
    for &s in w.syllables() {
        let len = generator_image(letter, s.gen, &mut image);
        let image = &mut image[..len];
        match s.sign {
            Sign::Pos => image.iter().for_each(|&t| out.push(t)),
            Sign::Neg => image.iter().rev().for_each(|&t| out.push(t.inverse())),
        }
    }
    out
}

fn generator_image(letter: Letter, gen: usize, out: &mut [Syllable; 3]) -> usize {
    let i = letter.index;
    let pos = |g| Syllable::new(g, Sign::Pos);
    let neg = |g| Syllable::new(g, Sign::Neg);
    match (letter.sign, gen) {
        (Sign::Pos, g) if g == i => {
            out[0] = pos(i + 1);
            1
        }
        (Sign::Pos, g) if g == i + 1 => {
            *out = [neg(i + 1), pos(i), pos(i + 1)];
            3
        }
        (Sign::Neg, g) if g == i => {
            *out = [pos(i), pos(i + 1), neg(i)];
            3
        }
        (Sign::Neg, g) if g == i + 1 => {
            out[0] = pos(i);
            1
        }
        (_, g) => {
            out[0] = pos(g);
            1
        }
    }
}

/// `|Φ(β)|` on `H`: the coefficient of `X_k` moves to `X_{|β|(k)}`.
pub fn artin_abelianized(word: &BraidWord, v: &HVector) -> Result<HVector> {
    ensure_same_size(word.strands(), v.rank())?;
    v.permute(&word.permutation())
}

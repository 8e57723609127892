//! Reduced words in the free group `F_m = <x_1, .., x_m>`.

use std::fmt;

use crate::braid::Sign;
use crate::crossing::HVector;
use crate::error::{ensure_same_size, Error, Result};

/// `x_gen^sign`, `gen` 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: usize,
    pub sign: Sign,
}

impl Syllable {
    pub fn new(gen: usize, sign: Sign) -> Self {
        Syllable { gen, sign }
    }

    pub fn inverse(self) -> Self {
        Syllable::new(self.gen, -self.sign)
    }

    fn cancels(self, other: Syllable) -> bool {
        self.gen == other.gen && self.sign != other.sign
    }
}

/// A freely reduced word. Every constructor and operation reduces eagerly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    syllables: Vec<Syllable>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord {
            rank,
            syllables: Vec::new(),
        }
    }

    pub fn generator(rank: usize, gen: usize) -> Result<Self> {
        Self::from_syllables(rank, vec![Syllable::new(gen, Sign::Pos)])
    }

    /// Validates indices and freely reduces.
    pub fn from_syllables(rank: usize, syllables: Vec<Syllable>) -> Result<Self> {
        if let Some(bad) = syllables.iter().find(|s| s.gen == 0 || s.gen > rank) {
            return Err(Error::IndexOutOfRange {
                index: bad.gen,
                size: rank,
            });
        }
        let mut word = FreeWord::identity(rank);
        word.syllables.reserve(syllables.len());
        for s in syllables {
            word.push(s);
        }
        Ok(word)
    }

    /// `k` for `x_k`, `-k` for `x_k⁻¹`.
    pub fn from_signed(rank: usize, signed: &[i64]) -> Result<Self> {
        let syllables = signed
            .iter()
            .map(|&s| {
                let sign = if s > 0 { Sign::Pos } else { Sign::Neg };
                Syllable::new(s.unsigned_abs() as usize, sign)
            })
            .collect();
        Self::from_syllables(rank, syllables)
    }

    /// Parses `x1 x2^-1 x1`; exponents expand to repeated syllables.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let mut syllables = Vec::new();
        for (n, token) in text.split_whitespace().enumerate() {
            let position = n + 1;
            let bad = |reason: &str| Error::parse(position, token, reason);
            let body = token
                .strip_prefix('x')
                .ok_or_else(|| bad("expected xK or xK^E"))?;
            let (gen, power) = body.split_once('^').unwrap_or((body, "1"));
            let gen: usize = gen.parse().map_err(|_| bad("expected generator index"))?;
            let power: i64 = power.parse().map_err(|_| bad("expected integer exponent"))?;
            if gen == 0 || gen > rank {
                return Err(bad(&format!("generator index must lie in 1..={rank}")));
            }
            let sign = if power > 0 { Sign::Pos } else { Sign::Neg };
            for _ in 0..power.unsigned_abs() {
                syllables.push(Syllable::new(gen, sign));
            }
        }
        Self::from_syllables(rank, syllables)
    }

    #[inline]
    pub(crate) fn push(&mut self, s: Syllable) {
        match self.syllables.last() {
            Some(&last) if last.cancels(s) => {
                self.syllables.pop();
            }
            _ => self.syllables.push(s),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        ensure_same_size(self.rank, other.rank)?;
        let mut out = self.clone();
        out.syllables.reserve(other.len());
        for &s in &other.syllables {
            out.push(s);
        }
        Ok(out)
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            syllables: self.syllables.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// `[w] ∈ H`: signed occurrence count of each generator.
    pub fn abelianize(&self) -> HVector {
        let mut v = HVector::zero(self.rank);
        for s in &self.syllables {
            *v.at_mut(s.gen - 1) += s.sign.as_i64();
        }
        v
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (n, s) in self.syllables.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            match s.sign {
                Sign::Pos => write!(f, "x{}", s.gen)?,
                Sign::Neg => write!(f, "x{}^-1", s.gen)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(rank: usize, s: &[i64]) -> FreeWord {
        FreeWord::from_signed(rank, s).unwrap()
    }

    #[test]
    fn cancellation() {
        assert!(fw(2, &[1]).multiply(&fw(2, &[-1])).unwrap().is_empty());
        assert_eq!(fw(2, &[1]).multiply(&fw(2, &[2])).unwrap(), fw(2, &[1, 2]));
        let a = fw(2, &[-2, 1, 2]);
        let b = fw(2, &[-2, -1, 2]);
        assert!(a.multiply(&b).unwrap().is_empty());
    }

    #[test]
    fn construction_reduces() {
        assert_eq!(fw(3, &[1, 2, -2, -1, 3]).syllables().len(), 1);
        assert!(fw(3, &[1, 2, -2, -1]).is_empty());
    }

    #[test]
    fn invert_reverses() {
        assert_eq!(fw(2, &[1, 2]).invert(), fw(2, &[-2, -1]));
        assert!(FreeWord::identity(2).invert().is_empty());
    }

    #[test]
    fn abelianize_counts_with_sign() {
        assert_eq!(
            fw(3, &[1, 2, -1]).abelianize(),
            HVector::basis(3, 2).unwrap()
        );
        assert!(FreeWord::identity(3).abelianize().is_zero());
    }

    #[test]
    fn rank_mismatch_fails() {
        assert!(fw(2, &[1]).multiply(&fw(3, &[1])).is_err());
        assert!(FreeWord::from_signed(2, &[3]).is_err());
    }

    #[test]
    fn text_form_round_trips() {
        let w = FreeWord::parse(3, "x1 x2^-1 x1 x3^2").unwrap();
        assert_eq!(w, fw(3, &[1, -2, 1, 3, 3]));
        assert_eq!(w.to_string(), "x1 x2^-1 x1 x3 x3");
        assert_eq!(FreeWord::parse(3, &w.to_string()).unwrap(), w);
        assert!(matches!(
            FreeWord::parse(3, "x1 y2"),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(FreeWord::parse(3, "x4").is_err());
    }
}
